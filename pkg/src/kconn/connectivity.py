"""Exact vertex-connectivity primitives for small graphs.

Pairwise connectivity goes through the vertex-splitting reduction to
unit-capacity max flow, so every count is an exact integer and every
separator is a true minimum cut. Global k-connectivity scans all
non-adjacent pairs; at the instance sizes this package targets (a few
dozen vertices) simplicity beats asymptotics.

All tie-breaking is deterministic: pairs are scanned in lexicographic
order and components are ranked by (size, least member), so repeated runs
on equal inputs produce identical cuts, witnesses, and certificates.
"""

from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass

from .coloring import SimpleGraph, induced_subgraph


class BudgetExceeded(RuntimeError):
    """Raised when a deadline passed to an exact search expires."""


@dataclass(frozen=True)
class CutResult:
    """A vertex cut together with the two sides it separates.

    side_a is a smallest component of g - separator; side_b is everything
    else. No edge joins side_a to side_b.
    """

    size: int
    separator: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int]


@dataclass(frozen=True)
class KConnReport:
    """Maximum order of a k-connected subgraph, with a witness vertex set."""

    order: int
    witness: frozenset[int]


def connected_components(g: SimpleGraph) -> list[frozenset[int]]:
    """Components in order of their least vertex (deterministic)."""
    seen: set[int] = set()
    out: list[frozenset[int]] = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out


def _unit_flow(
    g: SimpleGraph,
    source: int,
    sink: int,
    cap: int,
    drop_edge: tuple[int, int] | None = None,
) -> tuple[int, frozenset[int] | None]:
    """Count internally vertex-disjoint source-sink paths, stopping at `cap`.

    Each vertex other than the endpoints becomes an in/out node pair joined
    by a unit arc; graph edges get capacity n so minimum cuts land on the
    unit arcs only. Returns (count, separator): the separator is the
    minimum source-sink vertex cut, present only when the true optimum was
    reached (count < cap). The caller must ensure source and sink are not
    adjacent in the network (drop_edge removes the direct edge if needed).
    """
    index = {v: i for i, v in enumerate(g.vertices)}
    nv = len(index)
    to: list[int] = []
    capacity: list[int] = []
    adj: list[list[int]] = [[] for _ in range(2 * nv)]

    def add_arc(a: int, b: int, c: int) -> None:
        adj[a].append(len(to))
        to.append(b)
        capacity.append(c)
        adj[b].append(len(to))
        to.append(a)
        capacity.append(0)

    for v, i in index.items():
        if v != source and v != sink:
            add_arc(2 * i, 2 * i + 1, 1)
    for u, v in g.edges:
        if drop_edge is not None and (u, v) == drop_edge:
            continue
        add_arc(2 * index[u] + 1, 2 * index[v], nv)
        add_arc(2 * index[v] + 1, 2 * index[u], nv)

    s = 2 * index[source] + 1
    t = 2 * index[sink]
    flow = 0
    exhausted = False
    while flow < cap:
        parent = [-1] * (2 * nv)
        parent[s] = -2
        queue = deque([s])
        while queue and parent[t] == -1:
            x = queue.popleft()
            for a in adj[x]:
                y = to[a]
                if capacity[a] > 0 and parent[y] == -1:
                    parent[y] = a
                    queue.append(y)
        if parent[t] == -1:
            exhausted = True
            break
        # every augmenting path crosses a unit split arc, so it carries 1
        x = t
        while x != s:
            a = parent[x]
            capacity[a] -= 1
            capacity[a ^ 1] += 1
            x = to[a ^ 1]
        flow += 1
    if not exhausted:
        return flow, None
    reach = [False] * (2 * nv)
    reach[s] = True
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for a in adj[x]:
            y = to[a]
            if capacity[a] > 0 and not reach[y]:
                reach[y] = True
                queue.append(y)
    separator = frozenset(
        v
        for v, i in index.items()
        if v != source and v != sink and reach[2 * i] and not reach[2 * i + 1]
    )
    return flow, separator


def local_vertex_connectivity(
    g: SimpleGraph, u: int, v: int
) -> tuple[int, frozenset[int] | None]:
    """Maximum number of internally vertex-disjoint u-v paths.

    For non-adjacent u, v the returned separator is a minimum u-v vertex
    cut of exactly that size (Menger). For adjacent pairs no vertex set
    separates u from v, so the count is 1 + the connectivity with the edge
    removed and the separator is None.
    """
    if u == v:
        raise ValueError(f"u and v must differ, got {u}")
    if u not in g.adjacency or v not in g.adjacency:
        raise ValueError(f"vertex out of range: {u} or {v}")
    if g.has_edge(u, v):
        edge = (u, v) if u < v else (v, u)
        count, _ = _unit_flow(g, u, v, cap=g.order, drop_edge=edge)
        return count + 1, None
    return _unit_flow(g, u, v, cap=g.order)


def _nonadjacent_pairs(g: SimpleGraph):
    for u, v in itertools.combinations(g.vertices, 2):
        if not g.has_edge(u, v):
            yield u, v


def is_k_connected(g: SimpleGraph, k: int) -> bool:
    """More than k vertices and no vertex cut of size at most k-1."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if g.order <= k:
        return False
    # a vertex of degree < k gives a cut of its neighbors (order > k here)
    if any(g.degree(v) < k for v in g.vertices):
        return False
    for u, v in _nonadjacent_pairs(g):
        count, _ = _unit_flow(g, u, v, cap=k)
        if count < k:
            return False
    return True


def find_small_cut(g: SimpleGraph, k: int) -> CutResult | None:
    """A vertex cut of size at most k-1, or None when no such cut exists.

    A disconnected graph yields the empty cut. Otherwise all non-adjacent
    pairs are scanned in lexicographic order and the first minimum-size
    separator found is kept, so results are reproducible across runs.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if g.order <= 1:
        return None
    comps = connected_components(g)
    if len(comps) > 1:
        side_a = min(comps, key=lambda c: (len(c), sorted(c)))
        rest = frozenset(set(g.vertices) - side_a)
        return CutResult(0, frozenset(), side_a, rest)
    best: frozenset[int] | None = None
    for u, v in _nonadjacent_pairs(g):
        limit = k if best is None else len(best)
        count, separator = _unit_flow(g, u, v, cap=limit)
        if separator is not None and count < limit:
            best = separator
            if len(best) == 1:
                break  # a connected graph has no smaller cut
    if best is None:
        return None
    pieces = connected_components(induced_subgraph(g, set(g.vertices) - best))
    side_a = min(pieces, key=lambda c: (len(c), sorted(c)))
    side_b = frozenset(set(g.vertices) - best - side_a)
    return CutResult(len(best), best, side_a, side_b)


def max_k_connected_subgraph(
    g: SimpleGraph, k: int, deadline: float | None = None
) -> KConnReport:
    """Exact maximum order of a k-connected subgraph of g, with a witness.

    Branch and reduce: a graph with no small cut and more than k vertices
    is itself the answer; otherwise any k-connected subgraph lies inside
    one component of g - C together with the cut C, so recursing on every
    (component + cut) candidate is complete. A maximum-order k-connected
    subgraph can always be taken induced, so the witness is a vertex set.
    Results are memoized on the exact vertex set (as a bitmask).

    `deadline` is a time.monotonic() timestamp; the search raises
    BudgetExceeded when it passes.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    memo: dict[int, tuple[int, frozenset[int]]] = {}

    def solve(members: frozenset[int]) -> tuple[int, frozenset[int]]:
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded("exact search passed its deadline")
        if len(members) <= k:
            return 0, frozenset()
        key = 0
        for v in members:
            key |= 1 << v
        cached = memo.get(key)
        if cached is not None:
            return cached
        sub = induced_subgraph(g, members)
        cut = find_small_cut(sub, k)
        if cut is None:
            result = (len(members), members)
        else:
            result = (0, frozenset())
            remainder = induced_subgraph(sub, members - cut.separator)
            for comp in connected_components(remainder):
                candidate = solve(comp | cut.separator)
                if candidate[0] > result[0]:
                    result = candidate
        memo[key] = result
        return result

    order, witness = solve(frozenset(g.vertices))
    return KConnReport(order, witness)


def k_core(g: SimpleGraph, k: int) -> frozenset[int]:
    """Vertex set of the k-core: repeatedly delete vertices of degree < k.

    The result is independent of deletion order, and it contains every
    subgraph of g with minimum degree >= k, hence every k-connected one.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    degree = {v: g.degree(v) for v in g.vertices}
    live = set(g.vertices)
    queue = deque(v for v in g.vertices if degree[v] < k)
    while queue:
        v = queue.popleft()
        if v not in live:
            continue
        live.remove(v)
        for u in g.neighbors(v):
            if u in live:
                degree[u] -= 1
                if degree[u] < k:
                    queue.append(u)
    return frozenset(live)


ORACLE_MAX_ORDER = 14


def _connected_within(adjacency: dict[int, frozenset[int]], members: set[int]) -> bool:
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adjacency[x]:
            if y in members and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(members)


def _brute_force_k_connected(g: SimpleGraph, members: tuple[int, ...], k: int) -> bool:
    vs = set(members)
    if len(vs) <= k:
        return False
    adjacency = {v: g.neighbors(v) & vs for v in vs}
    if any(len(adjacency[v]) < k for v in vs):
        return False
    for size in range(0, k):
        for cut in itertools.combinations(sorted(vs), size):
            rest = vs - set(cut)
            if len(rest) >= 2 and not _connected_within(adjacency, rest):
                return False
    return True


def oracle_is_k_connected(g: SimpleGraph, k: int) -> bool:
    """k-connectivity by exhaustive cut enumeration; for cross-checks only."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return _brute_force_k_connected(g, g.vertices, k)


def oracle_max_k_connected(g: SimpleGraph, k: int) -> KConnReport:
    """Brute-force reference for max_k_connected_subgraph.

    Enumerates all vertex subsets in decreasing size and tests each induced
    subgraph by enumerating every candidate cut of size at most k-1. The
    first hit is the maximum. Guarded to order <= 14 to keep the
    enumeration finite in practice.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if g.order > ORACLE_MAX_ORDER:
        raise ValueError(
            f"graph too large for the brute-force oracle: {g.order} > {ORACLE_MAX_ORDER}"
        )
    for size in range(g.order, k, -1):
        for combo in itertools.combinations(g.vertices, size):
            if _brute_force_k_connected(g, combo, k):
                return KConnReport(size, frozenset(combo))
    return KConnReport(0, frozenset())
