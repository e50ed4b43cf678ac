"""Cut-based layered decompositions and their certificate checks.

A decomposition of a graph g on n vertices, for parameters (f, k), is a
sequence of triples (A_i, C_i, D_i) peeling a small separated piece A_i off
the graph at every step:

  (1) A_1, C_1, D_1 partition V(g)
  (2) A_{i+1}, C_{i+1}, D_{i+1} partition C_i + D_i
  (3) |C_i| <= k-1
  (4) 1 <= |A_i| <= |D_i| and g has no edge between A_i and D_i
  (5) |C_i| + |D_i| >= n - f for every step but the last
  (6) |C_l| + |D_l| < n - f at the last step l

It is *strong* when additionally |A_i| + |C_i| < n - f for every i. A
strong decomposition certifies that g has no k-connected subgraph of order
n - f or more: such a subgraph would have to live inside some A_i + C_i,
which is too small.

On disk a decomposition is a ``kdecomp 1`` document: header, then k/f/n/l
lines, then per step three lines tagged A, C, D listing sorted 0-based
vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .coloring import ParseError, SimpleGraph, _normalize_text, induced_subgraph
from .connectivity import find_small_cut


class Triple(NamedTuple):
    a: frozenset[int]
    c: frozenset[int]
    d: frozenset[int]


@dataclass(frozen=True)
class Decomposition:
    k: int
    f: int
    n: int
    triples: tuple[Triple, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if self.f < 0:
            raise ValueError(f"f must be non-negative, got {self.f}")
        if not self.triples:
            raise ValueError("a decomposition has at least one triple")

    @property
    def l(self) -> int:
        return len(self.triples)

    def sum_a(self) -> int:
        return sum(len(t.a) for t in self.triples)


@dataclass(frozen=True)
class ClauseViolation:
    """One failed clause of the decomposition definition.

    clause is "1".."6" or "strong"; index is the 1-based step the check
    failed at (for clause 2, the index i of the identity on C_i + D_i).
    """

    clause: str
    index: int
    detail: str


@dataclass(frozen=True)
class Decomposed:
    decomposition: Decomposition


@dataclass(frozen=True)
class FoundSubgraph:
    """Failure mode of the greedy procedure: a k-connected subgraph of
    order at least n - f was hit, so no decomposition exists from here."""

    vertices: frozenset[int]


DecomposeOutcome = Decomposed | FoundSubgraph


def greedy_decompose(g: SimpleGraph, k: int, f: int) -> Decomposed | FoundSubgraph:
    """Decompose g greedily, or find a large k-connected subgraph.

    Repeatedly: if the current graph still has at least n - f vertices,
    look for a cut of size at most k-1; peel off the smallest component as
    A_i with the cut as C_i, and continue on the rest. If no such cut
    exists the current graph is k-connected (it has more than k vertices)
    and is returned as a FoundSubgraph.

    Requires n - f > k: in the band n - f <= k a graph like K_k has no
    small cut yet is not k-connected, so neither outcome would be valid.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if f < 0:
        raise ValueError(f"f must be non-negative, got {f}")
    n = g.order
    if n - f <= k:
        raise ValueError(
            f"need n - f > k (got n={n}, f={f}, k={k}); "
            "smaller graphs admit neither outcome"
        )
    current = frozenset(g.vertices)
    triples: list[Triple] = []
    while len(current) >= n - f:
        sub = induced_subgraph(g, current)
        cut = find_small_cut(sub, k)
        if cut is None:
            return FoundSubgraph(current)
        a = cut.side_a
        c = cut.separator
        d = frozenset(current - a - c)
        triples.append(Triple(a, c, d))
        current = frozenset(c | d)
    return Decomposed(Decomposition(k, f, n, tuple(triples)))


def verify_decomposition(
    g: SimpleGraph, d: Decomposition, strong: bool = False
) -> list[ClauseViolation]:
    """Check every clause literally; an empty list means the decomposition
    is valid (and strong, when requested)."""
    if d.n != g.order:
        raise ValueError(f"decomposition is for n={d.n}, graph has {g.order} vertices")
    all_vertices = frozenset(g.vertices)
    for t in d.triples:
        out_of_range = (t.a | t.c | t.d) - all_vertices
        if out_of_range:
            raise ValueError(f"vertex ids out of range: {sorted(out_of_range)}")

    violations: list[ClauseViolation] = []
    bound = d.n - d.f
    triples = d.triples

    first = triples[0]
    if (
        len(first.a) + len(first.c) + len(first.d) != d.n
        or (first.a | first.c | first.d) != all_vertices
    ):
        violations.append(
            ClauseViolation("1", 1, "A_1, C_1, D_1 do not partition the vertex set")
        )
    for i in range(1, d.l):
        prev = triples[i - 1]
        cur = triples[i]
        pool = prev.c | prev.d
        if (
            len(cur.a) + len(cur.c) + len(cur.d) != len(pool)
            or (cur.a | cur.c | cur.d) != pool
        ):
            violations.append(
                ClauseViolation(
                    "2",
                    i,
                    f"triple {i + 1} does not partition C_{i} + D_{i}",
                )
            )
    for i, t in enumerate(triples, start=1):
        if len(t.c) > d.k - 1:
            violations.append(
                ClauseViolation("3", i, f"|C_{i}| = {len(t.c)} > k-1 = {d.k - 1}")
            )
    for i, t in enumerate(triples, start=1):
        if not (1 <= len(t.a) <= len(t.d)):
            violations.append(
                ClauseViolation(
                    "4", i, f"need 1 <= |A_{i}| <= |D_{i}|, got {len(t.a)} and {len(t.d)}"
                )
            )
            continue
        crossing = next(
            (
                (u, v)
                for u in sorted(t.a)
                for v in sorted(g.neighbors(u))
                if v in t.d
            ),
            None,
        )
        if crossing is not None:
            violations.append(
                ClauseViolation(
                    "4", i, f"edge {crossing} joins A_{i} and D_{i}"
                )
            )
    for i, t in enumerate(triples[:-1], start=1):
        if len(t.c) + len(t.d) < bound:
            violations.append(
                ClauseViolation(
                    "5", i, f"|C_{i}| + |D_{i}| = {len(t.c) + len(t.d)} < n-f = {bound}"
                )
            )
    last = triples[-1]
    if len(last.c) + len(last.d) >= bound:
        violations.append(
            ClauseViolation(
                "6",
                d.l,
                f"|C_l| + |D_l| = {len(last.c) + len(last.d)} >= n-f = {bound}",
            )
        )
    if strong:
        for i, t in enumerate(triples, start=1):
            if len(t.a) + len(t.c) >= bound:
                violations.append(
                    ClauseViolation(
                        "strong",
                        i,
                        f"|A_{i}| + |C_{i}| = {len(t.a) + len(t.c)} >= n-f = {bound}",
                    )
                )
    return violations


class EdgePartition(NamedTuple):
    """Every edge of the host graph, split by where the decomposition puts it:
    both ends in one A_i, an A_i-to-C_i edge, or inside the final C_l + D_l."""

    aa: tuple[tuple[int, int], ...]
    ac: tuple[tuple[int, int], ...]
    last: tuple[tuple[int, int], ...]


def edge_partition(g: SimpleGraph, d: Decomposition) -> EdgePartition:
    """Classify each edge by the smallest step whose A_i it meets."""
    problems = verify_decomposition(g, d, strong=False)
    if problems:
        raise ValueError(f"invalid decomposition: {problems[0].detail}")
    first_a: dict[int, int] = {}
    for i, t in enumerate(d.triples, start=1):
        for v in t.a:
            first_a.setdefault(v, i)
    aa: list[tuple[int, int]] = []
    ac: list[tuple[int, int]] = []
    last: list[tuple[int, int]] = []
    sentinel = d.l + 1
    for u, v in sorted(g.edges):
        i = min(first_a.get(u, sentinel), first_a.get(v, sentinel))
        if i == sentinel:
            last.append((u, v))
            continue
        t = d.triples[i - 1]
        if u in t.a and v in t.a:
            aa.append((u, v))
        elif (u in t.a and v in t.c) or (v in t.a and u in t.c):
            ac.append((u, v))
        else:
            # unreachable for a verified decomposition: the far endpoint
            # would have to sit in D_i, contradicting clause (4)
            raise ValueError(f"edge ({u}, {v}) escapes the partition at step {i}")
    return EdgePartition(tuple(aa), tuple(ac), tuple(last))


def implies_no_large_subgraph(g: SimpleGraph, d: Decomposition) -> bool:
    """True when the decomposition is valid and strong, certifying that g
    has no k-connected subgraph with n - f or more vertices."""
    return not verify_decomposition(g, d, strong=True)


def serialize_decomposition(d: Decomposition) -> str:
    lines = [
        "kdecomp 1",
        f"k {d.k}",
        f"f {d.f}",
        f"n {d.n}",
        f"l {d.l}",
    ]
    for t in d.triples:
        for tag, members in (("A", t.a), ("C", t.c), ("D", t.d)):
            body = " ".join(str(v) for v in sorted(members))
            lines.append(f"{tag} {body}" if body else tag)
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str | bytes) -> Decomposition:
    lines = _normalize_text(text).split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != "kdecomp 1":
        raise ParseError("line 1: expected header 'kdecomp 1'")

    def scalar(lineno: int, tag: str) -> int:
        if lineno - 1 >= len(lines):
            raise ParseError(f"line {lineno}: expected '{tag} <int>'")
        line = lines[lineno - 1]
        if not line.startswith(tag + " "):
            raise ParseError(f"line {lineno}: expected '{tag} <int>', got {line!r}")
        try:
            return int(line[len(tag) + 1 :])
        except ValueError:
            raise ParseError(f"line {lineno}: bad integer in {line!r}") from None

    k = scalar(2, "k")
    f = scalar(3, "f")
    n = scalar(4, "n")
    l = scalar(5, "l")
    if l < 1:
        raise ParseError("line 5: need l >= 1")
    expected = 5 + 3 * l
    if len(lines) != expected:
        raise ParseError(f"expected {expected} lines for l={l}, got {len(lines)}")
    triples: list[Triple] = []
    lineno = 6
    for _ in range(l):
        sets: list[frozenset[int]] = []
        for tag in ("A", "C", "D"):
            line = lines[lineno - 1]
            if line != tag and not line.startswith(tag + " "):
                raise ParseError(f"line {lineno}: expected a '{tag}' line, got {line!r}")
            body = line[len(tag) :].split()
            try:
                members = [int(tok) for tok in body]
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex id in {line!r}") from None
            if any(m < 0 for m in members):
                raise ParseError(f"line {lineno}: negative vertex id")
            if len(set(members)) != len(members):
                raise ParseError(f"line {lineno}: duplicate vertex id")
            sets.append(frozenset(members))
            lineno += 1
        triples.append(Triple(*sets))
    return Decomposition(k, f, n, tuple(triples))
