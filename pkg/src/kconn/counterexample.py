"""Explicit colorings of K_n with no large k-connected monochromatic subgraph.

For admissible k (those with ceil(sqrt(2k-1)) <= k/2) the generator builds
a coloring on n = 5k - 2*ceil(sqrt(2k-1)) - 3 vertices together with two
independently checkable certificates:

  * a strong (2k-2, k)-decomposition of the red view, bounding red
    k-connected subgraphs below n - 2k + 2, and
  * a peeling sequence of 2k-1 vertices for the blue view, each with at
    most k-1 same-color neighbors among the not-yet-peeled vertices, which
    bounds any blue subgraph of minimum degree >= k (hence any k-connected
    one) below n - 2k + 2.

Vertices follow a fixed documented order so certificates and golden files
are stable: first the k singleton anchors a_1..a_k, then the final-step
blocks a_l^1..a_l^{k-1}, c_l^1..c_l^{k-1}, d_l^1..d_l^{2k-2t-1}. Peeling
certificates travel as ``kpeel 1`` files; the vertex-name sidecar format is
``klabels 1`` with one ``<index> <name>`` line per vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import construction_admissible, tau_of
from .coloring import (
    Color,
    EdgeColoring,
    ParseError,
    _normalize_text,
    coloring_from_edges,
    monochromatic_view,
)
from .decomposition import Decomposition, Triple


@dataclass(frozen=True)
class CounterexampleInstance:
    """A generated coloring plus the named blocks the certificates refer to.

    a_blocks/c_blocks/d_blocks hold the k+1 construction triples
    (A_i, C_i, D_i); labels maps each vertex index to its symbolic name.
    """

    k: int
    tau: int
    n: int
    coloring: EdgeColoring
    labels: tuple[str, ...]
    a_blocks: tuple[frozenset[int], ...]
    c_blocks: tuple[frozenset[int], ...]
    d_blocks: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class PeelingCertificate:
    """An ordered vertex sequence witnessing a degree-peeling bound."""

    k: int
    sequence: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if len(set(self.sequence)) != len(self.sequence):
            raise ValueError("peeling sequence entries must be distinct")


@dataclass(frozen=True)
class PeelingVerdict:
    ok: bool
    bound: int | None = None
    fail_index: int | None = None
    fail_degree: int | None = None


def generate(k: int) -> CounterexampleInstance:
    """Build the counterexample coloring for an admissible k.

    Raises ValueError for inadmissible k (the construction assumes
    tau = ceil(sqrt(2k-1)) stays within (0, k/2]).
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    tau = tau_of(k)
    if not construction_admissible(k):
        raise ValueError(
            f"construction needs tau = ceil(sqrt(2k-1)) <= k/2; "
            f"k={k} gives tau={tau} > {k / 2}"
        )
    n = 5 * k - 2 * tau - 3

    anchors = list(range(0, k))  # a_1..a_k
    a_last = list(range(k, 2 * k - 1))  # a_l^1..a_l^{k-1}
    c_last = list(range(2 * k - 1, 3 * k - 2))  # c_l^1..c_l^{k-1}
    d_last = list(range(3 * k - 2, n))  # d_l^1..d_l^{2k-2tau-1}
    assert len(d_last) == 2 * k - 2 * tau - 1
    assert k + len(a_last) + len(c_last) + len(d_last) == n

    alu = frozenset(a_last[:tau])
    dlu = frozenset(d_last[: k - tau])

    # the index sequence 1..tau repeated tau times; long enough for the
    # 2k-1 draws below, and never equal at consecutive positions
    def seq(i: int) -> int:
        return ((i - 1) % tau) + 1

    assert tau * tau >= 2 * k - 1
    assert all(seq(2 * i - 1) != seq(2 * i) for i in range(1, k))

    a_blocks = [frozenset({anchors[i]}) for i in range(k)]
    a_blocks.append(frozenset(a_last))

    c_blocks: list[frozenset[int]] = []
    for i in range(1, k):
        dropped = {a_last[seq(2 * i - 1) - 1], a_last[seq(2 * i) - 1]}
        c_blocks.append((alu - dropped) | {c_last[i - 1]} | dlu)
    c_blocks.append((alu - {a_last[seq(2 * k - 1) - 1]}) | dlu)
    c_blocks.append(frozenset(c_last))
    assert all(len(c) == k - 1 for c in c_blocks)

    d_blocks = [frozenset(range(n)) - a_blocks[0] - c_blocks[0]]
    for i in range(1, k):
        d_blocks.append((c_blocks[i - 1] | d_blocks[i - 1]) - a_blocks[i] - c_blocks[i])
    d_blocks.append(frozenset(d_last))

    blue: set[tuple[int, int]] = set()
    for a, d in zip(a_blocks, d_blocks):
        for u in a:
            for v in d:
                blue.add((u, v) if u < v else (v, u))
    coloring = coloring_from_edges(n, blue, Color.BLUE)

    labels = (
        tuple(f"a_{i}" for i in range(1, k + 1))
        + tuple(f"a_l^{j}" for j in range(1, k))
        + tuple(f"c_l^{j}" for j in range(1, k))
        + tuple(f"d_l^{j}" for j in range(1, 2 * k - 2 * tau))
    )
    assert len(labels) == n

    return CounterexampleInstance(
        k=k,
        tau=tau,
        n=n,
        coloring=coloring,
        labels=labels,
        a_blocks=tuple(a_blocks),
        c_blocks=tuple(c_blocks),
        d_blocks=tuple(d_blocks),
    )


def red_certificate(inst: CounterexampleInstance) -> Decomposition:
    """The construction's own triples as a strong (2k-2, k)-decomposition
    of the red view, with l = k+1 steps."""
    triples = tuple(
        Triple(a, c, d)
        for a, c, d in zip(inst.a_blocks, inst.c_blocks, inst.d_blocks)
    )
    return Decomposition(k=inst.k, f=2 * inst.k - 2, n=inst.n, triples=triples)


def blue_certificate(inst: CounterexampleInstance) -> PeelingCertificate:
    """Peeling order c_l^1..c_l^{k-1}, d_l^1..d_l^{k-tau}, a_l^1..a_l^tau
    (2k-1 vertices) for the blue view."""
    k, tau, n = inst.k, inst.tau, inst.n
    c_last = list(range(2 * k - 1, 3 * k - 2))
    d_last = list(range(3 * k - 2, n))
    a_last = list(range(k, 2 * k - 1))
    sequence = tuple(c_last + d_last[: k - tau] + a_last[:tau])
    assert len(sequence) == 2 * k - 1
    return PeelingCertificate(k=k, sequence=sequence)


def verify_peeling(
    coloring: EdgeColoring, color: Color, cert: PeelingCertificate
) -> PeelingVerdict:
    """Walk the sequence, checking each vertex has at most k-1 same-color
    neighbors among the vertices not yet peeled.

    On success every subgraph of the monochromatic view with minimum degree
    >= k avoids the whole sequence, so its order (and the order of any
    k-connected subgraph) is at most n - len(sequence), the reported bound.
    """
    n = coloring.n
    for v in cert.sequence:
        if not (0 <= v < n):
            raise ValueError(f"sequence vertex {v} out of range for n={n}")
    view = monochromatic_view(coloring, color)
    peeled: set[int] = set()
    for position, v in enumerate(cert.sequence, start=1):
        peeled.add(v)
        residual = len(view.neighbors(v) - peeled)
        if residual > cert.k - 1:
            return PeelingVerdict(ok=False, fail_index=position, fail_degree=residual)
    return PeelingVerdict(ok=True, bound=n - len(cert.sequence))


def serialize_peeling(cert: PeelingCertificate) -> str:
    body = " ".join(str(v) for v in cert.sequence)
    seq_line = f"seq {body}" if body else "seq"
    return f"kpeel 1\nk {cert.k}\n{seq_line}\n"


def parse_peeling(text: str | bytes) -> PeelingCertificate:
    lines = _normalize_text(text).split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != "kpeel 1":
        raise ParseError("line 1: expected header 'kpeel 1'")
    if len(lines) != 3:
        raise ParseError(f"expected 3 lines, got {len(lines)}")
    if not lines[1].startswith("k "):
        raise ParseError("line 2: expected 'k <K>'")
    try:
        k = int(lines[1][2:])
    except ValueError:
        raise ParseError(f"line 2: bad integer {lines[1][2:]!r}") from None
    if lines[2] != "seq" and not lines[2].startswith("seq "):
        raise ParseError("line 3: expected 'seq <indices>'")
    try:
        sequence = tuple(int(tok) for tok in lines[2][3:].split())
    except ValueError:
        raise ParseError("line 3: bad vertex id in sequence") from None
    if len(set(sequence)) != len(sequence):
        raise ParseError("line 3: duplicate vertex in sequence")
    if any(v < 0 for v in sequence):
        raise ParseError("line 3: negative vertex id")
    return PeelingCertificate(k=k, sequence=sequence)


def serialize_labels(labels: tuple[str, ...]) -> str:
    lines = ["klabels 1"] + [f"{i} {name}" for i, name in enumerate(labels)]
    return "\n".join(lines) + "\n"


def parse_labels(text: str | bytes) -> tuple[str, ...]:
    lines = _normalize_text(text).split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != "klabels 1":
        raise ParseError("line 1: expected header 'klabels 1'")
    entries: dict[int, str] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(" ", 1)
        if len(parts) != 2 or not parts[1]:
            raise ParseError(f"line {lineno}: expected '<index> <name>'")
        try:
            index = int(parts[0])
        except ValueError:
            raise ParseError(f"line {lineno}: bad index {parts[0]!r}") from None
        if index in entries:
            raise ParseError(f"line {lineno}: duplicate index {index}")
        entries[index] = parts[1]
    if sorted(entries) != list(range(len(entries))):
        raise ParseError("label indices must cover 0..n-1 exactly")
    return tuple(entries[i] for i in range(len(entries)))
