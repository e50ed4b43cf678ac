"""2-edge-colored complete graphs, monochromatic views, and induced subgraphs.

The on-disk format for colorings is ``kcoloring 1``::

    kcoloring 1
    n <N>
    <row 0: N-1 characters from {R,B}>
    ...
    <row N-2: 1 character>

Row i, character j encodes the color of the edge {i, i+1+j}, so the rows
spell out the upper triangle of the color matrix. Files are ASCII with LF
line endings; the emitter is canonical (rows in increasing vertex order,
no trailing whitespace). CRLF input is normalized before parsing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable


class Color(Enum):
    RED = "R"
    BLUE = "B"

    @property
    def opposite(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


class ParseError(ValueError):
    """Input text does not conform to one of the k* file formats."""


def _normalize_text(text: str | bytes) -> str:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"non-ASCII byte at offset {exc.start}") from None
    return text.replace("\r\n", "\n").replace("\r", "\n")


@dataclass(frozen=True)
class EdgeColoring:
    """A red/blue coloring of every edge of the complete graph on [0, n).

    Stored densely as the upper triangle of the color matrix; symmetry is
    structural (there is only one entry per unordered pair) and self-loops
    do not exist. Immutable after construction.
    """

    n: int
    rows: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need at least 2 vertices, got n={self.n}")
        if len(self.rows) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            if len(row) != self.n - 1 - i:
                raise ValueError(
                    f"row {i} has length {len(row)}, expected {self.n - 1 - i}"
                )
            for ch in row:
                if ch not in ("R", "B"):
                    raise ValueError(f"row {i} contains invalid color {ch!r}")

    def color_of(self, u: int, v: int) -> Color:
        if u == v:
            raise ValueError(f"self-loops are not colored: u = v = {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex out of range: {{{u}, {v}}} with n={self.n}")
        if u > v:
            u, v = v, u
        return Color(self.rows[u][v - u - 1])

    def edges_of(self, color: Color) -> frozenset[tuple[int, int]]:
        """All pairs carrying `color`, as (u, v) tuples with u < v."""
        letter = color.value
        return frozenset(
            (i, i + 1 + j)
            for i, row in enumerate(self.rows)
            for j, ch in enumerate(row)
            if ch == letter
        )

    def count_of(self, color: Color) -> int:
        letter = color.value
        return sum(row.count(letter) for row in self.rows)


def coloring_from_edges(
    n: int, edges: Iterable[tuple[int, int]], color: Color = Color.BLUE
) -> EdgeColoring:
    """Coloring of K_n where the given pairs carry `color` and every other
    pair carries the opposite color."""
    marked = set()
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad edge {{{u}, {v}}} for n={n}")
        marked.add((u, v) if u < v else (v, u))
    this, other = color.value, color.opposite.value
    rows = tuple(
        "".join(this if (i, j) in marked else other for j in range(i + 1, n))
        for i in range(n - 1)
    )
    return EdgeColoring(n, rows)


def parse_coloring(text: str | bytes) -> EdgeColoring:
    """Parse a ``kcoloring 1`` document.

    Raises ParseError with the offending line number on malformed input.
    """
    lines = _normalize_text(text).split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != "kcoloring 1":
        raise ParseError("line 1: expected header 'kcoloring 1'")
    if len(lines) < 2 or not lines[1].startswith("n "):
        raise ParseError("line 2: expected 'n <N>'")
    try:
        n = int(lines[1][2:])
    except ValueError:
        raise ParseError(f"line 2: bad vertex count {lines[1][2:]!r}") from None
    if n < 2:
        raise ParseError(f"line 2: need n >= 2, got {n}")
    if len(lines) != n + 1:
        raise ParseError(f"expected {n - 1} rows after the header, got {len(lines) - 2}")
    rows = []
    for i in range(n - 1):
        row = lines[2 + i]
        lineno = 3 + i
        if len(row) != n - 1 - i:
            raise ParseError(
                f"line {lineno}: row has {len(row)} characters, expected {n - 1 - i}"
            )
        for ch in row:
            if ch not in ("R", "B"):
                raise ParseError(f"line {lineno}: invalid color character {ch!r}")
        rows.append(row)
    return EdgeColoring(n, tuple(rows))


def serialize_coloring(coloring: EdgeColoring) -> str:
    return "kcoloring 1\n" + f"n {coloring.n}\n" + "\n".join(coloring.rows) + "\n"


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on an explicit, sorted vertex id tuple.

    Vertex ids are preserved by induced subgraphs (never renumbered), which
    keeps separator and witness sets meaningful across restrictions.
    """

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        seen = set(self.vertices)
        if len(seen) != len(self.vertices) or tuple(sorted(seen)) != self.vertices:
            raise ValueError("vertices must be strictly increasing and unique")
        for u, v in self.edges:
            if u >= v:
                raise ValueError(f"edge ({u}, {v}) is not normalized u < v")
            if u not in seen or v not in seen:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the graph")

    @staticmethod
    def from_edges(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            norm.add((u, v) if u < v else (v, u))
        return SimpleGraph(tuple(sorted(set(vertices))), frozenset(norm))

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise ValueError(f"vertex {v} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges


def monochromatic_view(coloring: EdgeColoring, color: Color) -> SimpleGraph:
    """The spanning subgraph of K_n carrying exactly the edges of `color`."""
    return SimpleGraph(tuple(range(coloring.n)), coloring.edges_of(color))


def induced_subgraph(g: SimpleGraph, members: Iterable[int]) -> SimpleGraph:
    """Subgraph of g induced by `members` (which must all belong to g)."""
    keep = frozenset(members)
    outside = keep - set(g.vertices)
    if outside:
        raise ValueError(f"members outside parent graph: {sorted(outside)}")
    return SimpleGraph(
        tuple(sorted(keep)),
        frozenset(e for e in g.edges if e[0] in keep and e[1] in keep),
    )
