"""Combinatorial model of a flow on the closed 2-disk with a single
stationary point on the boundary and no closed orbits.

Every separatrix of such a flow is a loop that starts and ends at the
stationary point, so the n separatrices form a system of nested
non-crossing loops.  They cut the disk into n + 1 cells.  Nesting of the
loops is recorded by a plane rooted tree: one vertex per cell, the root
being the cell adjacent to the disk boundary, and one edge per
separatrix (the loop separating a cell from its parent cell).

Each separatrix carries a color in {+1, -1}: +1 when the flow direction
along the loop agrees with the orientation the plane induces on it as
the boundary of the region it encloses, -1 otherwise.  A cell with k
inner loops is a curvilinear (k+1)-gon; walking its boundary positively
one traverses the outer loop once (side 0) and each inner loop once
(sides 1..k), meeting k+1 corners at the stationary point.  The
traversal direction of side i relative to the flow is

    d_0 = color of the outer loop (+1 for the root cell, whose outer
          side is the disk boundary), and
    d_i = -color(inner loop i)   for i >= 1,

because an inner loop is walked against its own induced orientation.
A corner is a source when the flow leaves along both adjacent sides, a
sink when it enters along both, and ordinary (hyperbolic) when the flow
passes through.  A coherently oriented boundary has no sources or sinks;
such a cell is cyclic and contains exactly one elliptic corner, chosen
freely and recorded by the side whose flow enters it.  A boundary with
exactly one source (hence one sink) bounds a polar cell.  Boundaries
with two or more sources do not occur in a flow.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

BLACK = 1
RED = -1

#: Conventional direction of side 0 of the root cell (the disk boundary).
ROOT_LOWER_DIRECTION = 1


class CornerType(Enum):
    SOURCE = "source"
    SINK = "sink"
    HYPERBOLIC = "hyperbolic"
    ELLIPTIC = "elliptic"


class CellKind(Enum):
    CYCLIC = "cyclic"
    POLAR = "polar"
    INVALID = "invalid"


class _CoherentMarker:
    """Returned by classify_corners for a coherently oriented boundary."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "COHERENT"


COHERENT = _CoherentMarker()


# ======================================================================
# plane rooted trees
# ======================================================================

@dataclass(frozen=True)
class PlaneRootedTree:
    """A rooted tree with ordered children, vertices numbered in level
    order (root = 0, then level by level, left to right).

    ``children[v]`` is the ordered tuple of child ids of vertex v.  With
    level-order numbering the child tuples are exactly the consecutive
    blocks 1..V-1, which ``__post_init__`` enforces.
    """

    children: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "children", tuple(tuple(kids) for kids in self.children)
        )
        if not self.children:
            raise ValueError("a tree has at least one vertex")
        nxt = 1
        for v, kids in enumerate(self.children):
            for c in kids:
                if c != nxt:
                    raise ValueError(
                        f"children of vertex {v} break level order at id {c}"
                    )
                nxt += 1
        if nxt != len(self.children):
            raise ValueError("child lists do not cover all non-root vertices")

    @classmethod
    def from_up_degrees(cls, degrees) -> "PlaneRootedTree":
        """Build the tree whose level-order up-degree sequence is ``degrees``."""
        degrees = tuple(int(d) for d in degrees)
        if any(d < 0 for d in degrees):
            raise ValueError("up-degrees are non-negative")
        blocks = []
        nxt = 1
        for i, d in enumerate(degrees):
            if i >= nxt:
                raise ValueError(f"vertex {i} has no parent (prefix sums too small)")
            blocks.append(tuple(range(nxt, nxt + d)))
            nxt += d
        if nxt != len(degrees):
            raise ValueError("up-degrees do not sum to vertex count minus one")
        return cls(tuple(blocks))

    @property
    def vertex_count(self) -> int:
        return len(self.children)

    @property
    def separatrix_count(self) -> int:
        return len(self.children) - 1

    @property
    def up_degrees(self) -> tuple[int, ...]:
        return tuple(len(kids) for kids in self.children)

    def parents(self) -> tuple[int | None, ...]:
        par: list[int | None] = [None] * self.vertex_count
        for v, kids in enumerate(self.children):
            for c in kids:
                par[c] = v
        return tuple(par)

    def depths(self) -> tuple[int, ...]:
        dep = [0] * self.vertex_count
        for v, kids in enumerate(self.children):
            for c in kids:
                dep[c] = dep[v] + 1
        return tuple(dep)


@dataclass(frozen=True)
class DistinguishedGraph:
    """A plane rooted tree with a color on every edge and an optional
    prime label on some edges.

    Edge data is stored at the lower endpoint (the child): ``colors[v]``
    and ``primes[v]`` describe the edge from v toward the root.  Slot 0
    holds the boundary convention for the root (+1, never primed).
    """

    tree: PlaneRootedTree
    colors: tuple[int, ...]
    primes: tuple[bool, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(self.colors))
        object.__setattr__(self, "primes", tuple(bool(p) for p in self.primes))
        v = self.tree.vertex_count
        if len(self.colors) != v or len(self.primes) != v:
            raise ValueError("decoration length differs from vertex count")
        if self.colors[0] != ROOT_LOWER_DIRECTION:
            raise ValueError("slot 0 of colors holds the boundary convention +1")
        if self.primes[0]:
            raise ValueError("the root carries no prime")
        for c in self.colors[1:]:
            if c not in (BLACK, RED):
                raise ValueError(f"edge color must be +1 or -1, got {c!r}")

    @property
    def separatrix_count(self) -> int:
        return self.tree.separatrix_count


# ======================================================================
# cell boundaries and corners
# ======================================================================

@dataclass(frozen=True)
class CellBoundary:
    """Directions d_0..d_n of the sides of one cell, walked positively."""

    sides: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sides", tuple(self.sides))
        if not self.sides:
            raise ValueError("a cell has at least one side")
        for d in self.sides:
            if d not in (1, -1):
                raise ValueError(f"side direction must be +1 or -1, got {d!r}")

    def __len__(self) -> int:
        return len(self.sides)

    @property
    def coherent(self) -> bool:
        return all(d == self.sides[0] for d in self.sides)


def boundary_directions(graph: DistinguishedGraph, v: int) -> CellBoundary:
    """Boundary of the cell of vertex v: side 0 is the lower side, sides
    1..k follow the ordered children."""
    if not 0 <= v < graph.tree.vertex_count:
        raise ValueError(f"unknown vertex id {v}")
    lower = graph.colors[v]
    return CellBoundary((lower,) + tuple(-graph.colors[c] for c in graph.tree.children[v]))


def classify_corners(boundary: CellBoundary):
    """Corner types of a cell, or COHERENT when the boundary is one cycle.

    Corner i sits between side i and side i+1 (indices mod the side
    count).  On a coherent boundary every corner is passed through, and
    which one is elliptic is extra data, so the marker is returned
    instead of a list.
    """
    d = boundary.sides
    if boundary.coherent:
        return COHERENT
    m = len(d)
    corners = []
    for i in range(m):
        pair = (d[i], d[(i + 1) % m])
        if pair == (-1, 1):
            corners.append(CornerType.SOURCE)
        elif pair == (1, -1):
            corners.append(CornerType.SINK)
        else:
            corners.append(CornerType.HYPERBOLIC)
    return corners


def classify_cell(boundary: CellBoundary) -> CellKind:
    """Cyclic, polar, or invalid (more than one source corner)."""
    corners = classify_corners(boundary)
    if corners is COHERENT:
        return CellKind.CYCLIC
    sources = sum(1 for c in corners if c is CornerType.SOURCE)
    return CellKind.POLAR if sources == 1 else CellKind.INVALID


def source_corner_count(boundary: CellBoundary) -> int:
    corners = classify_corners(boundary)
    if corners is COHERENT:
        return 0
    return sum(1 for c in corners if c is CornerType.SOURCE)


# ======================================================================
# cell configurations
# ======================================================================

@dataclass(frozen=True)
class CyclicCell:
    """Coherent cell; the elliptic corner is entered by side ``elliptic_entry``."""

    elliptic_entry: int


@dataclass(frozen=True)
class PolarCell:
    source_corner: int
    sink_corner: int


CellConfiguration = CyclicCell | PolarCell


@dataclass(frozen=True)
class CellDecoration:
    """One admissible flow pattern in a single cell, together with the
    edge decorations it forces on the inner loops."""

    config: CellConfiguration
    child_colors: tuple[int, ...]
    child_primes: tuple[bool, ...]


def cell_config_count(n: int) -> int:
    """Number of flow configurations in a cell with n inner loops.

    A polar pattern is a choice of an interval of sides carrying the
    reversed direction, n(n+1)/2 in all; a cyclic pattern is a choice of
    entry side for the elliptic corner, n+1 in all.
    """
    if n < 0:
        raise ValueError("inner loop count is non-negative")
    return (n + 1) * (n + 2) // 2


def polar_boundary(n: int, source: int, sink: int) -> CellBoundary:
    """The boundary forced by a source corner and a sink corner.

    Sides strictly after the source up to and including the sink (walking
    positively) carry +1; the rest carry -1.
    """
    m = n + 1
    if not (0 <= source < m and 0 <= sink < m):
        raise ValueError("corner index out of range")
    if source == sink:
        raise ValueError("source and sink corners are distinct")
    d = [0] * m
    i = (source + 1) % m
    while True:
        d[i] = 1
        if i == sink:
            break
        i = (i + 1) % m
    i = (sink + 1) % m
    while True:
        d[i] = -1
        if i == source:
            break
        i = (i + 1) % m
    return CellBoundary(tuple(d))


@lru_cache(maxsize=None)
def enumerate_cell_configs(n: int, lower_direction: int) -> tuple[CellDecoration, ...]:
    """All configurations of a cell with n inner loops whose side 0 has
    the given direction, sorted by the forced (colors, primes) pair.

    Cyclic configurations force the opposite color -d_0 on every inner
    loop and prime the entered loop when it is an inner one.  Polar
    configurations force colors from the pattern of the (source, sink)
    pair and never prime.
    """
    if lower_direction not in (1, -1):
        raise ValueError("lower direction must be +1 or -1")
    if n < 0:
        raise ValueError("inner loop count is non-negative")
    out: list[CellDecoration] = []
    inner_color = -lower_direction
    no_primes = (False,) * n
    for entry in range(n + 1):
        primes = tuple(i == entry - 1 for i in range(n))
        out.append(CellDecoration(CyclicCell(entry), (inner_color,) * n, primes))
    for source in range(n + 1):
        for sink in range(n + 1):
            if source == sink:
                continue
            d = polar_boundary(n, source, sink).sides
            if d[0] != lower_direction:
                continue
            colors = tuple(-d[i] for i in range(1, n + 1))
            out.append(CellDecoration(PolarCell(source, sink), colors, no_primes))
    out.sort(key=lambda dec: (dec.child_colors, dec.child_primes))
    return tuple(out)


def extract_cell_config(
    lower_direction: int,
    child_colors: tuple[int, ...],
    child_primes: tuple[bool, ...],
) -> CellConfiguration:
    """Recover the configuration from the decorations it forced.

    Raises ValueError when no configuration produces them (a prime on a
    non-coherent boundary, several primes, or a pattern with two or more
    sources).
    """
    n = len(child_colors)
    if len(child_primes) != n:
        raise ValueError("color and prime lists differ in length")
    boundary = CellBoundary((lower_direction,) + tuple(-c for c in child_colors))
    primed = [i for i, p in enumerate(child_primes) if p]
    if boundary.coherent:
        if len(primed) > 1:
            raise ValueError("at most one inner loop of a cell is primed")
        return CyclicCell(primed[0] + 1 if primed else 0)
    if primed:
        raise ValueError("a primed loop requires a coherent boundary")
    corners = classify_corners(boundary)
    sources = [i for i, c in enumerate(corners) if c is CornerType.SOURCE]
    if len(sources) != 1:
        raise ValueError(f"boundary has {len(sources)} source corners")
    sink = next(i for i, c in enumerate(corners) if c is CornerType.SINK)
    return PolarCell(sources[0], sink)


def elliptic_corner_index(entry: int, boundary: CellBoundary) -> int:
    """Corner entered by side ``entry`` on a coherent boundary.

    With direction +1 side i runs from corner i-1 to corner i, with -1
    the other way round.
    """
    if not boundary.coherent:
        raise ValueError("elliptic corners live on coherent boundaries")
    m = len(boundary.sides)
    if not 0 <= entry < m:
        raise ValueError("entry side out of range")
    if boundary.sides[0] == 1:
        return entry
    return (entry - 1) % m


def all_boundaries(n: int, lower_direction: int = 1):
    """Iterate the 2**n boundaries of a cell with n inner loops."""
    for rest in itertools.product((1, -1), repeat=n):
        yield CellBoundary((lower_direction,) + rest)
