"""Adjacency matrices for the graph families used throughout the package.

Labeling convention: in every family vertex 0 and vertex 1 are adjacent, so the
pair ``(0, 1)`` is always a nearest-neighbour pair.

* path / ring: vertices numbered along the chain.
* lattice: vertex index is the C-order (row-major) flattening of the
  coordinate tuple on a periodic ``side**d`` torus; vertex 1 is one step
  along the last axis.
* cube: vertices are the integers 0..7 read as 3-bit strings, adjacent when
  they differ in one bit.
* octahedron: K_{2,2,2}; the only non-neighbour of vertex ``i`` is ``(i + 3) % 6``.
* dodecahedron / icosahedron: literal edge lists, checked on construction.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Graph",
    "Solid",
    "make_path",
    "make_ring",
    "make_complete",
    "make_lattice",
    "make_platonic",
    "graph_distance",
    "distance_classes",
    "parse_graph",
]


class Solid(str, enum.Enum):
    TETRAHEDRON = "tetrahedron"
    CUBE = "cube"
    OCTAHEDRON = "octahedron"
    DODECAHEDRON = "dodecahedron"
    ICOSAHEDRON = "icosahedron"


# (vertex count, degree) per solid
SOLID_SHAPE = {
    Solid.TETRAHEDRON: (4, 3),
    Solid.CUBE: (8, 3),
    Solid.OCTAHEDRON: (6, 4),
    Solid.DODECAHEDRON: (20, 3),
    Solid.ICOSAHEDRON: (12, 5),
}

_DODECAHEDRON_EDGES = (
    (0, 1), (0, 10), (0, 19), (1, 2), (1, 8), (2, 3), (2, 6), (3, 4),
    (3, 19), (4, 5), (4, 17), (5, 6), (5, 15), (6, 7), (7, 8), (7, 14),
    (8, 9), (9, 10), (9, 13), (10, 11), (11, 12), (11, 18), (12, 13),
    (12, 16), (13, 14), (14, 15), (15, 16), (16, 17), (17, 18), (18, 19),
)

_ICOSAHEDRON_EDGES = (
    (0, 1), (0, 5), (0, 7), (0, 8), (0, 11), (1, 2), (1, 5), (1, 6),
    (1, 8), (2, 3), (2, 6), (2, 8), (2, 9), (3, 4), (3, 6), (3, 9),
    (3, 10), (4, 5), (4, 6), (4, 10), (4, 11), (5, 6), (5, 11), (7, 8),
    (7, 9), (7, 10), (7, 11), (8, 9), (9, 10), (10, 11),
)

# number of vertices at distance 0, 1, 2, ... from any vertex
_DISTANCE_PROFILE = {
    Solid.DODECAHEDRON: (1, 3, 6, 6, 3, 1),
    Solid.ICOSAHEDRON: (1, 5, 5, 1),
}


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with a dense 0/1 adjacency matrix.

    ``family`` is one of ``path``, ``ring``, ``complete``, ``lattice`` or
    ``platonic``; ``params`` holds the family arguments (``(n,)``,
    ``(d, side)`` or ``(solid_name,)``).
    """

    n: int
    adjacency: np.ndarray = field(repr=False)
    family: str
    params: tuple

    def __post_init__(self):
        a = np.array(self.adjacency, dtype=float)
        if a.shape != (self.n, self.n):
            raise ValueError(f"adjacency must be {self.n}x{self.n}, got {a.shape}")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if np.any(np.diag(a) != 0):
            raise ValueError("adjacency must have zero diagonal")
        if not np.all((a == 0) | (a == 1)):
            raise ValueError("adjacency entries must be 0 or 1")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @property
    def name(self) -> str:
        """Canonical spec string, parseable by :func:`parse_graph`."""
        if self.family == "platonic":
            return self.params[0]
        return ":".join([self.family, *map(str, self.params)])

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def is_regular(self) -> bool:
        deg = self.degrees
        return bool(np.all(deg == deg[0]))

    def neighbors(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.adjacency[i])]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        return hash((self.n, self.adjacency.tobytes()))


def _from_edges(n, edges, family, params) -> Graph:
    a = np.zeros((n, n))
    for i, j in edges:
        a[i, j] = a[j, i] = 1.0
    return Graph(n, a, family, params)


def _check_int(value, name, minimum):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def make_path(n: int) -> Graph:
    n = _check_int(n, "n", 2)
    return _from_edges(n, [(i, i + 1) for i in range(n - 1)], "path", (n,))


def make_ring(n: int) -> Graph:
    n = _check_int(n, "n", 3)
    return _from_edges(n, [(i, (i + 1) % n) for i in range(n)], "ring", (n,))


def make_complete(n: int) -> Graph:
    n = _check_int(n, "n", 2)
    return Graph(n, np.ones((n, n)) - np.eye(n), "complete", (n,))


def make_lattice(d: int, side: int) -> Graph:
    """Periodic ``side**d`` hypercubic lattice (torus), degree ``2d``."""
    d = _check_int(d, "d", 1)
    if d > 3:
        raise ValueError(f"d must be 1, 2 or 3, got {d}")
    side = _check_int(side, "side", 3)
    shape = (side,) * d
    edges = []
    for coord in itertools.product(range(side), repeat=d):
        i = np.ravel_multi_index(coord, shape)
        for axis in range(d):
            nb = list(coord)
            nb[axis] = (nb[axis] + 1) % side
            edges.append((i, np.ravel_multi_index(tuple(nb), shape)))
    return _from_edges(side**d, edges, "lattice", (d, side))


def make_platonic(solid: Solid | str) -> Graph:
    try:
        solid = Solid(solid)
    except ValueError:
        raise ValueError(f"unknown solid {solid!r}") from None
    params = (solid.value,)

    if solid is Solid.TETRAHEDRON:
        g = Graph(4, np.ones((4, 4)) - np.eye(4), "platonic", params)
    elif solid is Solid.CUBE:
        edges = [(i, i ^ (1 << b)) for i in range(8) for b in range(3) if i < i ^ (1 << b)]
        g = _from_edges(8, edges, "platonic", params)
    elif solid is Solid.OCTAHEDRON:
        a = np.ones((6, 6)) - np.eye(6)
        for i in range(6):
            a[i, (i + 3) % 6] = 0.0
        g = Graph(6, a, "platonic", params)
    elif solid is Solid.DODECAHEDRON:
        g = _from_edges(20, _DODECAHEDRON_EDGES, "platonic", params)
    else:
        g = _from_edges(12, _ICOSAHEDRON_EDGES, "platonic", params)

    n, z = SOLID_SHAPE[solid]
    assert g.n == n and np.all(g.degrees == z), f"corrupt {solid.value} data"
    if solid in _DISTANCE_PROFILE:
        for v in range(n):
            profile = np.bincount(_bfs(g, v))
            assert tuple(profile) == _DISTANCE_PROFILE[solid], f"corrupt {solid.value} data"
    return g


def _bfs(g: Graph, source: int) -> np.ndarray:
    dist = np.full(g.n, -1, dtype=int)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in np.flatnonzero(g.adjacency[u]):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def graph_distance(g: Graph, i: int, j: int) -> int:
    """Number of edges on a shortest path between ``i`` and ``j``."""
    for v in (i, j):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for {g.n}-vertex graph")
    d = int(_bfs(g, i)[j])
    if d < 0:
        raise ValueError(f"vertices {i} and {j} are not connected")
    return d


def distance_classes(g: Graph, source: int = 0) -> dict[int, list[int]]:
    """Group vertices by their distance from ``source`` (distance 0 omitted)."""
    dist = _bfs(g, source)
    classes: dict[int, list[int]] = {}
    for v, d in enumerate(dist):
        if d > 0:
            classes.setdefault(int(d), []).append(v)
    return classes


def parse_graph(spec: str) -> Graph:
    """Build a graph from ``path:N``, ``ring:N``, ``complete:N``,
    ``lattice:D:SIDE`` or a solid name."""
    parts = spec.strip().lower().split(":")
    kind, args = parts[0], parts[1:]
    try:
        values = [int(a) for a in args]
    except ValueError:
        raise ValueError(f"malformed graph spec {spec!r}") from None

    factories = {"path": make_path, "ring": make_ring, "complete": make_complete}
    if kind in factories and len(values) == 1:
        return factories[kind](values[0])
    if kind == "lattice" and len(values) == 2:
        return make_lattice(*values)
    if not args and kind in {s.value for s in Solid}:
        return make_platonic(kind)
    raise ValueError(f"malformed graph spec {spec!r}")
