"""Immutable simple undirected graphs plus the handful of queries the rest of the package needs.

Vertices are dense integers 0..n-1.  Graphs are value objects: equal iff they
have the same vertex count and edge set, hashable, and safe to share between
threads.  Everything here is a pure function of its inputs.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from itertools import combinations


class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    Duplicate edge pairs and both orientations of the same pair collapse to a
    single edge at construction time.
    """

    __slots__ = ("n", "edges", "_adj", "_masks", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(canon)
        adj: list[set[int]] = [set() for _ in range(n)]
        masks = [0] * n
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._adj = tuple(frozenset(s) for s in adj)
        self._masks = tuple(masks)
        self._hash = hash((n, self.edges))

    # -- basic queries ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("max degree of the empty graph is undefined")
        return max(len(s) for s in self._adj)

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbor bitmask per vertex (bit u set in masks[v] iff uv is an edge)."""
        return self._masks

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph induced by ``keep`` plus the old->new index map."""
        kept = sorted(set(keep))
        for v in kept:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(kept)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(kept), edges), index

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring of the vertices; every edge must cross sides."""

    side: tuple[int, ...]

    def side_of(self, v: int) -> int:
        return self.side[v]


@dataclass(frozen=True)
class NotBipartite:
    """Witness returned when no bipartition exists: an odd closed walk."""

    odd_cycle: tuple[int, ...]


def bipartition_of(g: Graph) -> Bipartition | NotBipartite:
    """BFS 2-coloring, or an odd-cycle witness when the graph is not bipartite.

    Each connected component is rooted at its smallest vertex, which is placed
    on side 0; isolated vertices therefore land on side 0.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u)):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    return NotBipartite(_odd_walk(parent, u, w))
    return Bipartition(tuple(side))


def _odd_walk(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    """Closed odd walk through edge uv using the two BFS tree paths."""
    path_u, path_v = [u], [v]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    while parent[path_v[-1]] != -1:
        path_v.append(parent[path_v[-1]])
    anc_u = set(path_u)
    meet = next(x for x in path_v if x in anc_u)
    up = path_u[: path_u.index(meet) + 1]
    down = path_v[: path_v.index(meet)]
    # walk: u .. meet .. v, closed by the edge vu
    return tuple(up + list(reversed(down)))


def connected_components(g: Graph) -> list[set[int]]:
    """Maximal connected vertex sets, ordered by smallest contained vertex."""
    seen = [False] * g.n
    out: list[set[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = {root}
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        out.append(comp)
    return out


def is_proper_coloring(g: Graph, colors: Mapping[int, int]) -> bool:
    """True iff every edge is bichromatic.  Every vertex must be colored."""
    for v in range(g.n):
        if v not in colors:
            raise ValueError(f"vertex {v} is uncolored")
    return all(colors[u] != colors[v] for u, v in g.edges)


# -- small constructors used throughout the tests and the catalog ----------

def complete_graph(k: int) -> Graph:
    return Graph(k, combinations(range(k), 2))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
