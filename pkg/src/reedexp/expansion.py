"""Expansions: substitute a graph for each host vertex and join across host edges.

The host is either a certified bipartite graph or an odd cycle.  Component
statistics (chromatic number, clique number, max degree, size) are computed
once through the exact oracle when a spec is built and cached on the spec, so
the oracle is the single source of truth for every weight used downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import Bipartition, Graph, bipartition_of
from .oracle import DEFAULT_BUDGET, OracleBudget, chromatic_number_exact, clique_number_exact


@dataclass(frozen=True)
class CycleHost:
    """Odd cycle v_0..v_{L-1} with edges (i, i+1 mod L)."""

    length: int

    def __post_init__(self) -> None:
        if self.length < 3 or self.length % 2 == 0:
            raise ValueError(f"cycle host length must be odd and >= 3, got {self.length}")


@dataclass(frozen=True)
class BipartiteHost:
    """Bipartite host graph together with its canonical BFS bipartition."""

    graph: Graph
    sides: Bipartition

    @classmethod
    def from_graph(cls, g: Graph) -> "BipartiteHost":
        result = bipartition_of(g)
        if isinstance(result, Bipartition):
            return cls(g, result)
        raise ValueError(f"host is not bipartite (odd cycle {result.odd_cycle})")


HostKind = CycleHost | BipartiteHost


@dataclass(frozen=True)
class ComponentStats:
    chi: int
    omega: int
    max_degree: int
    size: int


@lru_cache(maxsize=None)
def component_stats(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> ComponentStats:
    chi, _ = chromatic_number_exact(g, budget)
    omega = clique_number_exact(g, budget)
    return ComponentStats(chi, omega, g.max_degree(), g.n)


def host_order(host: HostKind) -> int:
    return host.length if isinstance(host, CycleHost) else host.graph.n


def host_graph(host: HostKind) -> Graph:
    if isinstance(host, CycleHost):
        L = host.length
        return Graph(L, [(i, (i + 1) % L) for i in range(L)])
    return host.graph


@dataclass(frozen=True)
class ExpansionSpec:
    """Host plus one nonempty component graph per host vertex, with cached stats."""

    host: HostKind
    components: tuple[Graph, ...]
    stats: tuple[ComponentStats, ...]

    @classmethod
    def build(
        cls,
        host: HostKind,
        components: list[Graph] | tuple[Graph, ...],
        budget: OracleBudget = DEFAULT_BUDGET,
    ) -> "ExpansionSpec":
        components = tuple(components)
        n = host_order(host)
        if len(components) != n:
            raise ValueError(f"host has {n} vertices but {len(components)} components given")
        for i, comp in enumerate(components):
            if comp.n == 0:
                raise ValueError(f"component {i} is empty")
        stats = tuple(component_stats(c, budget) for c in components)
        return cls(host, components, stats)

    @property
    def order(self) -> int:
        return len(self.components)

    @property
    def chis(self) -> tuple[int, ...]:
        return tuple(s.chi for s in self.stats)

    @property
    def total_size(self) -> int:
        return sum(s.size for s in self.stats)


def host_edge_list(spec: ExpansionSpec) -> list[tuple[int, int]]:
    """Host edges; for cycle hosts oriented as (i, i+1 mod L)."""
    if isinstance(spec.host, CycleHost):
        L = spec.host.length
        return [(i, (i + 1) % L) for i in range(L)]
    return sorted(spec.host.graph.edges)


def is_host_edge(spec: ExpansionSpec, i: int, j: int) -> bool:
    if isinstance(spec.host, CycleHost):
        L = spec.host.length
        return i != j and ((j - i) % L == 1 or (i - j) % L == 1)
    return spec.host.graph.adjacent(i, j)


@dataclass(frozen=True)
class VertexMap:
    """Bijection between (component, local vertex) pairs and global vertices.

    Components occupy contiguous global ranges in component order.
    """

    offsets: tuple[int, ...]
    sizes: tuple[int, ...]

    def to_global(self, comp: int, local: int) -> int:
        if not (0 <= comp < len(self.sizes)) or not (0 <= local < self.sizes[comp]):
            raise ValueError(f"no vertex ({comp},{local}) in this expansion")
        return self.offsets[comp] + local

    def to_local(self, vertex: int) -> tuple[int, int]:
        for comp in range(len(self.sizes)):
            if vertex < self.offsets[comp] + self.sizes[comp]:
                return comp, vertex - self.offsets[comp]
        raise ValueError(f"global vertex {vertex} out of range")

    @property
    def total(self) -> int:
        return self.offsets[-1] + self.sizes[-1] if self.sizes else 0


def materialize(spec: ExpansionSpec) -> tuple[Graph, VertexMap]:
    """Disjoint union of the components plus a complete join per host edge."""
    return _materialize_cached(spec)


@lru_cache(maxsize=None)
def _materialize_cached(spec: ExpansionSpec) -> tuple[Graph, VertexMap]:
    sizes = tuple(c.n for c in spec.components)
    offsets = []
    acc = 0
    for s in sizes:
        offsets.append(acc)
        acc += s
    vmap = VertexMap(tuple(offsets), sizes)
    edges: list[tuple[int, int]] = []
    for ci, comp in enumerate(spec.components):
        off = offsets[ci]
        edges.extend((off + u, off + v) for u, v in comp.edges)
    for i, j in host_edge_list(spec):
        for u in range(offsets[i], offsets[i] + sizes[i]):
            for v in range(offsets[j], offsets[j] + sizes[j]):
                edges.append((u, v))
    return Graph(acc, edges), vmap


def edge_weight(spec: ExpansionSpec, i: int, j: int) -> int:
    """chi_i + chi_j for a host edge (i, j)."""
    if not is_host_edge(spec, i, j):
        raise ValueError(f"({i},{j}) is not a host edge")
    return spec.stats[i].chi + spec.stats[j].chi


def max_weight_edge(spec: ExpansionSpec) -> tuple[int, int]:
    """A host edge maximizing chi_i + chi_j.

    Ties go to the lexicographically smallest (min, max) endpoint pair; cycle
    hosts report the edge as (i, i+1 mod L).
    """
    edges = host_edge_list(spec)
    if not edges:
        raise ValueError("host has no edges")
    return max(
        edges,
        key=lambda e: (
            spec.stats[e[0]].chi + spec.stats[e[1]].chi,
            (-min(e), -max(e)),
        ),
    )


def rotate_cycle_spec(
    spec: ExpansionSpec, base_edge: tuple[int, int]
) -> tuple[ExpansionSpec, tuple[int, ...]]:
    """Shift a cycle spec so base_edge=(i, i+1) lands on (0, 1).

    Returns the rotated spec and the old->new index map.  Stats are carried
    over unchanged.
    """
    if not isinstance(spec.host, CycleHost):
        raise ValueError("rotation applies to cycle hosts only")
    L = spec.host.length
    i, j = base_edge
    if j != (i + 1) % L:
        raise ValueError(f"({i},{j}) is not a forward cycle edge")
    comps = tuple(spec.components[(i + t) % L] for t in range(L))
    stats = tuple(spec.stats[(i + t) % L] for t in range(L))
    old_to_new = tuple((v - i) % L for v in range(L))
    return ExpansionSpec(spec.host, comps, stats), old_to_new


def preferred_index(spec: ExpansionSpec, i: int) -> int:
    """Palette side p(i): 0 when host vertex i sits on the same side as vertex 0.

    Requires a bipartite host whose vertices 0 and 1 are adjacent (the layout
    produced by relabeling to the max-weight edge).
    """
    if not isinstance(spec.host, BipartiteHost):
        raise ValueError("preferred index is defined for bipartite hosts")
    if not spec.host.graph.adjacent(0, 1):
        raise ValueError("host vertices 0 and 1 must be adjacent")
    sides = spec.host.sides
    return 0 if sides.side_of(i) == sides.side_of(0) else 1


def delta_of_expansion(spec: ExpansionSpec) -> int:
    """Max degree of the materialized expansion, from component stats alone."""
    hg = host_graph(spec.host)
    best = 0
    for i in range(spec.order):
        join = sum(spec.stats[j].size for j in hg.neighbors(i))
        best = max(best, spec.stats[i].max_degree + join)
    return best


def omega_of_expansion(spec: ExpansionSpec) -> int:
    """Clique number of the expansion.

    Hosts here have no triangles except the 3-cycle, so every clique projects
    onto a single host vertex or a host edge; the triangle host is the one
    case where all three components stack.
    """
    if isinstance(spec.host, CycleHost) and spec.host.length == 3:
        return sum(s.omega for s in spec.stats)
    best = max(s.omega for s in spec.stats)
    for i, j in host_edge_list(spec):
        best = max(best, spec.stats[i].omega + spec.stats[j].omega)
    return best
