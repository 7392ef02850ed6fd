"""Preferred-palette coloring of bipartite-host expansions.

Two disjoint palettes sized by the endpoints of the maximum-weight host edge
are enough: every component colors itself from its preferred side and, when
it needs more, takes the *last* colors of the other side.  That last-colors
rule is contractual; the odd-hole construction depends on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .expansion import (
    BipartiteHost,
    ExpansionSpec,
    host_edge_list,
    materialize,
    max_weight_edge,
    preferred_index,
)
from .graphs import Graph, is_proper_coloring
from .oracle import chromatic_number_exact


@dataclass(frozen=True)
class PaletteLayout:
    """Ordered, disjoint color palettes; ids are dense starting at 0."""

    gamma0: tuple[int, ...]
    gamma1: tuple[int, ...]
    extra: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        combined = self.gamma0 + self.gamma1 + self.extra
        if list(combined) != list(range(len(combined))):
            raise ValueError("palettes must partition 0..total-1 in order")

    @property
    def total(self) -> int:
        return len(self.gamma0) + len(self.gamma1) + len(self.extra)


@dataclass
class Coloring:
    """Assignment (component, local vertex) -> color, plus its palette layout."""

    layout: PaletteLayout
    assignment: dict[tuple[int, int], int]
    component_palettes: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @classmethod
    def build(
        cls, layout: PaletteLayout, assignment: dict[tuple[int, int], int]
    ) -> "Coloring":
        palettes: dict[int, set[int]] = {}
        for (comp, _), color in assignment.items():
            palettes.setdefault(comp, set()).add(color)
        return cls(
            layout,
            dict(assignment),
            {c: tuple(sorted(s)) for c, s in palettes.items()},
        )

    @property
    def total_colors(self) -> int:
        return len(set(self.assignment.values()))

    def color_of(self, comp: int, local: int) -> int:
        return self.assignment[(comp, local)]

    def vertex_colors(self, vmap) -> dict[int, int]:
        """Assignment re-keyed by global vertex id."""
        return {
            vmap.to_global(comp, local): color
            for (comp, local), color in self.assignment.items()
        }


def palette_for(
    layout: PaletteLayout, side: int, chi: int, allow_extra: bool = False
) -> tuple[int, ...]:
    """The chi colors a component on the given side uses.

    First min(chi, |base|) colors of the preferred palette, then the last
    chi - |base| colors of the other palette on overflow.  ``allow_extra``
    admits the extra palette and is only legal for isolated host vertices.
    """
    base = layout.gamma0 if side == 0 else layout.gamma1
    other = layout.gamma1 if side == 0 else layout.gamma0
    if chi <= len(base):
        return base[:chi]
    spill = chi - len(base)
    if spill <= len(other):
        return base + other[len(other) - spill:]
    if not allow_extra:
        raise AssertionError("component overflows both palettes on a joined host vertex")
    rest = chi - len(base) - len(other)
    if rest > len(layout.extra):
        raise AssertionError("extra palette too small for isolated component")
    return base + other + layout.extra[:rest]


def relabel_bipartite_to_base(
    spec: ExpansionSpec,
) -> tuple[ExpansionSpec, tuple[int, ...]]:
    """Permute host vertices so the maximum-weight edge becomes (0, 1).

    The two endpoints map to 0 and 1 (smaller endpoint first); the remaining
    vertices keep their relative order.  The bipartition is recomputed so that
    vertex 0 sits on side 0.  Returns the new spec and the old->new map.
    """
    if not isinstance(spec.host, BipartiteHost):
        raise ValueError("relabeling applies to bipartite hosts only")
    i, j = max_weight_edge(spec)
    rest = [v for v in range(spec.order) if v not in (i, j)]
    new_order = [i, j] + rest
    old_to_new = [0] * spec.order
    for new, old in enumerate(new_order):
        old_to_new[old] = new
    g = spec.host.graph
    new_graph = Graph(g.n, [(old_to_new[u], old_to_new[v]) for u, v in g.edges])
    host = BipartiteHost.from_graph(new_graph)
    comps = tuple(spec.components[old] for old in new_order)
    stats = tuple(spec.stats[old] for old in new_order)
    return ExpansionSpec(host, comps, stats), tuple(old_to_new)


def chi_bipartite_expansion(spec: ExpansionSpec) -> int:
    """Chromatic number of a bipartite-host expansion.

    With at least one host edge this is the maximum edge weight chi_0 + chi_1.
    Isolated host vertices contribute their own chi (they can exceed the edge
    bound only when isolated), and an edgeless host degenerates to max chi_i.
    """
    if not isinstance(spec.host, BipartiteHost):
        raise ValueError("spec host is not bipartite")
    best = max(s.chi for s in spec.stats)
    for i, j in host_edge_list(spec):
        best = max(best, spec.stats[i].chi + spec.stats[j].chi)
    return best


def component_witness(g: Graph) -> tuple[int, ...]:
    """Oracle witness coloring of one component, colors 0..chi-1."""
    _, witness = chromatic_number_exact(g)
    return witness


def color_bipartite_expansion(spec: ExpansionSpec) -> Coloring:
    """Proper coloring of a bipartite-host expansion using chi colors total.

    The spec is relabeled internally so the maximum-weight edge sits at (0, 1);
    the returned assignment is keyed by the original component indices.
    """
    if not isinstance(spec.host, BipartiteHost):
        raise ValueError("spec host is not bipartite")
    chi_total = chi_bipartite_expansion(spec)

    if not spec.host.graph.edges:
        layout = PaletteLayout(tuple(range(chi_total)), (), ())
        assignment: dict[tuple[int, int], int] = {}
        for comp_index, comp in enumerate(spec.components):
            colors = layout.gamma0[: spec.stats[comp_index].chi]
            witness = component_witness(comp)
            for local, w in enumerate(witness):
                assignment[(comp_index, local)] = colors[w]
        coloring = Coloring.build(layout, assignment)
        check_coloring(spec, coloring)
        return coloring

    rspec, old_to_new = relabel_bipartite_to_base(spec)
    new_to_old = {new: old for old, new in enumerate(old_to_new)}
    chi0 = rspec.stats[0].chi
    chi1 = rspec.stats[1].chi
    extra_n = max(0, chi_total - chi0 - chi1)
    layout = PaletteLayout(
        tuple(range(chi0)),
        tuple(range(chi0, chi0 + chi1)),
        tuple(range(chi0 + chi1, chi0 + chi1 + extra_n)),
    )

    hg = rspec.host.graph
    # The max-weight hypothesis forbids overflow on both ends of any host edge.
    for a, b in hg.edges:
        over_a = rspec.stats[a].chi > (chi0 if preferred_index(rspec, a) == 0 else chi1)
        over_b = rspec.stats[b].chi > (chi0 if preferred_index(rspec, b) == 0 else chi1)
        assert not (over_a and over_b), "double overflow across a host edge"

    assignment = {}
    for i in range(rspec.order):
        isolated = hg.degree(i) == 0
        colors = palette_for(
            layout, preferred_index(rspec, i), rspec.stats[i].chi, allow_extra=isolated
        )
        witness = component_witness(rspec.components[i])
        orig = new_to_old[i]
        for local, w in enumerate(witness):
            assignment[(orig, local)] = colors[w]

    coloring = Coloring.build(layout, assignment)
    check_coloring(spec, coloring)
    return coloring


def check_coloring(spec: ExpansionSpec, coloring: Coloring) -> None:
    """Assert the coloring is proper and each component uses exactly chi_i colors."""
    graph, vmap = materialize(spec)
    if not is_proper_coloring(graph, coloring.vertex_colors(vmap)):
        raise AssertionError("constructed coloring is not proper")
    for i, st in enumerate(spec.stats):
        if len(coloring.component_palettes[i]) != st.chi:
            raise AssertionError(f"component {i} palette size != chi_{i}")
