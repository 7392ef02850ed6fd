"""Exact clique number and chromatic number by branch and bound, at desk scale.

This module is the ground truth everything else is validated against, so it
must never return a wrong number: when a search would exceed its budget it
raises :class:`BudgetExceeded` instead.  All searches are deterministic
(ties broken by vertex index), which keeps witness colorings stable across
runs and platforms.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph


@dataclass(frozen=True)
class OracleBudget:
    """Hard limits for one oracle call.  All fields must be positive."""

    max_vertices: int = 40
    max_nodes: int = 20_000_000
    time_cap: float = 60.0

    def __post_init__(self) -> None:
        if self.max_vertices <= 0 or self.max_nodes <= 0 or self.time_cap <= 0:
            raise ValueError("budget fields must be positive")


DEFAULT_BUDGET = OracleBudget()


class BudgetExceeded(Exception):
    """Search hit its node or time cap; no partial answer is returned."""


class _Search:
    """Node counter and deadline shared by the recursions of one oracle call."""

    __slots__ = ("deadline", "nodes_left")

    def __init__(self, budget: OracleBudget) -> None:
        self.deadline = time.monotonic() + budget.time_cap
        self.nodes_left = budget.max_nodes

    def tick(self) -> None:
        self.nodes_left -= 1
        if self.nodes_left <= 0:
            raise BudgetExceeded("search node budget exhausted")
        if self.nodes_left % 4096 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("search time budget exhausted")


def _check_size(g: Graph, budget: OracleBudget) -> None:
    if g.n > budget.max_vertices:
        raise BudgetExceeded(
            f"graph has {g.n} vertices, budget allows {budget.max_vertices}"
        )


# -- maximum clique ---------------------------------------------------------

def _color_sort(p_mask: int, masks: tuple[int, ...]) -> list[tuple[int, int]]:
    """Greedy-color the candidate set; returns (vertex, color) sorted by color.

    The color index is an upper bound on the clique size inside the candidate
    set processed so far, which is the standard branch-and-bound prune.
    """
    order: list[tuple[int, int]] = []
    rest = p_mask
    color = 0
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~masks[v] & ~(1 << v)
            rest &= ~(1 << v)
            order.append((v, color))
    return order


def _max_clique(g: Graph, search: _Search) -> tuple[int, tuple[int, ...]]:
    if g.n == 0:
        return 0, ()
    masks = g.adjacency_masks
    best_size = 0
    best: tuple[int, ...] = ()

    def expand(current: list[int], p_mask: int) -> None:
        nonlocal best_size, best
        search.tick()
        order = _color_sort(p_mask, masks)
        for v, bound in reversed(order):
            if len(current) + bound <= best_size:
                return
            current.append(v)
            sub = p_mask & masks[v]
            if sub:
                expand(current, sub)
            elif len(current) > best_size:
                best_size = len(current)
                best = tuple(sorted(current))
            current.pop()
            p_mask &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    return best_size, best


def clique_number_exact(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact clique number via branch and bound with greedy-coloring pruning."""
    return _clique_cached(g, budget)[0]


@lru_cache(maxsize=None)
def _clique_cached(g: Graph, budget: OracleBudget) -> tuple[int, tuple[int, ...]]:
    _check_size(g, budget)
    return _max_clique(g, _Search(budget))


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


# -- chromatic number -------------------------------------------------------

def _degeneracy_order(g: Graph) -> list[int]:
    """Peel minimum-degree vertices (ties by index); returns the peel order."""
    degree = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    order = []
    for _ in range(g.n):
        v = min(
            (u for u in range(g.n) if not removed[u]),
            key=lambda u: (degree[u], u),
        )
        removed[v] = True
        order.append(v)
        for w in g.neighbors(v):
            if not removed[w]:
                degree[w] -= 1
    return order


def _dsatur_bound(g: Graph) -> int:
    """Number of colors used by the DSATUR greedy heuristic (an upper bound)."""
    if g.n == 0:
        return 0
    color = [-1] * g.n
    neighbor_colors: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if color[u] == -1),
            key=lambda u: (len(neighbor_colors[u]), g.degree(u), -u),
        )
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        color[v] = c
        for w in g.neighbors(v):
            neighbor_colors[w].add(c)
    return max(color) + 1


def _clique_partition(g: Graph, vertices: list[int]) -> list[list[int]]:
    """Greedy partition of ``vertices`` into cliques (used as a search prune)."""
    remaining = sorted(vertices, key=lambda v: (-g.degree(v), v))
    masks = g.adjacency_masks
    cliques: list[list[int]] = []
    used: set[int] = set()
    for v in remaining:
        if v in used:
            continue
        clique = [v]
        used.add(v)
        joint = masks[v]
        for w in remaining:
            if w not in used and (joint >> w) & 1:
                clique.append(w)
                used.add(w)
                joint &= masks[w]
        cliques.append(clique)
    return cliques


def _twin_constraints(
    g: Graph, assign_order: list[int]
) -> tuple[list[list[tuple[int, bool]]], list[list[tuple[int, bool]]]]:
    """Color-order constraints between twin vertices.

    Vertices with the same closed neighborhood (adjacent twins) may be forced
    into strictly increasing colors, and vertices with the same open
    neighborhood (non-adjacent twins) into non-decreasing colors.  The chain
    must follow the order vertices are assigned in, or the constraint clashes
    with the fresh-color symmetry break and prunes valid colorings.  Vertices
    outside ``assign_order`` (the pre-colored seed clique) get no constraints.

    Returns (preds, succs): per vertex, the (partner, strict) pairs it must be
    above, respectively below.
    """
    masks = g.adjacency_masks
    pos = {v: i for i, v in enumerate(assign_order)}
    preds: list[list[tuple[int, bool]]] = [[] for _ in range(g.n)]
    succs: list[list[tuple[int, bool]]] = [[] for _ in range(g.n)]
    groups: dict[tuple[int, bool], list[int]] = {}
    for v in assign_order:
        groups.setdefault((masks[v] | (1 << v), True), []).append(v)
        groups.setdefault((masks[v], False), []).append(v)
    for (_, strict), members in groups.items():
        members.sort(key=pos.__getitem__)
        for a, b in zip(members, members[1:]):
            succs[a].append((b, strict))
            preds[b].append((a, strict))
    return preds, succs


def _twin_window(
    v: int,
    color: list[int],
    preds: list[list[tuple[int, bool]]],
    succs: list[list[tuple[int, bool]]],
) -> tuple[int, int]:
    """Allowed color interval [lo, hi] for v given its assigned twin partners."""
    lo, hi = 0, 1 << 30
    for p, strict in preds[v]:
        if color[p] >= 0:
            lo = max(lo, color[p] + 1 if strict else color[p])
    for s, strict in succs[v]:
        if color[s] >= 0:
            hi = min(hi, color[s] - 1 if strict else color[s])
    return lo, hi


def _k_colorable(
    g: Graph, k: int, seed_clique: tuple[int, ...], search: _Search
) -> bool:
    """Decide k-colorability.

    Symmetry is broken two ways: a maximum clique is pre-colored, and each new
    vertex may use at most one color beyond the highest used so far.  Forward
    checking plus a clique-partition count prune keep the tree small on
    join-heavy graphs.
    """
    n = g.n
    if k <= 0:
        return n == 0
    if len(seed_clique) > k:
        return False
    masks = g.adjacency_masks
    full = (1 << k) - 1
    avail = [full] * n
    color = [-1] * n

    for i, v in enumerate(seed_clique):
        color[v] = i
        bit = 1 << i
        for w in range(n):
            if (masks[v] >> w) & 1 and color[w] == -1:
                avail[w] &= ~bit

    rest = [v for v in reversed(_degeneracy_order(g)) if color[v] == -1]
    cliques = _clique_partition(g, rest) if rest else []
    preds, succs = _twin_constraints(g, rest)

    def clique_counts_ok() -> bool:
        for clique in cliques:
            union = 0
            cnt = 0
            for v in clique:
                if color[v] == -1:
                    union |= avail[v]
                    cnt += 1
            if cnt and bin(union).count("1") < cnt:
                return False
        return True

    max_used = len(seed_clique) - 1

    def assign(idx: int, prev_max: int) -> bool:
        search.tick()
        if idx == len(rest):
            return True
        v = rest[idx]
        cap = min(k - 1, prev_max + 1)
        lo, hi = _twin_window(v, color, preds, succs)
        cap = min(cap, hi)
        options = avail[v] & ((1 << (cap + 1)) - 1) & ~((1 << lo) - 1)
        while options:
            bit = options & -options
            options &= options - 1
            c = bit.bit_length() - 1
            color[v] = c
            touched: list[tuple[int, int]] = []
            dead = False
            for w in range(n):
                if (masks[v] >> w) & 1 and color[w] == -1 and avail[w] & bit:
                    touched.append((w, avail[w]))
                    avail[w] &= ~bit
                    if avail[w] == 0:
                        dead = True
                        break
            if not dead and clique_counts_ok():
                if assign(idx + 1, max(prev_max, c)):
                    return True
            for w, old in touched:
                avail[w] = old
            color[v] = -1
        return False

    return assign(0, max_used)


def _lex_witness(g: Graph, k: int, search: _Search) -> tuple[int, ...]:
    """Lexicographically smallest proper coloring with colors 0..k-1.

    Vertices are scanned in index order trying colors in increasing order, so
    the first complete assignment found is the lex-minimum.  The fresh-color
    cap is sound here because the lex-minimum never skips a color index.
    """
    n = g.n
    masks = g.adjacency_masks
    full = (1 << k) - 1
    avail = [full] * n
    color = [-1] * n
    cliques = _clique_partition(g, list(range(n)))
    preds, succs = _twin_constraints(g, list(range(n)))

    def clique_counts_ok() -> bool:
        for clique in cliques:
            union = 0
            cnt = 0
            for v in clique:
                if color[v] == -1:
                    union |= avail[v]
                    cnt += 1
            if cnt and bin(union).count("1") < cnt:
                return False
        return True

    def assign(v: int, prev_max: int) -> bool:
        search.tick()
        if v == n:
            return True
        cap = min(k - 1, prev_max + 1)
        lo, hi = _twin_window(v, color, preds, succs)
        cap = min(cap, hi)
        options = avail[v] & ((1 << (cap + 1)) - 1) & ~((1 << lo) - 1)
        while options:
            bit = options & -options
            options &= options - 1
            c = bit.bit_length() - 1
            color[v] = c
            touched: list[tuple[int, int]] = []
            dead = False
            for w in range(v + 1, n):
                if (masks[v] >> w) & 1 and avail[w] & bit:
                    touched.append((w, avail[w]))
                    avail[w] &= ~bit
                    if avail[w] == 0:
                        dead = True
                        break
            if not dead and clique_counts_ok():
                if assign(v + 1, max(prev_max, c)):
                    return True
            for w, old in touched:
                avail[w] = old
            color[v] = -1
        return False

    if not assign(0, -1):
        raise AssertionError("witness search failed at k == chromatic number")
    return tuple(color)


def chromatic_number_exact(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number plus its canonical witness coloring.

    The value comes from iterative deepening between the clique lower bound
    and the DSATUR upper bound; the witness is the lexicographically smallest
    color vector among all proper colorings with that many colors, so equal
    inputs always produce identical output.
    """
    return _chromatic_cached(g, budget)


@lru_cache(maxsize=None)
def _chromatic_cached(g: Graph, budget: OracleBudget) -> tuple[int, tuple[int, ...]]:
    _check_size(g, budget)
    if g.n == 0:
        return 0, ()
    search = _Search(budget)
    lb, clique = _max_clique(g, search)
    ub = _dsatur_bound(g)
    chi = ub
    for k in range(lb, ub):
        if _k_colorable(g, k, clique, search):
            chi = k
            break
    witness = _lex_witness(g, chi, search)
    return chi, witness
