"""Exact solvers: dichromatic number, chromatic number, order dimension.

All searches are deterministic and return recheckable witnesses. Budgets
bound search nodes; hitting one raises LimitExceeded rather than guessing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .digraphs import Digraph, is_acyclic, scc_decompose
from .errors import LimitExceeded, NotAGraph, TooLarge
from .reduction import (
    AcyclicCover,
    ExtensionFamily,
    check_cover,
    cover_to_extensions,
    pair_digraph,
)
from .relations import QuasiOrder, QuotientPoset, bits_of, quotient

DEFAULT_SEARCH_BUDGET = 5_000_000


@dataclass(frozen=True, slots=True)
class DicrResult:
    k: int
    witness: AcyclicCover


@dataclass(frozen=True, slots=True)
class DimResult:
    d: int
    witness: ExtensionFamily


def _greedy_mutual_clique(d: Digraph, verts) -> list[int]:
    """A clique of pairwise mutual edges; its size lower-bounds the answer."""
    mut = {v: set() for v in verts}
    for v in verts:
        for w in verts:
            if v < w and d.adj(v, w) and d.adj(w, v):
                mut[v].add(w)
                mut[w].add(v)
    clique: list[int] = []
    cand = set(verts)
    while cand:
        v = min(cand, key=lambda u: (-len(mut[u] & cand), u))
        clique.append(v)
        cand &= mut[v]
    return clique


def _cover_scc(
    d: Digraph, verts: tuple[int, ...], budget: int, counter: list[int]
) -> tuple[int, list[list[int]]]:
    """Exact minimum acyclic vertex cover of one strong component."""
    order = sorted(verts, key=lambda v: (-d.degree(v), v))
    m = len(order)
    lower = max(2, len(_greedy_mutual_clique(d, verts)))
    for k in range(lower, m + 1):
        assign = _assign_classes(d, order, k, budget, counter)
        if assign is not None:
            classes: list[list[int]] = [[] for _ in range(k)]
            for i, v in enumerate(order):
                classes[assign[i]].append(v)
            return k, [sorted(c) for c in classes if c]
    raise AssertionError("singleton classes are always feasible")


def _assign_classes(
    d: Digraph, order: list[int], k: int, budget: int, counter: list[int]
) -> list[int] | None:
    """Backtracking k-class assignment keeping every class acyclic.

    Classes open in index order (the first vertex placed in a fresh class
    is the earliest unassigned one), which breaks class symmetry.
    """
    m = len(order)
    if m == 0:
        return []
    assign = [-1] * m
    used = [0] * (m + 1)
    trial = [0] * m
    depth = 0
    while True:
        c = trial[depth]
        if c > min(used[depth], k - 1):
            depth -= 1
            if depth < 0:
                return None
            trial[depth] += 1
            continue
        counter[0] += 1
        if counter[0] > budget:
            raise LimitExceeded(budget, "acyclic cover search")
        v = order[depth]
        members = [order[i] for i in range(depth) if assign[i] == c]
        members.append(v)
        if is_acyclic(d, members) is True:
            assign[depth] = c
            if depth == m - 1:
                return assign
            used[depth + 1] = max(used[depth], c + 1)
            depth += 1
            trial[depth] = 0
        else:
            trial[depth] += 1


def dichromatic_number(
    d: Digraph, budget: int = DEFAULT_SEARCH_BUDGET
) -> DicrResult:
    """Least number of acyclic classes covering d, with a witness cover.

    Strong components are solved separately (a cycle never leaves one) and
    the per-component optima are overlaid; singleton components carry no
    cycle and join the first class.
    """
    if d.n == 0:
        return DicrResult(0, AcyclicCover(()))
    counter = [0]
    k_total = 1
    solved: list[list[list[int]]] = []
    singles: list[int] = []
    for comp in scc_decompose(d):
        if len(comp) == 1:
            singles.append(comp[0])
            continue
        k_c, classes = _cover_scc(d, comp, budget, counter)
        k_total = max(k_total, k_c)
        solved.append(classes)
    merged: list[set[int]] = [set() for _ in range(k_total)]
    merged[0].update(singles)
    for classes in solved:
        for j, cls in enumerate(classes):
            merged[j].update(cls)
    cover = AcyclicCover(tuple(tuple(sorted(c)) for c in merged))
    check_cover(d, cover)
    return DicrResult(k_total, cover)


def chromatic_number(
    g: Digraph, budget: int = DEFAULT_SEARCH_BUDGET
) -> tuple[int, tuple[int, ...]]:
    """Exact proper coloring of a symmetric digraph: (count, colors)."""
    if not g.is_symmetric():
        raise NotAGraph("chromatic number needs a symmetric edge relation")
    if g.n == 0:
        return 0, ()
    counter = [0]
    colors = [0] * g.n
    k_total = 1
    for comp in scc_decompose(g):
        k_c, comp_colors = _color_component(g, comp, budget, counter)
        k_total = max(k_total, k_c)
        for v, c in comp_colors.items():
            colors[v] = c
    return k_total, tuple(colors)


def _color_component(
    g: Digraph, verts: tuple[int, ...], budget: int, counter: list[int]
) -> tuple[int, dict[int, int]]:
    order = sorted(verts, key=lambda v: (-g.rows[v].bit_count(), v))
    m = len(order)
    lower = max(1, len(_greedy_mutual_clique(g, verts)))
    for k in range(lower, m + 1):
        assign = _assign_colors(g, order, k, budget, counter)
        if assign is not None:
            return k, {v: assign[i] for i, v in enumerate(order)}
    raise AssertionError("distinct colors are always feasible")


def _assign_colors(
    g: Digraph, order: list[int], k: int, budget: int, counter: list[int]
) -> list[int] | None:
    m = len(order)
    class_mask = [0] * k
    assign = [-1] * m
    used = [0] * (m + 1)
    trial = [0] * m
    depth = 0
    while True:
        c = trial[depth]
        if c > min(used[depth], k - 1):
            depth -= 1
            if depth < 0:
                return None
            class_mask[assign[depth]] &= ~(1 << order[depth])
            trial[depth] += 1
            continue
        counter[0] += 1
        if counter[0] > budget:
            raise LimitExceeded(budget, "coloring search")
        v = order[depth]
        if g.rows[v] & class_mask[c] == 0:
            assign[depth] = c
            class_mask[c] |= 1 << v
            if depth == m - 1:
                return assign
            used[depth + 1] = max(used[depth], c + 1)
            depth += 1
            trial[depth] = 0
        else:
            trial[depth] += 1


def _linear_class_orders(qt: QuotientPoset) -> list[tuple[int, ...]]:
    """Every rank assignment of classes compatible with the strict order."""
    m = qt.size
    out: list[tuple[int, ...]] = []
    rank = [-1] * m
    preds = [
        sum(1 << a for a in range(m) if qt.lt(a, b)) for b in range(m)
    ]

    def place(step: int, remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(rank))
            return
        for c in bits_of(remaining):
            if preds[c] & remaining == 0:
                rank[c] = step
                place(step + 1, remaining & ~(1 << c))
                rank[c] = -1

    place(0, (1 << m) - 1)
    return out


def _lift_linear(q: QuasiOrder, qt: QuotientPoset, rank: tuple[int, ...]) -> QuasiOrder:
    rows = [0] * q.n
    for x in range(q.n):
        rx = rank[qt.class_of[x]]
        for y in range(q.n):
            if rx <= rank[qt.class_of[y]]:
                rows[x] |= 1 << y
    return QuasiOrder(q.n, tuple(rows))


def order_dimension(
    q: QuasiOrder,
    method: str = "via_dicr",
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> DimResult:
    """Least size of an extension family deciding every ordered pair.

    via_dicr covers the pair digraph with acyclic classes and converts the
    cover; realizer searches directly for the fewest total extensions whose
    members decide every pair. Both are exact and agree; quotients with at
    most one class need no extension at all, so the answer there is 0.
    """
    if method not in ("via_dicr", "realizer"):
        raise ValueError(f"unknown method {method!r}")
    qt = quotient(q)
    if qt.size <= 1:
        return DimResult(0, ExtensionFamily(q, ()))
    if method == "via_dicr":
        ap, _ = pair_digraph(q)
        res = dichromatic_number(ap, budget)
        return DimResult(res.k, cover_to_extensions(q, res.witness))
    m = qt.size
    universe = [
        (a, b)
        for a in range(m)
        for b in range(m)
        if a != b and not qt.lt(a, b)
    ]
    pair_index = {p: i for i, p in enumerate(universe)}
    full = (1 << len(universe)) - 1
    linears = _linear_class_orders(qt)
    masks = []
    for rank in linears:
        mask = 0
        for (a, b), i in pair_index.items():
            if rank[b] < rank[a]:
                mask |= 1 << i
        masks.append(mask)
    counter = [0]
    for dd in range(1, len(linears) + 1):
        chosen = _cover_search(masks, full, dd, budget, counter)
        if chosen is not None:
            exts = tuple(_lift_linear(q, qt, linears[i]) for i in chosen)
            return DimResult(dd, ExtensionFamily(q, exts))
    raise AssertionError("all linear extensions together decide every pair")


def _cover_search(
    masks: list[int], full: int, dd: int, budget: int, counter: list[int]
) -> list[int] | None:
    """Depth-limited exact set cover: branch on the first uncovered pair."""

    def go(covered: int, start_depth: int, chosen: list[int]) -> list[int] | None:
        if covered == full:
            return chosen
        if start_depth == dd:
            return None
        missing = covered ^ full
        bit = missing & -missing
        for i, mask in enumerate(masks):
            if mask & bit:
                counter[0] += 1
                if counter[0] > budget:
                    raise LimitExceeded(budget, "realizer cover search")
                got = go(covered | mask, start_depth + 1, chosen + [i])
                if got is not None:
                    return got
        return None

    return go(0, 0, [])


def realizer_oracle(q: QuasiOrder, max_d: int) -> int | None:
    """Least count of total class orders intersecting to the quotient order.

    Independent of the solvers above: enumerates permutations outright and
    intersects literal pair sets. None when max_d is not enough. Guarded to
    ten classes; meant for landmarks and cross-checks, not production.
    """
    qt = quotient(q)
    m = qt.size
    if m > 10:
        raise TooLarge(f"{m} classes exceeds the oracle guard of 10")
    if m <= 1:
        return 0
    lt_pairs = {
        (a, b) for a in range(m) for b in bits_of(qt.lt_rows[a])
    }
    linears = []
    for perm in itertools.permutations(range(m)):
        pairs = frozenset(
            (perm[i], perm[j])
            for i in range(m)
            for j in range(i + 1, m)
        )
        if lt_pairs <= pairs:
            linears.append(pairs)
    for dd in range(1, max_d + 1):
        for combo in itertools.combinations(linears, dd):
            inter = frozenset.intersection(*combo)
            if inter == lt_pairs:
                return dd
    return None
