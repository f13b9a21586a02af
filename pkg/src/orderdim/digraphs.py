"""Finite digraphs without self-loops: cycles, components, homomorphisms.

Same bit-row encoding as relations: bit j of rows[i] set means an edge
i -> j. A cycle of length k is a vertex sequence of k+1 vertices whose
consecutive pairs are edges, wrapping around; a mutual edge pair is a
cycle of length 1. Vertices may repeat in a general cycle but not in a
minimal one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    IndexOutOfRange,
    LimitExceeded,
    NotADigraph,
    SizeMismatch,
)
from .relations import bits_of, transpose_rows


@dataclass(frozen=True, slots=True)
class Digraph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise NotADigraph(f"{len(self.rows)} rows for {self.n} vertices")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise IndexOutOfRange(f"row {i} points outside 0..{self.n - 1}")
            if (row >> i) & 1:
                raise NotADigraph(f"self-loop at {i}")

    def adj(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits_of(self.rows[i])]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def degree(self, i: int) -> int:
        """Out-degree plus in-degree."""
        return self.rows[i].bit_count() + sum(
            (row >> i) & 1 for row in self.rows
        )

    def is_symmetric(self) -> bool:
        cols = transpose_rows(self.rows, self.n)
        return all(r == c for r, c in zip(self.rows, cols))


def digraph(n: int, edges) -> Digraph:
    rows = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"edge ({i}, {j}) outside 0..{n - 1}")
        if i == j:
            raise NotADigraph(f"self-loop at {i}")
        rows[i] |= 1 << j
    return Digraph(n, tuple(rows))


@dataclass(frozen=True, slots=True)
class Cycle:
    """Closed walk given by its vertices; the wrap edge is implied."""

    verts: tuple[int, ...]

    def __post_init__(self):
        if len(self.verts) < 2:
            raise SizeMismatch("a cycle needs at least two vertices")

    @property
    def length(self) -> int:
        return len(self.verts) - 1


def verify_cycle(d: Digraph, c: Cycle) -> bool:
    vs = c.verts
    return all(d.adj(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def is_acyclic(d: Digraph, subset=None):
    """True if no cycle runs inside subset, else a witness Cycle in it.

    subset defaults to all vertices. Deterministic: vertices and neighbors
    are explored in ascending order, so the witness is reproducible.
    """
    if subset is None:
        verts = list(range(d.n))
        mask = (1 << d.n) - 1
    else:
        verts = sorted(set(subset))
        for v in verts:
            if not (0 <= v < d.n):
                raise IndexOutOfRange(f"vertex {v} outside 0..{d.n - 1}")
        mask = sum(1 << v for v in verts)
    color: dict[int, int] = {}
    for start in verts:
        if start in color:
            continue
        color[start] = 1
        path = [start]
        stack = [iter(bits_of(d.rows[start] & mask))]
        while stack:
            advanced = False
            for w in stack[-1]:
                cw = color.get(w)
                if cw == 1:
                    return Cycle(tuple(path[path.index(w):]))
                if cw is None:
                    color[w] = 1
                    path.append(w)
                    stack.append(iter(bits_of(d.rows[w] & mask)))
                    advanced = True
                    break
            if not advanced:
                color[path.pop()] = 2
                stack.pop()
    return True


def is_minimal_cycle(d: Digraph, verts) -> bool:
    """Distinct vertices inducing exactly the consecutive edges, wrapped."""
    vs = tuple(verts)
    m = len(vs)
    if m < 2 or len(set(vs)) != m:
        return False
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            want = j == (i + 1) % m
            if d.adj(vs[i], vs[j]) != want:
                return False
    return True


DEFAULT_CYCLE_BUDGET = 10**6


def minimal_cycles(
    d: Digraph, max_len: int | None = None, budget: int = DEFAULT_CYCLE_BUDGET
) -> tuple[Cycle, ...]:
    """All minimal cycles of length <= max_len, least vertex first.

    A minimal cycle visits distinct vertices and induces no edges besides
    the consecutive ones, so it is an induced copy of a directed cycle.
    Enumeration grows induced paths from each least vertex; a path dies as
    soon as a chord in either direction appears, and closing back to the
    start forbids any longer continuation. Raises LimitExceeded after
    `budget` extension attempts.
    """
    if max_len is None:
        max_len = d.n
    rows = d.rows
    out: list[Cycle] = []
    nodes = 0
    for v0 in range(d.n):
        # only cycles whose least vertex is v0; larger ids may be visited
        stack = [([v0], 1 << v0)]
        while stack:
            path, seen = stack.pop()
            last = path[-1]
            k = len(path) - 1
            for w in bits_of(rows[last]):
                if w <= v0 or (seen >> w) & 1:
                    continue
                nodes += 1
                if nodes > budget:
                    raise LimitExceeded(budget, "minimal cycle enumeration")
                if k >= 1:
                    if (rows[w] >> last) & 1:
                        continue
                    if (rows[v0] >> w) & 1:
                        continue
                    ok = True
                    for u in path[1:-1]:
                        if (rows[u] >> w) & 1 or (rows[w] >> u) & 1:
                            ok = False
                            break
                    if not ok:
                        continue
                if (rows[w] >> v0) & 1:
                    if k + 1 <= max_len:
                        out.append(Cycle(tuple(path) + (w,)))
                    continue
                if k + 2 <= max_len:
                    stack.append((path + [w], seen | (1 << w)))
    out.sort(key=lambda c: (len(c.verts), c.verts))
    return tuple(out)


def is_k_uniform(d: Digraph, k: int, budget: int = DEFAULT_CYCLE_BUDGET) -> bool:
    """True iff every minimal cycle has length at most k."""
    return all(c.length <= k for c in minimal_cycles(d, d.n, budget))


def scc_decompose(d: Digraph) -> tuple[tuple[int, ...], ...]:
    """Strongly connected components in topological order, members sorted."""
    n = d.n
    visited = [False] * n
    finish: list[int] = []
    for s in range(n):
        if visited[s]:
            continue
        visited[s] = True
        path = [s]
        stack = [iter(bits_of(d.rows[s]))]
        while stack:
            advanced = False
            for w in stack[-1]:
                if not visited[w]:
                    visited[w] = True
                    path.append(w)
                    stack.append(iter(bits_of(d.rows[w])))
                    advanced = True
                    break
            if not advanced:
                finish.append(path.pop())
                stack.pop()
    cols = transpose_rows(d.rows, n)
    comp = [-1] * n
    comps: list[tuple[int, ...]] = []
    for v in reversed(finish):
        if comp[v] != -1:
            continue
        ci = len(comps)
        comp[v] = ci
        members = []
        todo = [v]
        while todo:
            u = todo.pop()
            members.append(u)
            for w in bits_of(cols[u]):
                if comp[w] == -1:
                    comp[w] = ci
                    todo.append(w)
        comps.append(tuple(sorted(members)))
    return tuple(comps)


@dataclass(frozen=True, slots=True)
class HomWitness:
    """A vertex map claimed edge-preserving; minimal adds the cycle rule."""

    mapping: tuple[int, ...]
    minimal: bool = False


@dataclass(frozen=True, slots=True)
class HomCheck:
    """Verification outcome; on failure names the pair (and cycle) at fault."""

    ok: bool
    reason: str | None = None
    pair: tuple[int, int] | None = None
    cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _forbidden_pairs(g: Digraph, budget: int) -> set[tuple[int, int]]:
    """Ordered non-edge pairs inside minimal cycles of g."""
    forb: set[tuple[int, int]] = set()
    for c in minimal_cycles(g, g.n, budget):
        vs = c.verts
        m = len(vs)
        for i in range(m):
            for j in range(m):
                if i != j and j != (i + 1) % m:
                    forb.add((vs[i], vs[j]))
    return forb


DEFAULT_HOM_BUDGET = 10**6


def verify_homomorphism(g: Digraph, h: Digraph, w: HomWitness) -> HomCheck:
    """Recheck a witness from scratch; independent of any search state."""
    if len(w.mapping) != g.n:
        raise SizeMismatch(f"mapping covers {len(w.mapping)} of {g.n} vertices")
    for t in w.mapping:
        if not (0 <= t < h.n):
            raise IndexOutOfRange(f"image {t} outside 0..{h.n - 1}")
    m = w.mapping
    for u in range(g.n):
        for v in bits_of(g.rows[u]):
            if not h.adj(m[u], m[v]):
                return HomCheck(False, "edge not preserved", (u, v))
    if w.minimal:
        for c in minimal_cycles(g, g.n):
            vs = c.verts
            size = len(vs)
            for i in range(size):
                for j in range(size):
                    if i == j or j == (i + 1) % size:
                        continue
                    if h.adj(m[vs[i]], m[vs[j]]):
                        return HomCheck(
                            False,
                            "cycle non-edge mapped to an edge",
                            (vs[i], vs[j]),
                            vs,
                        )
    return HomCheck(True)


def find_homomorphism(
    g: Digraph,
    h: Digraph,
    minimal: bool = False,
    budget: int = DEFAULT_HOM_BUDGET,
) -> HomWitness | None:
    """First witness in canonical search order, or None when none exists.

    Vertices are assigned in decreasing degree order (ties by id), values
    tried in ascending order, so the witness is deterministic. Raises
    LimitExceeded when the node budget runs out before the search settles;
    None is only returned after the full space is exhausted.
    """
    if g.n == 0:
        return HomWitness((), minimal)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    # constraints checkable once a vertex is placed: (partner, i_am_source,
    # edge_required), partner always earlier in the assignment order
    cons: list[list[tuple[int, bool, bool]]] = [[] for _ in range(g.n)]

    def add(a: int, b: int, required: bool) -> None:
        # constraint on the ordered pair (a, b) in the source digraph
        if pos[a] > pos[b]:
            cons[a].append((b, True, required))
        else:
            cons[b].append((a, False, required))

    for u in range(g.n):
        for v in bits_of(g.rows[u]):
            add(u, v, True)
    if minimal:
        for a, b in sorted(_forbidden_pairs(g, budget)):
            add(a, b, False)
    image = [0] * g.n
    nodes = 0
    depth = 0
    trial = [0] * g.n
    while True:
        if trial[depth] >= h.n:
            depth -= 1
            if depth < 0:
                return None
            trial[depth] += 1
            continue
        u = order[depth]
        t = trial[depth]
        nodes += 1
        if nodes > budget:
            raise LimitExceeded(budget, "homomorphism search")
        image[u] = t
        ok = True
        for partner, i_am_source, required in cons[u]:
            present = (
                h.adj(t, image[partner])
                if i_am_source
                else h.adj(image[partner], t)
            )
            if present != required:
                ok = False
                break
        if not ok:
            trial[depth] += 1
            continue
        if depth == g.n - 1:
            return HomWitness(tuple(image), minimal)
        depth += 1
        trial[depth] = 0
