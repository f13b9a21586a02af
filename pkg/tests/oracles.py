"""Brute-force reference implementations used only by the tests.

Everything here recomputes answers from first principles with plain
itertools scans, deliberately sharing no search code with the library.
"""

from __future__ import annotations

import itertools

from orderdim import Digraph, QuasiOrder


def subset_is_acyclic(d: Digraph, members: tuple[int, ...]) -> bool:
    """Kahn-style peel of the induced subgraph, no shared code."""
    members = list(members)
    alive = set(members)
    changed = True
    while changed and alive:
        changed = False
        for v in list(alive):
            if not any(d.adj(u, v) for u in alive if u != v):
                alive.discard(v)
                changed = True
    return not alive


def brute_dicr(d: Digraph) -> int:
    if d.n == 0:
        return 0
    for k in range(1, d.n + 1):
        for assign in itertools.product(range(k), repeat=d.n):
            groups = [
                tuple(v for v in range(d.n) if assign[v] == c)
                for c in range(k)
            ]
            if all(subset_is_acyclic(d, g) for g in groups):
                return k
    raise AssertionError("single classes of size one are always acyclic")


def brute_chrom(d: Digraph) -> int:
    if d.n == 0:
        return 0
    edges = d.edges()
    for k in range(1, d.n + 1):
        for assign in itertools.product(range(k), repeat=d.n):
            if all(assign[u] != assign[v] for u, v in edges):
                return k
    raise AssertionError("n colors always suffice")


def brute_minimal_cycle_sets(d: Digraph) -> set[tuple[int, ...]]:
    """Vertex sets of induced directed cycles, canonically rotated."""
    out = set()
    for size in range(2, d.n + 1):
        for sub in itertools.combinations(range(d.n), size):
            inner = [
                (u, v) for u in sub for v in sub if u != v and d.adj(u, v)
            ]
            if size == 2:
                if len(inner) == 2:
                    out.add(sub)
                continue
            if len(inner) != size:
                continue
            succ = {}
            ok = True
            for u, v in inner:
                if u in succ:
                    ok = False
                    break
                succ[u] = v
            if not ok or set(succ) != set(sub):
                continue
            walk = [min(sub)]
            while len(walk) < size:
                nxt = succ[walk[-1]]
                if nxt in walk:
                    break
                walk.append(nxt)
            if len(walk) == size and succ[walk[-1]] == walk[0]:
                out.add(tuple(walk))
    return out


def brute_dimension(q: QuasiOrder, upto: int = 4) -> int | None:
    """Least m with m linear class orders intersecting to the order."""
    classes = _classes(q)
    m = len(classes)
    if m <= 1:
        return 0
    below = {
        (a, b)
        for a in range(m)
        for b in range(m)
        if a != b and q.leq(classes[a][0], classes[b][0])
    }
    linears = []
    for perm in itertools.permutations(range(m)):
        pos = {c: i for i, c in enumerate(perm)}
        if all(pos[a] < pos[b] for a, b in below):
            linears.append({
                (a, b)
                for a in range(m)
                for b in range(m)
                if a != b and pos[a] < pos[b]
            })
    for size in range(1, upto + 1):
        for combo in itertools.combinations(linears, size):
            meet = set.intersection(*combo)
            if meet == below:
                return size
    return None


def _classes(q: QuasiOrder) -> list[list[int]]:
    seen: list[list[int]] = []
    for x in range(q.n):
        for grp in seen:
            if q.leq(x, grp[0]) and q.leq(grp[0], x):
                grp.append(x)
                break
        else:
            seen.append([x])
    return seen


def relation_is_reflexive(rows: tuple[int, ...]) -> bool:
    return all(rows[i] >> i & 1 for i in range(len(rows)))


def relation_is_transitive(rows: tuple[int, ...]) -> bool:
    n = len(rows)
    for i in range(n):
        for j in range(n):
            if rows[i] >> j & 1:
                if rows[i] | rows[j] != rows[i]:
                    return False
    return True
