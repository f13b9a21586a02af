"""Seeded instance generators and exhaustive enumeration of small posets."""

from __future__ import annotations

import numpy as np

from .digraphs import Digraph, digraph
from .errors import IndexOutOfRange, TooLarge
from .relations import QuasiOrder, bits_of, quasi_order, transpose_rows
from .rng import SplitMix64


def random_order(n: int, p: float, seed: int) -> QuasiOrder:
    """Reflexive-transitive closure of a random DAG with edge chance p."""
    rng = SplitMix64(seed)
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.chance(p)
    ]
    return quasi_order(n, pairs, close=True)


def random_quasi(n: int, p: float, seed: int) -> QuasiOrder:
    """Closure of an arbitrary random relation; classes can be nontrivial."""
    rng = SplitMix64(seed)
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and rng.chance(p)
    ]
    return quasi_order(n, pairs, close=True)


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    rng = SplitMix64(seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and rng.chance(p)
    ]
    return digraph(n, edges)


def random_symmetric(n: int, p: float, seed: int) -> Digraph:
    rng = SplitMix64(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.chance(p):
                edges.append((i, j))
                edges.append((j, i))
    return digraph(n, edges)


def crown_order(n: int) -> QuasiOrder:
    """n minima below n maxima, each pair related except at equal index."""
    if n < 1:
        raise IndexOutOfRange(f"crown needs at least 1 minimum, got {n}")
    pairs = [
        (i, n + j) for i in range(n) for j in range(n) if i != j
    ]
    return quasi_order(2 * n, pairs, close=False)


def chain_order(n: int) -> QuasiOrder:
    return quasi_order(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)], close=False
    )


def antichain_order(n: int) -> QuasiOrder:
    return quasi_order(n, [], close=False)


def boolean_order(atoms: int) -> QuasiOrder:
    """Subsets of a set of atoms ordered by inclusion; ids are bit masks."""
    if atoms < 0 or atoms > 6:
        raise TooLarge(f"{atoms} atoms outside the supported 0..6")
    n = 1 << atoms
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and i & ~j == 0
    ]
    return quasi_order(n, pairs, close=False)


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise IndexOutOfRange(f"a directed cycle needs 2 vertices, got {n}")
    return digraph(n, [(i, (i + 1) % n) for i in range(n)])


def bidirected_clique(n: int) -> Digraph:
    return digraph(
        n, [(i, j) for i in range(n) for j in range(n) if i != j]
    )


def enumerate_posets(n: int):
    """Every labeled poset on 0..n-1 exactly once, deterministically.

    Vertices join one at a time; each step picks a down-set closed under
    predecessors, an up-set closed under successors, disjoint, and with
    every chosen lower element already under every chosen upper one.
    Guarded to n <= 6, where the census is still a few hundred thousand.
    """
    if n < 0:
        raise IndexOutOfRange(f"negative ground set size {n}")
    if n > 6:
        raise TooLarge(f"poset enumeration guarded to n <= 6, got {n}")
    for up_rows in _strict_rows(n):
        rows = tuple((1 << i) | up_rows[i] for i in range(n))
        yield QuasiOrder(n, rows)


def _strict_rows(m: int):
    if m == 0:
        yield []
        return
    v = m - 1
    for up in _strict_rows(v):
        down = transpose_rows(up, v)
        all_masks = range(1 << v)
        down_closed = [
            dmask
            for dmask in all_masks
            if all(down[u] & ~dmask == 0 for u in bits_of(dmask))
        ]
        up_closed = [
            umask
            for umask in all_masks
            if all(up[u] & ~umask == 0 for u in bits_of(umask))
        ]
        for dmask in down_closed:
            for umask in up_closed:
                if dmask & umask:
                    continue
                if any(umask & ~up[u] for u in bits_of(dmask)):
                    continue
                rows = [
                    up[i] | (1 << v if (dmask >> i) & 1 else 0)
                    for i in range(v)
                ]
                rows.append(umask)
                yield rows



def brute_force_poset_count(n: int) -> int:
    """Labeled poset census by scanning every irreflexive relation.

    Vectorized filter over all 2^(n(n-1)) candidate strict relations,
    keeping the antisymmetric transitive ones. Independent of
    enumerate_posets by construction; guarded to n <= 5.
    """
    if n < 0:
        raise IndexOutOfRange(f"negative ground set size {n}")
    if n > 5:
        raise TooLarge(f"brute census guarded to n <= 5, got {n}")
    if n == 0:
        return 1
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    m = len(off)
    total = 0
    chunk = 1 << 18
    for start in range(0, 1 << m, chunk):
        count = min(chunk, (1 << m) - start)
        ids = np.arange(start, start + count, dtype=np.int64)
        mats = np.zeros((count, n, n), dtype=bool)
        for b, (i, j) in enumerate(off):
            mats[:, i, j] = (ids >> b) & 1
        anti = ~(mats & mats.transpose(0, 2, 1)).any(axis=(1, 2))
        prod = (
            np.matmul(mats.astype(np.uint8), mats.astype(np.uint8)) > 0
        )
        trans = ~(prod & ~mats).any(axis=(1, 2))
        total += int((anti & trans).sum())
    return total
