"""Finite branching trees, dense selectors, and their increment digraphs.

A branching sequence sigma lists branching factors, each at least 2. The
tuples s with s[k] < sigma[k] of full length form one tree level; a
selector picks one such tuple per sequence. The increment digraph on the
full level connects s to t when both extend the selected tuple of some
shorter prefix, agree beyond that coordinate, and t bumps that coordinate
by one modulo its branching factor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .digraphs import Cycle, Digraph
from .errors import BadSelector, BranchTooLarge

MAX_LEVEL_VERTICES = 4096


def check_sigma(sigma) -> tuple[int, ...]:
    out = tuple(int(v) for v in sigma)
    for v in out:
        if v < 2:
            raise ValueError(f"branching factor {v} below 2")
    return out


def weight(s) -> int:
    return 2 * len(s) + sum(s)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def sequence_stream():
    """Every finite tuple over the naturals, by weight then shortlex.

    The weight of s is 2*len(s) + sum(s), so a tuple of length k never
    appears before index k: all shorter all-zero tuples precede it.
    """
    w = 0
    while True:
        for k in range(w // 2 + 1):
            yield from _compositions(w - 2 * k, k)
        w += 1


def nth_sequence(l: int) -> tuple[int, ...]:
    if l < 0:
        raise ValueError(f"negative enumeration index {l}")
    return next(itertools.islice(sequence_stream(), l, None))


def sequence_index(s) -> int:
    target = tuple(s)
    for i, cand in enumerate(sequence_stream()):
        if cand == target:
            return i
    raise AssertionError("unreachable: the stream is exhaustive")


def in_level(sigma, s) -> bool:
    """Membership in the tree under sigma: short enough, entries in range."""
    return len(s) <= len(sigma) and all(
        0 <= s[k] < sigma[k] for k in range(len(s))
    )


class DenseSelector:
    """Selector hitting every tree tuple at the index where it is enumerated.

    For a branching sequence of length l: take the l-th enumerated tuple;
    if it fits the tree, pad it with zeros to full length, else answer all
    zeros. Values are memoized; the instance itself is state-free beyond
    the cache, so sharing it is safe.
    """

    def __init__(self):
        self._memo: dict[tuple[int, ...], tuple[int, ...]] = {}

    def __call__(self, sigma) -> tuple[int, ...]:
        key = check_sigma(sigma)
        got = self._memo.get(key)
        if got is None:
            l = len(key)
            s = nth_sequence(l)
            if in_level(key, s):
                got = s + (0,) * (l - len(s))
            else:
                got = (0,) * l
            self._memo[key] = got
        return got


def _selector_value(selector, sigma) -> tuple[int, ...]:
    val = tuple(selector(sigma))
    if len(val) != len(sigma) or not all(
        0 <= val[k] < sigma[k] for k in range(len(sigma))
    ):
        raise BadSelector(f"selector answered {val} for level {sigma}")
    return val


@dataclass(frozen=True, slots=True)
class SelectorDigraph:
    sigma: tuple[int, ...]
    verts: tuple[tuple[int, ...], ...]
    graph: Digraph

    def vertex_id(self, t) -> int:
        vid = 0
        for k, v in enumerate(t):
            vid = vid * self.sigma[k] + v
        return vid


def _strides(sigma: tuple[int, ...]) -> list[int]:
    strides = [1] * len(sigma)
    for k in range(len(sigma) - 2, -1, -1):
        strides[k] = strides[k + 1] * sigma[k + 1]
    return strides


def _guard_size(sigma: tuple[int, ...], max_vertices: int) -> int:
    total = 1
    for v in sigma:
        total *= v
    if total > max_vertices:
        raise BranchTooLarge(f"{total} vertices exceed the bound {max_vertices}")
    return total


def selector_digraph(
    selector, sigma, max_vertices: int = MAX_LEVEL_VERTICES
) -> SelectorDigraph:
    """The increment digraph on the full tree level under sigma."""
    sigma = check_sigma(sigma)
    total = _guard_size(sigma, max_vertices)
    strides = _strides(sigma)
    rows = [0] * total
    for k in range(len(sigma)):
        e = _selector_value(selector, sigma[:k])
        base = sum(e[j] * strides[j] for j in range(k))
        for tail in itertools.product(*(range(v) for v in sigma[k + 1:])):
            off = base + sum(
                tail[j] * strides[k + 1 + j] for j in range(len(tail))
            )
            for i in range(sigma[k]):
                s_id = off + i * strides[k]
                t_id = off + ((i + 1) % sigma[k]) * strides[k]
                rows[s_id] |= 1 << t_id
    verts = tuple(itertools.product(*(range(v) for v in sigma)))
    return SelectorDigraph(sigma, verts, Digraph(total, tuple(rows)))


def canonical_cycles(
    selector, sigma, max_vertices: int = MAX_LEVEL_VERTICES
) -> tuple[Cycle, ...]:
    """One increment orbit per level and tail: the built-in minimal cycles.

    The orbit at level k steps the k-th coordinate through all sigma[k]
    values over the selected prefix; as a cycle its length is sigma[k]-1.
    """
    sigma = check_sigma(sigma)
    _guard_size(sigma, max_vertices)
    strides = _strides(sigma)
    out = []
    for k in range(len(sigma)):
        e = _selector_value(selector, sigma[:k])
        base = sum(e[j] * strides[j] for j in range(k))
        for tail in itertools.product(*(range(v) for v in sigma[k + 1:])):
            off = base + sum(
                tail[j] * strides[k + 1 + j] for j in range(len(tail))
            )
            out.append(
                Cycle(tuple(off + i * strides[k] for i in range(sigma[k])))
            )
    return tuple(out)


def level_edge_count(sigma, k: int) -> int:
    """Edges witnessed at level k: sigma[k] times the tail combinations."""
    sigma = check_sigma(sigma)
    count = sigma[k]
    for v in sigma[k + 1:]:
        count *= v
    return count


@dataclass(frozen=True, slots=True)
class DensityReport:
    """Which tree tuples the selector hits within a prefix depth.

    witnessed pairs (s, l) passed the check s below the value at prefix
    length l; unresolved ones have enumeration index beyond the depth, so
    no conclusion is drawn; violations should stay empty for the dense
    selector and exist to catch broken custom selectors.
    """

    witnessed: tuple[tuple[tuple[int, ...], int], ...]
    unresolved: tuple[tuple[tuple[int, ...], int], ...]
    violations: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def density_report(selector, f, depth: int) -> DensityReport:
    f = check_sigma(f)
    if depth < 0 or depth > len(f):
        raise ValueError(f"depth {depth} outside 0..{len(f)}")
    prefix = f[:depth]
    witnessed, unresolved, violations = [], [], []
    for length in range(depth + 1):
        for s in itertools.product(*(range(v) for v in prefix[:length])):
            l = sequence_index(s)
            if l > depth:
                unresolved.append((s, l))
                continue
            val = _selector_value(selector, f[:l])
            if val[: len(s)] == s:
                witnessed.append((s, l))
            else:
                violations.append((s, l))
    return DensityReport(tuple(witnessed), tuple(unresolved), tuple(violations))


def prefix_monotone(selector, f) -> bool:
    """Branching factors never drop along selected-prefix containment.

    Whenever the value at prefix length m is an initial segment of the
    value at length n, the branching factor at position m must not exceed
    the one at n. Quantified over prefix lengths with defined factors.
    """
    f = check_sigma(f)
    vals = [_selector_value(selector, f[:m]) for m in range(len(f))]
    for m in range(len(f)):
        for n in range(m, len(f)):
            if vals[n][:m] == vals[m] and f[m] > f[n]:
                return False
    return True
