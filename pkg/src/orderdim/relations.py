"""Quasi orders on small ground sets: quotients, extensions, linearization.

A relation on ids 0..n-1 is stored as one int per row: bit j of rows[i]
set means i is related to j. All values are immutable and pure to share.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    IndexOutOfRange,
    NotQuasiOrder,
    NotStrictOrder,
    SizeMismatch,
)


def close_rows(rows: list[int], n: int) -> list[int]:
    """Transitive closure of bit rows in place (Warshall over words)."""
    for k in range(n):
        bit = 1 << k
        rk = rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    return rows


def transpose_rows(rows: tuple[int, ...] | list[int], n: int) -> list[int]:
    cols = [0] * n
    for i, row in enumerate(rows):
        bit = 1 << i
        r = row
        while r:
            j = (r & -r).bit_length() - 1
            cols[j] |= bit
            r &= r - 1
    return cols


def bits_of(mask: int):
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_rows_shape(n: int, rows: tuple[int, ...]) -> None:
    if n < 0:
        raise IndexOutOfRange(f"negative ground set size {n}")
    if len(rows) != n:
        raise SizeMismatch(f"{len(rows)} rows for ground set of {n}")
    full = (1 << n) - 1
    for i, row in enumerate(rows):
        if row & ~full:
            raise IndexOutOfRange(f"row {i} relates ids outside 0..{n - 1}")


@dataclass(frozen=True, slots=True)
class QuasiOrder:
    """A reflexive transitive relation. Validated on construction."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_rows_shape(self.n, self.rows)
        for i, row in enumerate(self.rows):
            if not (row >> i) & 1:
                raise NotQuasiOrder((i, i, i), f"not reflexive at {i}")
        for i, row in enumerate(self.rows):
            r = row
            while r:
                j = (r & -r).bit_length() - 1
                missing = self.rows[j] & ~row
                if missing:
                    k = (missing & -missing).bit_length() - 1
                    raise NotQuasiOrder((i, j, k))
                r &= r - 1

    def leq(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def equivalent(self, i: int, j: int) -> bool:
        return self.leq(i, j) and self.leq(j, i)

    def is_total(self) -> bool:
        return all(
            self.leq(i, j) or self.leq(j, i)
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def related_pairs(self) -> list[tuple[int, int]]:
        """All (i, j) with i related to j and i != j, in lexicographic order."""
        return [
            (i, j) for i in range(self.n) for j in bits_of(self.rows[i]) if i != j
        ]


def quasi_order(n: int, pairs, close: bool = False) -> QuasiOrder:
    """Build a quasi order from pairs; the diagonal is always implied.

    With close=True the reflexive-transitive closure of the pairs is taken,
    so any relation is accepted. With close=False the pairs plus diagonal
    must already be transitive, else NotQuasiOrder carries a witness triple.
    """
    rows = [1 << i for i in range(n)]
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"pair ({i}, {j}) outside 0..{n - 1}")
        rows[i] |= 1 << j
    if close:
        close_rows(rows, n)
    return QuasiOrder(n, tuple(rows))


@dataclass(frozen=True, slots=True)
class StrictOrder:
    """An irreflexive transitive relation, same row encoding."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_rows_shape(self.n, self.rows)
        for i, row in enumerate(self.rows):
            if (row >> i) & 1:
                raise NotStrictOrder(f"not irreflexive at {i}")
        for i, row in enumerate(self.rows):
            for j in bits_of(row):
                if self.rows[j] & ~row:
                    raise NotStrictOrder(f"not transitive through ({i}, {j})")

    def lt(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)


def strict_order(n: int, pairs) -> StrictOrder:
    rows = [0] * n
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"pair ({i}, {j}) outside 0..{n - 1}")
        rows[i] |= 1 << j
    return StrictOrder(n, tuple(rows))


@dataclass(frozen=True, slots=True)
class QuotientPoset:
    """Mutual-relation classes of a quasi order with the induced strict order.

    Classes are listed by least member; class_of maps element to class id.
    """

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    lt_rows: tuple[int, ...]

    def __post_init__(self):
        n = len(self.class_of)
        seen = [False] * n
        for ci, cls in enumerate(self.classes):
            for x in cls:
                if not (0 <= x < n) or seen[x] or self.class_of[x] != ci:
                    raise SizeMismatch("classes do not partition the ground set")
                seen[x] = True
        if not all(seen):
            raise SizeMismatch("classes do not partition the ground set")
        StrictOrder(len(self.classes), self.lt_rows)

    @property
    def size(self) -> int:
        return len(self.classes)

    def lt(self, a: int, b: int) -> bool:
        return bool((self.lt_rows[a] >> b) & 1)


def quotient(q: QuasiOrder) -> QuotientPoset:
    """Collapse mutual pairs of q into classes; order classes strictly."""
    class_of = [-1] * q.n
    classes: list[tuple[int, ...]] = []
    for i in range(q.n):
        if class_of[i] >= 0:
            continue
        members = [j for j in bits_of(q.rows[i]) if q.leq(j, i)]
        ci = len(classes)
        for j in members:
            class_of[j] = ci
        classes.append(tuple(members))
    m = len(classes)
    lt_rows = [0] * m
    for a in range(m):
        ra = classes[a][0]
        for b in range(m):
            if a == b:
                continue
            rb = classes[b][0]
            if q.leq(ra, rb) and not q.leq(rb, ra):
                lt_rows[a] |= 1 << b
    return QuotientPoset(tuple(classes), tuple(class_of), tuple(lt_rows))


def extends(base: QuasiOrder, ext: QuasiOrder) -> bool:
    """True iff ext contains base and relates exactly the same mutual pairs."""
    if base.n != ext.n:
        raise SizeMismatch(f"ground sets differ: {base.n} vs {ext.n}")
    for rb, re in zip(base.rows, ext.rows):
        if rb & ~re:
            return False
    bcols = transpose_rows(base.rows, base.n)
    ecols = transpose_rows(ext.rows, ext.n)
    for i in range(base.n):
        if (base.rows[i] & bcols[i]) != (ext.rows[i] & ecols[i]):
            return False
    return True


def linear_extension(q: QuasiOrder) -> QuasiOrder:
    """One deterministic total extension of q.

    Topological order of the quotient classes, ties broken by least member
    id, lifted back to the ground set.
    """
    qt = quotient(q)
    m = qt.size
    placed = 0
    rank = [-1] * m
    remaining = set(range(m))
    while remaining:
        ready = [
            c
            for c in remaining
            if all(not qt.lt(d, c) for d in remaining if d != c)
        ]
        pick = min(ready, key=lambda c: qt.classes[c][0])
        rank[pick] = placed
        placed += 1
        remaining.remove(pick)
    rows = [0] * q.n
    for x in range(q.n):
        for y in range(q.n):
            if rank[qt.class_of[x]] <= rank[qt.class_of[y]]:
                rows[x] |= 1 << y
    return QuasiOrder(q.n, tuple(rows))


def down_set_sizes(q: QuasiOrder) -> tuple[int, ...]:
    """Entry i counts the elements related down to i (including i)."""
    cols = transpose_rows(q.rows, q.n)
    return tuple(c.bit_count() for c in cols)
