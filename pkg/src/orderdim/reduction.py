"""Reductions between quasi orders, pair digraphs, covers and extensions.

The pair digraph of a base order has one vertex per ordered pair (x, y)
that some extension could still decide upward, i.e. with y not below x.
An edge (x0, y0) -> (x1, y1) means y0 is below-or-equal x1, so deciding
the first pair forces progress on the second. Acyclic vertex classes of
this digraph correspond exactly to single extensions of the base, and a
full cover corresponds to a family of extensions that decides everything.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .digraphs import Digraph, is_acyclic
from .errors import (
    BadPair,
    CycleInX,
    IncompleteFamily,
    IndexOutOfRange,
    InvalidCover,
    NotApplicable,
    NotExtension,
    SizeMismatch,
)
from .relations import (
    QuasiOrder,
    StrictOrder,
    bits_of,
    close_rows,
    extends,
    transpose_rows,
)


@dataclass(frozen=True, slots=True)
class PairVertexMap:
    """Pair digraph vertices in lexicographic order, with reverse lookup."""

    pairs: tuple[tuple[int, int], ...]
    _index: dict = field(compare=False, repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {p: i for i, p in enumerate(self.pairs)}
        )

    def index(self, pair: tuple[int, int]) -> int:
        try:
            return self._index[tuple(pair)]
        except KeyError:
            raise IndexOutOfRange(f"{pair} is not a pair vertex") from None

    def __len__(self) -> int:
        return len(self.pairs)


def pair_digraph(
    q: QuasiOrder, incomparable_only: bool = False
) -> tuple[Digraph, PairVertexMap]:
    """Digraph on undominated pairs of q; optionally only incomparable ones."""
    pairs = [
        (x, y)
        for x in range(q.n)
        for y in range(q.n)
        if not q.leq(y, x) and not (incomparable_only and q.leq(x, y))
    ]
    pvm = PairVertexMap(tuple(pairs))
    m = len(pairs)
    first_mask = [0] * q.n
    for vid, (x, _) in enumerate(pairs):
        first_mask[x] |= 1 << vid
    rows = [0] * m
    for vid, (_, y) in enumerate(pairs):
        row = 0
        for x1 in bits_of(q.rows[y]):
            row |= first_mask[x1]
        rows[vid] = row
    return Digraph(m, tuple(rows)), pvm


def extension_pairs(
    base: QuasiOrder, ext: QuasiOrder
) -> tuple[tuple[int, int], ...]:
    """Pair vertices realized by ext: pairs newly related by it, lex order."""
    if not extends(base, ext):
        raise NotExtension("second order does not extend the first")
    return tuple(
        (x, y)
        for x in range(base.n)
        for y in bits_of(ext.rows[x])
        if not base.leq(y, x)
    )


def _pair_rows(base: QuasiOrder, pairs) -> list[int]:
    rows = [0] * base.n
    for a, b in pairs:
        if not (0 <= a < base.n and 0 <= b < base.n):
            raise IndexOutOfRange(f"pair ({a}, {b}) outside 0..{base.n - 1}")
        if base.leq(b, a):
            raise BadPair(f"({a}, {b}) is already decided downward")
        rows[a] |= 1 << b
    return rows


def closure_path(
    base: QuasiOrder, pairs, p: int, r: int
) -> tuple[tuple[int, int], ...]:
    """The pair-digraph path that witnesses p below r in the closure.

    Walks a shortest chain from p to r whose single steps are either base
    relations or offered pairs, then keeps the offered pairs in order.
    The result (x0,y0)..(xk,yk) satisfies base(p,x0), base(yk,r), and
    base(y_i, x_{i+1}) between consecutive pairs. NotApplicable when (p, r)
    sits in the base already or fails to be in the closure.
    """
    pair_rows = _pair_rows(base, pairs)
    if not (0 <= p < base.n and 0 <= r < base.n):
        raise IndexOutOfRange(f"({p}, {r}) outside 0..{base.n - 1}")
    if base.leq(p, r):
        raise NotApplicable(f"({p}, {r}) holds in the base already")
    step = [base.rows[i] | pair_rows[i] for i in range(base.n)]
    parent = {p: None}
    queue = deque([p])
    while queue:
        u = queue.popleft()
        if u == r:
            break
        for v in bits_of(step[u]):
            if v not in parent:
                parent[v] = u
                queue.append(v)
    if r not in parent:
        raise NotApplicable(f"({p}, {r}) is not in the closure")
    chain = []
    v = r
    while v is not None:
        chain.append(v)
        v = parent[v]
    chain.reverse()
    out = []
    for u, v in zip(chain, chain[1:]):
        if not base.leq(u, v):
            out.append((u, v))
    return tuple(out)


def extend_by_pairs(base: QuasiOrder, pairs) -> QuasiOrder:
    """Close base over the offered pairs; the closure must stay an extension.

    Every offered pair must be undecided downward (BadPair otherwise). If
    the closure would merge two classes that the base keeps apart, the
    offending pairs form a pair-digraph cycle, raised as CycleInX.
    """
    pair_rows = _pair_rows(base, pairs)
    plist = sorted(
        {(a, b) for a in range(base.n) for b in bits_of(pair_rows[a])}
    )
    rows = close_rows(
        [base.rows[i] | pair_rows[i] for i in range(base.n)], base.n
    )
    merged = None
    for x in range(base.n):
        for y in bits_of(rows[x]):
            if y <= x:
                continue
            if (rows[y] >> x) & 1 and not base.equivalent(x, y):
                merged = (x, y)
                break
        if merged:
            break
    if merged is None:
        return QuasiOrder(base.n, tuple(rows))
    x, y = merged
    if base.leq(x, y):
        cycle = closure_path(base, plist, y, x)
    elif base.leq(y, x):
        cycle = closure_path(base, plist, x, y)
    else:
        cycle = closure_path(base, plist, x, y) + closure_path(
            base, plist, y, x
        )
    raise CycleInX(cycle)


@dataclass(frozen=True, slots=True)
class AcyclicCover:
    """Vertex classes meant to cover a digraph, each without a cycle."""

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "classes",
            tuple(tuple(sorted(set(c))) for c in self.classes),
        )


def check_cover(d: Digraph, cover: AcyclicCover) -> None:
    """Raise InvalidCover unless classes cover d and are each acyclic."""
    seen = set()
    for c in cover.classes:
        for v in c:
            if not (0 <= v < d.n):
                raise IndexOutOfRange(f"vertex {v} outside 0..{d.n - 1}")
        seen.update(c)
        witness = is_acyclic(d, c)
        if witness is not True:
            raise InvalidCover(f"class {c} holds cycle {witness.verts}")
    if seen != set(range(d.n)):
        missing = sorted(set(range(d.n)) - seen)
        raise InvalidCover(f"vertices {missing} uncovered")


def undecided_pair(base: QuasiOrder, exts) -> tuple[int, int] | None:
    """First ordered pair no extension settles: neither base(x,y) nor any
    ext placing y below x. None when the family decides everything."""
    for x in range(base.n):
        for y in range(base.n):
            if base.leq(x, y):
                continue
            if not any(e.leq(y, x) for e in exts):
                return (x, y)
    return None


@dataclass(frozen=True, slots=True)
class ExtensionFamily:
    """Extensions of one base that jointly decide every ordered pair."""

    base: QuasiOrder
    exts: tuple[QuasiOrder, ...]

    def __post_init__(self):
        object.__setattr__(self, "exts", tuple(self.exts))
        for e in self.exts:
            if not extends(self.base, e):
                raise NotExtension("family member does not extend the base")
        missing = undecided_pair(self.base, self.exts)
        if missing is not None:
            raise IncompleteFamily(missing)

    @property
    def size(self) -> int:
        return len(self.exts)


@dataclass(frozen=True, slots=True)
class Incomplete:
    """Separator family fell short; carries one undecided pair."""

    pair: tuple[int, int]


def cover_to_extensions(base: QuasiOrder, cover: AcyclicCover) -> ExtensionFamily:
    """One extension per cover class of the base's pair digraph."""
    ap, pvm = pair_digraph(base)
    check_cover(ap, cover)
    exts = tuple(
        extend_by_pairs(base, [pvm.pairs[v] for v in cls])
        for cls in cover.classes
    )
    return ExtensionFamily(base, exts)


def extensions_to_cover(fam: ExtensionFamily) -> AcyclicCover:
    """One pair-digraph class per extension; classes always come out acyclic."""
    ap, pvm = pair_digraph(fam.base)
    cover = AcyclicCover(
        tuple(
            tuple(pvm.index(p) for p in extension_pairs(fam.base, e))
            for e in fam.exts
        )
    )
    check_cover(ap, cover)
    return cover


def two_level_order(d: Digraph) -> tuple[QuasiOrder, tuple[int, ...]]:
    """Order with a bottom and top copy of the vertices, related along edges.

    Bottom copy of x is id x, top copy is id n+x; bottom x sits below top y
    exactly when (x, y) is an edge. Returns the order and the map sending
    source vertex x to the pair-digraph vertex (top x, bottom x); that map
    preserves and reflects edges.
    """
    n = d.n
    rows = [0] * (2 * n)
    for x in range(n):
        rows[x] = (1 << x) | (d.rows[x] << n)
        rows[n + x] = 1 << (n + x)
    q = QuasiOrder(2 * n, tuple(rows))
    _, pvm = pair_digraph(q)
    emb = tuple(pvm.index((n + x, x)) for x in range(n))
    return q, emb


def extend_by_separator(base: QuasiOrder, s: StrictOrder) -> QuasiOrder:
    """Extend base by all pairs a step of s vouches for.

    (a, b) enters when some u below-or-equal b has s(v, u) for every v
    below-or-equal a. Taking u = b shows: if s lifts everything under a
    over b, then a lands below b. The result never merges classes and is
    transitive, so it is a genuine extension.
    """
    if base.n != s.n:
        raise SizeMismatch(f"ground sets differ: {base.n} vs {s.n}")
    down = transpose_rows(base.rows, base.n)
    s_col = transpose_rows(s.rows, s.n)
    rows = list(base.rows)
    for a in range(base.n):
        da = down[a]
        for b in range(base.n):
            if (rows[a] >> b) & 1:
                continue
            for u in bits_of(down[b]):
                if da & ~s_col[u] == 0:
                    rows[a] |= 1 << b
                    break
    return QuasiOrder(base.n, tuple(rows))


def prefix_separators(n: int) -> tuple[frozenset[int], ...]:
    """Binary prefix classes of 0..n-1, all lengths up to the bit width.

    Singleton prefixes guarantee that any point can be split off any set
    avoiding it, which is exactly what family_from_separators needs.
    """
    if n < 0:
        raise IndexOutOfRange(f"negative ground set size {n}")
    bits = (n - 1).bit_length() if n >= 1 else 0
    out = []
    for length in range(bits + 1):
        for val in range(1 << length):
            out.append(
                frozenset(
                    i for i in range(n) if (i >> (bits - length)) == val
                )
            )
    return tuple(out)


def family_from_separators(base: QuasiOrder, sets) -> ExtensionFamily | Incomplete:
    """One separator-driven extension per set; Incomplete when they fall short."""
    exts = []
    for b_set in sets:
        mask = 0
        for v in b_set:
            if not (0 <= v < base.n):
                raise IndexOutOfRange(f"separator holds {v} outside range")
            mask |= 1 << v
        rows = tuple(
            0 if (mask >> x) & 1 else mask for x in range(base.n)
        )
        exts.append(extend_by_separator(base, StrictOrder(base.n, rows)))
    missing = undecided_pair(base, exts)
    if missing is not None:
        return Incomplete(missing)
    return ExtensionFamily(base, tuple(exts))
