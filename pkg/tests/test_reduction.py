"""Pair digraphs, witness conversions, two-level orders, separators."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orderdim import (
    AcyclicCover,
    BadPair,
    CycleInX,
    ExtensionFamily,
    Incomplete,
    IncompleteFamily,
    InvalidCover,
    NotApplicable,
    NotExtension,
    antichain_order,
    chain_order,
    check_cover,
    closure_path,
    cover_to_extensions,
    crown_order,
    dichromatic_number,
    extend_by_pairs,
    extend_by_separator,
    extends,
    extension_pairs,
    extensions_to_cover,
    family_from_separators,
    is_acyclic,
    pair_digraph,
    prefix_separators,
    quasi_order,
    random_digraph,
    random_order,
    random_quasi,
    two_level_order,
    undecided_pair,
)
from orderdim.relations import StrictOrder
from orderdim.rng import SplitMix64


def test_pair_digraph_of_three_chain():
    ap, pvm = pair_digraph(chain_order(3))
    assert pvm.pairs == ((0, 1), (0, 2), (1, 2))
    assert list(ap.edges()) == [(0, 2)]
    assert is_acyclic(ap) is True


def test_pair_digraph_incomparable_restriction():
    base = crown_order(2)
    ap, apm = pair_digraph(base)
    bp, bpm = pair_digraph(base, incomparable_only=True)
    assert set(bpm.pairs) <= set(apm.pairs)
    for x, y in bpm.pairs:
        assert not base.leq(x, y) and not base.leq(y, x)
    idx = {p: i for i, p in enumerate(apm.pairs)}
    for x, y in bpm.pairs:
        for u, v in bpm.pairs:
            assert bp.adj(bpm.index((x, y)), bpm.index((u, v))) == ap.adj(
                idx[(x, y)], idx[(u, v)]
            )


def test_comparable_pairs_induce_acyclic_subgraph():
    for base in (chain_order(4), crown_order(3), random_order(6, 0.3, 5)):
        ap, apm = pair_digraph(base)
        bp, bpm = pair_digraph(base, incomparable_only=True)
        bset = set(bpm.pairs)
        comparable = [
            v for v in range(ap.n) if apm.pairs[v] not in bset
        ]
        assert is_acyclic(ap, comparable) is True


def test_extension_pairs_lists_newly_decided_pairs():
    base = antichain_order(2)
    ext = quasi_order(2, [(0, 1)], close=True)
    assert extension_pairs(base, ext) == ((0, 1),)
    with pytest.raises(NotExtension):
        extension_pairs(ext, base)


def test_extend_by_pairs_closes_and_validates():
    base = antichain_order(3)
    ext = extend_by_pairs(base, [(0, 1), (1, 2)])
    assert ext.leq(0, 2)
    assert extends(base, ext)


def test_extend_by_pairs_rejects_base_comparable_reversals():
    base = chain_order(2)
    with pytest.raises(BadPair):
        extend_by_pairs(base, [(1, 0)])


def test_cycle_detection_incomparable_case():
    base = antichain_order(2)
    with pytest.raises(CycleInX) as err:
        extend_by_pairs(base, [(0, 1), (1, 0)])
    cyc = err.value.pairs
    assert set(cyc) == {(0, 1), (1, 0)}
    for (x0, y0), (x1, y1) in zip(cyc, cyc[1:] + cyc[:1]):
        assert base.leq(y0, x1)


def test_cycle_detection_base_comparable_case():
    # 0 < 1 in the base; offering (1, 0) is illegal, but a merge can
    # still arise through intermediaries on one side only.
    base = quasi_order(4, [(0, 1)], close=True)
    with pytest.raises(CycleInX) as err:
        extend_by_pairs(base, [(1, 2), (2, 0)])
    cyc = err.value.pairs
    assert set(cyc) <= {(1, 2), (2, 0)}
    for (x0, y0), (x1, y1) in zip(cyc, cyc[1:] + cyc[:1]):
        assert base.leq(y0, x1)


def test_closure_path_postconditions_and_errors():
    base = antichain_order(4)
    pairs = [(0, 1), (1, 2), (2, 3)]
    path = closure_path(base, pairs, 0, 3)
    assert path == ((0, 1), (1, 2), (2, 3))
    with pytest.raises(NotApplicable):
        closure_path(base, pairs, 3, 0)
    with pytest.raises(NotApplicable):
        closure_path(chain_order(2), [], 0, 1)


def quasi_with_pairs(max_n: int = 6):
    seeds = st.integers(0, 2**32 - 1)

    def build(seed):
        rng = SplitMix64(seed)
        n = 1 + rng.below(max_n)
        base = random_quasi(n, 0.1 + 0.08 * rng.below(5), rng.next_u64())
        ap, apm = pair_digraph(base)
        ids = [v for v in range(ap.n) if rng.chance(0.35)]
        return base, [apm.pairs[v] for v in ids]

    return seeds.map(build)


@given(quasi_with_pairs())
@settings(max_examples=150)
def test_extend_by_pairs_totality(case):
    base, offered = case
    try:
        ext = extend_by_pairs(base, offered)
    except CycleInX as err:
        offered_set = set(offered)
        cyc = err.pairs
        assert len(cyc) >= 1
        for x, y in cyc:
            assert (x, y) in offered_set
        for (x0, y0), (x1, y1) in zip(cyc, cyc[1:] + cyc[:1]):
            assert base.leq(y0, x1)
        return
    assert extends(base, ext)
    for x, y in offered:
        assert ext.leq(x, y)


def test_check_cover_validation():
    ap, _ = pair_digraph(crown_order(2))
    with pytest.raises(InvalidCover):
        check_cover(ap, AcyclicCover(((0,),)))
    full = AcyclicCover((tuple(range(ap.n)),))
    if is_acyclic(ap) is True:
        check_cover(ap, full)
    else:
        with pytest.raises(InvalidCover):
            check_cover(ap, full)


def test_cover_extension_round_trip_on_crown():
    base = crown_order(3)
    ap, apm = pair_digraph(base)
    cover = dichromatic_number(ap).witness
    fam = cover_to_extensions(base, cover)
    assert isinstance(fam, ExtensionFamily)
    assert fam.size == len(cover.classes)
    back = extensions_to_cover(fam)
    assert len(back.classes) == fam.size
    for cls, ext in zip(cover.classes, fam.exts):
        xs = {apm.index(p) for p in extension_pairs(base, ext)}
        assert set(cls) <= xs
        assert extend_by_pairs(base, extension_pairs(base, ext)).rows == ext.rows


def test_family_completeness_is_enforced():
    base = antichain_order(2)
    one = quasi_order(2, [(0, 1)], close=True)
    with pytest.raises(IncompleteFamily) as err:
        ExtensionFamily(base, (one,))
    assert err.value.pair in {(0, 1), (1, 0)}
    # (0, 1) is undecided: no extension places 1 below 0
    assert undecided_pair(base, (one,)) == (0, 1)
    other = quasi_order(2, [(1, 0)], close=True)
    fam = ExtensionFamily(base, (one, other))
    assert fam.size == 2


def test_two_level_order_embedding_is_edge_faithful():
    rng = SplitMix64(11)
    for _ in range(25):
        n = 1 + rng.below(6)
        g = random_digraph(n, 0.1 + 0.06 * rng.below(6), rng.next_u64())
        q, emb = two_level_order(g)
        assert q.n == 2 * n
        ap, _ = pair_digraph(q)
        for x in range(n):
            for y in range(n):
                if x != y:
                    assert g.adj(x, y) == ap.adj(emb[x], emb[y])


def test_separator_extension_is_transitive_and_preserves_classes():
    base = crown_order(2)
    for b_set in prefix_separators(base.n):
        mask = sum(1 << v for v in b_set)
        lift = StrictOrder(
            base.n,
            tuple(0 if (mask >> x) & 1 else mask for x in range(base.n)),
        )
        bigger = extend_by_separator(base, lift)
        assert extends(base, bigger)


def test_prefix_separator_counts():
    assert len(prefix_separators(1)) == 1
    assert len(prefix_separators(2)) == 3
    assert len(prefix_separators(3)) == 7
    assert len(prefix_separators(4)) == 7
    for n in range(1, 6):
        for s in prefix_separators(n):
            for i in range(n):
                assert {i} in [set(b) & {i} for b in prefix_separators(n)]


def test_prefix_separators_separate_singletons():
    for n in range(1, 7):
        seps = [set(b) for b in prefix_separators(n)]
        for x in range(n):
            for y in range(n):
                if x != y:
                    assert any(x in b and y not in b for b in seps)


def test_family_from_separators_on_small_posets():
    for base in (chain_order(3), antichain_order(3), crown_order(2)):
        fam = family_from_separators(base, prefix_separators(base.n))
        assert not isinstance(fam, Incomplete)
        assert fam.size == len(prefix_separators(base.n))


def test_family_from_separators_reports_missing_pairs():
    base = antichain_order(2)
    result = family_from_separators(base, ((0, 1),))
    assert isinstance(result, Incomplete)
    assert result.pair is not None
