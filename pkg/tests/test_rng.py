"""Seeded generator used for every random instance."""

from __future__ import annotations

from orderdim import SplitMix64


def test_reference_vector_for_seed_zero():
    # First three outputs of the published splitmix64 reference for seed 0.
    r = SplitMix64(0)
    assert r.next_u64() == 0xE220A8397B1DCDAF
    assert r.next_u64() == 0x6E789E6AA1B965F4
    assert r.next_u64() == 0x06C45D188009454F


def test_streams_are_deterministic_and_seed_sensitive():
    a = [SplitMix64(9).next_u64() for _ in range(4)]
    b = [SplitMix64(9).next_u64() for _ in range(4)]
    assert a == b
    assert SplitMix64(9).next_u64() != SplitMix64(10).next_u64()


def test_below_stays_in_range_and_covers_values():
    r = SplitMix64(5)
    seen = set()
    for _ in range(200):
        v = r.below(6)
        assert 0 <= v < 6
        seen.add(v)
    assert seen == set(range(6))


def test_chance_extremes():
    r = SplitMix64(1)
    assert not any(r.chance(0.0) for _ in range(50))
    assert all(r.chance(1.0) for _ in range(50))
