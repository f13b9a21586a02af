"""Plain versus minimal digraph homomorphisms, and what they transfer.

A plain homomorphism preserves edges. A minimal one additionally keeps
the non-edges of every induced cycle, so induced cycles map to induced
cycles of the same length. Wrapping a 6-cycle twice around a 3-cycle is
the textbook map that passes the first test and fails the second.

Run: python demos/05_homomorphisms.py
"""

from orderdim import (
    HomWitness,
    dichromatic_number,
    directed_cycle,
    find_homomorphism,
    minimal_cycles,
    verify_homomorphism,
)


def main() -> None:
    c6, c3 = directed_cycle(6), directed_cycle(3)

    wrap = find_homomorphism(c6, c3)
    print("plain homomorphism C6 -> C3:", wrap.mapping)

    strict = find_homomorphism(c6, c3, minimal=True)
    print("minimal homomorphism exists:", strict is not None)

    res = verify_homomorphism(c6, c3, HomWitness(wrap.mapping, True))
    print(
        f"wrap rejected as minimal: pair {res.pair} on cycle {res.cycle} "
        f"({res.reason})"
    )

    # Homomorphisms transfer the dichromatic number downward: pull any
    # acyclic cover of the target back along the map.
    kg = dichromatic_number(c6).k
    kh = dichromatic_number(c3).k
    print(f"dicr(C6) = {kg} <= dicr(C3) = {kh}")
    assert kg <= kh

    # A minimal self-map of an induced cycle is just a rotation.
    rot = find_homomorphism(c3, c3, minimal=True)
    print("minimal self-map of C3:", rot.mapping)
    print("induced cycles of C6:", [c.verts for c in minimal_cycles(c6)])


if __name__ == "__main__":
    main()
