"""Quasi orders as bit-row matrices: construction, quotients, linearization.

Run: python demos/01_quasi_orders.py
"""

from orderdim import (
    chain_order,
    down_set_sizes,
    extends,
    linear_extension,
    quasi_order,
    quotient,
)


def main() -> None:
    # A quasi order allows mutually related elements; 0 and 1 below form
    # one equivalence class, 2 sits above both, 3 floats free.
    q = quasi_order(4, [(0, 1), (1, 0), (0, 2)], close=True)
    print("relation pairs:", q.related_pairs())
    print("0 and 1 equivalent:", q.equivalent(0, 1))

    qt = quotient(q)
    print("quotient classes:", qt.classes)
    print("class of each element:", qt.class_of)

    # Down-set sizes give a quick profile of how strict the order is.
    print("down-set sizes:", down_set_sizes(q))
    print("chain profile:", down_set_sizes(chain_order(4)))

    # Any quasi order linearizes: the result is total and extends it.
    lin = linear_extension(q)
    assert lin.is_total() and extends(q, lin)
    print("linearization pairs:", lin.related_pairs())


if __name__ == "__main__":
    main()
