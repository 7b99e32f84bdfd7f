#!/usr/bin/env python3
"""Plonka sums of matrices, congruences, and the decomposition round trip.

Walks through the seven-element worked example: a three-element chain glued
below a four-element Boolean lattice.  The sum is not Leibniz-reduced, yet it
is Suszko-reduced for the companion logic, which is exactly the gap the two
congruences are for.

Run as: python3 demos/02_plonka_sums.py
"""

from plonka.calculi import absorption_partition
from plonka.fixtures import dl_companion_presentation, seven_element_names, seven_element_system
from plonka.matrices import enumerate_filters, leibniz, reduce_matrix, suszko
from plonka.sums import decompose, isomorphic_systems, plonka_sum, sum_offsets


def subset(names: dict[str, int], members) -> str:
    inverse = {v: k for k, v in names.items()}
    return "{" + ", ".join(inverse[a] for a in sorted(members)) + "}"


def main() -> None:
    system = seven_element_system()
    names = seven_element_names()

    print("A directed system over the two-element chain:")
    for i, m in enumerate(system.matrices):
        print(f"  index {i}: {m.algebra.size} elements, designated {sorted(m.designated)}")
    hom = system.hom(0, 1)
    print(f"  translation 0 -> 1: {list(hom.mapping)} (chain bottom to square bottom, tops to top)")

    B = plonka_sum(system)
    print()
    print(f"Its sum has {B.algebra.size} elements at offsets {sum_offsets(system)};")
    print(f"designated set G = {subset(names, B.designated)}")

    a = B.algebra
    print()
    print("Operations act inside the join fiber after translating up:")
    for u, v in (("b", "e"), ("c", "e"), ("d", "b")):
        w = a.op("and", names[u], names[v])
        mark = "in G" if w in B.designated else "outside G"
        print(f"  {u} and {v} = {subset(names, [w])[1:-1]}  ({mark})")
    print("  so meets across the glue can leave the designated set or stay, by position")

    print()
    omega = leibniz(a, B.designated)
    blocks = " | ".join(subset(names, block) for block in omega.blocks)
    print(f"Leibniz congruence of <B, G>: {blocks}")
    print(f"  identity: {omega.is_identity()} (the two fiber bottoms are indiscernible)")
    reduced = reduce_matrix(B, omega)
    print(f"  quotient matrix has {reduced.algebra.size} elements and is Leibniz-reduced")

    L = dl_companion_presentation()
    print()
    print("Filters of the companion logic extending G:")
    for F in enumerate_filters(a, L):
        if B.designated <= F:
            print(f"  {subset(names, F)}")

    sigma = suszko(a, B.designated, L)
    print()
    print(f"Suszko congruence over those filters is the identity: {sigma.is_identity()}")
    print("  so <B, G> is Suszko-reduced for the companion while not Leibniz-reduced")

    print()
    t = absorption_partition()
    back = decompose(B, t)
    print("Decomposing along t(x, y) = and(x, or(x, y)) recovers the system:")
    print(f"  components: {[m.algebra.size for m in back.matrices]}")
    print(f"  isomorphic to the original: {isomorphic_systems(system, back)}")


if __name__ == "__main__":
    main()
