"""Regenerate the structure files under fixtures/ from the code fixtures.

The files are committed; this script exists so they can be rebuilt after a
renderer change and diffed.  Run from anywhere:

    python3 scripts/regenerate_fixtures.py
"""

from __future__ import annotations

import pathlib

from plonka.bounds import DEFAULT
from plonka.calculi import bounded_prove, cl_calculus, pwk_calculus
from plonka.files import render_algebra, render_calculus, render_matrix, render_signature, render_system
from plonka.fixtures import (
    b2_algebra,
    b2xb2_algebra,
    bool4_algebra,
    chain_algebra,
    eight_fiber_system,
    l2_algebra,
    seven_element_system,
    upsets_of_lattice,
    wk3_algebra,
)
from plonka.matrices import LogicalMatrix
from plonka.sums import plonka_sum
from plonka.terms import parse_term

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

BOOL_SIG = 'signature bool { op and 2; op or 2; op not 1 }'
LATT_SIG = 'signature latt { op and 2; op or 2 }'


def write(name: str, *parts: str) -> None:
    path = FIXTURES / name
    path.write_text("\n\n".join(parts) + "\n", encoding="utf-8")
    print(f"wrote {path.relative_to(ROOT)}")


def upset_label(names: tuple[str, ...], F: frozenset[int]) -> str:
    if not F:
        return "none"
    return "_".join(names[a] for a in sorted(F))


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)

    b2 = b2_algebra()
    write(
        "cl.matrices",
        "# Classical logic as its two-element matrix.",
        BOOL_SIG,
        render_algebra(b2, "b2", "bool", ("f", "t")),
        render_matrix(LogicalMatrix(b2, {1}), "cl", "b2", ("f", "t")),
    )

    wk3 = wk3_algebra()
    write(
        "wk3.matrices",
        "# The three-element weak Kleene matrix with both t and n designated.",
        BOOL_SIG,
        render_algebra(wk3, "wk3", "bool", ("f", "t", "n")),
        render_matrix(LogicalMatrix(wk3, {1, 2}), "wk3", "wk3", ("f", "t", "n")),
    )

    b2xb2 = b2xb2_algebra()
    pair_names = ("ff", "ft", "tf", "tt")
    write(
        "b2xb2.matrices",
        "# The direct square of the two-element Boolean algebra.",
        BOOL_SIG,
        render_algebra(b2xb2, "b2xb2", "bool", pair_names),
        render_matrix(LogicalMatrix(b2xb2, {3}), "b2xb2", "b2xb2", pair_names),
    )

    l2, c3, b4 = l2_algebra(), chain_algebra(3), bool4_algebra()
    lattice_algebras = [
        ("l2", l2, ("z", "o")),
        ("c3", c3, ("a", "b", "c")),
        ("b4", b4, ("zero", "d", "e", "one")),
    ]
    parts = [
        "# The logic of distributive lattices with upward-closed designated",
        "# sets, presented by every upset matrix over three small lattices.",
        LATT_SIG,
    ]
    for name, A, names in lattice_algebras:
        parts.append(render_algebra(A, name, "latt", names))
    for name, A, names in lattice_algebras:
        for F in upsets_of_lattice(A):
            parts.append(
                render_matrix(LogicalMatrix(A, F), f"{name}_up_{upset_label(names, F)}", name, names)
            )
    write("dl.matrices", *parts)

    seven = seven_element_system()
    chain_names = ("a", "b", "c")
    square_names = ("zero", "d", "e", "one")
    write(
        "seven_element.system",
        "# A three-element chain embedded into the four-element Boolean",
        "# lattice; its sum is the seven-element matrix in seven_element.matrix.",
        LATT_SIG,
        render_algebra(c3, "c3", "latt", chain_names),
        render_algebra(b4, "b4", "latt", square_names),
        render_matrix(seven.matrices[0], "chain", "c3", chain_names),
        render_matrix(seven.matrices[1], "square", "b4", square_names),
        render_system(
            seven,
            "seven_parts",
            ("chain", "square"),
            index_names=("lo", "hi"),
            element_names=(chain_names, square_names),
        ),
    )

    summed = plonka_sum(seven)
    seven_names = ("a", "b", "c", "zero", "d", "e", "one")
    write(
        "seven_element.matrix",
        "# The seven-element sum matrix itself, ready for decompose/leibniz/suszko.",
        LATT_SIG,
        render_algebra(summed.algebra, "b7", "latt", seven_names),
        render_matrix(summed, "seven", "b7", seven_names),
    )

    eight = eight_fiber_system()
    index_names = ("t1", "t2", "a1", "a2", "a3", "b1", "b2", "top")
    component_names = ["triv", "triv"] + ["l2_top"] * 6
    element_names = [("u",), ("u",)] + [("z", "o")] * 6
    write(
        "eight_fiber.system",
        "# Eight lattice-signature components, two of them trivial; the sum",
        "# stays Suszko-reduced for the companion of the lattice logic.",
        LATT_SIG,
        render_algebra(eight.matrices[0].algebra, "one_elt", "latt", ("u",)),
        render_algebra(l2, "l2", "latt", ("z", "o")),
        render_matrix(eight.matrices[0], "triv", "one_elt", ("u",)),
        render_matrix(eight.matrices[2], "l2_top", "l2", ("z", "o")),
        render_system(
            eight,
            "eight_fibers",
            component_names,
            index_names=index_names,
            element_names=element_names,
        ),
    )

    write(
        "cl.hilbert",
        "# A six-axiom classical calculus with detachment.",
        BOOL_SIG,
        render_calculus(cl_calculus(), "cl", "bool"),
    )
    write(
        "pwk.hilbert",
        "# The transformed calculus for the left companion of classical logic.",
        BOOL_SIG,
        render_calculus(pwk_calculus(), "pwk", "bool"),
    )

    pwk = pwk_calculus()
    sig = pwk.signature
    premises = [parse_term("p", sig), parse_term("or(not(p), q)", sig)]
    goal = parse_term("and(q, or(q, and(p, or(p, or(not(p), q)))))", sig)
    found = bounded_prove(pwk, premises, goal, DEFAULT)
    path = FIXTURES / "detachment.cert"
    path.write_text(found.render() + "\n", encoding="utf-8")
    print(f"wrote {path.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
