#!/usr/bin/env python3
"""A tour of left variable inclusion companions.

The companion of a logic keeps an entailment only when the joint premises
fit inside the conclusion's variables: premises mentioning anything else are
set aside.  Classical explosion is the standard casualty, which is why the
companion of classical logic is paraconsistent.

Run as: python3 demos/01_companion_basics.py
"""

from plonka.fixtures import boolean_signature, cl_presentation, pwk_presentation
from plonka.matrices import companion_entails, entails
from plonka.terms import parse_term, to_text, vars_of

SIG = boolean_signature()


def term(text: str):
    return parse_term(text, SIG)


def show(label: str, outcome) -> None:
    print(f"  {label}: {'holds' if outcome else 'fails'}")
    if not outcome and outcome.valuation is not None:
        pairs = ", ".join(f"{v}={a}" for v, a in sorted(outcome.valuation.items()))
        print(f"    countermodel values: {pairs}")


def main() -> None:
    cl = cl_presentation()

    print("Classical logic, presented by its two-element matrix:")
    show("x, not(x) |- y   (explosion)", entails(cl, [term("x"), term("not(x)")], term("y")))
    show("x, or(not(x), y) |- y   (detachment)",
         entails(cl, [term("x"), term("or(not(x), y)")], term("y")))

    print()
    print("The companion keeps a premise only when its variables fit the goal:")
    out = companion_entails(cl, [term("x"), term("not(x)")], term("y"))
    show("x, not(x) |-l y", out)
    kept = ", ".join(to_text(p) for p in out.premises_used) or "(none)"
    print(f"    admissible premises: {kept}")
    print("    both premises mention x, the goal only y, so nothing survives")

    print()
    print("Premises inside the goal's variables still do their work:")
    out = companion_entails(
        cl, [term("y"), term("and(x, not(x))")], term("or(y, y)")
    )
    show("y, and(x, not(x)) |-l or(y, y)", out)
    kept = ", ".join(to_text(p) for p in out.premises_used)
    print(f"    admissible premises: {kept}")

    print()
    print("Theorems are untouched; variable inclusion binds premises only:")
    show("|-l or(x, not(x))", companion_entails(cl, [], term("or(x, not(x))")))
    show("|-l and(x, not(x))", companion_entails(cl, [], term("and(x, not(x))")))

    print()
    print("The same consequence falls out of a one-point matrix lift, where a")
    print("fresh absorbing designated element soaks up off-variable premises:")
    lifted = pwk_presentation()
    samples = [
        ([], "or(x, not(x))"),
        (["x"], "or(x, y)"),
        (["x", "y"], "and(x, y)"),
        (["x", "not(x)"], "y"),
        (["x", "not(x)"], "and(x, not(x))"),
        (["and(x, y)"], "x"),
    ]
    agree = True
    for premises, goal in samples:
        p = [term(s) for s in premises]
        via_selection = bool(companion_entails(cl, p, term(goal)))
        via_lift = bool(entails(lifted, p, term(goal)))
        agree = agree and via_selection == via_lift
        left = ", ".join(premises) or "(empty)"
        print(f"  {left} |- {goal}: selection={via_selection} lift={via_lift}")
    print(f"  routes agree on all samples: {agree}")


if __name__ == "__main__":
    main()
