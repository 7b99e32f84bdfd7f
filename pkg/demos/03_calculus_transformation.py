#!/usr/bin/env python3
"""From a Hilbert calculus to its companion calculus, with certificates.

The transformation keeps axioms, wraps each proper rule's conclusion in the
partition term so that conclusions remember their premises' variables, adds
the introduction rule, and attaches the partition identities as rewrite
schemes.  Derivations found by the bounded search are emitted as certificates
that replay step by step.

Run as: python3 demos/03_calculus_transformation.py
"""

from plonka.calculi import (
    Derivation,
    Step,
    absorption_partition,
    bounded_prove,
    check_derivation,
    cl_calculus,
    pwk_calculus,
    same_calculus_up_to_renaming,
    transform_left,
)
from plonka.fixtures import boolean_signature
from plonka.matrices import UNKNOWN
from plonka.terms import parse_term, to_text


def term(text: str):
    return parse_term(text, boolean_signature())


def main() -> None:
    base = cl_calculus()
    print("Classical calculus:")
    for r in base.rules:
        if r.is_axiom:
            print(f"  axiom {r.name}: {to_text(r.conclusion)}")
        else:
            premises = ", ".join(to_text(p) for p in r.premises)
            print(f"  rule {r.name}: {premises} |- {to_text(r.conclusion)}")

    t = absorption_partition()
    derived = transform_left(base, t)
    print()
    print(f"Transforming along t(x, y) = {to_text(t.term)}:")
    mp = derived.rule("MP")
    print(f"  MP's conclusion becomes {to_text(mp.conclusion)}")
    print(f"  plus the introduction rule inc: x |- {to_text(t.apply(term('x'), term('y')))}")
    print(f"  plus {len(derived.scheme_members())} identity rewrite schemes in 5 families")
    print(f"  equal to the hand-written companion calculus: "
          f"{same_calculus_up_to_renaming(derived, pwk_calculus())}")

    print()
    H = pwk_calculus()
    p, imp = term("p"), term("or(not(p), q)")
    goal = t.apply(term("q"), t.apply(p, imp))
    print(f"Proving the wrapped detachment {to_text(goal)}")
    print(f"from premises {to_text(p)} and {to_text(imp)}:")
    proof = bounded_prove(H, [p, imp], goal)
    assert proof is not UNKNOWN
    print()
    print(proof.render())
    verdict = check_derivation(H, proof)
    print(f"  replay: {'accepted' if verdict else 'rejected'}")

    print()
    print("Tampering with the last step breaks the replay:")
    steps = list(proof.steps)
    steps[-1] = Step(term("q"), steps[-1].justification)
    verdict = check_derivation(H, Derivation(proof.hypotheses, steps))
    print(f"  rejected at step {verdict.failing_step}: {verdict.message}")

    print()
    print("The bounded search never bluffs. Asked for a bare classical theorem")
    print("it cannot reach within bounds, it answers UNKNOWN instead of no:")
    outcome = bounded_prove(H, [], term("or(not(p), p)"))
    print(f"  |- or(not(p), p): {'UNKNOWN' if outcome is UNKNOWN else 'found'}")


if __name__ == "__main__":
    main()
