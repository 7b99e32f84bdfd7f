"""Leibniz-hierarchy witnesses and the structural reducedness criteria."""

import pytest

from plonka.calculi import cl_calculus, pwk_calculus
from plonka.fixtures import (
    b2_matrix,
    boolean_signature,
    cl_presentation,
    dl_upset_presentation,
    eight_fiber_system,
    l2_matrix,
    lattice_signature,
    pwk_presentation,
    seven_element_system,
    wk3_matrix,
)
from plonka.algebras import Homomorphism
from plonka.hierarchy import (
    InconsistencySet,
    ProtoWitness,
    TruthWitness,
    at_most_one_trivial,
    check_equivalential_witness,
    check_inconsistency_set,
    check_proto_witness,
    check_truth_witness,
    inconsistency_terms_refuter,
    proto_refutation_sample,
    suszko_reduced_condition,
)
from plonka.matrices import UNKNOWN, ByCalculus, LogicalMatrix
from plonka.sums import DirectedSystem, chain_semilattice, one_lift, trivial_matrix
from plonka.terms import parse_term

SIG = boolean_signature()


def term(text: str):
    return parse_term(text, SIG)


def trivial_below_l2() -> DirectedSystem:
    top = l2_matrix()
    bottom = trivial_matrix(lattice_signature())
    up = Homomorphism(bottom.algebra, top.algebra, [1])
    return DirectedSystem(chain_semilattice(2), [bottom, top], {(0, 1): up})


class TestStructuralCriteria:
    def test_systems_without_trivial_components_pass(self):
        assert suszko_reduced_condition(seven_element_system())

    def test_trivial_top_passes(self):
        assert suszko_reduced_condition(one_lift(b2_matrix()))

    def test_trivial_bottom_fails(self):
        assert not suszko_reduced_condition(trivial_below_l2())

    def test_two_trivial_fibers_can_still_pass(self):
        # the failing index pairs are dodged sideways in the eight-element
        # shape, so the sum stays reduced with two trivial components
        assert suszko_reduced_condition(eight_fiber_system())
        assert not at_most_one_trivial(eight_fiber_system())

    def test_single_trivial_counter(self):
        assert at_most_one_trivial(one_lift(b2_matrix()))
        assert at_most_one_trivial(seven_element_system())


class TestProtoalgebraicity:
    def test_companion_sample_refutes_every_candidate(self):
        report = proto_refutation_sample(pwk_presentation())
        assert report.all_failed
        assert report.witnesses == ()
        assert report.base_consistent

    def test_classical_control_keeps_the_implication(self):
        report = proto_refutation_sample(cl_presentation())
        assert not report.all_failed
        assert any(
            set(w) == {term("or(not(x), y)")} for w in report.witnesses
        )

    def test_sample_counts_add_up(self):
        report = proto_refutation_sample(pwk_presentation())
        assert report.failing == report.total
        assert report.total > 100

    def test_sample_needs_matrices(self):
        with pytest.raises(TypeError):
            proto_refutation_sample(ByCalculus(cl_calculus()))

    def test_witness_variables_are_restricted(self):
        with pytest.raises(ValueError):
            ProtoWitness([term("or(x, z)")])

    def test_implication_witnesses_classical_logic(self):
        w = ProtoWitness([term("or(not(x), y)")])
        assert check_proto_witness(cl_presentation(), w) is True

    def test_implication_fails_for_the_companion(self):
        w = ProtoWitness([term("or(not(x), y)")])
        assert check_proto_witness(pwk_presentation(), w) is False

    def test_empty_witness_fails_for_consistent_logics(self):
        assert check_proto_witness(cl_presentation(), ProtoWitness([])) is False

    def test_calculus_route_is_honest(self):
        w = ProtoWitness([term("or(not(x), y)")])
        verdict = check_proto_witness(ByCalculus(cl_calculus()), w)
        assert verdict in (True, UNKNOWN)
        assert verdict is not False


class TestTruthEquationality:
    def test_excluded_middle_defines_truth_on_the_companion_model(self):
        w = TruthWitness([(term("x"), term("or(x, not(x))"))])
        assert check_truth_witness(pwk_presentation(), w, [wk3_matrix()])

    def test_always_satisfied_equations_fail(self):
        w = TruthWitness([(term("x"), term("x"))])
        assert not check_truth_witness(pwk_presentation(), w, [wk3_matrix()])

    def test_models_must_be_models(self):
        w = TruthWitness([(term("x"), term("or(x, not(x))"))])
        with pytest.raises(ValueError, match="not a model"):
            check_truth_witness(
                pwk_presentation(), w, [LogicalMatrix(wk3_matrix().algebra, {1})]
            )

    def test_models_must_be_reduced(self):
        from plonka.fixtures import chain_algebra

        lhs = parse_term("x", lattice_signature())
        rhs = parse_term("and(x, x)", lattice_signature())
        with pytest.raises(ValueError, match="reduced"):
            check_truth_witness(
                dl_upset_presentation(),
                TruthWitness([(lhs, rhs)]),
                [LogicalMatrix(chain_algebra(3), {1, 2})],
            )

    def test_equation_variables_are_restricted(self):
        with pytest.raises(ValueError):
            TruthWitness([(term("x"), term("or(x, y)"))])


class TestEquivalentiality:
    def test_biconditional_defines_leibniz_classically(self):
        delta = [term("or(not(x), y)"), term("or(not(y), x)")]
        assert check_equivalential_witness(cl_presentation(), delta, [b2_matrix()])

    def test_biconditional_fails_for_the_companion(self):
        delta = [term("or(not(x), y)"), term("or(not(y), x)")]
        assert not check_equivalential_witness(pwk_presentation(), delta, [wk3_matrix()])

    def test_witness_variables_are_restricted(self):
        with pytest.raises(ValueError):
            check_equivalential_witness(cl_presentation(), [term("z")], [b2_matrix()])


class TestInconsistencyTerms:
    def test_contradiction_is_classically_inconsistent(self):
        S = InconsistencySet([term("and(x, not(x))")])
        assert check_inconsistency_set(cl_presentation(), S) is True

    def test_companion_defuses_the_contradiction(self):
        S = InconsistencySet([term("and(x, not(x))")])
        assert check_inconsistency_set(pwk_presentation(), S) is False

    def test_calculus_route_is_honest(self):
        S = InconsistencySet([term("and(x, not(x))")])
        verdict = check_inconsistency_set(ByCalculus(cl_calculus()), S)
        assert verdict in (True, UNKNOWN)
        assert verdict is not False
        assert check_inconsistency_set(ByCalculus(pwk_calculus()), S) in (True, UNKNOWN)

    def test_set_must_be_nonempty_and_unary(self):
        with pytest.raises(ValueError):
            InconsistencySet([])
        with pytest.raises(ValueError):
            InconsistencySet([term("and(x, y)")])

    def test_refuter_spots_trivial_submatrices(self):
        assert not inconsistency_terms_refuter(pwk_presentation(), [wk3_matrix()])
        assert inconsistency_terms_refuter(cl_presentation(), [b2_matrix()])
        assert inconsistency_terms_refuter(
            pwk_presentation(), [trivial_matrix(SIG)]
        )
