"""Directed systems, Plonka sums, and decomposition round trips."""

import itertools

import pytest

from plonka.algebras import FiniteAlgebra, Homomorphism
from plonka.calculi import absorption_partition
from plonka.fixtures import (
    b2_matrix,
    boolean_signature,
    eight_fiber_system,
    l2_algebra,
    l2_matrix,
    lattice_signature,
    seven_element_names,
    seven_element_system,
    small_semilattices,
    wk3_matrix,
)
from plonka.matrices import LogicalMatrix, lift_one
from plonka.sums import (
    DirectedSystem,
    JoinSemilattice,
    algebra_fibration,
    chain_semilattice,
    decompose,
    isomorphic_matrices,
    isomorphic_systems,
    matrix_isomorphisms,
    one_lift,
    plonka_sum,
    sum_offsets,
    trivial_matrix,
    upset_union,
)


class TestJoinSemilattice:
    def test_chain_joins_are_maxima(self):
        s = chain_semilattice(4)
        for i in range(4):
            for j in range(4):
                assert s.join(i, j) == max(i, j)
                assert s.leq(i, j) == (i <= j)

    def test_table_length_checked(self):
        with pytest.raises(ValueError):
            JoinSemilattice(2, [0, 1, 1])

    def test_values_stay_in_carrier(self):
        with pytest.raises(ValueError):
            JoinSemilattice(2, [0, 1, 1, 2])

    def test_idempotence_checked(self):
        with pytest.raises(ValueError, match="idempotent"):
            JoinSemilattice(2, [1, 1, 1, 1])

    def test_commutativity_checked(self):
        with pytest.raises(ValueError, match="commutative"):
            JoinSemilattice(2, [0, 0, 1, 1])

    def test_associativity_checked(self):
        # x + y = y except on the diagonal: commutative, idempotent, not associative
        with pytest.raises(ValueError, match="associative"):
            JoinSemilattice(3, [0, 2, 1, 2, 1, 0, 1, 0, 2])

    def test_chain_upsets(self):
        assert set(chain_semilattice(3).upsets()) == {
            frozenset(),
            frozenset({2}),
            frozenset({1, 2}),
            frozenset({0, 1, 2}),
        }

    def test_vee_upsets_exclude_single_atoms_with_missing_top(self):
        vee = [s for s in small_semilattices(3) if s.size == 3 and s != chain_semilattice(3)]
        assert len(vee) == 1
        ups = set(vee[0].upsets())
        assert frozenset({0}) not in ups and frozenset({1}) not in ups
        assert len(ups) == 5


class TestDirectedSystemValidation:
    def test_component_count(self):
        with pytest.raises(ValueError, match="one matrix per"):
            DirectedSystem(chain_semilattice(2), [l2_matrix()], {})

    def test_shared_signature(self):
        with pytest.raises(ValueError, match="share a signature"):
            DirectedSystem(chain_semilattice(2), [b2_matrix(), l2_matrix()], {})

    def test_translations_go_upward(self):
        down = Homomorphism.identity(l2_algebra())
        with pytest.raises(ValueError, match="non-increasing"):
            DirectedSystem(
                chain_semilattice(2), [l2_matrix(), l2_matrix()], {(1, 0): down}
            )

    def test_self_translation_must_be_identity(self):
        full = LogicalMatrix(l2_algebra(), {0, 1})
        swap = Homomorphism(l2_algebra(), l2_algebra(), [1, 0])
        with pytest.raises(ValueError, match="must be the identity"):
            DirectedSystem(chain_semilattice(1), [full], {(0, 0): swap})

    def test_endpoint_algebras_checked(self):
        stray = Homomorphism(b2_matrix().algebra, b2_matrix().algebra, [0, 1])
        with pytest.raises(ValueError, match="wrong algebras"):
            DirectedSystem(
                chain_semilattice(2), [l2_matrix(), l2_matrix()], {(0, 1): stray}
            )

    def test_translations_must_be_homomorphisms(self):
        full = LogicalMatrix(l2_algebra(), {0, 1})
        swap = Homomorphism(l2_algebra(), l2_algebra(), [1, 0])
        with pytest.raises(ValueError, match="not a homomorphism"):
            DirectedSystem(chain_semilattice(2), [l2_matrix(), full], {(0, 1): swap})

    def test_designation_preserved_upward(self):
        off = LogicalMatrix(l2_algebra(), {0})
        up = Homomorphism.identity(l2_algebra())
        with pytest.raises(ValueError, match="preserve designation"):
            DirectedSystem(chain_semilattice(2), [l2_matrix(), off], {(0, 1): up})

    def test_coherence_across_paths(self):
        ident = Homomorphism.identity(l2_algebra())
        to_top = Homomorphism(l2_algebra(), l2_algebra(), [1, 1])
        with pytest.raises(ValueError, match="not coherent"):
            DirectedSystem(
                chain_semilattice(3),
                [l2_matrix()] * 3,
                {(0, 1): ident, (1, 2): ident, (0, 2): to_top},
            )

    def test_missing_translations_are_reported(self):
        with pytest.raises(ValueError, match="missing and underivable"):
            DirectedSystem(chain_semilattice(2), [l2_matrix(), l2_matrix()], {})

    def test_gaps_filled_by_composition(self):
        ident = Homomorphism.identity(l2_algebra())
        system = DirectedSystem(
            chain_semilattice(3),
            [l2_matrix()] * 3,
            {(0, 1): ident, (1, 2): ident},
        )
        assert system.hom(0, 2).mapping == (0, 1)
        assert system.hom(1, 1).mapping == (0, 1)


class TestSumConstruction:
    def test_trivial_matrix_shape(self):
        t = trivial_matrix(boolean_signature())
        assert t.algebra.size == 1
        assert t.designated == frozenset({0})
        assert t.algebra.op("and", 0, 0) == 0

    def test_one_lift_layout(self):
        system = one_lift(b2_matrix())
        assert system.semilattice == chain_semilattice(2)
        assert system.matrices[1].algebra.size == 1
        assert system.hom(0, 1).mapping == (0, 0)

    def test_one_lift_sum_is_the_direct_lift(self):
        assert plonka_sum(one_lift(wk3_matrix())) == lift_one(wk3_matrix())

    def test_offsets(self):
        assert sum_offsets(seven_element_system()) == (0, 3)
        assert sum_offsets(eight_fiber_system()) == (0, 1, 2, 4, 6, 8, 10, 12)

    def test_seven_element_sum_frozen(self):
        m = plonka_sum(seven_element_system())
        n = seven_element_names()
        assert m.algebra.size == 7
        assert m.designated == frozenset({n[k] for k in ("b", "c", "d", "e", "one")})
        # the two appendix meets: one leaves the designated set, one stays
        assert m.algebra.op("and", n["b"], n["e"]) == n["zero"]
        assert m.algebra.op("and", n["c"], n["e"]) == n["e"]
        # arguments are pushed into the join fiber before evaluating
        assert m.algebra.op("and", n["d"], n["b"]) == n["d"]
        assert m.algebra.op("or", n["a"], n["e"]) == n["e"]

    def test_components_embed_as_subalgebras(self):
        system = seven_element_system()
        m = plonka_sum(system)
        offsets = sum_offsets(system)
        for i, comp in enumerate(system.matrices):
            for name, arity in comp.algebra.sig.operations:
                for args in itertools.product(range(comp.algebra.size), repeat=arity):
                    local = comp.algebra.op(name, *args)
                    shifted = [offsets[i] + a for a in args]
                    assert m.algebra.op(name, *shifted) == offsets[i] + local

    def test_upset_union(self):
        system = seven_element_system()
        assert upset_union(system, set()) == frozenset({1, 2, 4, 5, 6})
        assert upset_union(system, {1}) == frozenset({1, 2, 3, 4, 5, 6})
        assert upset_union(system, {0, 1}) == frozenset(range(7))


class TestFibration:
    def test_non_partition_term_is_rejected(self):
        from plonka.terms import PartitionTerm, parse_term

        join = PartitionTerm(parse_term("or(x, y)", boolean_signature()))
        assert algebra_fibration(b2_matrix().algebra, join) is None

    def test_result_is_cached(self):
        A = plonka_sum(seven_element_system()).algebra
        t = absorption_partition()
        assert algebra_fibration(A, t) is algebra_fibration(A, t)

    def test_directly_indecomposable_base(self):
        # B2 absorbs into a single fiber: a one-component decomposition
        fib = algebra_fibration(b2_matrix().algebra, absorption_partition())
        assert fib is not None
        assert len(fib.fibers) == 1

    def test_seven_element_fibers(self):
        A = plonka_sum(seven_element_system()).algebra
        fib = algebra_fibration(A, absorption_partition())
        assert fib is not None
        assert sorted(sorted(f.members) for f in fib.fibers) == [[0, 1, 2], [3, 4, 5, 6]]


class TestDecomposition:
    def test_seven_element_round_trip(self):
        system = seven_element_system()
        back = decompose(plonka_sum(system), absorption_partition())
        assert isomorphic_systems(system, back)

    def test_eight_fiber_round_trip(self):
        system = eight_fiber_system()
        back = decompose(plonka_sum(system), absorption_partition())
        assert back.semilattice.size == 8
        assert isomorphic_systems(system, back)

    def test_sum_of_decomposition_restores_the_matrix(self):
        m = plonka_sum(seven_element_system())
        again = plonka_sum(decompose(m, absorption_partition()))
        assert isomorphic_matrices(m, again)

    def test_rejects_non_sums(self):
        from plonka.terms import PartitionTerm, parse_term

        join = PartitionTerm(parse_term("or(x, y)", boolean_signature()))
        with pytest.raises(ValueError, match="does not decompose"):
            decompose(b2_matrix(), join)


class TestIsomorphism:
    def test_identity_is_found(self):
        assert matrix_isomorphisms(b2_matrix(), b2_matrix()) == [(0, 1)]

    def test_relabelled_matrix(self):
        A = b2_matrix().algebra
        swapped = FiniteAlgebra(
            A.sig,
            2,
            {
                "and": [1 - A.op("and", 1 - a, 1 - b) for a in (0, 1) for b in (0, 1)],
                "or": [1 - A.op("or", 1 - a, 1 - b) for a in (0, 1) for b in (0, 1)],
                "not": [1 - A.op("not", 1 - a) for a in (0, 1)],
            },
        )
        m = LogicalMatrix(swapped, {0})
        assert matrix_isomorphisms(b2_matrix(), m) == [(1, 0)]

    def test_designation_must_match(self):
        assert not isomorphic_matrices(l2_matrix(), LogicalMatrix(l2_algebra(), {0}))

    def test_size_mismatch(self):
        assert not isomorphic_matrices(b2_matrix(), wk3_matrix())

    def test_systems_with_different_components_differ(self):
        assert not isomorphic_systems(one_lift(b2_matrix()), one_lift(wk3_matrix()))

    def test_systems_match_up_to_index_relabelling(self):
        # same shape presented with the two chain indices exchanged
        top = trivial_matrix(lattice_signature())
        flipped = DirectedSystem(
            JoinSemilattice(2, [0, 0, 0, 1]),
            [top, l2_matrix()],
            {(1, 0): Homomorphism(l2_algebra(), top.algebra, [0, 0])},
        )
        assert isomorphic_systems(one_lift(l2_matrix()), flipped)
