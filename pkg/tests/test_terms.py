"""Terms: parsing, rendering, substitution, and partition-term validation."""

import pytest
from hypothesis import given, strategies as st

from plonka.terms import (
    Application,
    PartitionTerm,
    Signature,
    TermSyntaxError,
    Variable,
    enumerate_terms,
    fresh_variable,
    parse_context,
    parse_term,
    partition_identity_pairs,
    replace_at,
    substitute,
    subterms,
    term_depth,
    to_text,
    validate_term,
    vars_of,
)

BOOL = Signature([("and", 2), ("or", 2), ("not", 1)])
DOT = Signature([("dot", 2)])


def terms_over(sig: Signature, max_depth: int = 3):
    variables = st.sampled_from(["x", "y", "z"]).map(Variable)

    def extend(children):
        ops = [
            st.builds(lambda *args, name=name: Application(name, list(args)), *([children] * arity))
            for name, arity in sig.operations
            if arity > 0
        ]
        return st.one_of(*ops)

    return st.recursive(variables, extend, max_leaves=2**max_depth)


class TestParsing:
    def test_round_trip_examples(self):
        for text in ("x", "not(x)", "and(x, or(x, y))", "or(not(and(x, y)), z)"):
            assert to_text(parse_term(text, BOOL)) == text

    @given(terms_over(BOOL))
    def test_round_trip_random(self, t):
        assert parse_term(to_text(t), BOOL) == t

    def test_whitespace_is_free(self):
        assert parse_term(" and( x ,or(x,  y) ) ", BOOL) == parse_term(
            "and(x, or(x, y))", BOOL
        )

    def test_unknown_operation(self):
        with pytest.raises(TermSyntaxError):
            parse_term("xor(x, y)", BOOL)

    def test_wrong_arity(self):
        with pytest.raises(TermSyntaxError):
            parse_term("and(x)", BOOL)

    def test_operation_used_as_variable(self):
        with pytest.raises(TermSyntaxError):
            parse_term("and", BOOL)

    def test_error_cites_position(self):
        with pytest.raises(TermSyntaxError) as err:
            parse_term("and(x, !)", BOOL)
        assert "column" in str(err.value) or ":" in str(err.value)

    def test_context_hole(self):
        ctx = parse_context("and(_, y)", BOOL)
        holes = [p for p, s in subterms(ctx) if s == Variable("_")]
        assert holes == [(0,)]

    def test_validate_rejects_foreign_operation(self):
        t = parse_term("dot(x, y)", DOT)
        with pytest.raises(ValueError):
            validate_term(t, BOOL)


class TestManipulation:
    def test_vars_of(self):
        t = parse_term("and(x, or(y, not(x)))", BOOL)
        assert vars_of(t) == frozenset({"x", "y"})
        assert vars_of([t, parse_term("z", BOOL)]) == frozenset({"x", "y", "z"})

    def test_substitute_is_simultaneous(self):
        t = parse_term("and(x, y)", BOOL)
        swapped = substitute(t, {"x": Variable("y"), "y": Variable("x")})
        assert swapped == parse_term("and(y, x)", BOOL)

    def test_substitute_leaves_unmapped_variables(self):
        t = parse_term("or(x, z)", BOOL)
        assert substitute(t, {"x": parse_term("not(y)", BOOL)}) == parse_term(
            "or(not(y), z)", BOOL
        )

    def test_term_depth(self):
        assert term_depth(Variable("x")) == 0
        assert term_depth(parse_term("and(x, or(x, y))", BOOL)) == 2

    def test_subterms_paths(self):
        t = parse_term("and(x, or(y, z))", BOOL)
        table = dict(subterms(t))
        assert table[()] == t
        assert table[(0,)] == Variable("x")
        assert table[(1, 1)] == Variable("z")

    def test_replace_at(self):
        t = parse_term("and(x, or(y, z))", BOOL)
        assert replace_at(t, (1, 0), Variable("x")) == parse_term(
            "and(x, or(x, z))", BOOL
        )

    @given(terms_over(BOOL))
    def test_replace_at_round_trip(self, t):
        for path, s in subterms(t):
            assert replace_at(t, path, s) == t

    def test_fresh_variable_avoids_taken(self):
        name = fresh_variable({"w", "w0", "w1"})
        assert name not in {"w", "w0", "w1"}


class TestEnumeration:
    def test_depth_one_count(self):
        # 2 variables, 2 negations, 4 conjunctions, 4 disjunctions
        assert len(enumerate_terms(BOOL, ("x", "y"), 1)) == 12

    def test_depth_two_count_frozen(self):
        terms = enumerate_terms(BOOL, ("x", "y"), 2)
        assert len(terms) == 302
        assert len(set(terms)) == 302
        assert all(term_depth(t) <= 2 for t in terms)

    def test_single_variable(self):
        terms = enumerate_terms(DOT, ("x",), 2)
        # x, dot(x,x), dot(x,dot(x,x)), dot(dot(x,x),x), dot(dot(x,x),dot(x,x))
        assert len(terms) == 5


class TestPartitionTerms:
    def test_parse_and_apply(self):
        t = PartitionTerm.parse("and(x, or(x, y))", BOOL)
        applied = t.apply(Variable("p"), parse_term("not(q)", BOOL))
        assert applied == parse_term("and(p, or(p, not(q)))", BOOL)

    def test_requires_both_variables(self):
        with pytest.raises(ValueError):
            PartitionTerm.parse("and(x, x)", BOOL)

    def test_requires_only_those_variables(self):
        with pytest.raises(ValueError):
            PartitionTerm.parse("and(x, or(y, z))", BOOL)

    def test_identity_family_labels(self):
        labels = [label for label, _, _ in partition_identity_pairs(BOOL, PartitionTerm.parse("and(x, or(x, y))", BOOL))]
        assert labels == [
            "P1",
            "P2",
            "P3",
            "P4.and",
            "P5.and",
            "P4.or",
            "P5.or",
            "P4.not",
            "P5.not",
        ]

    def test_identity_shapes(self):
        t = PartitionTerm.parse("dot(x, y)", DOT)
        pairs = {label: (lhs, rhs) for label, lhs, rhs in partition_identity_pairs(DOT, t)}
        assert pairs["P1"][0] == parse_term("dot(a, a)", DOT)
        assert pairs["P1"][1] == parse_term("a", DOT)
        assert to_text(pairs["P2"][0]) == "dot(a, dot(b, c))"
        assert to_text(pairs["P2"][1]) == "dot(dot(a, b), c)"
        assert to_text(pairs["P3"][1]) == "dot(a, dot(c, b))"
