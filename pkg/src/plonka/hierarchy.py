"""Structural conditions on directed systems and Leibniz-hierarchy witness
checks: protoalgebraicity, truth-equationality, equivalentiality, and
inconsistency terms.

Every check that quantifies over models takes an explicit finite model list;
no function here claims anything about all models of a logic.  Calculus-backed
checks may answer UNKNOWN; a failed proof search never counts as a refutation.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .algebras import evaluate
from .bounds import DEFAULT, Bounds
from .matrices import (
    UNKNOWN,
    ByCalculus,
    ByMatrices,
    LogicalMatrix,
    MatrixPresentation,
    entails,
    has_trivial_submatrix,
    is_model,
    leibniz,
)
from .sums import DirectedSystem
from .terms import (
    Term,
    Variable,
    enumerate_terms,
    fresh_variable,
    substitute,
    to_text,
    vars_of,
)


def suszko_reduced_condition(system: DirectedSystem) -> bool:
    """The order-theoretic criterion for the sum being Suszko-reduced.

    For every trivial component at index n and every index i strictly above
    it, some index j above n must avoid i from below (i not below-or-equal j)
    while carrying a non-trivial component.  Purely combinatorial: the
    acceptance scenarios check it against the congruence engines.
    """
    sl = system.semilattice
    for n in range(sl.size):
        if not system.matrices[n].is_trivial:
            continue
        for i in range(sl.size):
            if i == n or not sl.leq(n, i):
                continue
            if not any(
                sl.leq(n, j)
                and not sl.leq(i, j)
                and not system.matrices[j].is_trivial
                for j in range(sl.size)
            ):
                return False
    return True


def at_most_one_trivial(system: DirectedSystem) -> bool:
    """The simplified criterion available when the base logic carries
    inconsistency terms."""
    return sum(1 for m in system.matrices if m.is_trivial) <= 1


# ---------------------------------------------------------------------------
# hierarchy witnesses


class ProtoWitness:
    """A candidate set Delta(x, y) for protoalgebraicity; may be empty."""

    def __init__(self, delta: Iterable[Term]):
        self.delta = tuple(delta)
        extra = vars_of(self.delta) - {"x", "y"}
        if extra:
            raise ValueError(f"witness terms may use only x and y, found {sorted(extra)}")

    def __repr__(self) -> str:
        return f"ProtoWitness({{{', '.join(to_text(t) for t in self.delta)}}})"


class TruthWitness:
    """Candidate defining equations tau(x) for truth-equationality."""

    def __init__(self, equations: Iterable[tuple[Term, Term]]):
        self.equations = tuple(tuple(pair) for pair in equations)
        extra = vars_of(t for pair in self.equations for t in pair) - {"x"}
        if extra:
            raise ValueError(f"equations may use only x, found {sorted(extra)}")

    def __repr__(self) -> str:
        body = ", ".join(f"{to_text(a)} = {to_text(b)}" for a, b in self.equations)
        return f"TruthWitness({{{body}}})"


class InconsistencySet:
    """A candidate inconsistency set Sigma(x); nonempty by definition."""

    def __init__(self, terms: Iterable[Term]):
        self.terms = tuple(terms)
        if not self.terms:
            raise ValueError("an inconsistency set is nonempty")
        extra = vars_of(self.terms) - {"x"}
        if extra:
            raise ValueError(f"inconsistency terms may use only x, found {sorted(extra)}")

    def __repr__(self) -> str:
        return f"InconsistencySet({{{', '.join(to_text(t) for t in self.terms)}}})"


def check_proto_witness(L, w: ProtoWitness, bounds: Bounds = DEFAULT):
    """Does Delta witness protoalgebraicity: the theorems Delta(x, x) and the
    detachment x, Delta(x, y) entail y?

    Exact for matrix presentations; calculus presentations are probed by
    bounded search and may be UNKNOWN.
    """
    x, y = Variable("x"), Variable("y")
    reflexive = [substitute(d, {"y": x}) for d in w.delta]
    if isinstance(L, (ByMatrices, MatrixPresentation)):
        for d in reflexive:
            if not entails(L, [], d):
                return False
        return bool(entails(L, [x, *w.delta], y))
    if isinstance(L, ByCalculus):
        from .calculi import bounded_prove

        for d in reflexive:
            if bounded_prove(L.calculus, [], d, bounds) is UNKNOWN:
                return UNKNOWN
        if bounded_prove(L.calculus, [x, *w.delta], y, bounds) is UNKNOWN:
            return UNKNOWN
        return True
    raise TypeError(f"not a logic presentation: {L!r}")


class ProtoReport:
    """Outcome of an exhaustive protoalgebraicity sample."""

    def __init__(
        self,
        total: int,
        failing: int,
        witnesses: tuple[tuple[Term, ...], ...],
        base_consistent: bool,
        max_depth: int,
        max_size: int,
    ):
        self.total = total
        self.failing = failing
        self.witnesses = witnesses
        self.base_consistent = base_consistent
        self.max_depth = max_depth
        self.max_size = max_size

    @property
    def all_failed(self) -> bool:
        return self.failing == self.total

    def __repr__(self) -> str:
        return (
            f"ProtoReport({self.failing}/{self.total} candidates fail, "
            f"witnesses={len(self.witnesses)}, base_consistent={self.base_consistent})"
        )


def _term_masks(m: LogicalMatrix, terms: Sequence[Term]):
    """Designation bitmasks of each term over all (x, y) valuations, plus the
    diagonal masks of term(x, x) over all x valuations."""
    A, F = m.algebra, m.designated
    n = A.size
    pair_masks = []
    diag_masks = []
    for t in terms:
        mask = 0
        bit = 0
        for vx in range(n):
            for vy in range(n):
                if evaluate(A, t, {"x": vx, "y": vy}) in F:
                    mask |= 1 << bit
                bit += 1
        diag = 0
        for vx in range(n):
            if evaluate(A, t, {"x": vx, "y": vx}) in F:
                diag |= 1 << vx
        pair_masks.append(mask)
        diag_masks.append(diag)
    return pair_masks, diag_masks


def proto_refutation_sample(
    L, max_depth: int = 2, max_size: int = 2, bounds: Bounds = DEFAULT
) -> ProtoReport:
    """Exhaustively test every candidate Delta(x, y) up to the given term
    depth and set size against the protoalgebraicity conditions.

    A corroboration up to bounds, not a proof: the report counts failures and
    collects any surviving witnesses.  The consistency flag reports on the
    base logic when L is a companion presentation (the boundary case of the
    non-protoalgebraicity theorem), else on L itself.
    """
    if not isinstance(L, ByMatrices):
        raise TypeError("the sample needs an exact matrix presentation")
    x, y = Variable("x"), Variable("y")
    fresh = Variable(fresh_variable(["x", "y"]))
    base = ByMatrices(L.companion_of) if L.companion_of is not None else L
    base_consistent = not entails(base, [x], fresh)

    terms = enumerate_terms(L.signature, ["x", "y"], max_depth)
    per_matrix = []
    for m in L.matrices:
        pair_masks, diag_masks = _term_masks(m, [x, y, *terms])
        n = m.algebra.size
        full_diag = (1 << n) - 1
        full_pair = (1 << n * n) - 1
        per_matrix.append((pair_masks, diag_masks, full_diag, full_pair))

    total = 0
    failing = 0
    witnesses = []
    indices = range(len(terms))
    for size in range(max_size + 1):
        for combo in itertools.combinations(indices, size):
            total += 1
            ok = True
            for pair_masks, diag_masks, full_diag, full_pair in per_matrix:
                x_mask, y_mask = pair_masks[0], pair_masks[1]
                diag = full_diag
                premise = x_mask
                for i in combo:
                    diag &= diag_masks[i + 2]
                    premise &= pair_masks[i + 2]
                if diag != full_diag or premise & ~y_mask & full_pair:
                    ok = False
                    break
            if ok:
                witnesses.append(tuple(terms[i] for i in combo))
            else:
                failing += 1
    return ProtoReport(
        total, failing, tuple(witnesses), base_consistent, max_depth, max_size
    )


def check_truth_witness(
    L, w: TruthWitness, models: Iterable[LogicalMatrix], bounds: Bounds = DEFAULT
) -> bool:
    """Do the equations define truth on the listed models: membership in the
    designated set coincides with satisfying every equation pointwise?

    Each listed model must be a Leibniz-reduced model of the logic; both
    halves are recomputed here, not trusted.
    """
    for m in models:
        if not is_model(m, L, bounds):
            raise ValueError(f"{m!r} is not a model of the logic")
        if not leibniz(m.algebra, m.designated, bounds).is_identity():
            raise ValueError(f"{m!r} is not Leibniz-reduced")
        A, F = m.algebra, m.designated
        for a in A.carrier:
            satisfied = all(
                evaluate(A, lhs, {"x": a}) == evaluate(A, rhs, {"x": a})
                for lhs, rhs in w.equations
            )
            if satisfied != (a in F):
                return False
    return True


def check_equivalential_witness(
    L,
    delta: Iterable[Term],
    models: Iterable[LogicalMatrix],
    bounds: Bounds = DEFAULT,
) -> bool:
    """Does Delta(x, y) define the Leibniz congruence elementwise on each
    listed model?"""
    delta = tuple(delta)
    extra = vars_of(delta) - {"x", "y"}
    if extra:
        raise ValueError(f"witness terms may use only x and y, found {sorted(extra)}")
    for m in models:
        if not is_model(m, L, bounds):
            raise ValueError(f"{m!r} is not a model of the logic")
        A, F = m.algebra, m.designated
        omega = leibniz(A, F, bounds)
        for a in A.carrier:
            for b in A.carrier:
                defined = all(
                    evaluate(A, d, {"x": a, "y": b}) in F for d in delta
                )
                if defined != omega.relates(a, b):
                    return False
    return True


def check_inconsistency_set(L, S: InconsistencySet, bounds: Bounds = DEFAULT):
    """Does Sigma(x) entail everything?

    Checked on the generic instance Sigma(x) entails y with y fresh, which is
    equivalent to the substitution-closed definition; see docs/algorithms.md.
    """
    fresh = Variable(fresh_variable(vars_of(S.terms) | {"x"}))
    if isinstance(L, (ByMatrices, MatrixPresentation)):
        return bool(entails(L, S.terms, fresh))
    if isinstance(L, ByCalculus):
        from .calculi import bounded_prove

        found = bounded_prove(L.calculus, S.terms, fresh, bounds)
        return True if found is not UNKNOWN else UNKNOWN
    raise TypeError(f"not a logic presentation: {L!r}")


def inconsistency_terms_refuter(L, models: Iterable[LogicalMatrix]) -> bool:
    """Can the logic still have inconsistency terms, judging by the listed
    models?

    False when some non-trivial listed model contains a trivial submatrix
    (which rules inconsistency terms out); True means merely "not refuted".
    """
    for m in models:
        if not m.is_trivial and has_trivial_submatrix(m):
            return False
    return True
