"""Logical matrices, consequence engines, filters, and congruences.

A logic is presented either by a finite set of finite matrices (consequence
decided exhaustively over valuations) or by a Hilbert calculus (derivability
is only semi-decidable, so calculus-backed questions may answer UNKNOWN; an
UNKNOWN is never coerced to a boolean).

The left variable inclusion companion of a matrix-presented logic is again
matrix-presented: lift every matrix by a single absorbing designated element.
That reduction, the canonical-variable product construction behind
:func:`is_filter`, and the fiberwise filter characterization used on Plonka
sums are derived results; proofs live in docs/algorithms.md and each one is
cross-checked against an independent route in the tests.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .algebras import (
    Congruence,
    FiniteAlgebra,
    evaluate,
    generated_subalgebra,
    meet_congruences,
    unary_polynomial_functions,
)
from .bounds import DEFAULT, Bounds, BoundExceeded
from .terms import PartitionTerm, Signature, Term, Variable, vars_of


class Unknown:
    """Inconclusive answer from a bounded engine; refuses truth testing."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self) -> bool:
        raise TypeError("inconclusive result; test identity against UNKNOWN instead")

    def __repr__(self) -> str:
        return "unknown"


UNKNOWN = Unknown()


class LogicalMatrix:
    """A pair of an algebra and a designated subset of its carrier."""

    def __init__(self, algebra: FiniteAlgebra, designated: Iterable[int]):
        designated = frozenset(int(a) for a in designated)
        for a in designated:
            if not 0 <= a < algebra.size:
                raise ValueError(f"designated element {a} outside the carrier")
        self.algebra = algebra
        self.designated = designated

    @property
    def is_trivial(self) -> bool:
        # trivial means every element is designated, regardless of carrier size
        return len(self.designated) == self.algebra.size

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LogicalMatrix)
            and other.algebra == self.algebra
            and other.designated == self.designated
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.designated))

    def __repr__(self) -> str:
        return f"LogicalMatrix(size={self.algebra.size}, designated={sorted(self.designated)})"


class MatrixPresentation:
    """A nonempty finite list of matrices over a common signature."""

    def __init__(self, matrices: Iterable[LogicalMatrix]):
        matrices = tuple(matrices)
        if not matrices:
            raise ValueError("a presentation needs at least one matrix")
        sig = matrices[0].algebra.sig
        for m in matrices[1:]:
            if m.algebra.sig != sig:
                raise ValueError("presentation matrices must share a signature")
        self.matrices = matrices
        self.signature = sig

    def __iter__(self) -> Iterator[LogicalMatrix]:
        return iter(self.matrices)

    def __len__(self) -> int:
        return len(self.matrices)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MatrixPresentation) and other.matrices == self.matrices

    def __hash__(self) -> int:
        return hash(self.matrices)

    def __repr__(self) -> str:
        return f"MatrixPresentation({len(self.matrices)} matrices)"


class ByMatrices:
    """Logic presentation by matrices.

    When this presentation arose as the companion lift of a base presentation,
    ``companion_of`` records the base and ``partition`` the partition term;
    the filter engines then get a fiberwise fast path on decomposable
    algebras.  Both fields are optional and purely an optimization: the lifted
    matrices alone already present the companion logic exactly.
    """

    def __init__(
        self,
        presentation: MatrixPresentation | Iterable[LogicalMatrix],
        companion_of: "MatrixPresentation | None" = None,
        partition: PartitionTerm | None = None,
    ):
        if not isinstance(presentation, MatrixPresentation):
            presentation = MatrixPresentation(presentation)
        self.presentation = presentation
        self.companion_of = companion_of
        self.partition = partition
        self._fiberwise_ok: bool | None = None

    @property
    def matrices(self) -> tuple[LogicalMatrix, ...]:
        return self.presentation.matrices

    @property
    def signature(self) -> Signature:
        return self.presentation.signature

    def __repr__(self) -> str:
        tag = ", companion" if self.companion_of is not None else ""
        return f"ByMatrices({len(self.matrices)} matrices{tag})"


class ByCalculus:
    """Logic presentation by a Hilbert calculus.

    scheme_depth bounds context instantiation during proof search only; the
    filter check below decides scheme closure exactly, without instantiating.
    """

    def __init__(self, calculus, scheme_depth: int = 2):
        self.calculus = calculus
        self.scheme_depth = scheme_depth

    @property
    def signature(self) -> Signature:
        return self.calculus.signature

    def __repr__(self) -> str:
        return f"ByCalculus({self.calculus!r})"


LogicPresentation = ByMatrices | ByCalculus


def _as_matrices(L: "LogicPresentation | MatrixPresentation") -> MatrixPresentation:
    if isinstance(L, MatrixPresentation):
        return L
    if isinstance(L, ByMatrices):
        return L.presentation
    raise TypeError(f"expected a matrix presentation, got {L!r}")


def all_valuations(variables: Sequence[str], size: int) -> Iterator[dict[str, int]]:
    """Every assignment of the variables into {0..size-1}, in canonical order."""
    variables = sorted(variables)
    for values in itertools.product(range(size), repeat=len(variables)):
        yield dict(zip(variables, values))


class Entailment:
    """Outcome of an exhaustive entailment check, with a counter-valuation."""

    def __init__(
        self,
        holds: bool,
        matrix_index: int | None = None,
        valuation: dict[str, int] | None = None,
        premises_used: tuple[Term, ...] | None = None,
    ):
        self.holds = holds
        self.matrix_index = matrix_index
        self.valuation = valuation
        self.premises_used = premises_used

    def __bool__(self) -> bool:
        return self.holds

    def __repr__(self) -> str:
        if self.holds:
            return "Entailment(holds)"
        return f"Entailment(fails, matrix={self.matrix_index}, valuation={self.valuation})"


def entails(
    M: "MatrixPresentation | ByMatrices",
    premises: Iterable[Term],
    goal: Term,
) -> Entailment:
    """Exhaustive matrix consequence: every valuation designating the premises
    designates the goal, in every matrix of the presentation."""
    M = _as_matrices(M)
    premises = tuple(premises)
    variables = sorted(vars_of(premises) | vars_of(goal))
    for index, m in enumerate(M):
        A, F = m.algebra, m.designated
        for v in all_valuations(variables, A.size):
            if all(evaluate(A, g, v) in F for g in premises):
                if evaluate(A, goal, v) not in F:
                    return Entailment(False, index, v, premises)
    return Entailment(True, premises_used=premises)


def logic_entails(L: LogicPresentation, premises: Iterable[Term], goal: Term):
    """Dispatch on the presentation kind; ByCalculus may answer UNKNOWN."""
    if isinstance(L, (ByMatrices, MatrixPresentation)):
        return entails(L, premises, goal)
    if isinstance(L, ByCalculus):
        from .calculi import bounded_prove  # calculus layer sits above this one

        found = bounded_prove(L.calculus, tuple(premises), goal)
        if found is UNKNOWN:
            return UNKNOWN
        return Entailment(True, premises_used=tuple(premises))
    raise TypeError(f"not a logic presentation: {L!r}")


def companion_entails(L: LogicPresentation, premises: Iterable[Term], goal: Term):
    """Left variable inclusion companion of the logic presented by L.

    Monotonicity of the base consequence collapses the existential over
    premise subsets to the single largest admissible subset
    Dmax = {p : vars(p) subset of vars(goal)}; see docs/algorithms.md.
    """
    goal_vars = vars_of(goal)
    admissible = tuple(p for p in premises if vars_of(p) <= goal_vars)
    return logic_entails(L, admissible, goal)


def lift_one(m: LogicalMatrix) -> LogicalMatrix:
    """Adjoin one absorbing element, designated: the matrix A+1.

    Any operation with the new element among its arguments returns the new
    element; the sums layer independently builds the same matrix as a
    two-chain Plonka sum.
    """
    A = m.algebra
    n = A.size
    tables = {}
    for name, arity in A.sig.operations:
        flat = []
        for args in itertools.product(range(n + 1), repeat=arity):
            if n in args:
                flat.append(n)
            else:
                flat.append(A.op(name, *args))
        tables[name] = flat
    lifted = FiniteAlgebra(A.sig, n + 1, tables)
    return LogicalMatrix(lifted, m.designated | {n})


def companion_presentation(
    M: "MatrixPresentation | ByMatrices",
    partition: PartitionTerm | None = None,
) -> ByMatrices:
    """Matrix presentation of the left companion: lift every matrix by one."""
    M = _as_matrices(M)
    lifted = MatrixPresentation([lift_one(m) for m in M])
    return ByMatrices(lifted, companion_of=M, partition=partition)


# ---------------------------------------------------------------------------
# filters


def _rule_closed(A: FiniteAlgebra, F: frozenset[int], premises, conclusion) -> bool:
    variables = sorted(vars_of(tuple(premises)) | vars_of(conclusion))
    for v in all_valuations(variables, A.size):
        if all(evaluate(A, p, v) in F for p in premises):
            if evaluate(A, conclusion, v) not in F:
                return False
    return True


def _is_filter_calculus(A: FiniteAlgebra, F: frozenset[int], L: ByCalculus, bounds: Bounds) -> bool:
    for rule in L.calculus.rules:
        if not _rule_closed(A, F, rule.premises, rule.conclusion):
            return False
    if L.calculus.context_schemes:
        # closure under every context instance of a scheme pair is equivalent
        # to the pair's values being Leibniz-congruent modulo F, for every
        # valuation; this decides the infinite H4 family exactly
        omega = leibniz(A, F, bounds)
        for family in L.calculus.context_schemes:
            for _, lhs, rhs in family.members:
                variables = sorted(vars_of(lhs) | vars_of(rhs))
                for v in all_valuations(variables, A.size):
                    if not omega.relates(evaluate(A, lhs, v), evaluate(A, rhs, v)):
                        return False
    return True


def _compatible_maps(
    A: FiniteAlgebra, F: frozenset[int], m: LogicalMatrix, bounds: Bounds
) -> list[tuple[int, ...]]:
    """Maps u : A -> B whose graph generates only pairs respecting F -> G."""
    B, G = m.algebra, m.designated
    count = B.size**A.size
    if count > bounds.product_guard:
        raise BoundExceeded(
            f"{count} candidate maps into a matrix of size {B.size} exceed the product guard",
            maps=count,
            matrix_size=B.size,
        )
    out = []
    for u in itertools.product(range(B.size), repeat=A.size):
        pairs = set(zip(range(A.size), u))
        ok = all(q in G for p, q in pairs if p in F)
        frontier = set(pairs)
        while ok and frontier:
            fresh = set()
            snapshot = sorted(pairs)
            for name, arity in A.sig.operations:
                for args in itertools.product(snapshot, repeat=arity):
                    if not any(arg in frontier for arg in args):
                        continue  # all-old combinations were closed in earlier rounds
                    p = A.op(name, *(x for x, _ in args))
                    q = B.op(name, *(y for _, y in args))
                    if (p, q) not in pairs:
                        if p in F and q not in G:
                            ok = False
                            break
                        pairs.add((p, q))
                        fresh.add((p, q))
                if not ok:
                    break
            frontier = fresh
        if ok:
            out.append(u)
    return out


def _is_filter_product(
    A: FiniteAlgebra, F: frozenset[int], L: ByMatrices, bounds: Bounds
) -> bool:
    """Canonical-variable product construction; see docs/algorithms.md.

    F fails to be a filter exactly when some term over one variable per
    element evaluates outside F on A while every compatible map sends it to a
    designated value; such terms are exactly the first coordinates of the
    subalgebra generated below.

    Columns of trivial matrices always pass the designation test, and
    projecting them away commutes with generation, so they are dropped up
    front; the answer is unchanged.
    """
    columns: list[tuple[LogicalMatrix, tuple[int, ...]]] = []
    for m in L.matrices:
        if m.is_trivial:
            continue
        for u in _compatible_maps(A, F, m, bounds):
            columns.append((m, u))
    if all(arity <= 2 for _, arity in A.sig.operations):
        return _product_closure_safe(A, F, columns, bounds)
    return _product_closure_safe_any_arity(A, F, columns, bounds)


def _product_closure_safe_any_arity(
    A: FiniteAlgebra,
    F: frozenset[int],
    columns: list[tuple[LogicalMatrix, tuple[int, ...]]],
    bounds: Bounds,
) -> bool:
    """Reference closure over the column product, one row at a time."""
    generators = [
        (a,) + tuple(u[a] for _, u in columns) for a in range(A.size)
    ]
    seen: set[tuple[int, ...]] = set(generators)

    def violates(row: tuple[int, ...]) -> bool:
        if row[0] in F:
            return False
        return all(q in m.designated for (m, _), q in zip(columns, row[1:]))

    for row in generators:
        if violates(row):
            return False
    algebras = [A] + [m.algebra for m, _ in columns]
    frontier = set(generators)
    while frontier:
        fresh = set()
        snapshot = sorted(seen)
        for name, arity in A.sig.operations:
            for args in itertools.product(snapshot, repeat=arity):
                if not any(arg in frontier for arg in args):
                    continue  # all-old combinations were handled in earlier rounds
                row = tuple(
                    alg.op(name, *(arg[k] for arg in args))
                    for k, alg in enumerate(algebras)
                )
                if row not in seen:
                    if violates(row):
                        return False
                    seen.add(row)
                    fresh.add(row)
                    if len(seen) > bounds.product_guard:
                        raise BoundExceeded(
                            "product construction exceeded the generation guard",
                            generated=len(seen),
                            columns=len(columns),
                        )
        frontier = fresh
    return True


def _product_closure_safe(
    A: FiniteAlgebra,
    F: frozenset[int],
    columns: list[tuple[LogicalMatrix, tuple[int, ...]]],
    bounds: Bounds,
) -> bool:
    """Vectorized closure over the column product for arities up to two.

    Rows are int16 vectors; each round applies every operation to all pairs
    with at least one fresh factor, grouped by column algebra so a whole
    group is one table lookup.  Same rows, same answer as the reference
    closure, just batched.
    """
    width = 1 + len(columns)
    algebras = [A] + [m.algebra for m, _ in columns]
    f_mask = np.zeros(A.size, dtype=bool)
    f_mask[sorted(F)] = True
    if columns:
        largest = max(m.algebra.size for m, _ in columns)
        desig = np.zeros((len(columns), largest), dtype=bool)
        for k, (m, _) in enumerate(columns):
            desig[k, sorted(m.designated)] = True
        col_index = np.arange(len(columns))

    def any_violation(rows: np.ndarray) -> bool:
        outside = ~f_mask[rows[:, 0]]
        if not columns:
            return bool(outside.any())
        all_designated = desig[col_index[None, :], rows[:, 1:]].all(axis=1)
        return bool((outside & all_designated).any())

    by_algebra: dict[FiniteAlgebra, list[int]] = {}
    for k, alg in enumerate(algebras):
        by_algebra.setdefault(alg, []).append(k)
    op_tables = [
        (
            arity,
            [
                (np.asarray(idx), np.asarray(alg.table(name), dtype=np.int16), alg.size)
                for alg, idx in by_algebra.items()
            ],
        )
        for name, arity in A.sig.operations
    ]

    start_rows = [[a] + [u[a] for _, u in columns] for a in range(A.size)]
    for name, arity in A.sig.operations:
        if arity == 0:
            start_rows.append([algebras[k].op(name) for k in range(width)])
    seen: set[bytes] = set()
    fresh: list[np.ndarray] = []

    def absorb(block: np.ndarray) -> None:
        for row in block:
            key = row.tobytes()
            if key not in seen:
                seen.add(key)
                fresh.append(row)
                if len(seen) > bounds.product_guard:
                    raise BoundExceeded(
                        "product construction exceeded the generation guard",
                        generated=len(seen),
                        columns=len(columns),
                    )

    absorb(np.asarray(start_rows, dtype=np.int16))
    frontier = np.asarray(fresh, dtype=np.int16)
    if any_violation(frontier):
        return False
    all_rows = frontier
    chunk = 1 << 15
    while True:
        fresh = []
        for arity, per_group in op_tables:
            if arity == 0:
                continue  # seeded into the generator rows
            if arity == 1:
                image = np.empty_like(frontier)
                for idx, table, _ in per_group:
                    image[:, idx] = table[frontier[:, idx]]
                absorb(image)
                continue
            for lhs, rhs in ((frontier, all_rows), (all_rows, frontier)):
                step = max(1, chunk // max(1, len(rhs)))
                for at in range(0, len(lhs), step):
                    left = np.repeat(lhs[at : at + step], len(rhs), axis=0)
                    right = np.tile(rhs, (len(lhs[at : at + step]), 1))
                    image = np.empty((len(left), width), dtype=np.int16)
                    for idx, table, size in per_group:
                        flat = left[:, idx].astype(np.int32) * size + right[:, idx]
                        image[:, idx] = table[flat]
                    absorb(image)
        if not fresh:
            return True
        frontier = np.asarray(fresh, dtype=np.int16)
        if any_violation(frontier):
            return False
        all_rows = np.concatenate([all_rows, frontier])


def _fiberwise_ready(A: FiniteAlgebra, L: ByMatrices, bounds: Bounds):
    """Try the companion fast path; returns a fibration or None."""
    if L.companion_of is None or L.partition is None:
        return None
    if L._fiberwise_ok is None:
        x, y = Variable("x"), Variable("y")
        L._fiberwise_ok = bool(entails(L.companion_of, [x], L.partition.apply(x, y)))
    if not L._fiberwise_ok:
        return None
    from .sums import algebra_fibration  # sums layer builds on this module

    return algebra_fibration(A, L.partition)


def is_filter(
    A: FiniteAlgebra,
    F: Iterable[int],
    L: LogicPresentation,
    bounds: Bounds = DEFAULT,
) -> bool:
    """Is F a deductive filter of the presented logic on A?

    ByCalculus: exact for finite-rule calculi (closure under every rule
    instance, scheme families decided via the Leibniz graph).  ByMatrices:
    exact via the product construction; companion presentations of
    decomposable algebras take the fiberwise route instead.
    """
    F = frozenset(int(a) for a in F)
    for a in F:
        if not 0 <= a < A.size:
            raise ValueError(f"filter candidate element {a} outside the carrier")
    if isinstance(L, ByCalculus):
        return _is_filter_calculus(A, F, L, bounds)
    L_m = L if isinstance(L, ByMatrices) else ByMatrices(L)
    fibration = _fiberwise_ready(A, L_m, bounds)
    if fibration is not None:
        base = ByMatrices(L_m.companion_of)
        for i, fiber in enumerate(fibration.fibers):
            trace = frozenset(fiber.local_of[a] for a in F if a in fiber.members)
            if not is_filter(fiber.algebra, trace, base, bounds):
                return False
        for (i, j), mapping in fibration.homs.items():
            if i == j:
                continue
            for a in fibration.fibers[i].members:
                if a in F and mapping[a] not in F:
                    return False
        return True
    return _is_filter_product(A, F, L_m, bounds)


class FilterLattice:
    """All deductive filters on one algebra, canonically ordered."""

    def __init__(self, algebra: FiniteAlgebra, filters: Iterable[frozenset[int]]):
        filters = sorted(set(frozenset(f) for f in filters), key=lambda f: (len(f), sorted(f)))
        self.algebra = algebra
        self.filters = tuple(filters)
        full = frozenset(algebra.carrier)
        if full not in self.filters:
            raise ValueError("filter family must contain the full carrier")
        family = set(self.filters)
        for f, g in itertools.combinations(self.filters, 2):
            if f & g not in family:
                raise ValueError("filter family must be closed under intersection")

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.filters)

    def __len__(self) -> int:
        return len(self.filters)

    def __contains__(self, f: object) -> bool:
        return frozenset(f) in set(self.filters)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FilterLattice)
            and other.algebra == self.algebra
            and other.filters == self.filters
        )

    def __repr__(self) -> str:
        return f"FilterLattice({[sorted(f) for f in self.filters]})"


def enumerate_filters(
    A: FiniteAlgebra, L: LogicPresentation, bounds: Bounds = DEFAULT
) -> FilterLattice:
    """All deductive filters on A; subset enumeration under its guard.

    Companion presentations of decomposable algebras are enumerated
    fiberwise (base filters per fiber, then upward hom closure), which keeps
    the larger fixture sums inside the budget.
    """
    cache_key = None
    if isinstance(L, ByMatrices):
        # the lattice is asked for repeatedly (fiberwise enumeration, filter
        # generation, reduction checks), so memoise per presentation; bounds
        # that can change the outcome are part of the key
        cache_key = (
            L.presentation,
            L.companion_of,
            L.partition,
            bounds.max_subsets,
            bounds.product_guard,
        )
        cache = getattr(A, "_filter_lattices", None)
        if cache is None:
            cache = {}
            A._filter_lattices = cache
        if cache_key in cache:
            return cache[cache_key]
    lattice = _enumerate_filters(A, L, bounds)
    if cache_key is not None:
        cache[cache_key] = lattice
    return lattice


def _enumerate_filters(
    A: FiniteAlgebra, L: LogicPresentation, bounds: Bounds
) -> FilterLattice:
    if isinstance(L, ByMatrices):
        fibration = _fiberwise_ready(A, L, bounds)
        if fibration is not None and len(fibration.fibers) > 1:
            base = ByMatrices(L.companion_of)
            per_fiber = [
                enumerate_filters(fiber.algebra, base, bounds).filters
                for fiber in fibration.fibers
            ]
            out = []
            for choice in itertools.product(*per_fiber):
                union = frozenset(
                    fiber.members[local]
                    for fiber, chosen in zip(fibration.fibers, choice)
                    for local in chosen
                )
                ok = True
                for (i, j), mapping in fibration.homs.items():
                    if i == j:
                        continue
                    for a in fibration.fibers[i].members:
                        if a in union and mapping[a] not in union:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    out.append(union)
            return FilterLattice(A, out)
    if 2**A.size > bounds.max_subsets:
        raise BoundExceeded(
            f"2^{A.size} subsets exceed the enumeration bound {bounds.max_subsets}",
            carrier=A.size,
        )
    out = []
    for mask in range(2**A.size):
        F = frozenset(a for a in A.carrier if mask >> a & 1)
        if is_filter(A, F, L, bounds):
            out.append(F)
    return FilterLattice(A, out)


def filter_generated(
    A: FiniteAlgebra, L: LogicPresentation, X: Iterable[int], bounds: Bounds = DEFAULT
) -> frozenset[int]:
    """Least filter containing X: the intersection of all filters above it."""
    X = frozenset(X)
    lattice = enumerate_filters(A, L, bounds)
    above = [f for f in lattice if X <= f]
    out = frozenset(A.carrier)
    for f in above:
        out &= f
    return out


# ---------------------------------------------------------------------------
# congruences of matrices


def leibniz(A: FiniteAlgebra, F: Iterable[int], bounds: Bounds = DEFAULT) -> Congruence:
    """Leibniz congruence: the largest congruence compatible with F.

    Computed by unary-polynomial separation: a and b are related when no
    unary polynomial sends exactly one of them into F.  When the carrier is
    within the oracle bound the result is cross-checked against the
    congruence enumeration, per the module contract.
    """
    F = frozenset(F)
    polys = unary_polynomial_functions(A)
    profile: dict[tuple[bool, ...], list[int]] = {}
    for a in A.carrier:
        profile.setdefault(tuple(p[a] in F for p in polys), []).append(a)
    theta = Congruence(A, profile.values())  # construction re-verifies compatibility
    for block in theta.blocks:
        inside = [a in F for a in block]
        assert all(inside) or not any(inside), "Leibniz blocks must respect F"
    if A.size <= bounds.max_carrier:
        from .algebras import enumerate_congruences

        compatible = [
            c
            for c in enumerate_congruences(A, bounds)
            if all(
                (b in F) == (block[0] in F) for block in c.blocks for b in block
            )
        ]
        assert any(c == theta for c in compatible), "polynomial relation must be compatible"
        assert all(c.refines(theta) for c in compatible), "Leibniz must be the maximum"
    return theta


def suszko(
    A: FiniteAlgebra, F: Iterable[int], L: LogicPresentation, bounds: Bounds = DEFAULT
) -> Congruence:
    """Suszko congruence: meet of Leibniz congruences over all filters above F."""
    F = frozenset(F)
    if not is_filter(A, F, L, bounds):
        raise ValueError("Suszko congruence is defined on filters only")
    lattice = enumerate_filters(A, L, bounds)
    omegas = [leibniz(A, G, bounds) for G in lattice if F <= G]
    return meet_congruences(omegas)


def suszko_via_filter_generation(
    A: FiniteAlgebra, F: Iterable[int], L: LogicPresentation, bounds: Bounds = DEFAULT
) -> Congruence:
    """Independent route to the Suszko congruence through filter generation.

    Relates a and b when Fg(F u {p(a)}) = Fg(F u {p(b)}) for every unary
    polynomial p; used as a cross-check of :func:`suszko`, never the primary
    path.
    """
    F = frozenset(F)
    if not is_filter(A, F, L, bounds):
        raise ValueError("Suszko congruence is defined on filters only")
    lattice = enumerate_filters(A, L, bounds)

    def generated(X: frozenset[int]) -> frozenset[int]:
        out = frozenset(A.carrier)
        for g in lattice:
            if X <= g:
                out &= g
        return out

    polys = unary_polynomial_functions(A)
    profile: dict[tuple[frozenset[int], ...], list[int]] = {}
    for a in A.carrier:
        profile.setdefault(tuple(generated(F | {p[a]}) for p in polys), []).append(a)
    return Congruence(A, profile.values())


def reduce_matrix(m: LogicalMatrix, theta: Congruence) -> LogicalMatrix:
    """Quotient matrix; theta must not split the designated set."""
    from .algebras import quotient

    for block in theta.blocks:
        inside = [a in m.designated for a in block]
        if any(inside) and not all(inside):
            raise ValueError("congruence splits the designated set")
    Q, projection = quotient(m.algebra, theta)
    return LogicalMatrix(Q, {projection(a) for a in m.designated})


def is_model(m: LogicalMatrix, L: LogicPresentation, bounds: Bounds = DEFAULT) -> bool:
    return is_filter(m.algebra, m.designated, L, bounds)


def is_leibniz_reduced(m: LogicalMatrix, bounds: Bounds = DEFAULT) -> bool:
    return leibniz(m.algebra, m.designated, bounds).is_identity()


def is_suszko_reduced(m: LogicalMatrix, L: LogicPresentation, bounds: Bounds = DEFAULT) -> bool:
    return suszko(m.algebra, m.designated, L, bounds).is_identity()


def has_trivial_submatrix(m: LogicalMatrix) -> bool:
    """Does some designated element generate a subalgebra inside the filter?

    Sound and complete: any trivial submatrix contains the subalgebra
    generated by any of its elements.
    """
    return any(
        generated_subalgebra(m.algebra, {a}) <= m.designated for a in sorted(m.designated)
    )


def check_equation_in_K(M: "MatrixPresentation | ByMatrices", lhs: Term, rhs: Term) -> bool:
    """Does every algebra reduct of the presentation satisfy lhs = rhs?

    A sound sufficient condition for the equation holding in all algebras of
    the logic, via the variety generated by the reducts.
    """
    M = _as_matrices(M)
    variables = sorted(vars_of(lhs) | vars_of(rhs))
    for m in M:
        A = m.algebra
        for v in all_valuations(variables, A.size):
            if evaluate(A, lhs, v) != evaluate(A, rhs, v):
                return False
    return True
