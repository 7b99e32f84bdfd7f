"""Shared finite structures: Boolean and weak-Kleene matrices, distributive
lattice fixtures, the two worked sum examples, and seeded generator families
used by the verification scenarios.

Conventions.  Boolean B2 and the two-element lattice L2 use 0 for bottom and
1 for top.  The three-element weak-Kleene algebra adds the contaminating
element as 2.  The four-element Boolean lattice is the square of L2 with the
product encoding (a, b) -> 2a + b, so its atoms are 1 and 2 and its top is 3.
"""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from .algebras import FiniteAlgebra, Homomorphism, direct_product, is_homomorphism
from .matrices import ByMatrices, LogicalMatrix, companion_presentation
from .sums import (
    DirectedSystem,
    JoinSemilattice,
    chain_semilattice,
    trivial_matrix,
)
from .terms import PartitionTerm, Signature


def boolean_signature() -> Signature:
    return Signature([("and", 2), ("or", 2), ("not", 1)])


def lattice_signature() -> Signature:
    return Signature([("and", 2), ("or", 2)])


def dot_signature() -> Signature:
    return Signature([("dot", 2)])


def b2_algebra() -> FiniteAlgebra:
    return FiniteAlgebra(
        boolean_signature(),
        2,
        {"and": [0, 0, 0, 1], "or": [0, 1, 1, 1], "not": [1, 0]},
    )


def b2_matrix() -> LogicalMatrix:
    return LogicalMatrix(b2_algebra(), {1})


def l2_algebra() -> FiniteAlgebra:
    return FiniteAlgebra(lattice_signature(), 2, {"and": [0, 0, 0, 1], "or": [0, 1, 1, 1]})


def l2_matrix() -> LogicalMatrix:
    return LogicalMatrix(l2_algebra(), {1})


def wk3_algebra() -> FiniteAlgebra:
    """Weak Kleene tables: the third element contaminates every operation."""
    tables = {"and": [], "or": [], "not": []}
    for a, b in itertools.product(range(3), repeat=2):
        if 2 in (a, b):
            tables["and"].append(2)
            tables["or"].append(2)
        else:
            tables["and"].append(min(a, b))
            tables["or"].append(max(a, b))
    for a in range(3):
        tables["not"].append(2 if a == 2 else 1 - a)
    return FiniteAlgebra(boolean_signature(), 3, tables)


def wk3_matrix() -> LogicalMatrix:
    return LogicalMatrix(wk3_algebra(), {1, 2})


def chain_algebra(size: int) -> FiniteAlgebra:
    """The size-element chain as a lattice over and/or."""
    tables = {
        "and": [min(a, b) for a in range(size) for b in range(size)],
        "or": [max(a, b) for a in range(size) for b in range(size)],
    }
    return FiniteAlgebra(lattice_signature(), size, tables)


def bool4_algebra() -> FiniteAlgebra:
    return direct_product([l2_algebra(), l2_algebra()])


def b2xb2_algebra() -> FiniteAlgebra:
    return direct_product([b2_algebra(), b2_algebra()])


def absorption_boolean() -> PartitionTerm:
    return PartitionTerm.parse("and(x, or(x, y))", boolean_signature())


def absorption_lattice() -> PartitionTerm:
    return PartitionTerm.parse("and(x, or(x, y))", lattice_signature())


# ---------------------------------------------------------------------------
# logic presentations


def cl_presentation() -> ByMatrices:
    """Classical logic over and/or/not as its two-element matrix."""
    return ByMatrices([b2_matrix()])


def cl_lattice_presentation() -> ByMatrices:
    """The conjunction-disjunction fragment of classical logic."""
    return ByMatrices([l2_matrix()])


def pwk_presentation() -> ByMatrices:
    """The left companion of classical logic, as the lifted matrix."""
    return companion_presentation(cl_presentation(), absorption_boolean())


def cl_lattice_companion() -> ByMatrices:
    return companion_presentation(cl_lattice_presentation(), absorption_lattice())


def upsets_of_lattice(A: FiniteAlgebra) -> list[frozenset[int]]:
    """Upward-closed subsets under the order a <= b iff a and b = a."""

    def leq(a: int, b: int) -> bool:
        return A.op("and", a, b) == a

    out = []
    for mask in range(2**A.size):
        F = frozenset(a for a in A.carrier if mask >> a & 1)
        if all(b in F for a in F for b in A.carrier if leq(a, b)):
            out.append(F)
    return out


def dl_upset_matrices() -> list[LogicalMatrix]:
    """A finite presentation of the logic of distributive lattices with
    upward-closed designated sets: every upset of L2, the three-element
    chain, and the four-element Boolean lattice.

    On these very algebras, its deductive filters coincide with the filters
    of the full lattice-upset logic; docs/algorithms.md gives the argument.
    """
    out = []
    for A in (l2_algebra(), chain_algebra(3), bool4_algebra()):
        for F in upsets_of_lattice(A):
            out.append(LogicalMatrix(A, F))
    return out


def dl_upset_presentation() -> ByMatrices:
    return ByMatrices(dl_upset_matrices())


def dl_companion_presentation() -> ByMatrices:
    return companion_presentation(dl_upset_presentation(), absorption_lattice())


def inconsistent_presentation() -> ByMatrices:
    """A base logic where everything follows from anything: all-designated."""
    return ByMatrices([LogicalMatrix(b2_algebra(), {0, 1})])


# ---------------------------------------------------------------------------
# the two worked sum fixtures


def seven_element_system() -> DirectedSystem:
    """The two-component system summing to the seven-element matrix: the
    three-element chain with its top-two filter, embedded into the
    four-element Boolean lattice missing its bottom."""
    chain = LogicalMatrix(chain_algebra(3), {1, 2})
    square = LogicalMatrix(bool4_algebra(), {1, 2, 3})
    embedding = Homomorphism(chain.algebra, square.algebra, [0, 1, 3])
    return DirectedSystem(chain_semilattice(2), [chain, square], {(0, 1): embedding})


def seven_element_names() -> dict[str, int]:
    """Global indices of the seven sum elements under the fixture's layout."""
    return {"a": 0, "b": 1, "c": 2, "zero": 3, "d": 4, "e": 5, "one": 6}


def eight_fiber_system() -> DirectedSystem:
    """The eight-component lattice-signature system: two trivial components
    sitting below six copies of L2, every translation out of a trivial
    component picking the top."""
    T1, T2, L1, L2_, L3, M1, M2, TOP = range(8)
    covers = {
        T1: (L1, L2_),
        T2: (L2_, L3),
        L1: (M1,),
        L2_: (M1, M2),
        L3: (M2,),
        M1: (TOP,),
        M2: (TOP,),
        TOP: (),
    }
    leq = [[i == j for j in range(8)] for i in range(8)]
    changed = True
    while changed:
        changed = False
        for i in range(8):
            for j in covers[i]:
                for k in range(8):
                    if leq[j][k] and not leq[i][k]:
                        leq[i][k] = True
                        changed = True
    join = []
    for i in range(8):
        for j in range(8):
            uppers = [k for k in range(8) if leq[i][k] and leq[j][k]]
            minimal = [k for k in uppers if all(not leq[u][k] or u == k for u in uppers)]
            assert len(minimal) == 1, f"join of {i}, {j} is not unique"
            join.append(minimal[0])
    semilattice = JoinSemilattice(8, join)

    sig = lattice_signature()
    components = [trivial_matrix(sig), trivial_matrix(sig)] + [l2_matrix()] * 6
    homs = {}
    for i in range(8):
        for j in covers[i]:
            if components[i].algebra.size == 1:
                homs[(i, j)] = Homomorphism(components[i].algebra, components[j].algebra, [1])
            else:
                homs[(i, j)] = Homomorphism.identity(components[i].algebra)
    return DirectedSystem(semilattice, components, homs)


# ---------------------------------------------------------------------------
# enumerated and seeded families


def small_semilattices(max_size: int = 3) -> list[JoinSemilattice]:
    """Every join-semilattice shape on at most three points: the chains and
    the vee (two incomparable atoms under a top)."""
    out = [chain_semilattice(n) for n in range(1, min(max_size, 3) + 1)]
    if max_size >= 3:
        vee = [
            0, 2, 2,
            2, 1, 2,
            2, 2, 2,
        ]
        out.append(JoinSemilattice(3, vee))
    return out


def designation_preserving_homs(m1: LogicalMatrix, m2: LogicalMatrix) -> list[Homomorphism]:
    out = []
    A, B = m1.algebra, m2.algebra
    for mapping in itertools.product(range(B.size), repeat=A.size):
        f = Homomorphism(A, B, mapping)
        if is_homomorphism(f) and all(f(a) in m2.designated for a in m1.designated):
            out.append(f)
    return out


def system_family(
    components: Sequence[LogicalMatrix], max_fibers: int = 3
) -> list[DirectedSystem]:
    """Every directed system assembled from the given component matrices over
    the small semilattices, ranging over all coherent translation choices."""
    out = []
    for sl in small_semilattices(max_fibers):
        pairs = [
            (i, j)
            for i in range(sl.size)
            for j in range(sl.size)
            if i != j and sl.leq(i, j)
        ]
        for assignment in itertools.product(components, repeat=sl.size):
            options = [
                designation_preserving_homs(assignment[i], assignment[j])
                for i, j in pairs
            ]
            if any(not opt for opt in options):
                continue
            for choice in itertools.product(*options):
                homs = dict(zip(pairs, choice))
                try:
                    out.append(DirectedSystem(sl, list(assignment), homs))
                except ValueError:
                    continue
    return out


def _random_semilattice(rng: random.Random, max_size: int = 4) -> JoinSemilattice:
    shapes = [chain_semilattice(n) for n in range(1, max_size + 1)]
    if max_size >= 3:
        shapes += small_semilattices(3)[3:]
    if max_size >= 4:
        diamond = [
            0, 1, 2, 3,
            1, 1, 3, 3,
            2, 3, 2, 3,
            3, 3, 3, 3,
        ]
        shapes.append(JoinSemilattice(4, diamond))
        fan = [
            0, 3, 3, 3,
            3, 1, 3, 3,
            3, 3, 2, 3,
            3, 3, 3, 3,
        ]
        shapes.append(JoinSemilattice(4, fan))
    return rng.choice(shapes)


def random_dl_system(rng: random.Random, max_fibers: int = 4) -> DirectedSystem:
    """A seeded directed system of chain matrices with upset designation.

    Translations are drawn pairwise at random and the coherence conditions
    re-checked; on repeated failure the fall-back is a constant family, which
    is always coherent.
    """
    for _ in range(200):
        sl = _random_semilattice(rng, max_fibers)
        matrices = []
        for _ in range(sl.size):
            A = chain_algebra(rng.randint(1, 3))
            matrices.append(LogicalMatrix(A, rng.choice(upsets_of_lattice(A))))
        pairs = [
            (i, j)
            for i in range(sl.size)
            for j in range(sl.size)
            if i != j and sl.leq(i, j)
        ]
        homs = {}
        feasible = True
        for i, j in pairs:
            options = designation_preserving_homs(matrices[i], matrices[j])
            if not options:
                feasible = False
                break
            homs[(i, j)] = rng.choice(options)
        if not feasible:
            continue
        try:
            return DirectedSystem(sl, matrices, homs)
        except ValueError:
            continue
    A = chain_algebra(2)
    m = LogicalMatrix(A, {1})
    sl = chain_semilattice(2)
    return DirectedSystem(sl, [m, m], {(0, 1): Homomorphism.identity(A)})


def random_algebra(rng: random.Random, sig: Signature, size: int) -> FiniteAlgebra:
    """Uniformly random operation tables; no laws assumed."""
    tables = {
        name: [rng.randrange(size) for _ in range(size**arity)]
        for name, arity in sig.operations
    }
    return FiniteAlgebra(sig, size, tables)
