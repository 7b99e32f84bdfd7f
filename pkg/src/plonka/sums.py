"""Plonka sums of matrices over finite join-semilattices, and the inverse
decomposition through a partition term.

The decomposition side is defensive throughout: ``algebra_fibration`` only
returns a fibration after verifying every structural law it relies on
(partition identities, fiber closure, join well-definedness, translation
coherence, and the reconstruction of every mixed operation), so callers may
treat a non-None answer as a proof that the algebra is the Plonka sum of its
fibers.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping, Sequence

from .algebras import FiniteAlgebra, Homomorphism, evaluate, is_homomorphism
from .matrices import LogicalMatrix
from .terms import PartitionTerm, Signature, partition_identity_pairs, vars_of


class JoinSemilattice:
    """A finite join-semilattice on {0..n-1}, given by its join table."""

    def __init__(self, size: int, join_table: Iterable[int]):
        table = [int(v) for v in join_table]
        if size < 1:
            raise ValueError("semilattice must be nonempty")
        if len(table) != size * size:
            raise ValueError(f"join table needs {size * size} entries, got {len(table)}")
        for v in table:
            if not 0 <= v < size:
                raise ValueError(f"join value {v} outside the carrier")
        self.size = size
        self._table = tuple(table)
        for i in range(size):
            if self.join(i, i) != i:
                raise ValueError(f"join not idempotent at {i}")
            for j in range(size):
                if self.join(i, j) != self.join(j, i):
                    raise ValueError(f"join not commutative at ({i}, {j})")
                for k in range(size):
                    if self.join(self.join(i, j), k) != self.join(i, self.join(j, k)):
                        raise ValueError(f"join not associative at ({i}, {j}, {k})")

    def join(self, i: int, j: int) -> int:
        return self._table[i * self.size + j]

    def leq(self, i: int, j: int) -> bool:
        return self.join(i, j) == j

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def upsets(self) -> Iterator[frozenset[int]]:
        """Every upward-closed subset, the empty one included."""
        for mask in range(2**self.size):
            J = frozenset(i for i in range(self.size) if mask >> i & 1)
            if all(j in J for i in J for j in range(self.size) if self.leq(i, j)):
                yield J

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, JoinSemilattice)
            and other.size == self.size
            and other._table == self._table
        )

    def __hash__(self) -> int:
        return hash((self.size, self._table))

    def __repr__(self) -> str:
        return f"JoinSemilattice(size={self.size})"


def chain_semilattice(size: int) -> JoinSemilattice:
    return JoinSemilattice(size, [max(i, j) for i in range(size) for j in range(size)])


class DirectedSystem:
    """Matrices indexed by a join-semilattice with coherent translations.

    Translations may be given for any comparable pairs; missing ones are
    completed by composition.  Construction verifies that every translation
    is a homomorphism, that the family is coherent (identity at each index,
    composition along any path agrees), and that designated sets are
    preserved upward.
    """

    def __init__(
        self,
        semilattice: JoinSemilattice,
        matrices: Sequence[LogicalMatrix],
        homs: Mapping[tuple[int, int], Homomorphism],
    ):
        matrices = tuple(matrices)
        if len(matrices) != semilattice.size:
            raise ValueError("one matrix per semilattice element is required")
        sig = matrices[0].algebra.sig
        for m in matrices[1:]:
            if m.algebra.sig != sig:
                raise ValueError("system matrices must share a signature")
        table: dict[tuple[int, int], Homomorphism] = {}
        for i in range(semilattice.size):
            table[(i, i)] = Homomorphism.identity(matrices[i].algebra)
        for (i, j), f in homs.items():
            if not semilattice.leq(i, j):
                raise ValueError(f"translation given for non-increasing pair ({i}, {j})")
            if f.source != matrices[i].algebra or f.target != matrices[j].algebra:
                raise ValueError(f"translation ({i}, {j}) connects the wrong algebras")
            if i == j and f.mapping != tuple(range(matrices[i].algebra.size)):
                raise ValueError(f"translation at ({i}, {i}) must be the identity")
            table[(i, j)] = f
        needed = [
            (i, j)
            for i in range(semilattice.size)
            for j in range(semilattice.size)
            if semilattice.leq(i, j)
        ]
        changed = True
        while changed:
            changed = False
            for i, k in needed:
                if (i, k) in table:
                    continue
                for j in range(semilattice.size):
                    if j in (i, k) or not (semilattice.leq(i, j) and semilattice.leq(j, k)):
                        continue
                    if (i, j) in table and (j, k) in table:
                        table[(i, k)] = table[(j, k)].compose(table[(i, j)])
                        changed = True
                        break
        missing = [pair for pair in needed if pair not in table]
        if missing:
            raise ValueError(f"translations missing and underivable for pairs {missing}")
        for (i, j), f in table.items():
            if not is_homomorphism(f):
                raise ValueError(f"translation ({i}, {j}) is not a homomorphism")
            for a in matrices[i].designated:
                if f(a) not in matrices[j].designated:
                    raise ValueError(f"translation ({i}, {j}) does not preserve designation")
        for i, j in needed:
            for k in range(semilattice.size):
                if semilattice.leq(j, k):
                    if table[(j, k)].compose(table[(i, j)]).mapping != table[(i, k)].mapping:
                        raise ValueError(f"translations not coherent along {i} <= {j} <= {k}")
        self.semilattice = semilattice
        self.matrices = matrices
        self.homs = table
        self.signature = sig

    def hom(self, i: int, j: int) -> Homomorphism:
        return self.homs[(i, j)]

    def __repr__(self) -> str:
        return f"DirectedSystem({self.semilattice.size} components)"


def trivial_matrix(sig: Signature) -> LogicalMatrix:
    """The one-element matrix with its element designated."""
    tables = {name: [0] * (1**arity) for name, arity in sig.operations}
    return LogicalMatrix(FiniteAlgebra(sig, 1, tables), {0})


def one_lift(m: LogicalMatrix) -> DirectedSystem:
    """The two-chain system with m below the trivial matrix.

    Its sum is the one-point absorbing extension of m, which presents the
    left companion; the tests cross-check this against the direct lift.
    """
    top = trivial_matrix(m.algebra.sig)
    collapse = Homomorphism(m.algebra, top.algebra, [0] * m.algebra.size)
    return DirectedSystem(chain_semilattice(2), [m, top], {(0, 1): collapse})


def sum_offsets(system: DirectedSystem) -> tuple[int, ...]:
    """Global index of each component's first element, in index order."""
    offsets = []
    total = 0
    for m in system.matrices:
        offsets.append(total)
        total += m.algebra.size
    return tuple(offsets)


def plonka_sum(system: DirectedSystem) -> LogicalMatrix:
    """The Plonka sum: disjoint union of carriers, operations evaluated in
    the join fiber after translating every argument up, designated sets
    unioned."""
    offsets = sum_offsets(system)
    sizes = [m.algebra.size for m in system.matrices]
    total = sum(sizes)

    def decode(g: int) -> tuple[int, int]:
        for i in reversed(range(len(offsets))):
            if g >= offsets[i]:
                return i, g - offsets[i]
        raise ValueError(g)

    sig = system.signature
    tables = {}
    for name, arity in sig.operations:
        flat = []
        for args in itertools.product(range(total), repeat=arity):
            located = [decode(g) for g in args]
            j = located[0][0]
            for i, _ in located[1:]:
                j = system.semilattice.join(j, i)
            pushed = [system.hom(i, j)(a) for i, a in located]
            flat.append(offsets[j] + system.matrices[j].algebra.op(name, *pushed))
        tables[name] = flat
    algebra = FiniteAlgebra(sig, total, tables)
    designated = {
        offsets[i] + a for i, m in enumerate(system.matrices) for a in m.designated
    }
    return LogicalMatrix(algebra, designated)


def upset_union(system: DirectedSystem, upset: Iterable[int]) -> frozenset[int]:
    """Global set taking the full carrier on upset indices, the designated
    set elsewhere; the sums of such unions are exactly the companion filters
    used in the model characterization."""
    J = frozenset(upset)
    offsets = sum_offsets(system)
    out = set()
    for i, m in enumerate(system.matrices):
        members = m.algebra.carrier if i in J else sorted(m.designated)
        out.update(offsets[i] + a for a in members)
    return frozenset(out)


# ---------------------------------------------------------------------------
# decomposition


class Fiber:
    """One component of a fibration: global members and a local algebra."""

    def __init__(self, members: Sequence[int], algebra: FiniteAlgebra):
        self.members = tuple(members)
        self.local_of = {g: k for k, g in enumerate(self.members)}
        self.algebra = algebra

    def __repr__(self) -> str:
        return f"Fiber({list(self.members)})"


class Fibration:
    """A verified Plonka decomposition of an algebra.

    homs maps every comparable index pair (i, j) to a global-to-global
    translation defined on fiber i.
    """

    def __init__(
        self,
        fibers: Sequence[Fiber],
        semilattice: JoinSemilattice,
        homs: Mapping[tuple[int, int], Mapping[int, int]],
    ):
        self.fibers = tuple(fibers)
        self.semilattice = semilattice
        self.homs = dict(homs)

    def fiber_index(self, g: int) -> int:
        for i, fiber in enumerate(self.fibers):
            if g in fiber.local_of:
                return i
        raise ValueError(f"element {g} in no fiber")

    def __repr__(self) -> str:
        return f"Fibration({len(self.fibers)} fibers)"


def _holds_identity(A: FiniteAlgebra, lhs, rhs) -> bool:
    variables = sorted(vars_of(lhs) | vars_of(rhs))
    for values in itertools.product(range(A.size), repeat=len(variables)):
        v = dict(zip(variables, values))
        if evaluate(A, lhs, v) != evaluate(A, rhs, v):
            return False
    return True


def algebra_fibration(A: FiniteAlgebra, t: PartitionTerm) -> Fibration | None:
    """Decompose A through the partition term t, or None.

    Verifies the partition identities, forms fibers from the mutual-absorption
    relation, and then re-derives the whole sum structure, checking each step;
    a non-None result certifies that A is the Plonka sum of the returned
    fibers along the returned translations.
    """
    cache = getattr(A, "_fibrations", None)
    if cache is None:
        cache = {}
        A._fibrations = cache
    if t in cache:
        return cache[t]
    result = _algebra_fibration(A, t)
    cache[t] = result
    return result


def _algebra_fibration(A: FiniteAlgebra, t: PartitionTerm) -> Fibration | None:
    for _, lhs, rhs in partition_identity_pairs(A.sig, t):
        if not _holds_identity(A, lhs, rhs):
            return None

    dot = [[evaluate(A, t.term, {"x": a, "y": b}) for b in A.carrier] for a in A.carrier]

    def related(a: int, b: int) -> bool:
        return dot[a][b] == a and dot[b][a] == b

    blocks: list[list[int]] = []
    placed: dict[int, int] = {}
    for a in A.carrier:
        for idx, block in enumerate(blocks):
            if related(a, block[0]):
                block.append(a)
                placed[a] = idx
                break
        else:
            placed[a] = len(blocks)
            blocks.append([a])
    for block in blocks:  # the relation must be a genuine equivalence
        for a, b in itertools.combinations(block, 2):
            if not related(a, b):
                return None
    for a in A.carrier:
        for b in A.carrier:
            if placed[a] != placed[b] and related(a, b):
                return None

    # fibers must be closed under every operation
    fibers = []
    for block in blocks:
        local_of = {g: k for k, g in enumerate(block)}
        tables = {}
        for name, arity in A.sig.operations:
            flat = []
            for args in itertools.product(block, repeat=arity):
                value = A.op(name, *args)
                if value not in local_of:
                    return None
                flat.append(local_of[value])
            tables[name] = flat
        fibers.append(Fiber(block, FiniteAlgebra(A.sig, len(block), tables)))

    # join of fibers through the partition operation, checked well-defined
    n = len(blocks)
    join_table = [[-1] * n for _ in range(n)]
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            targets = {placed[dot[a][b]] for a in bi for b in bj}
            if len(targets) != 1:
                return None
            join_table[i][j] = targets.pop()
    try:
        semilattice = JoinSemilattice(n, [v for row in join_table for v in row])
    except ValueError:
        return None

    # translations x -> x.b into the join fiber, checked choice-independent
    homs: dict[tuple[int, int], dict[int, int]] = {}
    for i in range(n):
        for j in range(n):
            if not semilattice.leq(i, j):
                continue
            mapping = {}
            for a in blocks[i]:
                images = {dot[a][b] for b in blocks[j]}
                if len(images) != 1:
                    return None
                mapping[a] = images.pop()
            if i == j and any(mapping[a] != a for a in blocks[i]):
                return None
            local = Homomorphism(
                fibers[i].algebra,
                fibers[j].algebra,
                [fibers[j].local_of[mapping[a]] for a in blocks[i]],
            )
            if not is_homomorphism(local):
                return None
            homs[(i, j)] = mapping

    # every mixed operation must agree with the translated local operation
    for name, arity in A.sig.operations:
        for args in itertools.product(A.carrier, repeat=arity):
            j = placed[args[0]]
            for a in args[1:]:
                j = semilattice.join(j, placed[a])
            pushed = [homs[(placed[a], j)][a] for a in args]
            local = fibers[j].algebra.op(
                name, *(fibers[j].local_of[g] for g in pushed)
            )
            if A.op(name, *args) != fibers[j].members[local]:
                return None

    return Fibration(fibers, semilattice, homs)


def decompose(m: LogicalMatrix, t: PartitionTerm) -> DirectedSystem:
    """Inverse of plonka_sum along t; ValueError when m is not a t-sum."""
    fibration = algebra_fibration(m.algebra, t)
    if fibration is None:
        raise ValueError("the algebra does not decompose through the partition term")
    matrices = []
    for fiber in fibration.fibers:
        trace = {fiber.local_of[a] for a in m.designated if a in fiber.local_of}
        matrices.append(LogicalMatrix(fiber.algebra, trace))
    homs = {}
    for (i, j), mapping in fibration.homs.items():
        if i == j:
            continue
        src, dst = fibration.fibers[i], fibration.fibers[j]
        homs[(i, j)] = Homomorphism(
            matrices[i].algebra,
            matrices[j].algebra,
            [dst.local_of[mapping[a]] for a in src.members],
        )
    return DirectedSystem(fibration.semilattice, matrices, homs)


# ---------------------------------------------------------------------------
# isomorphism checks for round trips


def matrix_isomorphisms(m1: LogicalMatrix, m2: LogicalMatrix) -> list[tuple[int, ...]]:
    """All matrix isomorphisms m1 -> m2, as mapping tuples."""
    A, B = m1.algebra, m2.algebra
    if A.sig != B.sig or A.size != B.size or len(m1.designated) != len(m2.designated):
        return []
    out = []
    for perm in itertools.permutations(range(B.size)):
        if any((a in m1.designated) != (perm[a] in m2.designated) for a in A.carrier):
            continue
        f = Homomorphism(A, B, perm)
        if is_homomorphism(f):
            out.append(tuple(perm))
    return out


def isomorphic_matrices(m1: LogicalMatrix, m2: LogicalMatrix) -> bool:
    return bool(matrix_isomorphisms(m1, m2))


def isomorphic_systems(X: DirectedSystem, Y: DirectedSystem) -> bool:
    """Isomorphism of directed systems: a join-preserving index bijection
    together with component matrix isomorphisms commuting with every
    translation."""
    n = X.semilattice.size
    if n != Y.semilattice.size:
        return False
    for sigma in itertools.permutations(range(n)):
        if any(
            sigma[X.semilattice.join(i, j)] != Y.semilattice.join(sigma[i], sigma[j])
            for i in range(n)
            for j in range(n)
        ):
            continue
        candidates = [
            matrix_isomorphisms(X.matrices[i], Y.matrices[sigma[i]]) for i in range(n)
        ]
        if any(not c for c in candidates):
            continue
        for choice in itertools.product(*candidates):
            ok = True
            for i in range(n):
                for j in range(n):
                    if not X.semilattice.leq(i, j) or i == j:
                        continue
                    fx = X.hom(i, j)
                    fy = Y.hom(sigma[i], sigma[j])
                    if any(
                        choice[j][fx(a)] != fy(choice[i][a])
                        for a in range(X.matrices[i].algebra.size)
                    ):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False
