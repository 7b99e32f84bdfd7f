"""Finite algebras as dense operation tables.

Carriers are always {0..n-1}; named elements exist only in the file-format
layer.  Tables are flat row-major tuples (first argument most significant),
which keeps hashing and equality cheap and makes the product encoding below
literally an index computation.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Sequence

from .bounds import DEFAULT, Bounds, BoundExceeded
from .terms import Application, Signature, Term, Variable


def _flatten_table(name: str, arity: int, size: int, table) -> tuple[int, ...]:
    # accept either a flat sequence of size^arity entries or nested rows
    def walk(node, depth: int):
        if depth == arity:
            if not isinstance(node, int):
                raise ValueError(f"table entry {node!r} for {name!r} is not an integer")
            return [node]
        if not isinstance(node, Sequence) or isinstance(node, (str, bytes)):
            raise ValueError(f"table for {name!r} is not total at depth {depth}")
        if len(node) != size:
            raise ValueError(
                f"table for {name!r} has {len(node)} rows at depth {depth}, expected {size}"
            )
        out = []
        for child in node:
            out.extend(walk(child, depth + 1))
        return out

    flat = list(table)
    if len(flat) == size**arity and all(isinstance(x, int) for x in flat):
        entries = [int(x) for x in flat]
    else:
        entries = walk(flat, 0)
    if len(entries) != size**arity:
        raise ValueError(
            f"table for {name!r} has {len(entries)} entries, expected {size**arity}"
        )
    for x in entries:
        if not 0 <= x < size:
            raise ValueError(f"table for {name!r} contains {x}, outside 0..{size - 1}")
    return tuple(entries)


class FiniteAlgebra:
    """An algebra over carrier {0..n-1} with one dense table per operation."""

    def __init__(self, sig: Signature, size: int, tables: Mapping[str, object]):
        if size < 1:
            raise ValueError("carrier must be nonempty")
        self.sig = sig
        self.size = size
        normalized: dict[str, tuple[int, ...]] = {}
        for name, arity in sig.operations:
            if name not in tables:
                raise ValueError(f"missing table for operation {name!r}")
            normalized[name] = _flatten_table(name, arity, size, tables[name])
        extra = set(tables) - set(sig.names)
        if extra:
            raise ValueError(f"tables given for unknown operations {sorted(extra)}")
        self._tables = normalized
        self._key = (sig, size, tuple(sorted(normalized.items())))
        self._unary_polys: tuple[tuple[int, ...], ...] | None = None

    @property
    def carrier(self) -> range:
        return range(self.size)

    def table(self, name: str) -> tuple[int, ...]:
        return self._tables[name]

    def op(self, name: str, *args: int) -> int:
        table = self._tables[name]
        index = 0
        for a in args:
            index = index * self.size + a
        return table[index]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteAlgebra) and other._key == self._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"FiniteAlgebra(size={self.size}, sig={self.sig!r})"


def evaluate(A: FiniteAlgebra, t: Term, valuation: Mapping[str, int]) -> int:
    """Evaluate a term under a valuation; the homomorphism Fm -> A at t."""
    if isinstance(t, Variable):
        try:
            return valuation[t.name]
        except KeyError:
            raise ValueError(f"unbound variable {t.name!r}") from None
    assert isinstance(t, Application)
    return A.op(t.op, *(evaluate(A, a, valuation) for a in t.args))


class Homomorphism:
    """A carrier map between algebras of the same signature.

    The commuting property is not enforced at construction; call
    :func:`is_homomorphism` to test it exhaustively.
    """

    def __init__(self, source: FiniteAlgebra, target: FiniteAlgebra, mapping: Iterable[int]):
        mapping = tuple(int(x) for x in mapping)
        if len(mapping) != source.size:
            raise ValueError("mapping must be total on the source carrier")
        for x in mapping:
            if not 0 <= x < target.size:
                raise ValueError(f"mapping value {x} outside the target carrier")
        self.source = source
        self.target = target
        self.mapping = mapping

    @classmethod
    def identity(cls, A: FiniteAlgebra) -> "Homomorphism":
        return cls(A, A, range(A.size))

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def compose(self, first: "Homomorphism") -> "Homomorphism":
        """self o first, requiring first.target == self.source."""
        if first.target != self.source:
            raise ValueError("composition endpoints do not match")
        return Homomorphism(first.source, self.target, (self.mapping[x] for x in first.mapping))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Homomorphism)
            and other.source == self.source
            and other.target == self.target
            and other.mapping == self.mapping
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.mapping))

    def __repr__(self) -> str:
        return f"Homomorphism({self.mapping})"


def is_homomorphism(h: Homomorphism) -> bool:
    """Exhaustive check that h commutes with every operation table."""
    if h.source.sig != h.target.sig:
        raise ValueError("source and target must share a signature")
    for name, arity in h.source.sig.operations:
        for args in itertools.product(h.source.carrier, repeat=arity):
            if h(h.source.op(name, *args)) != h.target.op(name, *(h(a) for a in args)):
                return False
    return True


def generated_subalgebra(A: FiniteAlgebra, seeds: Iterable[int]) -> frozenset[int]:
    """Least subset containing the seeds and closed under all operations."""
    current = set(seeds)
    if not current:
        raise ValueError("empty seed set generates nothing; there are no constants")
    for a in current:
        if not 0 <= a < A.size:
            raise ValueError(f"seed {a} outside the carrier")
    # one-step closure to fixpoint; carrier is finite so this terminates
    while True:
        fresh = set()
        for name, arity in A.sig.operations:
            for args in itertools.product(sorted(current), repeat=arity):
                value = A.op(name, *args)
                if value not in current:
                    fresh.add(value)
        if not fresh:
            return frozenset(current)
        current |= fresh


def product_index(sizes: Sequence[int], coordinates: Sequence[int]) -> int:
    """Lexicographic encoding of a product tuple, first factor most significant."""
    index = 0
    for size, c in zip(sizes, coordinates):
        index = index * size + c
    return index


def product_tuple(sizes: Sequence[int], index: int) -> tuple[int, ...]:
    out = []
    for size in reversed(sizes):
        out.append(index % size)
        index //= size
    return tuple(reversed(out))


def direct_product(algebras: Sequence[FiniteAlgebra]) -> FiniteAlgebra:
    """Componentwise product; carrier indexed lexicographically."""
    if not algebras:
        raise ValueError("product of an empty list is a constant algebra; not supported")
    sig = algebras[0].sig
    for A in algebras[1:]:
        if A.sig != sig:
            raise ValueError("product factors must share a signature")
    sizes = [A.size for A in algebras]
    total = 1
    for s in sizes:
        total *= s
    tables = {}
    for name, arity in sig.operations:
        flat = []
        for args in itertools.product(range(total), repeat=arity):
            coords = [product_tuple(sizes, a) for a in args]
            value = tuple(
                A.op(name, *(coords[k][i] for k in range(arity)))
                for i, A in enumerate(algebras)
            )
            flat.append(product_index(sizes, value))
        tables[name] = flat
    return FiniteAlgebra(sig, total, tables)


class Congruence:
    """A congruence stored as a canonical partition of the carrier.

    Canonical form: blocks are sorted tuples, listed by least element, so two
    congruences are equal exactly when their partitions are.  Construction
    verifies compatibility with every operation unless ``check=False`` is
    passed by an internal caller that has already verified it.
    """

    def __init__(self, algebra: FiniteAlgebra, blocks: Iterable[Iterable[int]], check: bool = True):
        canonical = sorted(tuple(sorted(set(block))) for block in blocks)
        seen: list[int] = []
        for block in canonical:
            seen.extend(block)
        if sorted(seen) != list(range(algebra.size)):
            raise ValueError("blocks do not partition the carrier")
        self.algebra = algebra
        self.blocks = tuple(canonical)
        block_of = [0] * algebra.size
        for k, block in enumerate(self.blocks):
            for a in block:
                block_of[a] = k
        self.block_of = tuple(block_of)
        if check and not self._compatible():
            raise ValueError("partition is not compatible with the operations")

    def _compatible(self) -> bool:
        A = self.algebra
        related = [
            (a, b)
            for block in self.blocks
            for a, b in itertools.combinations(block, 2)
        ]
        # one coordinate at a time suffices: full compatibility follows by chaining
        for name, arity in A.sig.operations:
            for slot in range(arity):
                for fill in itertools.product(A.carrier, repeat=arity - 1):
                    for a, b in related:
                        left = fill[:slot] + (a,) + fill[slot:]
                        right = fill[:slot] + (b,) + fill[slot:]
                        if self.block_of[A.op(name, *left)] != self.block_of[A.op(name, *right)]:
                            return False
        return True

    @classmethod
    def identity(cls, A: FiniteAlgebra) -> "Congruence":
        return cls(A, [(a,) for a in A.carrier], check=False)

    @classmethod
    def total(cls, A: FiniteAlgebra) -> "Congruence":
        return cls(A, [tuple(A.carrier)], check=False)

    @classmethod
    def from_pairs(cls, A: FiniteAlgebra, pairs: Iterable[tuple[int, int]], check: bool = True) -> "Congruence":
        """Partition generated (as an equivalence) by the given pairs."""
        parent = list(A.carrier)

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in pairs:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        groups: dict[int, list[int]] = {}
        for a in A.carrier:
            groups.setdefault(find(a), []).append(a)
        return cls(A, groups.values(), check=check)

    def relates(self, a: int, b: int) -> bool:
        return self.block_of[a] == self.block_of[b]

    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (a, b) for block in self.blocks for a in block for b in block
        )

    def is_identity(self) -> bool:
        return len(self.blocks) == self.algebra.size

    def is_total(self) -> bool:
        return len(self.blocks) == 1

    def refines(self, other: "Congruence") -> bool:
        """self <= other as relations."""
        return all(
            other.block_of[block[0]] == other.block_of[a]
            for block in self.blocks
            for a in block
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Congruence)
            and other.algebra == self.algebra
            and other.blocks == self.blocks
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.blocks))

    def __repr__(self) -> str:
        return f"Congruence({list(self.blocks)})"


def meet_congruences(thetas: Sequence[Congruence]) -> Congruence:
    """Intersection as relations; the common refinement of the partitions."""
    if not thetas:
        raise ValueError("meet of no congruences is undefined here")
    A = thetas[0].algebra
    for theta in thetas:
        if theta.algebra != A:
            raise ValueError("congruences live on different algebras")
    keys: dict[tuple[int, ...], list[int]] = {}
    for a in A.carrier:
        keys.setdefault(tuple(theta.block_of[a] for theta in thetas), []).append(a)
    # an intersection of congruences is a congruence; skip the recheck
    return Congruence(A, keys.values(), check=False)


def quotient(A: FiniteAlgebra, theta: Congruence) -> tuple[FiniteAlgebra, Homomorphism]:
    """Quotient algebra on the blocks plus the canonical projection."""
    if theta.algebra != A:
        raise ValueError("congruence does not live on this algebra")
    representatives = [block[0] for block in theta.blocks]
    tables = {}
    for name, arity in A.sig.operations:
        flat = []
        for args in itertools.product(representatives, repeat=arity):
            flat.append(theta.block_of[A.op(name, *args)])
        tables[name] = flat
    Q = FiniteAlgebra(A.sig, len(theta.blocks), tables)
    return Q, Homomorphism(A, Q, theta.block_of)


def _partitions(n: int):
    # restricted growth strings; canonical partition enumeration
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(k: int, m: int):
        if k == n:
            blocks: list[list[int]] = [[] for _ in range(m + 1)]
            for i, b in enumerate(rgs):
                blocks[b].append(i)
            yield [tuple(b) for b in blocks]
            return
        for b in range(m + 2):
            rgs[k] = b
            yield from rec(k + 1, max(m, b))

    yield from rec(1, 0)


def enumerate_congruences(A: FiniteAlgebra, bounds: Bounds = DEFAULT) -> list[Congruence]:
    """All congruences of A, canonically ordered; the brute-force oracle.

    Guarded by bounds.max_carrier since this walks every partition of the
    carrier (Bell numbers grow fast).
    """
    if A.size > bounds.max_carrier:
        raise BoundExceeded(
            f"carrier {A.size} exceeds the congruence oracle bound {bounds.max_carrier}",
            carrier=A.size,
        )
    out = []
    for blocks in _partitions(A.size):
        try:
            out.append(Congruence(A, blocks))
        except ValueError:
            continue
    out.sort(key=lambda theta: theta.blocks)
    return out


def unary_polynomial_functions(A: FiniteAlgebra) -> tuple[tuple[int, ...], ...]:
    """All unary polynomial functions of A, as value tuples over the carrier.

    Least set containing the identity and closed under plugging a member into
    one argument slot of a basic operation, all other slots filled by
    constants.  Polynomials with several occurrences of the variable are not
    generated; for the congruence computations in the matrix layer they are
    subsumed by chaining, see docs/algorithms.md.  Memoised per algebra.
    """
    if A._unary_polys is not None:
        return A._unary_polys
    identity = tuple(A.carrier)
    known: set[tuple[int, ...]] = {identity}
    frontier = [identity]
    while frontier:
        fresh: list[tuple[int, ...]] = []
        for p in frontier:
            for name, arity in A.sig.operations:
                table = A._tables[name]
                for slot in range(arity):
                    for fill in itertools.product(A.carrier, repeat=arity - 1):
                        values = []
                        for a in A.carrier:
                            args = fill[:slot] + (p[a],) + fill[slot:]
                            index = 0
                            for x in args:
                                index = index * A.size + x
                            values.append(table[index])
                        q = tuple(values)
                        if q not in known:
                            known.add(q)
                            fresh.append(q)
        frontier = fresh
    result = tuple(sorted(known))
    A._unary_polys = result
    return result
