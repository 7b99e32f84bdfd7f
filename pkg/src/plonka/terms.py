"""Signatures, terms and substitutions.

Everything downstream (algebras, matrices, sums, calculi) consumes the term
language defined here.  Terms are immutable and structurally hashable so they
can be deduplicated and used as dictionary keys during enumeration.

Concrete syntax accepted by :func:`parse_term`:

    term  := IDENT | IDENT '(' term (',' term)* ')'
    IDENT := [A-Za-z_][A-Za-z0-9_]*

Whitespace is insignificant.  An IDENT is a variable exactly when it is not an
operation name of the ambient signature.  Signatures never contain constants
(arity 0 is rejected), so every term contains at least one variable; several
arguments elsewhere in the package lean on that fact.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Mapping

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

# Hole marker for rewriting contexts.  Deliberately not a legal IDENT, so it
# can never collide with a user variable coming out of the parser.
HOLE = "∘"


class Signature:
    """An algebraic similarity type: named operations, each of arity >= 1."""

    def __init__(self, operations: Iterable[tuple[str, int]]):
        ops = tuple((str(name), int(arity)) for name, arity in operations)
        arities: dict[str, int] = {}
        for name, arity in ops:
            if not _IDENT_RE.fullmatch(name):
                raise ValueError(f"operation name {name!r} is not a valid identifier")
            if name in arities:
                raise ValueError(f"duplicate operation name {name!r}")
            if arity < 1:
                raise ValueError(
                    f"operation {name!r} has arity {arity}; constant symbols are not allowed"
                )
            arities[name] = arity
        self.operations = ops
        self._arities = arities

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.operations)

    def arity(self, name: str) -> int:
        try:
            return self._arities[name]
        except KeyError:
            raise ValueError(f"unknown operation {name!r}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._arities

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Signature) and self.operations == other.operations

    def __hash__(self) -> int:
        return hash(self.operations)

    def __repr__(self) -> str:
        body = ", ".join(f"{name}/{arity}" for name, arity in self.operations)
        return f"Signature({body})"


class Term:
    """Abstract base for :class:`Variable` and :class:`Application`."""

    __slots__ = ()

    def __repr__(self) -> str:
        return to_text(self)


class Variable(Term):
    __slots__ = ("name", "_hash")

    def __init__(self, name: str):
        if not name:
            raise ValueError("variable name must be nonempty")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_hash", hash(("var", name)))

    def __setattr__(self, *_):
        raise AttributeError("terms are immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Variable) and other.name == self.name

    def __hash__(self) -> int:
        return self._hash


class Application(Term):
    __slots__ = ("op", "args", "_hash")

    def __init__(self, op: str, args: Iterable[Term]):
        args = tuple(args)
        if not args:
            raise ValueError("applications need at least one argument; no constants")
        for a in args:
            if not isinstance(a, Term):
                raise TypeError(f"argument {a!r} is not a Term")
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "_hash", hash(("app", op, args)))

    def __setattr__(self, *_):
        raise AttributeError("terms are immutable")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Application)
            and other._hash == self._hash
            and other.op == self.op
            and other.args == self.args
        )

    def __hash__(self) -> int:
        return self._hash


class TermSyntaxError(ValueError):
    """Parse failure with a 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


def _position(text: str, index: int) -> tuple[int, int]:
    line = text.count("\n", 0, index) + 1
    column = index - (text.rfind("\n", 0, index) + 1) + 1
    return line, column


def _tokenize_term(text: str, allow_hole: bool) -> list[tuple[str, str, int]]:
    # token kinds: ident, punct, hole
    tokens: list[tuple[str, str, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "(),":
            tokens.append(("punct", ch, i))
            i += 1
            continue
        if allow_hole and ch == HOLE:
            tokens.append(("hole", ch, i))
            i += 1
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            tokens.append(("ident", m.group(), i))
            i = m.end()
            continue
        line, col = _position(text, i)
        raise TermSyntaxError(f"unexpected character {ch!r}", line, col)
    return tokens


def _parse(text: str, sig: Signature, allow_hole: bool) -> Term:
    tokens = _tokenize_term(text, allow_hole)
    pos = 0

    def fail(message: str, index: int):
        line, col = _position(text, index)
        raise TermSyntaxError(message, line, col)

    def expect_term() -> Term:
        nonlocal pos
        if pos >= len(tokens):
            fail("unexpected end of input", len(text))
        kind, value, index = tokens[pos]
        if kind == "hole":
            pos += 1
            return Variable(HOLE)
        if kind != "ident":
            fail(f"expected a term, found {value!r}", index)
        pos += 1
        if pos < len(tokens) and tokens[pos][1] == "(":
            if value not in sig:
                fail(f"unknown operation {value!r}", index)
            pos += 1
            args = [expect_term()]
            while pos < len(tokens) and tokens[pos][1] == ",":
                pos += 1
                args.append(expect_term())
            if pos >= len(tokens) or tokens[pos][1] != ")":
                fail("expected ',' or ')'", tokens[pos][2] if pos < len(tokens) else len(text))
            pos += 1
            if len(args) != sig.arity(value):
                fail(
                    f"operation {value!r} expects {sig.arity(value)} arguments, got {len(args)}",
                    index,
                )
            return Application(value, args)
        if value in sig:
            fail(f"operation {value!r} used without arguments", index)
        return Variable(value)

    term = expect_term()
    if pos < len(tokens):
        fail(f"trailing input {tokens[pos][1]!r}", tokens[pos][2])
    return term


def parse_term(text: str, sig: Signature) -> Term:
    """Parse the unique term denoted by ``text`` over ``sig``.

    Raises :class:`TermSyntaxError` with position information on malformed
    input, unknown operations, and arity mismatches.
    """
    return _parse(text, sig, allow_hole=False)


def parse_context(text: str, sig: Signature) -> Term:
    """Like :func:`parse_term` but additionally accepts the hole symbol."""
    return _parse(text, sig, allow_hole=True)


def to_text(t: Term) -> str:
    """Canonical concrete syntax; inverse of :func:`parse_term`."""
    if isinstance(t, Variable):
        return t.name
    assert isinstance(t, Application)
    return f"{t.op}({', '.join(to_text(a) for a in t.args)})"


def vars_of(t: Term | Iterable[Term]) -> frozenset[str]:
    """Variable names occurring in a term, or the union over an iterable."""
    if isinstance(t, Term):
        t = (t,)
    out: set[str] = set()
    stack = list(t)
    while stack:
        s = stack.pop()
        if isinstance(s, Variable):
            out.add(s.name)
        else:
            stack.extend(s.args)
    return frozenset(out)


def substitute(t: Term, mapping: Mapping[str, Term]) -> Term:
    """Simultaneous substitution; variables outside the mapping are fixed."""
    if isinstance(t, Variable):
        return mapping.get(t.name, t)
    assert isinstance(t, Application)
    return Application(t.op, tuple(substitute(a, mapping) for a in t.args))


def term_depth(t: Term) -> int:
    """Variables have depth 0, applications 1 + max over arguments."""
    if isinstance(t, Variable):
        return 0
    return 1 + max(term_depth(a) for a in t.args)


def subterms(t: Term) -> Iterator[tuple[tuple[int, ...], Term]]:
    """Yield (path, subterm) pairs in preorder; paths are argument indices."""
    stack: list[tuple[tuple[int, ...], Term]] = [((), t)]
    while stack:
        path, s = stack.pop()
        yield path, s
        if isinstance(s, Application):
            for k in range(len(s.args) - 1, -1, -1):
                stack.append((path + (k,), s.args[k]))


def replace_at(t: Term, path: tuple[int, ...], replacement: Term) -> Term:
    """Return ``t`` with the subterm at ``path`` replaced."""
    if not path:
        return replacement
    assert isinstance(t, Application)
    k = path[0]
    args = list(t.args)
    args[k] = replace_at(args[k], path[1:], replacement)
    return Application(t.op, args)


def fresh_variable(taken: Iterable[str], stem: str = "w") -> str:
    """A variable name not in ``taken``; Var is countably infinite on demand."""
    taken = set(taken)
    if stem not in taken:
        return stem
    for k in itertools.count():
        candidate = f"{stem}{k}"
        if candidate not in taken:
            return candidate


def validate_term(t: Term, sig: Signature) -> None:
    """Raise ValueError unless every application matches the signature."""
    for _, s in subterms(t):
        if isinstance(s, Application):
            if s.op not in sig:
                raise ValueError(f"unknown operation {s.op!r} in {t!r}")
            if len(s.args) != sig.arity(s.op):
                raise ValueError(
                    f"operation {s.op!r} expects {sig.arity(s.op)} arguments in {t!r}"
                )


def enumerate_terms(sig: Signature, variables: tuple[str, ...], max_depth: int) -> list[Term]:
    """All terms over the given variables up to the given depth.

    Ordered by (depth, text) so enumeration order is canonical and stable.
    """
    by_depth: list[list[Term]] = [[Variable(v) for v in sorted(variables)]]
    for d in range(1, max_depth + 1):
        pool = [t for level in by_depth for t in level]
        fresh: list[Term] = []
        for name, arity in sig.operations:
            for args in itertools.product(pool, repeat=arity):
                if max(term_depth(a) for a in args) == d - 1:
                    fresh.append(Application(name, args))
        fresh.sort(key=to_text)
        by_depth.append(fresh)
    return [t for level in by_depth for t in level]


class PartitionTerm:
    """A binary term t(x, y) in which both variables really occur.

    Candidate witness for decomposability; the identities P1 through P5 it
    must satisfy on a given algebra are produced by
    :func:`partition_identity_pairs` and checked in the sums layer.
    """

    def __init__(self, term: Term):
        vs = vars_of(term)
        if vs != frozenset({"x", "y"}):
            raise ValueError(
                f"partition term must use exactly the variables x and y, got {sorted(vs)}"
            )
        self.term = term

    @classmethod
    def parse(cls, text: str, sig: Signature) -> "PartitionTerm":
        return cls(parse_term(text, sig))

    def apply(self, left: Term, right: Term) -> Term:
        """The term t(left, right)."""
        return substitute(self.term, {"x": left, "y": right})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PartitionTerm) and other.term == self.term

    def __hash__(self) -> int:
        return hash(("partition", self.term))

    def __repr__(self) -> str:
        return f"PartitionTerm({to_text(self.term)})"


def partition_identity_pairs(
    sig: Signature, t: PartitionTerm
) -> tuple[tuple[str, Term, Term], ...]:
    """The partition-function identities P1..P5 instantiated at ``t``.

    P1  a.a = a
    P2  a.(b.c) = (a.b).c
    P3  a.(b.c) = a.(c.b)
    P4  g(a1..an).b = g(a1.b, .., an.b)        one pair per operation g
    P5  b.g(a1..an) = b.a1. .. .an (left fold) one pair per operation g

    Labels are "P1".."P3" and "P4.g"/"P5.g"; consumers group by the prefix
    before the dot when they need the five families rather than the flat list.
    """
    a, b, c = Variable("a"), Variable("b"), Variable("c")
    pairs: list[tuple[str, Term, Term]] = [
        ("P1", t.apply(a, a), a),
        ("P2", t.apply(a, t.apply(b, c)), t.apply(t.apply(a, b), c)),
        ("P3", t.apply(a, t.apply(b, c)), t.apply(a, t.apply(c, b))),
    ]
    for name, arity in sig.operations:
        args = [Variable(f"a{k}") for k in range(1, arity + 1)]
        g = Application(name, args)
        pairs.append(
            (f"P4.{name}", t.apply(g, b), Application(name, [t.apply(ak, b) for ak in args]))
        )
        folded = b
        for ak in args:
            folded = t.apply(folded, ak)
        pairs.append((f"P5.{name}", t.apply(b, g), folded))
    return tuple(pairs)
