"""The structure file format and the derivation certificate format.

Structure files are UTF-8 and line-oriented in spirit but free-form in
syntax: items are `signature`, `algebra`, `matrix`, `system`, and `calculus`
blocks whose statements are separated by semicolons.  `#` starts a comment.
The exact grammar ships in docs/file-formats.md; every parse error cites a
line and column.

Calculus blocks may declare `define` macros (defined connectives); they are
expanded at parse time, so a calculus always stores primitive connectives
only.  Everything the serializers emit parses back to an equal object, and
the tests hold them to that round trip.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .algebras import FiniteAlgebra, Homomorphism
from .calculi import Derivation, HilbertCalculus, Rule, SchemeFamily, Step, match
from .matrices import LogicalMatrix
from .sums import DirectedSystem, JoinSemilattice
from .terms import (
    HOLE,
    Application,
    Signature,
    Term,
    Variable,
    parse_context,
    parse_term,
    subterms,
    substitute,
    to_text,
)


class FileSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.source = source


_SYMBOLS = ("->", "|-", "{", "}", ";", ":", ",", "(", ")", "=", ".")


class _Token:
    __slots__ = ("kind", "value", "line", "column")

    def __init__(self, kind: str, value: str, line: int, column: int):
        self.kind = kind
        self.value = value
        self.line = line
        self.column = column

    def __repr__(self) -> str:
        return f"_Token({self.kind}, {self.value!r})"


def _scan(text: str, source: str) -> list[_Token]:
    tokens = []
    line, column = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            column += 1
            i += 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        matched = next((s for s in _SYMBOLS if text.startswith(s, i)), None)
        if matched:
            tokens.append(_Token("sym", matched, line, column))
            i += len(matched)
            column += len(matched)
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], line, column))
            column += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, column))
            column += j - i
            i = j
            continue
        raise FileSyntaxError(f"unexpected character {ch!r}", line, column, source)
    return tokens


class _Parser:
    def __init__(self, text: str, source: str):
        self.tokens = _scan(text, source)
        self.pos = 0
        self.source = source

    def fail(self, message: str) -> FileSyntaxError:
        if self.pos < len(self.tokens):
            tok = self.tokens[self.pos]
            return FileSyntaxError(message, tok.line, tok.column, self.source)
        return FileSyntaxError(message + " (at end of input)", 0, 0, self.source)

    def done(self) -> bool:
        return self.pos >= len(self.tokens)

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def at(self, value: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.value == value

    def take(self) -> _Token:
        if self.done():
            raise self.fail("unexpected end of input")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str) -> _Token:
        tok = self.take() if not self.done() else None
        if tok is None or tok.value != value:
            self.pos -= 1 if tok is not None else 0
            raise self.fail(f"expected {value!r}")
        return tok

    def ident(self, what: str = "a name") -> str:
        tok = self.take() if not self.done() else None
        if tok is None or tok.kind != "ident":
            self.pos -= 1 if tok is not None else 0
            raise self.fail(f"expected {what}")
        return tok.value

    def integer(self) -> int:
        tok = self.take() if not self.done() else None
        if tok is None or tok.kind != "int":
            self.pos -= 1 if tok is not None else 0
            raise self.fail("expected a number")
        return int(tok.value)

    def end_statement(self) -> None:
        # statements are separated by semicolons; the one before '}' may omit it
        if self.at(";"):
            self.take()
        elif not self.at("}"):
            raise self.fail("expected ';' or '}'")

    def label(self) -> str:
        # rule and scheme labels allow one dotted segment, e.g. P4.and
        out = self.ident("a label")
        if self.at("."):
            self.take()
            out += "." + self.ident("a label segment")
        return out

    def term(self, sig: Signature, macros: dict[str, tuple[tuple[str, ...], Term]],
             allow_hole: bool = False) -> Term:
        tok = self.take() if not self.done() else None
        if tok is None:
            raise self.fail("expected a term")
        if allow_hole and tok.value == HOLE:
            return Variable(HOLE)
        if tok.kind != "ident":
            self.pos -= 1
            raise self.fail("expected a term")
        name = tok.value
        if not self.at("("):
            if name in sig or name in macros:
                self.pos -= 1
                raise self.fail(f"operation {name!r} used without arguments")
            return Variable(name)
        self.take()
        args = [self.term(sig, macros, allow_hole)]
        while self.at(","):
            self.take()
            args.append(self.term(sig, macros, allow_hole))
        self.expect(")")
        if name in macros:
            params, body = macros[name]
            if len(args) != len(params):
                self.pos -= 1
                raise self.fail(
                    f"macro {name!r} takes {len(params)} arguments, got {len(args)}"
                )
            return substitute(body, dict(zip(params, args)))
        if name not in sig:
            self.pos -= 1
            raise self.fail(f"unknown operation {name!r}")
        if sig.arity(name) != len(args):
            self.pos -= 1
            raise self.fail(
                f"operation {name!r} takes {sig.arity(name)} arguments, got {len(args)}"
            )
        return Application(name, args)


class Workspace:
    """Named structures loaded from files, with referential integrity.

    Identical redefinitions are tolerated so that self-contained files can
    share their signature blocks; conflicting ones are an error.
    """

    def __init__(self):
        self.signatures: dict[str, Signature] = {}
        self.algebras: dict[str, FiniteAlgebra] = {}
        self.element_names: dict[str, tuple[str, ...]] = {}
        self.algebra_signature: dict[str, str] = {}
        self.matrices: dict[str, LogicalMatrix] = {}
        self.matrix_algebra: dict[str, str] = {}
        self.systems: dict[str, DirectedSystem] = {}
        self.system_index_names: dict[str, tuple[str, ...]] = {}
        self.system_components: dict[str, tuple[str, ...]] = {}
        self.calculi: dict[str, HilbertCalculus] = {}
        self.calculus_signature: dict[str, str] = {}

    # -- registration -----------------------------------------------------

    def _register(self, table: dict, kind: str, name: str, value, parser: _Parser):
        if name in table:
            if table[name] == value:
                return
            raise parser.fail(f"{kind} {name!r} already defined differently")
        table[name] = value

    def load(self, text: str, source: str = "<input>") -> None:
        parser = _Parser(text, source)
        while not parser.done():
            keyword = parser.ident("an item keyword")
            if keyword == "signature":
                self._parse_signature(parser)
            elif keyword == "algebra":
                self._parse_algebra(parser)
            elif keyword == "matrix":
                self._parse_matrix(parser)
            elif keyword == "system":
                self._parse_system(parser)
            elif keyword == "calculus":
                self._parse_calculus(parser)
            else:
                parser.pos -= 1
                raise parser.fail(f"unknown item keyword {keyword!r}")

    def load_file(self, path: str) -> None:
        with open(path, encoding="utf-8") as handle:
            self.load(handle.read(), source=path)

    # -- item parsers ------------------------------------------------------

    def _parse_signature(self, parser: _Parser) -> None:
        name = parser.ident("a signature name")
        parser.expect("{")
        ops = []
        while not parser.at("}"):
            parser.expect("op")
            op = parser.ident("an operation name")
            arity = parser.integer()
            ops.append((op, arity))
            parser.end_statement()
        parser.expect("}")
        try:
            sig = Signature(ops)
        except ValueError as err:
            raise parser.fail(str(err))
        self._register(self.signatures, "signature", name, sig, parser)

    def _signature_named(self, parser: _Parser, name: str) -> Signature:
        if name not in self.signatures:
            raise parser.fail(f"unknown signature {name!r}")
        return self.signatures[name]

    def _parse_algebra(self, parser: _Parser) -> None:
        name = parser.ident("an algebra name")
        parser.expect("over")
        signame = parser.ident("a signature name")
        sig = self._signature_named(parser, signame)
        parser.expect("{")
        elements: list[str] = []
        rows: dict[str, dict[tuple[int, ...], int]] = {op: {} for op, _ in sig.operations}

        def element(label: str) -> int:
            if label not in elements:
                raise parser.fail(f"unknown element {label!r}")
            return elements.index(label)

        while not parser.at("}"):
            keyword = parser.ident("'elements' or 'op'")
            if keyword == "elements":
                if elements:
                    raise parser.fail("elements already declared")
                while not parser.at(";") and not parser.at("}"):
                    label = parser.ident("an element name")
                    if label in elements:
                        raise parser.fail(f"duplicate element {label!r}")
                    elements.append(label)
                if not elements:
                    raise parser.fail("an algebra needs at least one element")
            elif keyword == "op":
                op = parser.ident("an operation name")
                if op not in rows:
                    raise parser.fail(f"operation {op!r} is not in signature {signame!r}")
                parser.expect(":")
                args = tuple(element(parser.ident("an element name"))
                             for _ in range(sig.arity(op)))
                parser.expect("->")
                value = element(parser.ident("an element name"))
                if args in rows[op]:
                    raise parser.fail(f"duplicate table row for {op}{args}")
                rows[op][args] = value
            else:
                parser.pos -= 1
                raise parser.fail(f"unknown algebra statement {keyword!r}")
            parser.end_statement()
        parser.expect("}")
        size = len(elements)
        tables = {}
        for op, arity in sig.operations:
            flat = []
            for args in itertools.product(range(size), repeat=arity):
                if args not in rows[op]:
                    named = tuple(elements[a] for a in args)
                    raise parser.fail(f"missing table row for op {op}: {' '.join(named)}")
                flat.append(rows[op][args])
            tables[op] = flat
        algebra = FiniteAlgebra(sig, size, tables)
        self._register(self.algebras, "algebra", name, algebra, parser)
        self.element_names[name] = tuple(elements)
        self.algebra_signature[name] = signame

    def _parse_matrix(self, parser: _Parser) -> None:
        name = parser.ident("a matrix name")
        parser.expect("{")
        algebra_name: str | None = None
        designated: list[int] = []
        saw_designated = False
        while not parser.at("}"):
            keyword = parser.ident("'algebra' or 'designated'")
            if keyword == "algebra":
                algebra_name = parser.ident("an algebra name")
                if algebra_name not in self.algebras:
                    raise parser.fail(f"unknown algebra {algebra_name!r}")
            elif keyword == "designated":
                if algebra_name is None:
                    raise parser.fail("designated must follow the algebra statement")
                saw_designated = True
                names = self.element_names[algebra_name]
                while not parser.at(";") and not parser.at("}"):
                    label = parser.ident("an element name")
                    if label not in names:
                        raise parser.fail(f"unknown element {label!r}")
                    designated.append(names.index(label))
            else:
                parser.pos -= 1
                raise parser.fail(f"unknown matrix statement {keyword!r}")
            parser.end_statement()
        parser.expect("}")
        if algebra_name is None or not saw_designated:
            raise parser.fail("a matrix needs an algebra and a designated statement")
        m = LogicalMatrix(self.algebras[algebra_name], designated)
        self._register(self.matrices, "matrix", name, m, parser)
        self.matrix_algebra[name] = algebra_name

    def _parse_system(self, parser: _Parser) -> None:
        name = parser.ident("a system name")
        parser.expect("{")
        parser.expect("semilattice")
        parser.expect("{")
        indices: list[str] = []
        joins: dict[tuple[int, int], int] = {}

        def index(label: str) -> int:
            if label not in indices:
                raise parser.fail(f"unknown semilattice element {label!r}")
            return indices.index(label)

        while not parser.at("}"):
            keyword = parser.ident("'elements' or 'join'")
            if keyword == "elements":
                while not parser.at(";") and not parser.at("}"):
                    label = parser.ident("an element name")
                    if label in indices:
                        raise parser.fail(f"duplicate semilattice element {label!r}")
                    indices.append(label)
            elif keyword == "join":
                i = index(parser.ident("an element name"))
                j = index(parser.ident("an element name"))
                parser.expect("->")
                k = index(parser.ident("an element name"))
                if (i, j) in joins and joins[(i, j)] != k:
                    raise parser.fail("conflicting join rows")
                joins[(i, j)] = k
            else:
                parser.pos -= 1
                raise parser.fail(f"unknown semilattice statement {keyword!r}")
            parser.end_statement()
        parser.expect("}")
        size = len(indices)
        if size == 0:
            raise parser.fail("a semilattice needs at least one element")
        # fill the diagonal and symmetric rows not spelled out
        table = []
        for i in range(size):
            for j in range(size):
                if (i, j) in joins:
                    table.append(joins[(i, j)])
                elif (j, i) in joins:
                    table.append(joins[(j, i)])
                elif i == j:
                    table.append(i)
                else:
                    raise parser.fail(
                        f"missing join row for {indices[i]} {indices[j]}"
                    )
        try:
            semilattice = JoinSemilattice(size, table)
        except ValueError as err:
            raise parser.fail(str(err))

        components: dict[int, str] = {}
        homs: dict[tuple[int, int], list[tuple[str, str]]] = {}
        while not parser.at("}"):
            keyword = parser.ident("'component' or 'hom'")
            if keyword == "component":
                i = index(parser.ident("a semilattice element"))
                parser.expect(":")
                matrix_name = parser.ident("a matrix name")
                if matrix_name not in self.matrices:
                    raise parser.fail(f"unknown matrix {matrix_name!r}")
                if i in components:
                    raise parser.fail(f"component {indices[i]!r} already assigned")
                components[i] = matrix_name
            elif keyword == "hom":
                i = index(parser.ident("a semilattice element"))
                parser.expect("->")
                j = index(parser.ident("a semilattice element"))
                parser.expect(":")
                entries = []
                while True:
                    src = parser.ident("an element name")
                    parser.expect("->")
                    dst = parser.ident("an element name")
                    entries.append((src, dst))
                    if parser.at(","):
                        parser.take()
                        continue
                    break
                homs[(i, j)] = entries
            else:
                parser.pos -= 1
                raise parser.fail(f"unknown system statement {keyword!r}")
            parser.end_statement()
        parser.expect("}")
        missing = [indices[i] for i in range(size) if i not in components]
        if missing:
            raise parser.fail(f"components missing for {missing}")
        matrices = [self.matrices[components[i]] for i in range(size)]
        hom_objects = {}
        for (i, j), entries in homs.items():
            src_names = self.element_names[self.matrix_algebra[components[i]]]
            dst_names = self.element_names[self.matrix_algebra[components[j]]]
            mapping = [-1] * len(src_names)
            for src, dst in entries:
                if src not in src_names:
                    raise parser.fail(f"unknown source element {src!r} in hom")
                if dst not in dst_names:
                    raise parser.fail(f"unknown target element {dst!r} in hom")
                mapping[src_names.index(src)] = dst_names.index(dst)
            if -1 in mapping:
                absent = src_names[mapping.index(-1)]
                raise parser.fail(f"hom does not map element {absent!r}")
            hom_objects[(i, j)] = Homomorphism(
                matrices[i].algebra, matrices[j].algebra, mapping
            )
        try:
            system = DirectedSystem(semilattice, matrices, hom_objects)
        except ValueError as err:
            raise parser.fail(str(err))
        self._register(self.systems, "system", name, system, parser)
        self.system_index_names[name] = tuple(indices)
        self.system_components[name] = tuple(components[i] for i in range(size))

    def _parse_calculus(self, parser: _Parser) -> None:
        name = parser.ident("a calculus name")
        parser.expect("over")
        signame = parser.ident("a signature name")
        sig = self._signature_named(parser, signame)
        parser.expect("{")
        macros: dict[str, tuple[tuple[str, ...], Term]] = {}
        rules: list[Rule] = []
        scheme_rows: list[tuple[str, Term, Term]] = []
        while not parser.at("}"):
            keyword = parser.ident("a calculus statement")
            if keyword == "define":
                macro = parser.ident("a macro name")
                if macro in sig or macro in macros:
                    raise parser.fail(f"{macro!r} is already an operation or macro")
                parser.expect("(")
                params = [parser.ident("a parameter")]
                while parser.at(","):
                    parser.take()
                    params.append(parser.ident("a parameter"))
                parser.expect(")")
                parser.expect("=")
                body = parser.term(sig, macros)
                macros[macro] = (tuple(params), body)
            elif keyword == "axiom":
                parser.expect("(")
                label = parser.label()
                parser.expect(")")
                parser.expect(":")
                conclusion = parser.term(sig, macros)
                rules.append(Rule(label, [], conclusion))
            elif keyword == "rule":
                parser.expect("(")
                label = parser.label()
                parser.expect(")")
                parser.expect(":")
                premises = [parser.term(sig, macros)]
                while parser.at(","):
                    parser.take()
                    premises.append(parser.term(sig, macros))
                parser.expect("|-")
                conclusion = parser.term(sig, macros)
                rules.append(Rule(label, premises, conclusion))
            elif keyword == "scheme":
                parser.expect("(")
                label = parser.label()
                parser.expect(")")
                parser.expect(":")
                lhs = parser.term(sig, macros)
                parser.expect("=")
                rhs = parser.term(sig, macros)
                scheme_rows.append((label, lhs, rhs))
            else:
                parser.pos -= 1
                raise parser.fail(f"unknown calculus statement {keyword!r}")
            parser.end_statement()
        parser.expect("}")
        families: dict[str, list[tuple[str, Term, Term]]] = {}
        for label, lhs, rhs in scheme_rows:
            families.setdefault(label.split(".")[0], []).append((label, lhs, rhs))
        try:
            calculus = HilbertCalculus(
                sig, rules, [SchemeFamily(k, v) for k, v in families.items()]
            )
        except ValueError as err:
            raise parser.fail(str(err))
        self._register(self.calculi, "calculus", name, calculus, parser)
        self.calculus_signature[name] = signame

    # -- lookups -----------------------------------------------------------

    def _sole(self, table: dict, kind: str, name: str | None):
        if name is not None:
            if name not in table:
                raise KeyError(f"no {kind} named {name!r} is loaded")
            return name
        if len(table) == 1:
            return next(iter(table))
        if not table:
            raise KeyError(f"no {kind} was loaded")
        raise KeyError(f"several {kind}s loaded, name one of {sorted(table)}")

    def matrix(self, name: str | None = None) -> tuple[str, LogicalMatrix]:
        name = self._sole(self.matrices, "matrix", name)
        return name, self.matrices[name]

    def algebra(self, name: str | None = None) -> tuple[str, FiniteAlgebra]:
        name = self._sole(self.algebras, "algebra", name)
        return name, self.algebras[name]

    def system(self, name: str | None = None) -> tuple[str, DirectedSystem]:
        name = self._sole(self.systems, "system", name)
        return name, self.systems[name]

    def calculus(self, name: str | None = None) -> tuple[str, HilbertCalculus]:
        name = self._sole(self.calculi, "calculus", name)
        return name, self.calculi[name]


# ---------------------------------------------------------------------------
# serialization


def _signature_name(sig: Signature) -> str:
    return "sig_" + "_".join(name for name, _ in sig.operations)


def render_signature(sig: Signature, name: str | None = None) -> str:
    name = name or _signature_name(sig)
    body = "; ".join(f"op {op} {arity}" for op, arity in sig.operations)
    return f"signature {name} {{ {body} }}"


def default_element_names(size: int) -> tuple[str, ...]:
    return tuple(f"e{i}" for i in range(size))


def render_algebra(
    A: FiniteAlgebra,
    name: str,
    signame: str | None = None,
    elements: Sequence[str] | None = None,
) -> str:
    signame = signame or _signature_name(A.sig)
    elements = tuple(elements or default_element_names(A.size))
    lines = [f"algebra {name} over {signame} {{"]
    lines.append(f"  elements {' '.join(elements)};")
    for op, arity in A.sig.operations:
        for args in itertools.product(range(A.size), repeat=arity):
            named = " ".join(elements[a] for a in args)
            lines.append(f"  op {op}: {named} -> {elements[A.op(op, *args)]};")
    lines.append("}")
    return "\n".join(lines)


def render_matrix(
    m: LogicalMatrix,
    name: str,
    algebra_name: str,
    elements: Sequence[str] | None = None,
) -> str:
    elements = tuple(elements or default_element_names(m.algebra.size))
    designated = " ".join(elements[a] for a in sorted(m.designated))
    return (
        f"matrix {name} {{\n  algebra {algebra_name};\n"
        f"  designated{(' ' + designated) if designated else ''};\n}}"
    )


def render_system(
    system: DirectedSystem,
    name: str,
    component_names: Sequence[str],
    index_names: Sequence[str] | None = None,
    element_names: Sequence[Sequence[str]] | None = None,
) -> str:
    sl = system.semilattice
    index_names = tuple(index_names or (f"i{k}" for k in range(sl.size)))
    if element_names is None:
        element_names = [
            default_element_names(m.algebra.size) for m in system.matrices
        ]
    lines = [f"system {name} {{", "  semilattice {"]
    lines.append(f"    elements {' '.join(index_names)};")
    for i in range(sl.size):
        for j in range(i + 1, sl.size):
            lines.append(
                f"    join {index_names[i]} {index_names[j]} -> "
                f"{index_names[sl.join(i, j)]};"
            )
    lines.append("  }")
    for i in range(sl.size):
        lines.append(f"  component {index_names[i]}: {component_names[i]};")
    for i in range(sl.size):
        for j in range(sl.size):
            if i == j or not sl.leq(i, j):
                continue
            f = system.hom(i, j)
            entries = ", ".join(
                f"{element_names[i][a]}->{element_names[j][f(a)]}"
                for a in range(system.matrices[i].algebra.size)
            )
            lines.append(f"  hom {index_names[i]}->{index_names[j]}: {entries};")
    lines.append("}")
    return "\n".join(lines)


def render_calculus(H: HilbertCalculus, name: str, signame: str | None = None) -> str:
    signame = signame or _signature_name(H.signature)
    lines = [f"calculus {name} over {signame} {{"]
    for r in H.rules:
        if r.is_axiom:
            lines.append(f"  axiom ({r.name}): {to_text(r.conclusion)};")
        else:
            body = ", ".join(to_text(p) for p in r.premises)
            lines.append(f"  rule ({r.name}): {body} |- {to_text(r.conclusion)};")
    for label, lhs, rhs in H.scheme_members():
        lines.append(f"  scheme ({label}): {to_text(lhs)} = {to_text(rhs)};")
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# derivation certificates


def _split_top(text: str, separator: str) -> list[str]:
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == separator and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    tail = "".join(current).strip()
    if tail:
        parts.append(tail)
    return parts


def parse_term_list(text: str, sig: Signature) -> tuple[Term, ...]:
    """A comma-separated list of terms; commas inside parentheses do not split."""
    if not text.strip():
        return ()
    return tuple(parse_term(part, sig) for part in _split_top(text, ","))


def parse_certificate(
    text: str, H: HilbertCalculus, hypotheses: Iterable[Term]
) -> Derivation:
    """Parse the line-oriented certificate format back into a Derivation.

    Scheme steps carry no substitution in the surface syntax; it is
    reconstructed by matching the scheme side against the rewritten spot.
    """
    sig = H.signature
    members = {label: (lhs, rhs) for label, lhs, rhs in H.scheme_members()}
    steps: list[Step] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" BY ")
        if not rest:
            raise ValueError(f"certificate line lacks a justification: {line!r}")
        if not head.startswith("step "):
            raise ValueError(f"certificate line does not start with 'step': {line!r}")
        counter, _, term_text = head[len("step "):].partition(":")
        if int(counter.strip()) != len(steps):
            raise ValueError(f"certificate steps must be numbered in order: {line!r}")
        term = parse_term(term_text.strip(), sig)
        rest = rest.strip()
        if rest == "hyp":
            steps.append(Step(term, ("hyp",)))
            continue
        if rest.startswith("rule "):
            rest = rest[len("rule "):]
            name, _, tail = rest.partition(" sub ")
            if not tail.startswith("{"):
                raise ValueError(f"rule justification lacks a substitution: {line!r}")
            body, _, origin = tail[1:].partition("}")
            sub = {}
            for entry in _split_top(body, ","):
                if not entry:
                    continue
                var, _, value = entry.partition("=")
                sub[var.strip()] = parse_term(value.strip(), sig)
            origin = origin.strip()
            if origin.startswith("from"):
                origin = origin[len("from"):]
            parents = tuple(
                int(part) for part in origin.replace(",", " ").split() if part
            )
            steps.append(Step(term, ("rule", name.strip(), sub, parents)))
            continue
        if rest.startswith("scheme "):
            parts = rest[len("scheme "):].split(" ctx ", 1)
            label_dir = parts[0].split()
            if len(parts) != 2 or len(label_dir) != 2:
                raise ValueError(f"malformed scheme justification: {line!r}")
            label, arrow = label_dir
            if arrow not in ("->", "<-"):
                raise ValueError(f"scheme direction must be -> or <-: {line!r}")
            direction = "fwd" if arrow == "->" else "bwd"
            context_text, _, origin = parts[1].rpartition(" from ")
            parent = int(origin.strip())
            context = parse_context(context_text.strip(), sig)
            holes = [p for p, s in subterms(context) if s == Variable(HOLE)]
            if len(holes) != 1:
                raise ValueError(f"context must contain exactly one hole: {line!r}")
            path = holes[0]
            if label not in members:
                raise ValueError(f"unknown scheme member {label!r}")
            lhs, rhs = members[label]
            src = lhs if direction == "fwd" else rhs
            if not 0 <= parent < len(steps):
                raise ValueError(f"scheme cites a missing step: {line!r}")
            spot = steps[parent].term
            for k in path:
                spot = spot.args[k]
            sub = match(src, spot)
            if sub is None:
                sub = {}
            steps.append(Step(term, ("scheme", label, direction, path, sub, parent)))
            continue
        raise ValueError(f"unknown justification in certificate: {line!r}")
    return Derivation(tuple(hypotheses), steps)
