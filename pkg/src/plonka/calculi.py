"""Hilbert calculi with finite rules, derivation checking, bounded forward
proof search, and the left-companion transformation of a calculus.

The transformation keeps axioms, wraps each proper rule's conclusion in the
partition term folded over its premises, adds the variable-introduction rule
x |- t(x, y), and attaches the partition identities as bidirectional context
rewriting schemes.  Proof search is sound and deliberately incomplete: any
answer other than a derivation is UNKNOWN, never a refutation.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping, Sequence

from .bounds import DEFAULT, Bounds
from .matrices import (
    UNKNOWN,
    ByCalculus,
    ByMatrices,
    MatrixPresentation,
    check_equation_in_K,
    entails,
)
from .terms import (
    HOLE,
    Application,
    PartitionTerm,
    Signature,
    Term,
    Variable,
    fresh_variable,
    partition_identity_pairs,
    replace_at,
    subterms,
    substitute,
    term_depth,
    to_text,
    validate_term,
    vars_of,
)


class Rule:
    """A finite-premise rule; an axiom is a rule with no premises."""

    def __init__(self, name: str, premises: Iterable[Term], conclusion: Term):
        self.name = str(name)
        self.premises = tuple(premises)
        self.conclusion = conclusion

    @property
    def is_axiom(self) -> bool:
        return not self.premises

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Rule)
            and other.name == self.name
            and other.premises == self.premises
            and other.conclusion == self.conclusion
        )

    def __hash__(self) -> int:
        return hash((self.name, self.premises, self.conclusion))

    def __repr__(self) -> str:
        lhs = ", ".join(to_text(p) for p in self.premises)
        return f"Rule({self.name}: {lhs} |- {to_text(self.conclusion)})"


class SchemeFamily:
    """One labeled family of bidirectional context rewrites.

    members holds (label, lhs, rhs) triples; a family whose generating
    identity mentions an operation symbol schematically carries one member
    per operation of the signature.
    """

    def __init__(self, label: str, members: Iterable[tuple[str, Term, Term]]):
        self.label = str(label)
        self.members = tuple(members)
        if not self.members:
            raise ValueError(f"scheme family {label!r} has no members")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SchemeFamily)
            and other.label == self.label
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash((self.label, self.members))

    def __repr__(self) -> str:
        return f"SchemeFamily({self.label}, {len(self.members)} members)"


class HilbertCalculus:
    """Finitely many rules plus finitely many context-rewrite families."""

    def __init__(
        self,
        signature: Signature,
        rules: Iterable[Rule],
        context_schemes: Iterable[SchemeFamily] = (),
    ):
        rules = tuple(rules)
        schemes = tuple(context_schemes)
        names = [r.name for r in rules]
        if len(set(names)) != len(names):
            raise ValueError("rule names must be distinct")
        for r in rules:
            for t in (*r.premises, r.conclusion):
                validate_term(t, signature)
        for family in schemes:
            for _, lhs, rhs in family.members:
                validate_term(lhs, signature)
                validate_term(rhs, signature)
        self.signature = signature
        self.rules = rules
        self.context_schemes = schemes

    @property
    def axioms(self) -> tuple[Rule, ...]:
        return tuple(r for r in self.rules if r.is_axiom)

    @property
    def proper_rules(self) -> tuple[Rule, ...]:
        return tuple(r for r in self.rules if not r.is_axiom)

    def rule(self, name: str) -> Rule:
        for r in self.rules:
            if r.name == name:
                return r
        raise KeyError(f"no rule named {name!r}")

    def scheme_members(self) -> tuple[tuple[str, Term, Term], ...]:
        return tuple(m for family in self.context_schemes for m in family.members)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HilbertCalculus)
            and other.signature == self.signature
            and other.rules == self.rules
            and other.context_schemes == self.context_schemes
        )

    def __repr__(self) -> str:
        return (
            f"HilbertCalculus({len(self.axioms)} axioms, "
            f"{len(self.proper_rules)} rules, {len(self.context_schemes)} scheme families)"
        )


# ---------------------------------------------------------------------------
# fixtures: classical logic and its companion calculus


def boolean_signature() -> Signature:
    return Signature([("and", 2), ("or", 2), ("not", 1)])


def _or(a: Term, b: Term) -> Term:
    return Application("or", [a, b])


def _and(a: Term, b: Term) -> Term:
    return Application("and", [a, b])


def _not(a: Term) -> Term:
    return Application("not", [a])


def _imp(a: Term, b: Term) -> Term:
    # the arrow is an abbreviation: a -> b stands for (not a) or b
    return _or(_not(a), b)


def cl_calculus() -> HilbertCalculus:
    """Classical logic over and/or/not: disjunction axioms, the conjunction
    definition both ways, and modus ponens."""
    sig = boolean_signature()
    p, q, r = Variable("p"), Variable("q"), Variable("r")
    rules = [
        Rule("A1", [], _imp(_or(p, p), p)),
        Rule("A2", [], _imp(p, _or(p, q))),
        Rule("A3", [], _imp(_or(p, q), _or(q, p))),
        Rule("A4", [], _imp(_imp(p, q), _imp(_or(r, p), _or(r, q)))),
        Rule("A5", [], _imp(_and(p, q), _not(_or(_not(p), _not(q))))),
        Rule("A6", [], _imp(_not(_or(_not(p), _not(q))), _and(p, q))),
        Rule("MP", [p, _imp(p, q)], q),
    ]
    return HilbertCalculus(sig, rules)


def absorption_partition() -> PartitionTerm:
    return PartitionTerm.parse("and(x, or(x, y))", boolean_signature())


def _fold_partition(t: PartitionTerm, terms: Sequence[Term]) -> Term:
    out = terms[-1]
    for g in reversed(terms[:-1]):
        out = t.apply(g, out)
    return out


def transform_left(H: HilbertCalculus, t: PartitionTerm) -> HilbertCalculus:
    """The companion calculus: axioms kept; each rule's conclusion wrapped as
    t(conclusion, fold of premises); the introduction rule x |- t(x, y) added;
    the partition identities attached as context-rewrite families."""
    rules = []
    for r in H.rules:
        if r.is_axiom:
            rules.append(r)
        else:
            wrapped = t.apply(r.conclusion, _fold_partition(t, r.premises))
            rules.append(Rule(r.name, r.premises, wrapped))
    x, y = Variable("x"), Variable("y")
    rules.append(Rule("inc", [x], t.apply(x, y)))
    families: dict[str, list[tuple[str, Term, Term]]] = {}
    for label, lhs, rhs in partition_identity_pairs(H.signature, t):
        families.setdefault(label.split(".")[0], []).append((label, lhs, rhs))
    schemes = [SchemeFamily(key, members) for key, members in families.items()]
    return HilbertCalculus(H.signature, rules, schemes)


def pwk_calculus() -> HilbertCalculus:
    """The companion calculus of classical logic, spelled out directly: the
    six axioms, the wrapped modus ponens, the introduction rule, and the
    identity schemes of the absorption partition term."""
    sig = boolean_signature()
    t = absorption_partition()
    p, q = Variable("p"), Variable("q")
    base = cl_calculus()
    rules = list(base.axioms)
    rules.append(Rule("R1", [p, _imp(p, q)], t.apply(q, t.apply(p, _imp(p, q)))))
    rules.append(Rule("R2", [p], t.apply(p, q)))
    families: dict[str, list[tuple[str, Term, Term]]] = {}
    for label, lhs, rhs in partition_identity_pairs(sig, t):
        families.setdefault(label.split(".")[0], []).append((label, lhs, rhs))
    schemes = [SchemeFamily(key, members) for key, members in families.items()]
    return HilbertCalculus(sig, rules, schemes)


# ---------------------------------------------------------------------------
# comparison up to renaming


def _canonical_rename(terms: Sequence[Term]) -> tuple[Term, ...]:
    mapping: dict[str, Term] = {}
    for t in terms:
        for _, s in sorted(subterms(t), key=lambda item: item[0]):
            if isinstance(s, Variable) and s.name not in mapping:
                mapping[s.name] = Variable(f"v{len(mapping)}")
    return tuple(substitute(t, mapping) for t in terms)


def normalize_rule(r: Rule) -> tuple[tuple[str, ...], str]:
    renamed = _canonical_rename((*r.premises, r.conclusion))
    return tuple(to_text(t) for t in renamed[:-1]), to_text(renamed[-1])


def normalize_scheme(lhs: Term, rhs: Term) -> tuple[str, str]:
    a = _canonical_rename((lhs, rhs))
    b = _canonical_rename((rhs, lhs))
    return min(
        (to_text(a[0]), to_text(a[1])),
        (to_text(b[0]), to_text(b[1])),
    )


def same_calculus_up_to_renaming(H1: HilbertCalculus, H2: HilbertCalculus) -> bool:
    """Rule-for-rule equality modulo variable names, rule names, ordering,
    and scheme orientation."""
    if H1.signature != H2.signature:
        return False
    if {normalize_rule(r) for r in H1.rules} != {normalize_rule(r) for r in H2.rules}:
        return False
    s1 = {normalize_scheme(lhs, rhs) for _, lhs, rhs in H1.scheme_members()}
    s2 = {normalize_scheme(lhs, rhs) for _, lhs, rhs in H2.scheme_members()}
    return s1 == s2


# ---------------------------------------------------------------------------
# derivations


def match(pattern: Term, t: Term, binding: Mapping[str, Term] | None = None):
    """One-way matching: a substitution on the pattern's variables, or None."""
    out = dict(binding or {})

    def go(p: Term, s: Term) -> bool:
        if isinstance(p, Variable):
            if p.name in out:
                return out[p.name] == s
            out[p.name] = s
            return True
        if not isinstance(s, Application) or s.op != p.op or len(s.args) != len(p.args):
            return False
        return all(go(pa, sa) for pa, sa in zip(p.args, s.args))

    return out if go(pattern, t) else None


def _subterm_at(t: Term, path: tuple[int, ...]) -> Term:
    for k in path:
        if not isinstance(t, Application) or k >= len(t.args):
            raise ValueError(f"path {path} does not exist in {to_text(t)}")
        t = t.args[k]
    return t


class Step:
    """One derivation line: a term plus its justification.

    Justifications:
      ("hyp",)
      ("rule", name, substitution, premise_indices)
      ("scheme", member_label, direction, path, substitution, from_index)
    where direction is "fwd" (left-to-right) or "bwd".
    """

    def __init__(self, term: Term, justification: tuple):
        self.term = term
        self.justification = justification

    def __repr__(self) -> str:
        return f"Step({to_text(self.term)}, {self.justification[0]})"


class Derivation:
    def __init__(self, hypotheses: Iterable[Term], steps: Sequence[Step]):
        self.hypotheses = tuple(hypotheses)
        self.steps = tuple(steps)
        if not self.steps:
            raise ValueError("a derivation needs at least one step")

    @property
    def conclusion(self) -> Term:
        return self.steps[-1].term

    def render(self) -> str:
        """The line-oriented certificate format."""
        lines = []
        for k, step in enumerate(self.steps):
            kind = step.justification[0]
            if kind == "hyp":
                just = "hyp"
            elif kind == "rule":
                _, name, sub, parents = step.justification
                body = ", ".join(f"{v}={to_text(sub[v])}" for v in sorted(sub))
                origin = ", ".join(str(i) for i in parents)
                just = f"rule {name} sub {{{body}}} from {origin}"
            else:
                _, label, direction, path, _, parent = step.justification
                arrow = "->" if direction == "fwd" else "<-"
                context = replace_at(self.steps[parent].term, path, Variable(HOLE))
                just = f"scheme {label} {arrow} ctx {to_text(context)} from {parent}"
            lines.append(f"step {k}: {to_text(step.term)} BY {just}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"Derivation({len(self.steps)} steps, concludes {to_text(self.conclusion)})"


class DerivationCheck:
    def __init__(self, ok: bool, failing_step: int | None = None, message: str = ""):
        self.ok = ok
        self.failing_step = failing_step
        self.message = message

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        if self.ok:
            return "DerivationCheck(ok)"
        return f"DerivationCheck(step {self.failing_step}: {self.message})"


def check_derivation(H: HilbertCalculus, d: Derivation) -> DerivationCheck:
    """Exact replay of every step; reports the first failure."""
    hypotheses = set(d.hypotheses)
    members = {label: (lhs, rhs) for label, lhs, rhs in H.scheme_members()}
    for k, step in enumerate(d.steps):
        kind = step.justification[0]
        if kind == "hyp":
            if step.term not in hypotheses:
                return DerivationCheck(False, k, "term is not a hypothesis")
        elif kind == "rule":
            _, name, sub, parents = step.justification
            try:
                rule = H.rule(name)
            except KeyError:
                return DerivationCheck(False, k, f"no rule named {name!r}")
            if len(parents) != len(rule.premises):
                return DerivationCheck(False, k, "wrong number of cited premises")
            if any(not 0 <= i < k for i in parents):
                return DerivationCheck(False, k, "premise citation out of range")
            needed = vars_of(rule.premises) | vars_of(rule.conclusion)
            if set(sub) != set(needed):
                return DerivationCheck(False, k, "substitution domain mismatch")
            for premise, i in zip(rule.premises, parents):
                if substitute(premise, sub) != d.steps[i].term:
                    return DerivationCheck(False, k, f"premise {i} does not match")
            if substitute(rule.conclusion, sub) != step.term:
                return DerivationCheck(False, k, "conclusion does not match")
        elif kind == "scheme":
            _, label, direction, path, sub, parent = step.justification
            if label not in members:
                return DerivationCheck(False, k, f"no scheme member {label!r}")
            if not 0 <= parent < k:
                return DerivationCheck(False, k, "premise citation out of range")
            lhs, rhs = members[label]
            src, dst = (lhs, rhs) if direction == "fwd" else (rhs, lhs)
            before = d.steps[parent].term
            try:
                spot = _subterm_at(before, path)
            except ValueError:
                return DerivationCheck(False, k, "context path does not exist")
            if substitute(src, sub) != spot:
                return DerivationCheck(False, k, "rewrite source does not match")
            if replace_at(before, path, substitute(dst, sub)) != step.term:
                return DerivationCheck(False, k, "rewrite result does not match")
        else:
            return DerivationCheck(False, k, f"unknown justification {kind!r}")
    return DerivationCheck(True)


# ---------------------------------------------------------------------------
# bounded proof search


def bounded_prove(
    H: HilbertCalculus,
    premises: Iterable[Term],
    goal: Term,
    bounds: Bounds = DEFAULT,
):
    """Forward saturation up to the step budget; a Derivation or UNKNOWN.

    Sound (every answer replays through check_derivation) and incomplete:
    substitutions for variables not fixed by matching are drawn from a finite
    pool of shallow terms over the ambient variables plus one fresh variable,
    and scheme rewrites fire at positions no deeper than the scheme depth.
    """
    premises = tuple(dict.fromkeys(premises))
    base_vars = sorted(vars_of(premises) | vars_of(goal))
    fresh = fresh_variable(base_vars)
    pool: list[Term] = [Variable(v) for v in base_vars + [fresh]]
    for _, s in sorted(subterms(goal), key=lambda item: to_text(item[1])):
        if s not in pool and term_depth(s) <= bounds.substitution_depth:
            pool.append(s)

    steps: list[Step] = []
    index: dict[Term, int] = {}

    def record(term: Term, justification: tuple) -> bool:
        if term in index:
            return False
        index[term] = len(steps)
        steps.append(Step(term, justification))
        return True

    for p in premises:
        record(p, ("hyp",))

    members = H.scheme_members()

    def expand_goal_axioms() -> list[tuple[Term, tuple]]:
        found = []
        for rule in H.axioms:
            for path, s in sorted(subterms(goal), key=lambda item: item[0]):
                sub = match(rule.conclusion, s)
                if sub is not None:
                    found.append((s, ("rule", rule.name, sub, ())))
        return found

    wave_cap = 2 * bounds.proof_steps

    def expand_pooled_axioms() -> list[tuple[Term, tuple]]:
        found = []
        for rule in H.axioms:
            variables = sorted(vars_of(rule.conclusion))
            if len(pool) ** len(variables) <= 4096:
                for values in itertools.product(pool, repeat=len(variables)):
                    sub = dict(zip(variables, values))
                    found.append(
                        (substitute(rule.conclusion, sub), ("rule", rule.name, sub, ()))
                    )
        return found

    def expand_rules(known: list[tuple[int, Term]]) -> list[tuple[Term, tuple]]:
        found = []
        for rule in H.proper_rules:
            def backtrack(i: int, sub: dict, used: tuple[int, ...]):
                if len(found) >= wave_cap:
                    return
                if i == len(rule.premises):
                    open_vars = sorted(vars_of(rule.conclusion) - set(sub))
                    if len(open_vars) > 2 or len(pool) ** len(open_vars) > 4096:
                        return
                    for values in itertools.product(pool, repeat=len(open_vars)):
                        full = dict(sub)
                        full.update(zip(open_vars, values))
                        found.append(
                            (
                                substitute(rule.conclusion, full),
                                ("rule", rule.name, full, used),
                            )
                        )
                    return
                for k, fact in known:
                    extended = match(rule.premises[i], fact, sub)
                    if extended is not None:
                        backtrack(i + 1, extended, used + (k,))

            backtrack(0, {}, ())
        return found

    def expand_schemes(known: list[tuple[int, Term]]) -> list[tuple[Term, tuple]]:
        found = []
        for k, fact in known:
            if len(found) >= wave_cap:
                break
            for path, spot in sorted(subterms(fact), key=lambda item: item[0]):
                if len(path) > bounds.scheme_depth:
                    continue
                for label, lhs, rhs in members:
                    for direction, src, dst in (("fwd", lhs, rhs), ("bwd", rhs, lhs)):
                        sub = match(src, spot)
                        if sub is None:
                            continue
                        rewritten = replace_at(fact, path, substitute(dst, sub))
                        found.append(
                            (rewritten, ("scheme", label, direction, path, sub, k))
                        )
        return found

    def absorb(wave: list[tuple[Term, tuple]]) -> bool:
        wave.sort(key=lambda item: (term_depth(item[0]), to_text(item[0])))
        progress = False
        for term, justification in wave:
            if len(steps) >= bounds.proof_steps:
                return progress
            if record(term, justification):
                progress = True
        return progress

    while True:
        if goal in index:
            return _extract(premises, steps, index[goal])
        if len(steps) >= bounds.proof_steps:
            return UNKNOWN
        known = [(i, s.term) for i, s in enumerate(steps)]
        # rule applications and goal-directed axiom instances come first,
        # then scheme rewrites; blind pooled axiom instantiation is a last
        # resort on stall, so it cannot flood the fact base while the
        # premise-consuming tiers still make progress
        progress = absorb(expand_rules(known) + expand_goal_axioms())
        progress = absorb(expand_schemes(known)) or progress
        if not progress:
            progress = absorb(expand_pooled_axioms())
        if not progress:
            return UNKNOWN


def _extract(premises: tuple[Term, ...], steps: list[Step], last: int) -> Derivation:
    """Prune to the ancestors of the concluding step and renumber."""
    needed = {last}
    frontier = [last]
    while frontier:
        k = frontier.pop()
        justification = steps[k].justification
        if justification[0] == "rule":
            parents = justification[3]
        elif justification[0] == "scheme":
            parents = (justification[5],)
        else:
            parents = ()
        for i in parents:
            if i not in needed:
                needed.add(i)
                frontier.append(i)
    order = sorted(needed)
    renumber = {old: new for new, old in enumerate(order)}
    out = []
    for old in order:
        term, justification = steps[old].term, steps[old].justification
        if justification[0] == "rule":
            name, sub, parents = justification[1], justification[2], justification[3]
            justification = ("rule", name, sub, tuple(renumber[i] for i in parents))
        elif justification[0] == "scheme":
            _, label, direction, path, sub, parent = justification
            justification = ("scheme", label, direction, path, sub, renumber[parent])
        out.append(Step(term, justification))
    return Derivation(premises, out)


# ---------------------------------------------------------------------------
# partition-term admissibility


def partition_term_check(L, t: PartitionTerm, bounds: Bounds = DEFAULT):
    """Is t a partition function for the presented logic?

    Matrix presentations get the exact sufficient check: x entails t(x, y)
    and every partition identity holds in every presentation algebra.
    Calculus presentations are probed by bounded search and may be UNKNOWN;
    they are never refuted by a failed search.
    """
    x, y = Variable("x"), Variable("y")
    if isinstance(L, (ByMatrices, MatrixPresentation)):
        if not entails(L, [x], t.apply(x, y)):
            return False
        sig = L.signature
        for _, lhs, rhs in partition_identity_pairs(sig, t):
            if not check_equation_in_K(L, lhs, rhs):
                return False
        return True
    if isinstance(L, ByCalculus):
        H = L.calculus
        if bounded_prove(H, [x], t.apply(x, y), bounds) is UNKNOWN:
            return UNKNOWN
        for _, lhs, rhs in partition_identity_pairs(H.signature, t):
            if bounded_prove(H, [lhs], rhs, bounds) is UNKNOWN:
                return UNKNOWN
            if bounded_prove(H, [rhs], lhs, bounds) is UNKNOWN:
                return UNKNOWN
        return True
    raise TypeError(f"not a logic presentation: {L!r}")
