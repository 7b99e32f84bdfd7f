"""Command-line workbench binding the engines to the structure file format.

Every command loads self-contained structure files, runs one engine
operation, and emits a report.  Exit codes: 0 for affirmative or complete
results, 1 for negative results carrying a witness, 2 when an answer is
unknown or a bound was refused, 3 for parse and validation errors.

Reports are byte-identical across runs with equal inputs, flags, and seed;
wall-clock timing appears only under --timings.  Commands whose payload is a
structure document or a derivation certificate print the report lines as
`#` comments so that stdout remains loadable as-is.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, Sequence

from .algebras import evaluate
from .bounds import DEFAULT, Bounds, BoundExceeded
from .calculi import HilbertCalculus, bounded_prove, check_derivation, transform_left
from .files import (
    FileSyntaxError,
    Workspace,
    default_element_names,
    parse_certificate,
    parse_term_list,
    render_algebra,
    render_calculus,
    render_matrix,
    render_signature,
    render_system,
)
from .hierarchy import TruthWitness, check_truth_witness, proto_refutation_sample
from .matrices import (
    UNKNOWN,
    ByCalculus,
    ByMatrices,
    LogicalMatrix,
    MatrixPresentation,
    companion_entails,
    companion_presentation,
    enumerate_filters,
    leibniz,
    logic_entails,
    suszko,
)
from .sums import algebra_fibration, decompose, plonka_sum
from .terms import (
    PartitionTerm,
    Term,
    TermSyntaxError,
    parse_term,
    partition_identity_pairs,
    to_text,
    vars_of,
)

EXIT_AFFIRMATIVE = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_INVALID = 3

_STATUS_EXIT = {
    "affirmative": EXIT_AFFIRMATIVE,
    "negative": EXIT_NEGATIVE,
    "unknown": EXIT_UNKNOWN,
}


class UsageError(ValueError):
    """Bad command-line arguments; reported on stderr with exit code 3."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would sys.exit(2); we own the codes
        raise UsageError(message)


class Report:
    """One command outcome: ordered payload fields, a status, an optional
    witness, and an optional document (structure file or certificate)."""

    def __init__(self, command: str, bounds: Bounds):
        self.command = command
        self.bounds = bounds
        self.fields: list[tuple[str, object]] = []
        self.status = "affirmative"
        self.witness: dict[str, object] | None = None
        self.document: str | None = None
        self.elapsed: float | None = None

    def add(self, key: str, value: object) -> None:
        self.fields.append((key, value))

    @property
    def exit_code(self) -> int:
        return _STATUS_EXIT[self.status]

    def _config_pairs(self) -> list[tuple[str, object]]:
        b = self.bounds
        return [
            ("max-carrier", b.max_carrier),
            ("max-subsets", b.max_subsets),
            ("product-guard", b.product_guard),
            ("scheme-depth", b.scheme_depth),
            ("proof-steps", b.proof_steps),
            ("substitution-depth", b.substitution_depth),
            ("seed", b.seed),
            ("jobs", b.jobs),
        ]

    def _render_value(self, value: object) -> str:
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, (list, tuple)):
            if not value:
                return "(none)"
            return " | ".join(self._render_value(v) for v in value)
        return str(value)

    def render_text(self, timings: bool) -> str:
        prefix = "# " if self.document is not None else ""
        lines = [f"{prefix}command: {self.command}"]
        config = " ".join(f"{k}={v}" for k, v in self._config_pairs())
        lines.append(f"{prefix}config: {config}")
        for key, value in self.fields:
            lines.append(f"{prefix}{key}: {self._render_value(value)}")
        if self.witness is not None:
            for key, value in sorted(self.witness.items()):
                lines.append(f"{prefix}witness {key}: {self._render_value(value)}")
        lines.append(f"{prefix}status: {self.status}")
        if timings and self.elapsed is not None:
            lines.append(f"{prefix}elapsed-seconds: {self.elapsed:.3f}")
        if self.document is not None:
            lines.append("")
            lines.append(self.document)
        return "\n".join(lines)

    def render_json(self, timings: bool) -> str:
        def plain(value: object):
            if isinstance(value, (list, tuple)):
                return [plain(v) for v in value]
            if isinstance(value, dict):
                return {k: plain(v) for k, v in value.items()}
            return value

        payload = {
            "command": self.command,
            "config": {k.replace("-", "_"): v for k, v in self._config_pairs()},
            "result": {k.replace("-", "_"): plain(v) for k, v in self.fields},
            "status": self.status,
            "witness": plain(self.witness) if self.witness is not None else None,
            "document": self.document,
        }
        if timings and self.elapsed is not None:
            payload["elapsed_seconds"] = round(self.elapsed, 3)
        return json.dumps(payload, indent=2, sort_keys=True)

    def emit(self, args: argparse.Namespace) -> int:
        if args.format == "json":
            print(self.render_json(args.timings))
        else:
            print(self.render_text(args.timings))
        return self.exit_code


def _bounds_from(args: argparse.Namespace) -> Bounds:
    return DEFAULT.with_(
        max_carrier=args.max_carrier,
        max_subsets=args.max_subsets,
        scheme_depth=args.scheme_depth,
        proof_steps=args.proof_steps,
        seed=args.seed,
        jobs=args.jobs,
    )


# ---------------------------------------------------------------------------
# workspace plumbing


def _load(path: str) -> Workspace:
    ws = Workspace()
    ws.load_file(path)
    return ws


def _matrix_names(ws: Workspace, matrix_name: str) -> tuple[str, ...]:
    algebra_name = ws.matrix_algebra.get(matrix_name)
    if algebra_name is not None and algebra_name in ws.element_names:
        return ws.element_names[algebra_name]
    _, m = ws.matrix(matrix_name)
    return default_element_names(m.algebra.size)


class LoadedLogic:
    """A logic presentation read from one structure file.

    A file with matrix blocks presents the logic of all its matrices in
    definition order; a file with a single calculus block presents that.
    matrix_names/element_names describe the base matrices for witness output.
    """

    def __init__(self, path: str, bounds: Bounds):
        ws = _load(path)
        self.workspace = ws
        if ws.matrices:
            self.kind = "matrices"
            self.matrix_names = tuple(ws.matrices)
            self.element_names = tuple(_matrix_names(ws, n) for n in self.matrix_names)
            self.presentation: ByMatrices | ByCalculus = ByMatrices(
                list(ws.matrices.values())
            )
            self.label = ",".join(self.matrix_names)
        elif ws.calculi:
            name, calculus = ws.calculus(None)
            self.kind = "calculus"
            self.matrix_names = ()
            self.element_names = ()
            self.presentation = ByCalculus(calculus, scheme_depth=bounds.scheme_depth)
            self.label = name
        else:
            raise ValueError(f"{path} defines neither matrices nor a calculus")

    def lift(self, partition_text: str | None) -> None:
        """Replace the presentation by its left companion (one-lifted
        matrices, optionally tagged with a partition term)."""
        if not isinstance(self.presentation, ByMatrices):
            raise ValueError("--companion requires a logic given by matrices")
        t = (
            PartitionTerm.parse(partition_text, self.presentation.signature)
            if partition_text
            else None
        )
        base = self.presentation.presentation
        self.presentation = companion_presentation(base, t)
        self.element_names = tuple(
            names + ("inf",) for names in self.element_names
        )
        self.label += "^l"


def _valuation_witness(
    logic: LoadedLogic, outcome, premises: Sequence[Term], goal: Term
) -> dict[str, object]:
    """Render a failed entailment's counter-valuation, re-validated here
    against the named matrix before it is reported."""
    index = outcome.matrix_index
    base = logic.presentation
    matrices = (
        base.matrices if isinstance(base, ByMatrices) else tuple(base)
    )
    m = matrices[index]
    used = outcome.premises_used if outcome.premises_used is not None else premises
    for p in used:
        assert evaluate(m.algebra, p, outcome.valuation) in m.designated
    assert evaluate(m.algebra, goal, outcome.valuation) not in m.designated
    if logic.matrix_names:
        matrix_label: object = logic.matrix_names[index]
        names = logic.element_names[index]
    else:
        matrix_label = index
        names = default_element_names(m.algebra.size)
    valuation = {v: names[a] for v, a in sorted(outcome.valuation.items())}
    return {
        "matrix": matrix_label,
        "valuation": " ".join(f"{v}={a}" for v, a in valuation.items()),
    }


def _subset_names(F, names: Sequence[str]) -> str:
    return "{" + ",".join(names[a] for a in sorted(F)) + "}"


def _blocks_payload(theta, names: Sequence[str]) -> list[str]:
    return [_subset_names(block, names) for block in theta.blocks]


def _logic_options(cmd: _Parser, companion: bool = True) -> None:
    cmd.add_argument("--logic", required=True, metavar="FILE",
                     help="structure file presenting the logic")
    if companion:
        cmd.add_argument("--companion", action="store_true",
                         help="use the left variable inclusion companion instead")
        cmd.add_argument("--partition", metavar="TERM", default=None,
                         help="partition term t(x,y) tagging the companion")


def _loaded_logic(args: argparse.Namespace, bounds: Bounds) -> LoadedLogic:
    logic = LoadedLogic(args.logic, bounds)
    if getattr(args, "companion", False):
        logic.lift(args.partition)
    return logic


# ---------------------------------------------------------------------------
# commands


def cmd_sum(args: argparse.Namespace) -> int:
    bounds = _bounds_from(args)
    ws = _load(args.system)
    name, system = ws.system(args.name)
    rep = Report(f"sum system={args.system} name={name}", bounds)
    m = plonka_sum(system)
    index_names = ws.system_index_names.get(
        name, default_element_names(system.semilattice.size)
    )
    component_names = ws.system_components.get(name)
    element_names: list[str] = []
    for k in range(system.semilattice.size):
        local = (
            _matrix_names(ws, component_names[k])
            if component_names is not None
            else default_element_names(system.matrices[k].algebra.size)
        )
        element_names.extend(f"{index_names[k]}_{e}" for e in local)
    rep.add("components", system.semilattice.size)
    rep.add("carrier", m.algebra.size)
    rep.add("designated", _subset_names(m.designated, element_names))
    rep.document = "\n\n".join(
        [
            render_signature(m.algebra.sig),
            render_algebra(m.algebra, f"{name}_sum", elements=element_names),
            render_matrix(m, f"{name}_sum_matrix", f"{name}_sum", element_names),
        ]
    )
    return rep.emit(args)


def _equation_counterexample(
    m: LogicalMatrix, lhs: Term, rhs: Term
) -> dict[str, int] | None:
    from .matrices import all_valuations

    for v in all_valuations(sorted(vars_of(lhs) | vars_of(rhs)), m.algebra.size):
        if evaluate(m.algebra, lhs, v) != evaluate(m.algebra, rhs, v):
            return v
    return None


def cmd_decompose(args: argparse.Namespace) -> int:
    bounds = _bounds_from(args)
    ws = _load(args.matrix)
    name, m = ws.matrix(args.name)
    t = PartitionTerm.parse(args.partition, m.algebra.sig)
    rep = Report(
        f"decompose matrix={args.matrix} name={name} partition={to_text(t.term)}",
        bounds,
    )
    fibration = algebra_fibration(m.algebra, t)
    if fibration is None:
        rep.status = "negative"
        rep.witness = {"reason": "the term is not a partition function here"}
        for label, lhs, rhs in partition_identity_pairs(m.algebra.sig, t):
            v = _equation_counterexample(m, lhs, rhs)
            if v is not None:
                names = _matrix_names(ws, name)
                rep.witness = {
                    "identity": label,
                    "equation": f"{to_text(lhs)} = {to_text(rhs)}",
                    "valuation": " ".join(
                        f"{var}={names[a]}" for var, a in sorted(v.items())
                    ),
                }
                break
        return rep.emit(args)
    system = decompose(m, t)
    rep.add("fibers", len(fibration.fibers))
    names = _matrix_names(ws, name)
    parts = [render_signature(m.algebra.sig)]
    component_names = []
    fiber_elements = []
    for i, fiber in enumerate(fibration.fibers):
        local = tuple(names[g] for g in fiber.members)
        fiber_elements.append(local)
        parts.append(render_algebra(fiber.algebra, f"{name}_f{i}", elements=local))
        parts.append(
            render_matrix(system.matrices[i], f"{name}_m{i}", f"{name}_f{i}", local)
        )
        component_names.append(f"{name}_m{i}")
        rep.add(f"fiber-{i}", "{" + ",".join(local) + "}")
    parts.append(
        render_system(
            system,
            f"{name}_parts",
            component_names,
            index_names=tuple(f"i{k}" for k in range(system.semilattice.size)),
            element_names=fiber_elements,
        )
    )
    rep.document = "\n\n".join(parts)
    return rep.emit(args)


def cmd_leibniz(args: argparse.Namespace) -> int:
    bounds = _bounds_from(args)
    ws = _load(args.matrix)
    name, m = ws.matrix(args.name)
    rep = Report(f"leibniz matrix={args.matrix} name={name}", bounds)
    theta = leibniz(m.algebra, m.designated, bounds)
    names = _matrix_names(ws, name)
    rep.add("blocks", _blocks_payload(theta, names))
    rep.add("reduced", theta.is_identity())
    return rep.emit(args)


def cmd_suszko(args: argparse.Namespace) -> int:
    bounds = _bounds_from(args)
    ws = _load(args.matrix)
    name, m = ws.matrix(args.name)
    logic = _loaded_logic(args, bounds)
    rep = Report(
        f"suszko matrix={args.matrix} name={name} logic={logic.label}", bounds
    )
    theta = suszko(m.algebra, m.designated, logic.presentation, bounds)
    names = _matrix_names(ws, name)
    rep.add("blocks", _blocks_payload(theta, names))
    rep.add("reduced", theta.is_identity())
    return rep.emit(args)


def cmd_filters(args: argparse.Namespace) -> int:
    bounds = _bounds_from(args)
    ws = _load(args.matrix)
    name, m = ws.matrix(args.name)
    logic = _loaded_logic(args, bounds)
    rep = Report(
        f"filters matrix={args.matrix} name={name} logic={logic.label}", bounds
    )
    lattice = enumerate_filters(m.algebra, logic.presentation, bounds)
    names = _matrix_names(ws, name)
    rep.add("count", len(lattice))
    rep.add("filters", [_subset_names(F, names) for F in lattice])
    rep.add("designated-is-filter", frozenset(m.designated) in lattice)
    return rep.emit(args)


def _entailment_command(args: argparse.Namespace, companion: bool) -> int:
    bounds = _bounds_from(args)
    logic = LoadedLogic(args.logic, bounds)
    sig = logic.presentation.signature
    premises = parse_term_list(args.premises or "", sig)
    goal = parse_term(args.goal, sig)
    verb = "companion" if companion else "entails"
    rep = Report(
        f"{verb} logic={args.logic} premises={args.premises or ''} goal={args.goal}",
        bounds,
    )
    if companion:
        admissible = tuple(p for p in premises if vars_of(p) <= vars_of(goal))
        rep.add("admissible-premises", [to_text(p) for p in admissible] or ["(none)"])
        outcome = companion_entails(logic.presentation, premises, goal)
        used = admissible
    else:
        outcome = logic_entails(logic.presentation, premises, goal)
        used = premises
    if outcome is UNKNOWN:
        rep.status = "unknown"
        rep.add("answer", "no derivation found within the step budget")
        return rep.emit(args)
    rep.add("holds", bool(outcome))
    if not outcome:
        rep.status = "negative"
        rep.witness = _valuation_witness(logic, outcome, used, goal)
    return rep.emit(args)


def cmd_entails(args: argparse.Namespace) -> int:
    return _entailment_command(args, companion=False)


def cmd_companion(args: argparse.Namespace) -> int:
    return _entailment_command(args, companion=True)


def cmd_hilbertize(args: argparse.Namespace) -> int:
    bounds = _bounds_from(args)
    ws = _load(args.calculus)
    name, H = ws.calculus(args.name)
    t = PartitionTerm.parse(args.partition, H.signature)
    rep = Report(
        f"hilbertize calculus={args.calculus} name={name} partition={to_text(t.term)}",
        bounds,
    )
    transformed = transform_left(H, t)
    rep.add("axioms", len(transformed.axioms))
    rep.add("rules", len(transformed.proper_rules))
    rep.add("scheme-members", len(transformed.scheme_members()))
    signame = ws.calculus_signature[name]
    rep.document = "\n\n".join(
        [
            render_signature(H.signature, signame),
            render_calculus(transformed, f"{name}_l", signame),
        ]
    )
    return rep.emit(args)


def cmd_prove(args: argparse.Namespace) -> int:
    bounds = _bounds_from(args)
    ws = _load(args.calculus)
    name, H = ws.calculus(args.name)
    premises = parse_term_list(args.premises or "", H.signature)
    goal = parse_term(args.goal, H.signature)
    rep = Report(
        f"prove calculus={args.calculus} name={name} "
        f"premises={args.premises or ''} goal={args.goal}",
        bounds,
    )
    found = bounded_prove(H, premises, goal, bounds)
    if found is UNKNOWN:
        rep.status = "unknown"
        rep.add("answer", "no derivation found within the step budget")
        return rep.emit(args)
    verdict = check_derivation(H, found)
    assert verdict.ok, f"search returned an invalid derivation: {verdict.message}"
    rep.add("steps", len(found.steps))
    rep.add("conclusion", to_text(found.conclusion))
    rep.document = found.render()
    return rep.emit(args)


def cmd_check(args: argparse.Namespace) -> int:
    bounds = _bounds_from(args)
    ws = _load(args.calculus)
    name, H = ws.calculus(args.name)
    premises = parse_term_list(args.premises or "", H.signature)
    with open(args.certificate, encoding="utf-8") as handle:
        text = handle.read()
    rep = Report(
        f"check calculus={args.calculus} name={name} certificate={args.certificate}",
        bounds,
    )
    derivation = parse_certificate(text, H, premises)
    verdict = check_derivation(H, derivation)
    rep.add("steps", len(derivation.steps))
    rep.add("valid", verdict.ok)
    if not verdict.ok:
        rep.status = "negative"
        rep.witness = {"failing-step": verdict.failing_step, "reason": verdict.message}
        return rep.emit(args)
    rep.add("conclusion", to_text(derivation.conclusion))
    if args.goal is not None:
        goal = parse_term(args.goal, H.signature)
        if derivation.conclusion != goal:
            rep.status = "negative"
            rep.witness = {
                "reason": "certificate proves a different conclusion",
                "expected": args.goal,
                "found": to_text(derivation.conclusion),
            }
    return rep.emit(args)


def cmd_classify(args: argparse.Namespace) -> int:
    bounds = _bounds_from(args)
    logic = _loaded_logic(args, bounds)
    rep = Report(f"classify logic={logic.label}", bounds)
    report = proto_refutation_sample(
        logic.presentation, args.depth, args.size, bounds
    )
    rep.add("proto-candidates", report.total)
    rep.add("proto-failing", report.failing)
    rep.add(
        "proto-witnesses",
        [
            "{" + ",".join(to_text(d) for d in delta) + "}"
            for delta in report.witnesses
        ],
    )
    rep.add("base-consistent", report.base_consistent)
    rep.add(
        "protoalgebraic",
        "refuted up to bounds" if report.all_failed else "witnessed",
    )
    if args.truth_equations is not None:
        sig = logic.presentation.signature
        equations = []
        for part in args.truth_equations.split(";"):
            lhs_text, _, rhs_text = part.partition("=")
            if not rhs_text:
                raise ValueError(f"truth equation lacks '=': {part!r}")
            equations.append((parse_term(lhs_text, sig), parse_term(rhs_text, sig)))
        if args.models is None:
            raise ValueError("--truth-equations requires --models")
        models_ws = _load(args.models)
        models = list(models_ws.matrices.values())
        holds = check_truth_witness(
            logic.presentation, TruthWitness(equations), models, bounds
        )
        rep.add("truth-equations", args.truth_equations)
        rep.add("truth-defined", holds)
        if not holds:
            rep.status = "negative"
            rep.witness = {"reason": "equations do not define the designated sets"}
    return rep.emit(args)


def cmd_verify_paper(args: argparse.Namespace) -> int:
    from .scenarios import SCENARIOS, run_scenario

    bounds = _bounds_from(args)
    if args.list:
        rep = Report("verify-paper list", bounds)
        rep.add("scenarios", list(SCENARIOS))
        return rep.emit(args)
    if args.scenario is None:
        raise UsageError("a scenario id is required (or --list)")
    names = list(SCENARIOS) if args.scenario == "all" else [args.scenario]
    for n in names:
        if n not in SCENARIOS:
            raise ValueError(
                f"unknown scenario {n!r}; known: {', '.join(SCENARIOS)} or 'all'"
            )
    rep = Report(f"verify-paper scenario={args.scenario}", bounds)
    all_ok = True
    elapsed = 0.0
    for n in names:
        result = run_scenario(n, bounds)
        all_ok = all_ok and result.ok
        elapsed += result.elapsed
        rep.add(n, [*result.lines, "ok" if result.ok else "FAILED"])
    rep.elapsed = elapsed
    if not all_ok:
        rep.status = "negative"
        rep.witness = {"reason": "a scenario check failed; see the lines above"}
    return rep.emit(args)


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> _Parser:
    parser = _Parser(prog="plonka", description=__doc__, add_help=True)
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-carrier", type=int, default=DEFAULT.max_carrier)
    common.add_argument("--max-subsets", type=int, default=DEFAULT.max_subsets)
    common.add_argument("--scheme-depth", type=int, default=DEFAULT.scheme_depth)
    common.add_argument("--proof-steps", type=int, default=DEFAULT.proof_steps)
    common.add_argument("--seed", type=int, default=DEFAULT.seed)
    common.add_argument("--jobs", type=int, default=DEFAULT.jobs)
    common.add_argument("--timings", action="store_true")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def command(name: str, func: Callable, help_text: str) -> _Parser:
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.set_defaults(func=func)
        return cmd

    cmd = command("sum", cmd_sum, "Plonka sum of a directed system")
    cmd.add_argument("--system", required=True, metavar="FILE")
    cmd.add_argument("--name", default=None)

    cmd = command("decompose", cmd_decompose, "Plonka decomposition of a matrix")
    cmd.add_argument("--matrix", required=True, metavar="FILE")
    cmd.add_argument("--name", default=None)
    cmd.add_argument("--partition", required=True, metavar="TERM")

    cmd = command("leibniz", cmd_leibniz, "Leibniz congruence of a matrix")
    cmd.add_argument("--matrix", required=True, metavar="FILE")
    cmd.add_argument("--name", default=None)

    cmd = command("suszko", cmd_suszko, "Suszko congruence of a matrix in a logic")
    cmd.add_argument("--matrix", required=True, metavar="FILE")
    cmd.add_argument("--name", default=None)
    _logic_options(cmd)

    cmd = command("filters", cmd_filters, "all deductive filters on a matrix algebra")
    cmd.add_argument("--matrix", required=True, metavar="FILE")
    cmd.add_argument("--name", default=None)
    _logic_options(cmd)

    cmd = command("entails", cmd_entails, "matrix or calculus entailment")
    _logic_options(cmd, companion=False)
    cmd.add_argument("--premises", default="", metavar="TERMS")
    cmd.add_argument("--goal", required=True, metavar="TERM")

    cmd = command("companion", cmd_companion, "left variable inclusion entailment")
    _logic_options(cmd, companion=False)
    cmd.add_argument("--premises", default="", metavar="TERMS")
    cmd.add_argument("--goal", required=True, metavar="TERM")

    cmd = command("hilbertize", cmd_hilbertize, "transform a calculus for the companion")
    cmd.add_argument("--calculus", required=True, metavar="FILE")
    cmd.add_argument("--name", default=None)
    cmd.add_argument("--partition", required=True, metavar="TERM")

    cmd = command("prove", cmd_prove, "bounded proof search, emitting a certificate")
    cmd.add_argument("--calculus", required=True, metavar="FILE")
    cmd.add_argument("--name", default=None)
    cmd.add_argument("--premises", default="", metavar="TERMS")
    cmd.add_argument("--goal", required=True, metavar="TERM")

    cmd = command("check", cmd_check, "replay a derivation certificate")
    cmd.add_argument("--calculus", required=True, metavar="FILE")
    cmd.add_argument("--name", default=None)
    cmd.add_argument("--certificate", required=True, metavar="FILE")
    cmd.add_argument("--premises", default="", metavar="TERMS")
    cmd.add_argument("--goal", default=None, metavar="TERM")

    cmd = command("classify", cmd_classify, "hierarchy probes for a logic")
    _logic_options(cmd)
    cmd.add_argument("--depth", type=int, default=2)
    cmd.add_argument("--size", type=int, default=2)
    cmd.add_argument("--models", default=None, metavar="FILE")
    cmd.add_argument("--truth-equations", default=None, metavar="EQNS",
                     help="semicolon-separated lhs = rhs pairs in the variable x")

    cmd = command("verify-paper", cmd_verify_paper, "run a named acceptance scenario")
    cmd.add_argument("scenario", nargs="?", default=None)
    cmd.add_argument("--list", action="store_true")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as err:  # --help
        return int(err.code or 0)
    start = time.perf_counter()
    try:
        return args.func(args)
    except BoundExceeded as err:
        rep = Report(args.subcommand, _bounds_from(args))
        rep.status = "unknown"
        rep.add("answer", f"bound refused: {err}")
        rep.elapsed = time.perf_counter() - start
        return rep.emit(args)
    except (FileSyntaxError, TermSyntaxError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, KeyError, TypeError, OSError) as err:
        message = err.args[0] if err.args else err
        print(f"error: {message}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
