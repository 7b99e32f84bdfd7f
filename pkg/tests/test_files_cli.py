"""The workspace file format, certificates, and the command line."""

import json

import pytest

from plonka.calculi import (
    bounded_prove,
    check_derivation,
    cl_calculus,
    pwk_calculus,
    same_calculus_up_to_renaming,
)
from plonka.cli import main
from plonka.files import (
    FileSyntaxError,
    Workspace,
    parse_certificate,
    parse_term_list,
    render_matrix,
)
from plonka.fixtures import (
    b2_matrix,
    boolean_signature,
    eight_fiber_system,
    seven_element_system,
    wk3_matrix,
)
from plonka.sums import isomorphic_systems, plonka_sum
from plonka.terms import parse_term

SIG = boolean_signature()


def term(text: str):
    return parse_term(text, SIG)


def load(path) -> Workspace:
    ws = Workspace()
    ws.load_file(str(path))
    return ws


class TestCorpusRoundTrips:
    def test_classical_matrix(self, fixture_dir):
        ws = load(fixture_dir / "cl.matrices")
        assert ws.matrices["cl"] == b2_matrix()

    def test_three_element_matrix(self, fixture_dir):
        ws = load(fixture_dir / "wk3.matrices")
        assert ws.matrices["wk3"] == wk3_matrix()

    def test_seven_element_system(self, fixture_dir):
        ws = load(fixture_dir / "seven_element.system")
        assert isomorphic_systems(ws.systems["seven_parts"], seven_element_system())
        assert plonka_sum(ws.systems["seven_parts"]) == plonka_sum(seven_element_system())

    def test_seven_element_sum_matrix(self, fixture_dir):
        ws = load(fixture_dir / "seven_element.matrix")
        assert ws.matrices["seven"] == plonka_sum(seven_element_system())

    def test_eight_fiber_system(self, fixture_dir):
        ws = load(fixture_dir / "eight_fiber.system")
        assert isomorphic_systems(ws.systems["eight_fibers"], eight_fiber_system())

    def test_calculi(self, fixture_dir):
        assert load(fixture_dir / "cl.hilbert").calculi["cl"] == cl_calculus()
        assert load(fixture_dir / "pwk.hilbert").calculi["pwk"] == pwk_calculus()

    def test_rendered_document_reloads(self):
        from plonka.files import render_algebra, render_signature

        m = plonka_sum(seven_element_system())
        text = "\n".join([
            render_signature(m.algebra.sig, "sig"),
            render_algebra(m.algebra, "b7", "sig"),
            render_matrix(m, "seven", "b7"),
        ])
        ws = Workspace()
        ws.load(text, "<memory>")
        assert ws.matrices["seven"] == m


class TestWorkspaceSemantics:
    HEADER = "signature sig { op and 2; op or 2; op not 1 }\n"
    ALGEBRA = (
        "algebra b2 over sig {\n  elements f t;\n"
        "  op and: f f -> f; op and: f t -> f; op and: t f -> f; op and: t t -> t;\n"
        "  op or: f f -> f; op or: f t -> t; op or: t f -> t; op or: t t -> t;\n"
        "  op not: f -> t; op not: t -> f;\n}\n"
    )

    def test_identical_redefinition_tolerated(self):
        ws = Workspace()
        text = self.HEADER + self.ALGEBRA
        ws.load(text, "<first>")
        ws.load(text, "<second>")
        assert ws.algebras["b2"].size == 2

    def test_conflicting_redefinition_rejected(self):
        ws = Workspace()
        ws.load(self.HEADER, "<first>")
        with pytest.raises(FileSyntaxError, match="already defined"):
            ws.load("signature sig { op and 2; }", "<second>")

    def test_error_carries_position(self):
        ws = Workspace()
        with pytest.raises(FileSyntaxError) as info:
            ws.load("signature sig { op and two; }", "<memory>")
        assert info.value.line == 1
        assert info.value.column > 1

    def test_unknown_element_in_table(self):
        ws = Workspace()
        bad = self.HEADER + self.ALGEBRA.replace("op not: t -> f", "op not: t -> q")
        with pytest.raises(FileSyntaxError, match="unknown element"):
            ws.load(bad, "<memory>")

    def test_comments_and_blank_lines_ignored(self):
        ws = Workspace()
        ws.load("# a comment\n\n" + self.HEADER + "# trailing\n", "<memory>")
        assert "sig" in ws.signatures

    def test_macro_expansion(self):
        ws = Workspace()
        ws.load(
            self.HEADER
            + "calculus tiny over sig {\n"
            + "  define t(a, b) = and(a, or(a, b));\n"
            + "  rule (inc): p |- t(p, q);\n"
            + "}\n",
            "<memory>",
        )
        H = ws.calculi["tiny"]
        assert H.rule("inc").conclusion == term("and(p, or(p, q))")

    def test_selectors(self, fixture_dir):
        ws = load(fixture_dir / "cl.matrices")
        name, m = ws.matrix()
        assert name == "cl" and m == b2_matrix()
        with pytest.raises(KeyError):
            ws.matrix("absent")

    def test_term_lists_split_at_top_level_only(self):
        out = parse_term_list("and(x, y), not(x)", SIG)
        assert out == (term("and(x, y)"), term("not(x)"))
        assert parse_term_list("  ", SIG) == ()


class TestCertificates:
    def test_corpus_certificate_replays(self, fixture_dir):
        H = load(fixture_dir / "pwk.hilbert").calculi["pwk"]
        text = (fixture_dir / "detachment.cert").read_text()
        hyps = [term("p"), term("or(not(p), q)")]
        d = parse_certificate(text, H, hyps)
        assert check_derivation(H, d)
        assert d.conclusion == term("and(q, or(q, and(p, or(p, or(not(p), q)))))")

    def test_render_parse_round_trip(self):
        H = pwk_calculus()
        hyps = [term("p"), term("or(not(p), q)")]
        proof = bounded_prove(H, hyps, term("and(q, or(q, and(p, or(p, or(not(p), q)))))"))
        again = parse_certificate(proof.render(), H, hyps)
        assert check_derivation(H, again)
        assert [s.term for s in again.steps] == [s.term for s in proof.steps]

    def test_tampered_certificate_fails_replay(self, fixture_dir):
        H = load(fixture_dir / "pwk.hilbert").calculi["pwk"]
        text = (fixture_dir / "detachment.cert").read_text()
        broken = text.replace("step 1: or(not(p), q)", "step 1: or(not(q), p)")
        assert broken != text
        hyps = [term("p"), term("or(not(p), q)")]
        d = parse_certificate(broken, H, hyps)
        verdict = check_derivation(H, d)
        assert not verdict
        assert verdict.failing_step is not None

    def test_misnumbered_certificate_rejected(self):
        H = pwk_calculus()
        with pytest.raises(ValueError, match="numbered in order"):
            parse_certificate("step 1: p BY hyp", H, [term("p")])


def run_cli(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestCommandLine:
    def test_sum(self, capsys, fixture_dir):
        code, out = run_cli(capsys, "sum", "--system", str(fixture_dir / "seven_element.system"))
        assert code == 0
        assert "matrix" in out

    def test_sum_output_reloads(self, capsys, fixture_dir):
        _, out = run_cli(capsys, "sum", "--system", str(fixture_dir / "seven_element.system"))
        ws = Workspace()
        ws.load(out, "<cli>")
        _, m = ws.matrix()
        assert m == plonka_sum(seven_element_system())

    def test_decompose_output_reloads(self, capsys, fixture_dir):
        code, out = run_cli(
            capsys,
            "decompose",
            "--matrix", str(fixture_dir / "seven_element.matrix"),
            "--partition", "and(x, or(x, y))",
        )
        assert code == 0
        ws = Workspace()
        ws.load(out, "<cli>")
        _, system = ws.system()
        assert isomorphic_systems(system, seven_element_system())

    def test_decompose_rejects_non_sums(self, capsys, fixture_dir):
        code, out = run_cli(
            capsys,
            "decompose",
            "--matrix", str(fixture_dir / "cl.matrices"),
            "--partition", "or(x, y)",
        )
        assert code == 1

    def test_leibniz_report(self, capsys, fixture_dir):
        code, out = run_cli(capsys, "leibniz", "--matrix", str(fixture_dir / "seven_element.matrix"))
        assert code == 0
        assert "{a,zero}" in out and "{c,one}" in out
        assert "reduced: false" in out

    def test_suszko_report(self, capsys, fixture_dir):
        # the partition term switches on the fiberwise filter computation;
        # without it the generic fallback is exact but far too slow here
        code, out = run_cli(
            capsys,
            "suszko",
            "--matrix", str(fixture_dir / "seven_element.matrix"),
            "--logic", str(fixture_dir / "dl.matrices"),
            "--companion",
            "--partition", "and(x, or(x, y))",
        )
        assert code == 0
        assert "reduced: true" in out

    def test_filters_report(self, capsys, fixture_dir):
        code, out = run_cli(
            capsys,
            "filters",
            "--matrix", str(fixture_dir / "wk3.matrices"),
            "--logic", str(fixture_dir / "cl.matrices"),
            "--companion",
        )
        assert code == 0
        assert "{t,n}" in out and "count: 2" in out

    def test_entails_affirmative(self, capsys, fixture_dir):
        code, out = run_cli(
            capsys,
            "entails",
            "--logic", str(fixture_dir / "cl.matrices"),
            "--premises", "x, not(x)",
            "--goal", "y",
        )
        assert code == 0

    def test_companion_negative_with_witness(self, capsys, fixture_dir):
        code, out = run_cli(
            capsys,
            "companion",
            "--logic", str(fixture_dir / "cl.matrices"),
            "--premises", "x, not(x)",
            "--goal", "y",
        )
        assert code == 1
        assert "admissible-premises: (none)" in out
        assert "witness valuation: y=f" in out

    def test_companion_json_mirror(self, capsys, fixture_dir):
        code, out = run_cli(
            capsys,
            "companion",
            "--format", "json",
            "--logic", str(fixture_dir / "cl.matrices"),
            "--premises", "x, not(x)",
            "--goal", "y",
        )
        assert code == 1
        payload = json.loads(out)
        assert payload["status"] == "negative"
        assert payload["result"]["holds"] is False
        assert payload["witness"]["valuation"] == "y=f"

    def test_hilbertize_round_trip(self, capsys, fixture_dir, tmp_path):
        code, out = run_cli(
            capsys,
            "hilbertize",
            "--calculus", str(fixture_dir / "cl.hilbert"),
            "--partition", "and(x, or(x, y))",
        )
        assert code == 0
        ws = Workspace()
        ws.load(out, "<cli>")
        _, H = ws.calculus()
        assert same_calculus_up_to_renaming(H, pwk_calculus())

    def test_prove_emits_a_replayable_certificate(self, capsys, fixture_dir, tmp_path):
        goal = "and(q, or(q, and(p, or(p, or(not(p), q)))))"
        code, out = run_cli(
            capsys,
            "prove",
            "--calculus", str(fixture_dir / "pwk.hilbert"),
            "--premises", "p, or(not(p), q)",
            "--goal", goal,
        )
        assert code == 0
        cert = tmp_path / "out.cert"
        cert.write_text("\n".join(
            line for line in out.splitlines() if line.startswith("step ")
        ) + "\n")
        code2, out2 = run_cli(
            capsys,
            "check",
            "--calculus", str(fixture_dir / "pwk.hilbert"),
            "--certificate", str(cert),
            "--premises", "p, or(not(p), q)",
            "--goal", goal,
        )
        assert code2 == 0

    def test_prove_unknown_exit(self, capsys, fixture_dir):
        code, out = run_cli(
            capsys,
            "prove",
            "--calculus", str(fixture_dir / "pwk.hilbert"),
            "--goal", "or(not(p), p)",
        )
        assert code == 2

    def test_check_rejects_wrong_goal(self, capsys, fixture_dir):
        code, out = run_cli(
            capsys,
            "check",
            "--calculus", str(fixture_dir / "pwk.hilbert"),
            "--certificate", str(fixture_dir / "detachment.cert"),
            "--premises", "p, or(not(p), q)",
            "--goal", "q",
        )
        assert code == 1

    def test_parse_error_exit(self, capsys, fixture_dir):
        code, _ = run_cli(
            capsys,
            "entails",
            "--logic", str(fixture_dir / "cl.matrices"),
            "--premises", "x,",
            "--goal", "and(x",
        )
        assert code == 3

    def test_missing_file_exit(self, capsys):
        code, _ = run_cli(capsys, "leibniz", "--matrix", "no_such_file.matrices")
        assert code == 3

    def test_classify(self, capsys, fixture_dir):
        code, out = run_cli(
            capsys,
            "classify",
            "--logic", str(fixture_dir / "cl.matrices"),
            "--companion",
        )
        assert code == 0
        assert "protoalgebraic" in out

    def test_verify_paper_list(self, capsys):
        code, out = run_cli(capsys, "verify-paper", "--list")
        assert code == 0
        assert "wk3-completeness" in out

    def test_verify_paper_single_scenario(self, capsys):
        code, out = run_cli(capsys, "verify-paper", "leibniz-oracle")
        assert code == 0
        assert "ok" in out

    def test_unknown_scenario_rejected(self, capsys):
        code, _ = run_cli(capsys, "verify-paper", "nonsense")
        assert code == 3

    def test_output_is_deterministic(self, capsys, fixture_dir):
        args = (
            "filters",
            "--matrix", str(fixture_dir / "wk3.matrices"),
            "--logic", str(fixture_dir / "cl.matrices"),
            "--companion",
        )
        first = run_cli(capsys, *args)
        second = run_cli(capsys, *args)
        assert first == second

    def test_json_status_matches_exit_code(self, capsys, fixture_dir):
        cases = [
            (0, ("entails", "--logic", str(fixture_dir / "cl.matrices"),
                 "--premises", "x", "--goal", "or(x, y)")),
            (1, ("entails", "--logic", str(fixture_dir / "cl.matrices"),
                 "--premises", "x", "--goal", "y")),
            (2, ("prove", "--calculus", str(fixture_dir / "pwk.hilbert"),
                 "--goal", "or(not(p), p)")),
        ]
        expected = {0: "affirmative", 1: "negative", 2: "unknown"}
        for want, args in cases:
            code, out = run_cli(capsys, *args, "--format", "json")
            assert code == want
            payload = json.loads(out)
            assert payload["status"] == expected[want]
