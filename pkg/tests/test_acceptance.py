"""End-to-end acceptance runs.

Each test drives one named verification scenario through the same entry
point the command line uses, checks every report line, and enforces a wall
clock budget.  One PASS/FAIL line per criterion is printed unbuffered so the
verdicts survive output capture.
"""

import pytest

from plonka.bounds import DEFAULT
from plonka.scenarios import SCENARIOS, run_scenario


@pytest.fixture
def announce(capsys):
    def emit(number: int, title: str, res, budget: float) -> None:
        verdict = "PASS" if res.ok and res.elapsed < budget else "FAIL"
        with capsys.disabled():
            print(
                f"criterion {number:2d} {title}: {verdict} "
                f"({res.elapsed:.2f}s, budget {budget:.0f}s)"
            )

    return emit


def run(name: str):
    res = run_scenario(name, DEFAULT)
    return res


def assert_clean(res) -> None:
    assert res.ok, [line for line in res.lines if not line.endswith(": ok")]
    for line in res.lines:
        assert line.endswith(": ok") or ": " in line, line


class TestAcceptance:
    def test_01_three_element_completeness(self, announce):
        res = run("wk3-completeness")
        announce(1, "exhaustive completeness on the three-element matrix", res, 30.0)
        assert_clean(res)
        assert res.elapsed < 30.0

    def test_02_leibniz_congruence_oracle(self, announce):
        res = run("leibniz-oracle")
        announce(2, "Leibniz congruences against the brute-force oracle", res, 60.0)
        assert_clean(res)
        assert res.elapsed < 60.0

    def test_03_sum_decomposition_round_trip(self, announce):
        res = run("plonka-round-trip")
        announce(3, "sum and decomposition round trips over the system family", res, 60.0)
        assert_clean(res)
        assert res.elapsed < 60.0

    def test_04_suszko_reducedness_characterization(self, announce):
        res = run("suszko-characterization")
        announce(4, "order criterion matches the computed Suszko congruences", res, 60.0)
        assert_clean(res)
        assert res.elapsed < 60.0

    def test_05_inconsistency_strengthening(self, announce):
        res = run("inconsistency-strengthening")
        announce(5, "two trivial components force a non-reduced sum", res, 60.0)
        assert_clean(res)
        assert res.elapsed < 60.0

    def test_06_seven_element_worked_example(self, announce):
        res = run("seven-element-matrix")
        announce(6, "seven-element sum: designation pattern and congruences", res, 60.0)
        assert_clean(res)
        assert res.elapsed < 60.0

    def test_07_eight_fiber_worked_example(self, announce):
        res = run("eight-fiber-system")
        announce(7, "eight-fiber sum stays reduced with two trivial parts", res, 60.0)
        assert_clean(res)
        assert res.elapsed < 60.0

    def test_08_calculus_transformation(self, announce):
        res = run("calculus-transformation")
        announce(8, "calculus transformation: shape, soundness, derivations", res, 60.0)
        assert_clean(res)
        assert res.elapsed < 60.0

    def test_09_hierarchy_checks(self, announce):
        res = run("hierarchy-checks")
        announce(9, "hierarchy placements of base and companion", res, 30.0)
        assert_clean(res)
        assert res.elapsed < 30.0

    def test_10_filter_engine_agreement(self, announce):
        res = run("filter-agreement")
        announce(10, "matrix and calculus filter enumerations agree", res, 60.0)
        assert_clean(res)
        assert res.elapsed < 60.0

    def test_registry_is_exactly_the_ten_criteria(self):
        assert list(SCENARIOS) == [
            "wk3-completeness",
            "leibniz-oracle",
            "plonka-round-trip",
            "suszko-characterization",
            "inconsistency-strengthening",
            "seven-element-matrix",
            "eight-fiber-system",
            "calculus-transformation",
            "hierarchy-checks",
            "filter-agreement",
        ]
