"""Acceptance gate: the nine end-to-end criteria at their stated tolerances.

Each test prints one PASS/FAIL line; the lines are also collected and shown
in the pytest terminal summary.
"""
import json
import time

import pytest

from dualpolar import cli
from dualpolar.suite import CRITERIA, run_suite

from .conftest import ACCEPTANCE_LINES


@pytest.fixture(scope="module")
def suite_report():
    return run_suite(seed=0)


def _record(result, extra=""):
    _, _, budget = CRITERIA[result.number]
    within = result.seconds < budget
    ok = result.passed and within
    line = (f"[{'PASS' if ok else 'FAIL'}] criterion {result.number}: {result.name} "
            f"({result.seconds:.2f}s, budget {budget:.0f}s){extra}")
    ACCEPTANCE_LINES[result.number] = line
    print(line)
    return ok, within


@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(suite_report, number):
    result = next(r for r in suite_report.results if r.number == number)
    ok, within = _record(result)
    assert result.passed, json.dumps(result.details, indent=1)[:4000]
    assert within, f"criterion {number} exceeded its time budget"


def _suite_json(tmp_path, seed, name):
    path = tmp_path / name
    code = cli.main(["suite", "--seed", str(seed), "--out", str(path)])
    return code, path.read_bytes()


def _verdicts(raw):
    data = json.loads(raw)
    out = {}
    for crit in data["criteria"]:
        out[crit["criterion"]] = crit["passed"]
        for entry in crit["details"].get("entries", []):
            if "noncompact" in entry:
                out[(entry["entry"], "polar")] = (entry["noncompact"], entry["compact"])
            if "cohomogeneity" in entry:
                out[(entry["entry"], "cohomogeneity")] = (entry["cohomogeneity"], entry["dual_cohomogeneity"])
    return out


def test_criterion_9_determinism(tmp_path):
    from dualpolar.suite import CriterionResult

    start = time.perf_counter()
    code0, first = _suite_json(tmp_path, 0, "a.json")
    reference = time.perf_counter() - start

    start = time.perf_counter()
    code1, second = _suite_json(tmp_path, 0, "b.json")
    others = [_suite_json(tmp_path, seed, f"s{seed}.json") for seed in (1, 2)]
    elapsed = time.perf_counter() - start

    identical = first == second
    same_verdicts = all(_verdicts(raw) == _verdicts(first) for _, raw in others)
    exit_ok = code0 == code1 == 0 and all(code == 0 for code, _ in others)
    passed = identical and same_verdicts and exit_ok
    result = CriterionResult(9, CRITERIA[9][0], passed, {}, elapsed)
    ok, _ = _record(result, f" [3 extra runs vs 3x reference {3 * reference:.2f}s]")
    assert identical, "repeated run with the same seed changed the JSON report"
    assert same_verdicts, "verdicts changed between seeds"
    assert exit_ok
    assert elapsed < 3 * reference + 1.0, "determinism check exceeded 3x suite time"
