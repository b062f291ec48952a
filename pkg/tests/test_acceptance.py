"""Acceptance criteria 1-13, each checked exactly and reported on one line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they are
produced; they are also repeated in the terminal summary.
"""

import io
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES
from scrolldiv import verify
from scrolldiv.cli import run

GOLDEN = Path(__file__).parent / "golden"


def report(number: int, name: str, passed: bool, detail: str = "") -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] {number:2d}. {name}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES[number] = line
    print(line)


@pytest.mark.parametrize("check", verify.CHECKS, ids=lambda c: c.__name__)
def test_criterion(check):
    result = check()
    report(result.number, result.name, result.passed, f"{result.checked} checks")
    assert result.passed, "\n".join(result.failures)


CLI_GOLDENS = [
    ("classify_0_0_3.json", ["classify", "--scroll", "0,0,3", "--json"]),
    ("intersect_0_0_3_d4_d5.json", ["intersect", "--scroll", "0,0,3", "--d", "4", "--d2", "5", "--json"]),
    ("cohom_0_0_3_a1_b0_x.json", ["cohom", "--scroll", "0,0,3", "--a", "1", "--b", "0", "--space", "x", "--json"]),
]


def test_criterion_13_cli_goldens():
    failures = []
    for name, argv in CLI_GOLDENS:
        out = io.StringIO()
        code = run(argv, stdout=out, stderr=io.StringIO())
        if code != 0 or out.getvalue() != (GOLDEN / name).read_text():
            failures.append(name)
    report(13, "CLI structured output is bit-identical to the golden files", not failures,
           f"{len(CLI_GOLDENS)} files")
    assert not failures, failures
