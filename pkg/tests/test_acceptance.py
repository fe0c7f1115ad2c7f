"""One test per acceptance criterion, each at its stated tolerance.

Every criterion prints a single PASS/FAIL line, collected again in the
terminal summary.  Findings (observations that do not decide the verdict)
are printed under the line.
"""
import json

import pytest

from toricgraph.suite import CHECKS, SuiteConfig, run_criterion


@pytest.mark.parametrize("number", sorted(CHECKS))
def test_criterion(number, record_line):
    res = run_criterion(number, SuiteConfig())
    line = res.line()
    record_line(line)
    print(line)
    for f in res.findings:
        print("  finding:", f)
    assert res.passed, json.dumps(res.to_json(), indent=1, default=str)
