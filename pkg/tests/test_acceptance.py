"""The twelve acceptance criteria, each run at the full level.

Each test records one PASS/FAIL line; the lines are printed together in the
"acceptance criteria" section at the end of the pytest run.  Running this file
directly prints the lines without pytest.
"""

import pytest

from domfractal import verify


@pytest.mark.parametrize("check", verify.CHECKS, ids=[f"criterion_{i:02d}" for i in range(1, 13)])
def test_criterion(check, acceptance_lines):
    result = verify.run_check(check, "full")
    line = result.line()
    acceptance_lines.append(line)
    print(line)
    assert result.passed, f"expected {result.expected!r}, got {result.actual!r}. {result.detail}"


if __name__ == "__main__":
    for c in verify.run_all("full").checks:
        print(c.line())
