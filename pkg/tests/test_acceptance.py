"""One test per acceptance criterion; each prints a PASS/FAIL line (use -s)."""
import pytest

from fabal.acceptance import CRITERIA, run


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    res = run(number)
    print(res.line())
    assert res.passed, res.detail
