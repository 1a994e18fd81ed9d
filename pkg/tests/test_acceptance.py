"""One test per acceptance criterion, each printing its own verdict line."""

import pytest

from indexcode.selfcheck import FULL_LEVEL, run_criterion


@pytest.mark.parametrize("k", FULL_LEVEL)
def test_criterion(k, capsys):
    res = run_criterion(k)
    with capsys.disabled():
        print(f"\n{res.line}")
    assert res.ok, res.detail
