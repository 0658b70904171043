"""Acceptance suite: every headline criterion at its stated tolerance.

Each criterion prints a PASS/FAIL line (run pytest with -s to see them all)
and is asserted individually.  The checks themselves live in
wildmckay.selftest so that `wildmckay selftest` runs the identical list.
"""

import pytest

from wildmckay.selftest import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"criterion_{c.number:02d}")
def test_criterion(criterion):
    result = criterion()
    print(result.line())
    assert result.passed, result.line()


def test_suite_is_complete():
    assert [c.number for c in CRITERIA] == list(range(1, 11))
