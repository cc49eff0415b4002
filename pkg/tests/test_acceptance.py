"""Run every built-in verification suite and report one line per suite.

Each suite re-derives a documented result from scratch and checks it
against frozen expectations, so this module doubles as a smoke test of
the whole library surface. The printed lines look like

    PASS criterion-1 insertion-fidelity [0.01s]: ...

and a failing suite fails the corresponding test with its detail text.
"""

import pytest

from shifted_hecke.acceptance import run_suite, suite_names

NAMES = suite_names()


def test_thirteen_suites_registered():
    assert len(NAMES) == 13
    assert len(set(NAMES)) == 13


@pytest.mark.parametrize("name", NAMES)
def test_suite(name, capsys):
    result = run_suite(name)
    with capsys.disabled():
        print(result.line())
    assert result.ok, result.line()
