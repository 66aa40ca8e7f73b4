"""The bundled law suites stay green on fresh seeds (the CLI gates on these)."""

import pytest

from polygame.laws import SUITES, run_suite


@pytest.mark.parametrize("suite", sorted(SUITES))
@pytest.mark.parametrize("seed", [0, 11])
def test_suite_passes(suite, seed):
    checks = run_suite(suite, seed)
    failing = [c for c in checks if not c["ok"] and not c["name"].startswith("info:")]
    assert failing == [], failing


def test_unknown_suite_is_rejected():
    with pytest.raises(ValueError):
        run_suite("nonsense", 0)


def test_checks_are_report_shaped():
    for c in run_suite("category", 1):
        assert set(c) == {"name", "ok", "details"}
        assert isinstance(c["name"], str) and isinstance(c["ok"], bool)
