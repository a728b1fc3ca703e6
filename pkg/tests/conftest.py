import pytest

from pnorm.series import SeriesCache


@pytest.fixture
def cache():
    """Fresh in-memory series cache, isolated from the module default."""
    return SeriesCache()


@pytest.fixture
def disk_cache(tmp_path):
    return SeriesCache(tmp_path / "cache")


_acceptance_lines = []


@pytest.fixture
def report():
    """Record a one-line verdict for the acceptance summary."""

    def _record(label, ok, detail=""):
        _acceptance_lines.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
