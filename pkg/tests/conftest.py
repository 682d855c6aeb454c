import pytest
from hypothesis import settings

from qsf.macdonald import configure_cache

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session", autouse=True)
def _isolated_cache(tmp_path_factory):
    """Every test session gets its own on-disk table cache."""
    path = tmp_path_factory.mktemp("qsf-cache")
    mp = pytest.MonkeyPatch()
    mp.setenv("QSF_CACHE_DIR", str(path))
    configure_cache(path)
    yield path
    mp.undo()


_CRITERIA: list = []


@pytest.fixture
def criterion():
    """Record one acceptance line: criterion(label, passed, detail)."""

    def record(label, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {label}: {detail}"
        _CRITERIA.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
