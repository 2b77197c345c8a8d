import pytest


@pytest.fixture
def cache_env(tmp_path, monkeypatch):
    """Point the facet cache at a scratch directory."""
    monkeypatch.setenv("BCROSS_CACHE", str(tmp_path))
    return tmp_path


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
