import pytest

from supercong.suite import registry


@pytest.fixture
def temp_checks():
    """Register throwaway checks for a test and remove them afterwards."""
    added = []

    def add(id, *args, **kw):
        registry._loaded()
        d = registry.register(id, *args, **kw)
        added.append(id)
        return d

    yield add
    for id in added:
        registry._REGISTRY.pop(id, None)


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
