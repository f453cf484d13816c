import contextlib

import pytest
from hypothesis import HealthCheck, settings

from ecc_spectra import _backend
from ecc_spectra.generators import FIXTURES, vertex

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

BACKENDS = ["python"] + (["compiled"] if _backend.COMPILED_AVAILABLE else [])


@contextlib.contextmanager
def using(name):
    before = _backend.name()
    _backend.use(name)
    try:
        yield
    finally:
        _backend.use(before)


@pytest.fixture(params=BACKENDS)
def backend(request):
    with using(request.param):
        yield request.param


@pytest.fixture
def fx():
    return lambda name: FIXTURES[name].value


def vs(*labels):
    """Zero-based vertex set from figure labels."""
    return frozenset(vertex(f"v{i}") for i in labels)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        title, ok = RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
