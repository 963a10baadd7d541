import pytest
from hypothesis import settings

from addsep import _kernels_py
from addsep._backend import _ckernels

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []

KERNELS = [pytest.param(_kernels_py, id="python")]
if _ckernels is not None:
    KERNELS.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=KERNELS)
def kernels(request):
    return request.param


@pytest.fixture
def record():
    def _record(name, ok, detail=""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
