import pytest

from lieverify import _fpcore_py

KERNELS = [pytest.param(_fpcore_py, id="python")]
try:
    from lieverify import _fpcore
except ImportError:
    pass
else:
    KERNELS.append(pytest.param(_fpcore, id="cython"))


@pytest.fixture(params=KERNELS)
def kernel(request):
    return request.param


_ACCEPTANCE_LINES = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
