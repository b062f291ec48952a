import pytest

from scrolldiv import classify


@pytest.fixture
def cone3():
    """Cone over the twisted cubic in P^5."""
    return classify([0, 0, 3])


@pytest.fixture
def quadric_cone():
    return classify([0, 2])


@pytest.fixture
def cone2():
    """Cone over a conic, (0,0,2) in P^4."""
    return classify([0, 0, 2])


@pytest.fixture
def hc():
    """Scroll (0,1,2): vertex is a point of codimension 3."""
    return classify([0, 1, 2])


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
