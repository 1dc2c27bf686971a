import pytest

from abelcodes.algebra import AlgebraContext

GRID = [
    (2, (7,)),
    (2, (3, 3)),
    (2, (3, 5)),
    (2, (1, 7)),
    (3, (8,)),
    (3, (2, 4)),
    (5, (6,)),
    (7, (3, 3)),
]

# criterion number -> (description, passed)
ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


@pytest.fixture(params=GRID, ids=lambda c: f"q{c[0]}-r{'x'.join(map(str, c[1]))}")
def ctx(request):
    q, r = request.param
    return AlgebraContext(q, r)


@pytest.fixture
def hamming():
    return AlgebraContext(2, (7,))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        desc, ok = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {desc}")
