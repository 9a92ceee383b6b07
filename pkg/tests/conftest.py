import pytest

# filled by test_acceptance; printed once at the end of the session
ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")


PAPER_TUPLES = [
    (2, 3, 11, 17, 19),
    (2, 3, 11, 17, 23),
    (2, 3, 11, 17, 25),
    (2, 3, 11, 17, 29),
    (2, 5, 7, 9, 11),
    (2, 5, 7, 9, 13),
]
PAPER_INDICES = [22, 24, 34, 34, 22, 28]


@pytest.fixture
def paper_tuples():
    return list(PAPER_TUPLES)
