import pytest

from quiddity.polygon import enumerate_dissections, quiddity_of

# QS(3), QS(4), QS(5) written out by hand; used as an
# oracle, never derived from the enumerator.
QS_LISTED = {
    3: {(1, 1, 1)},
    4: {(2, 1, 2, 1), (1, 2, 1, 2)},
    5: {(3, 1, 2, 2, 1), (1, 3, 1, 2, 2), (2, 1, 3, 1, 2), (2, 2, 1, 3, 1), (1, 2, 2, 1, 3)},
}

_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def qs():
    """QS(n) for 3 <= n <= 8 from the enumerator, as sorted tuples of ints."""
    return {n: sorted(quiddity_of(d).as_ints() for d in enumerate_dissections("tri", n)) for n in range(3, 9)}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(num, title): acceptance criterion")
    config.addinivalue_line("markers", "slow: exhaustive campaign taking more than a few seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    num, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        detail = getattr(item, "_ac_detail", "")
        _ACCEPTANCE[num] = (title, rep.passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        title, ok, detail = _ACCEPTANCE[num]
        tail = f"  [{detail}]" if detail else ""
        terminalreporter.write_line(f"AC{num} {'PASS' if ok else 'FAIL'}  {title}{tail}")
