import pytest
from hypothesis import strategies as st

from cofiso import Element, FinPointSet, Perm, box_points

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        _CRITERIA.append((number, title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    by_number = {}
    for number, title, outcome in _CRITERIA:
        by_number.setdefault(number, []).append((title, outcome))
    for number in sorted(by_number):
        checks = by_number[number]
        verdict = "PASS" if all(o == "passed" for _, o in checks) else "FAIL"
        if len(checks) == 1:
            terminalreporter.write_line(f"criterion {number}: {verdict}  {checks[0][0]}")
            continue
        terminalreporter.write_line(f"criterion {number}: {verdict}")
        for title, outcome in checks:
            mark = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"    {mark}  {title}")


@st.composite
def perms(draw, n):
    return Perm(draw(st.permutations(range(1, n + 1))))


@st.composite
def point_sets(draw, n, m=4, max_size=5):
    box = box_points(n, m).points
    pts = draw(st.sets(st.sampled_from(box), max_size=max_size))
    return FinPointSet(pts, n)


@st.composite
def elements(draw, n=None, m=4, max_size=5):
    if n is None:
        n = draw(st.sampled_from([2, 3]))
    return Element(draw(perms(n)), draw(point_sets(n, m, max_size)))


@st.composite
def element_tuples(draw, k, m=4, max_size=5):
    n = draw(st.sampled_from([2, 3]))
    return tuple(draw(elements(n, m, max_size)) for _ in range(k))
