from collections import defaultdict

import pytest

from harmonet.graphs import Solid, make_complete, make_lattice, make_path, make_platonic, make_ring


def shipped_graphs():
    """One representative of every family, including all five solids."""
    graphs = [
        make_path(2),
        make_path(3),
        make_path(5),
        make_ring(3),
        make_ring(4),
        make_ring(11),
        make_complete(4),
        make_complete(6),
        make_lattice(1, 5),
        make_lattice(2, 3),
        make_lattice(2, 4),
        make_lattice(3, 3),
    ]
    graphs += [make_platonic(s) for s in Solid]
    return graphs


def vertex_transitive_graphs():
    return [g for g in shipped_graphs() if g.family != "path" or g.n == 2]


@pytest.fixture(params=shipped_graphs(), ids=lambda g: g.name)
def any_graph(request):
    return request.param


@pytest.fixture(params=vertex_transitive_graphs(), ids=lambda g: g.name)
def symmetric_graph(request):
    return request.param


# --- acceptance criterion report ------------------------------------------

_criteria = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion this test checks")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is not None and call.when == "call":
        item.user_properties.append(("criterion", marker.args))


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria[value].append((report.nodeid.split("::")[-1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), results in sorted(_criteria.items()):
        ok = all(passed for _, passed in results)
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {title}")
        for name, passed in results:
            if not passed:
                terminalreporter.write_line(f"         failed: {name}")
