import pytest

CRITERIA = {
    1: "every orientation of every 5-vertex graph has Seymour and Sullivan vertices (<= 60 s)",
    2: "7-vertex tournaments have Seymour vertices, 6-vertex ones Sullivan vertices (<= 5 min)",
    3: "enumerate reports all-have on G(10, 0.3), seeds 1..100 (<= 10 min)",
    4: "pruned and unpruned verdicts agree on 500 graphs; unpruned leaves = 2^m",
    5: "good-ordering orientation has exactly the image of D's Seymour set (100 pairs)",
    6: "blow-up: strongly connected, delta+ = d0 + n0, Seymour status preserved",
    7: "peeling: no A->B arcs, |X| strictly decreasing, lift agrees (1000 digraphs)",
    8: "Hall violator existence matches subset enumeration (300 instances)",
    9: "two-path counts by middle and by endpoints agree (10^4 digraphs)",
    10: "Chernoff calculators within 1e-12 of 50-digit evaluation (20-point grid)",
    11: "G(3000, 0.3) degree-upper >= 99/100 trials, cross-gap lower >= 99/100 pairs",
    12: "seeded CLI reruns give identical report data lines",
}

_results: dict[int, list[str]] = {}
_notes: dict[int, list[str]] = {}


@pytest.fixture
def note(request):
    """Attach a line of observations to the criterion summary."""
    marker = request.node.get_closest_marker("criterion")

    def add(text):
        if marker is not None:
            _notes.setdefault(marker.args[0], []).append(text)
    return add


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _results.setdefault(marker.args[0], []).append(rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(CRITERIA):
        outcomes = _results.get(k)
        if not outcomes:
            status = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            status = "PASS"
        else:
            status = "FAIL"
        tr.write_line(f"criterion {k:>2}: {status:<7} {CRITERIA[k]}")
        for line in _notes.get(k, []):
            tr.write_line(f"              {line}")
