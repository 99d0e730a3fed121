import pytest

from worldviews.epistemic import world_view_key


def keys(views):
    """World views as sorted tuples of sorted literal-string tuples."""
    return tuple(sorted(world_view_key(w) for w in views))


def wv(*sets):
    return tuple(sorted(tuple(sorted(s)) for s in sets))


def lits(*names):
    from worldviews.syntax import parse_formula

    return frozenset(parse_formula(n) for n in names)


def view(*sets):
    return frozenset(lits(*s) for s in sets)


@pytest.fixture
def P():
    from worldviews import corpus

    return corpus.load


# ---------------------------------------------------------------- acceptance lines

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and report.passed):
        return
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, {"title": title, "outcomes": []})
    if hasattr(report, "wasxfail"):
        entry["outcomes"].append(("xfail", item.name, report.wasxfail))
    elif report.passed:
        entry["outcomes"].append(("pass", item.name, ""))
    elif report.skipped:
        entry["outcomes"].append(("skip", item.name, ""))
    else:
        entry["outcomes"].append(("fail", item.name, ""))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        kinds = {k for k, _, _ in entry["outcomes"]}
        verdict = "PASS" if kinds == {"pass"} else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2} {verdict}  {entry['title']}")
        for kind, name, reason in entry["outcomes"]:
            if kind != "pass":
                note = f": {reason}" if reason else ""
                terminalreporter.write_line(f"             {kind} {name}{note}")
