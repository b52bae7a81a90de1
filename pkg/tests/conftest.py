from collections import defaultdict

_OUTCOMES = defaultdict(list)
_TITLES = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion this test implements")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark:
            item.user_properties.append(("acceptance", mark.args[0]))
            _TITLES[mark.args[0]] = mark.args[1]


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("acceptance")
    if crit is not None and (report.when == "call" or report.outcome != "passed"):
        _OUTCOMES[crit].append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_OUTCOMES):
        results = _OUTCOMES[crit]
        flag = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"criterion {crit}: {flag} ({sum(results)}/{len(results)} checks) {_TITLES[crit]}")
