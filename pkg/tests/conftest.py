from collections import OrderedDict

# criterion number -> [title, passed, failed]
_CRITERIA: "OrderedDict[int, list]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _CRITERIA.setdefault(number, [title, 0, 0])


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    mark = dict(report.user_properties).get("criterion")
    if mark is None:
        return
    entry = _CRITERIA[mark]
    entry[1 if report.passed else 2] += 1


def pytest_runtest_setup(item):
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        item.user_properties.append(("criterion", mark.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, passed, failed = _CRITERIA[number]
        if passed + failed == 0:
            status = "NOT RUN"
        else:
            status = "FAIL" if failed else "PASS"
        terminalreporter.write_line(f"criterion {number:2d} {status:7s} {title}")
