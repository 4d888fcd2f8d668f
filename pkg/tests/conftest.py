from collections import defaultdict

import pytest

_criteria: dict[int, dict] = defaultdict(lambda: {"title": "", "outcomes": [], "notes": []})


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


def pytest_runtest_setup(item):
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        item.user_properties.append(("criterion", mark.args))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = props["criterion"]
        entry = _criteria[number]
        entry["title"] = title
        entry["outcomes"].append(report.outcome)
        for key, value in report.user_properties:
            if key == "report":
                entry["notes"].append(value)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        ok = entry["outcomes"] and all(o == "passed" for o in entry["outcomes"])
        tr.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {entry['title']}")
        for note in entry["notes"]:
            tr.write_line(f"    {note}")
