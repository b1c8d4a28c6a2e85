import pytest


def pytest_configure(config):
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title = marker.args
        detail = dict(item.user_properties).get("detail", "")
        item.config._criteria[number] = (rep.passed, title, detail, rep.duration)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    crit = getattr(config, "_criteria", {})
    if not crit:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(crit):
        passed, title, detail, dur = crit[number]
        line = f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {title}  [{dur:.1f}s]"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)
