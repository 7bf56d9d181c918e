import time

import pytest

_SESSION_START = time.perf_counter()
_RESULTS: dict[int, list[tuple[str, str]]] = {}


def session_elapsed() -> float:
    return time.perf_counter() - _SESSION_START


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
    config.addinivalue_line("markers", "run_last: schedule after every other test")


def pytest_collection_modifyitems(items):
    # the runtime budget check has to observe the whole session
    last = [i for i in items if i.get_closest_marker("run_last")]
    rest = [i for i in items if not i.get_closest_marker("run_last")]
    items[:] = rest + last


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
        _RESULTS.setdefault(mark.args[0], []).append((item.name, status))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_RESULTS):
        checks = _RESULTS[n]
        failed = [name for name, s in checks if s != "PASS"]
        verdict = "PASS" if not failed else "FAIL"
        line = f"criterion {n}: {verdict} ({len(checks) - len(failed)}/{len(checks)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        tr.write_line(line)
