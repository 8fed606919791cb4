import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_GATE = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(key, title): acceptance criterion reported in the summary")
    config.stash[_GATE] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    key, title = mark.args
    detail = ""
    if rep.failed:
        detail = str(getattr(rep.longrepr, "reprcrash", None) and rep.longrepr.reprcrash.message or "").splitlines()[0:1]
        detail = detail[0][:160] if detail else ""
    line = f"criterion {key:>3}  {'PASS' if rep.passed else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    item.config.stash[_GATE][key] = line


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_GATE, {})
    if not lines:
        return
    terminalreporter.write_sep("=", "acceptance gate")
    for key in sorted(lines, key=lambda k: (len(k), k)):
        terminalreporter.write_line(lines[key])
