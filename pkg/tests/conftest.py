import functools
import re

import sl2tiling
import sl2tiling.cli
import sl2tiling.frieze
import sl2tiling.tiling

# Every tiling the library builds during the session, keyed by its domain.
# The tameness criterion re-checks all of them at the end of the run.
CONSTRUCTED = {}


def _recording(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        t = fn(*args, **kwargs)
        CONSTRUCTED.setdefault(t.P, fn.__name__)
        return t

    wrapper.__wrapped_builder__ = True
    return wrapper


for _name in ("tiling_from_triple", "frieze_to_square_tiling"):
    _orig = getattr(sl2tiling, _name)
    _wrapped = _recording(_orig)
    for _mod in (sl2tiling, sl2tiling.tiling, sl2tiling.cli, sl2tiling.frieze):
        if getattr(_mod, _name, None) is _orig:
            setattr(_mod, _name, _wrapped)


_CRITERION = re.compile(r"test_criterion_(\d+)")
_RESULTS = {}


def pytest_collection_modifyitems(session, config, items):
    # criterion 11 audits tilings built by every other test, so it runs last
    last = [it for it in items if it.name.startswith("test_criterion_11")]
    rest = [it for it in items if not it.name.startswith("test_criterion_11")]
    items[:] = rest + last


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or "test_acceptance" not in report.nodeid:
        return
    k = int(m.group(1))
    if report.when == "call" or report.outcome != "passed":
        prev = _RESULTS.get(k, "PASS")
        _RESULTS[k] = "PASS" if prev == "PASS" and report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_RESULTS):
        terminalreporter.write_line(f"criterion {k:2d}: {_RESULTS[k]}")
