"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""

import pytest

CRITERIA = {
    1: "example [15,9,5]_4 code, exhaustive distance",
    2: "rc-generating set validation and h* mutations",
    3: "rc primer code: size 17408, 272-word subset d>=5, 9-WMU, 9-APD, redundancy",
    4: "shift-and-flip balancing, exhaustive over binary n<=15 and GF(4) n<=7",
    5: "algebraic class representatives on the [7,4] Hamming code",
    6: "balanced binary code from Hamming [7,4,3]",
    7: "GC-balanced encoder, 10^4 encodes and single-error decodes",
    8: "APD-constrained blocks and the n=55 primer code",
    9: "almost balanced WMU code from [15,3]_2",
    10: "DNA computing code from the searched rc2 set",
    11: "asymptotic claims substituted by concrete redundancy inequalities",
}

_outcomes: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        if hasattr(rep, "wasxfail"):
            status = "xfail" if rep.skipped else "xpass"
        elif rep.passed:
            status = "pass"
        elif rep.skipped:
            status = "skip"
        else:
            status = "fail"
        _outcomes.setdefault(mark.args[0], []).append(status)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, text in CRITERIA.items():
        got = _outcomes.get(n)
        if got is None:
            continue
        core = [s for s in got if s not in ("xfail", "xpass")]
        verdict = "PASS" if core and all(s == "pass" for s in core) else "FAIL"
        note = ""
        if "xfail" in got:
            note = f"  [+{got.count('xfail')} documented expected failure]"
        if "xpass" in got:
            verdict = "FAIL"
            note += "  [unexpected pass of a documented failure]"
        tr.write_line(f"criterion {n:>2}: {verdict}  {text}{note}")
