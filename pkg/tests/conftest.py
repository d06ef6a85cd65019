import itertools
import random

import numpy as np
import pytest

from circhad.sequences import SignRow


def pytest_addoption(parser):
    parser.addoption("--run-extended", action="store_true", default=False,
                     help="run the hours-long exhaustive searches at n = 32 and 36")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-extended"):
        return
    skip = pytest.mark.skip(reason="needs --run-extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def all_rows(n):
    for signs in itertools.product((1, -1), repeat=n):
        yield SignRow(signs)


def random_rows(n, count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        yield SignRow(tuple(rng.choice((1, -1)) for _ in range(n)))


# first rows of H3..H10, transcribed from the published list
ORDER4_ROWS = [
    (1, -1, -1, -1), (-1, 1, 1, 1),
    (-1, 1, -1, -1), (1, -1, 1, 1),
    (-1, -1, 1, -1), (1, 1, -1, 1),
    (-1, -1, -1, 1), (1, 1, 1, -1),
]


def circ_matrix(first):
    """Dense circulant matrix, each row the previous one shifted right by one."""
    c = list(first)
    n = len(c)
    return np.array([[c[(col - r) % n] for col in range(n)] for r in range(n)], dtype=np.int64)


# -- acceptance summary ------------------------------------------------------

_ACCEPTANCE: dict[str, list] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    label = getattr(report, "acceptance_label", None)
    if label is None:
        return
    _ACCEPTANCE.setdefault(label, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        rep.acceptance_label = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: (len(s.split()[0]), s)):
        outcomes = _ACCEPTANCE[label]
        if all(o == "skipped" for o in outcomes):
            verdict = "SKIP"
        elif all(o in ("passed", "skipped") for o in outcomes):
            verdict = "PASS"
        else:
            verdict = "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}")
