"""Shared pytest hooks: the per-criterion summary of the acceptance suite."""

from collections import defaultdict

import pytest

CRITERIA = {
    1: "Dunkl operators commute",
    2: "coordinate commutation relations",
    3: "Casimir element: kills S at kappa = 0, [h, x_i] = kappa x_i",
    4: "eigenvalue formulas for f_mu",
    5: "action of sigma_i, Phi, Psi on f_mu",
    6: "triangularity of f_mu",
    7: "descent basis and decomposition of the coinvariant ring",
    8: "descent classes connected with a unique shortest element",
    9: "length, major index and flag-major generating functions",
    10: "the ideal I is stable under the Dunkl operators",
}

_outcomes: dict[int, list[bool]] = defaultdict(list)
_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number k")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        item.stash.setdefault(_KEY, []).append(call.excinfo is None)


def pytest_runtest_teardown(item):
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        results = item.stash.get(_KEY, [False])
        _outcomes[marker.args[0]].append(all(results))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        runs = _outcomes.get(k)
        if runs is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(runs) else "FAIL"
        detail = f"({sum(runs)}/{len(runs)} cases)" if runs else ""
        terminalreporter.write_line(f"criterion {k:2d} {status:7s} {CRITERIA[k]} {detail}")

