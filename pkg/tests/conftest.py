"""Collects the acceptance-criterion verdicts and prints them after the run."""

from __future__ import annotations

from functools import lru_cache

import pytest

from zkinv.report import OutputRecord, compute, fixture_spec

_VERDICTS: list[tuple[str, str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(ident, title): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        verdict = "PASS" if report.passed else "FAIL"
        _VERDICTS.append((marker.args[0], marker.args[1], verdict, detail))


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for ident, title, verdict, detail in _VERDICTS:
        line = f"[{verdict}] criterion {ident}: {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)


@lru_cache(maxsize=None)
def _compute_cached(k: int, j: int, p: str) -> OutputRecord:
    return compute(fixture_spec({"k": k, "j": j, "p": p}))


@pytest.fixture(scope="session")
def computed():
    """``computed(row)`` evaluates all invariants of a fixture row once per session."""
    return lambda row: _compute_cached(row["k"], row["j"], row["p"])
