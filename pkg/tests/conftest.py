from __future__ import annotations

import os

from hypothesis import settings

import _acceptance

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance.RESULTS):
        title, ok, detail = _acceptance.RESULTS[number]
        suffix = f": {detail}" if detail else ""
        terminalreporter.write_line(f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {title}{suffix}")
