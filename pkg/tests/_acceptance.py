"""Collects one verdict line per acceptance criterion."""

from __future__ import annotations

RESULTS: dict[int, tuple[str, bool, str]] = {}


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    RESULTS[number] = (title, ok, detail)
    line = f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {title}" + (f": {detail}" if detail else "")
    print(line)
    assert ok, line
