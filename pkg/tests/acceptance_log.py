"""Collects one verdict line per acceptance criterion for the terminal summary."""

import time
from contextlib import contextmanager

LINES: list[str] = []


@contextmanager
def criterion(label: str):
    start = time.perf_counter()
    notes: list[str] = []
    try:
        yield notes
    except BaseException as exc:
        line = f"FAIL {label} ({time.perf_counter() - start:.1f}s): {type(exc).__name__}: {exc}".splitlines()[0]
        LINES.append(line)
        raise
    detail = "; ".join(notes)
    line = f"PASS {label} ({time.perf_counter() - start:.1f}s){': ' + detail if detail else ''}"
    LINES.append(line)
