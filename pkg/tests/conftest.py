import functools
import time

import pytest

# criterion number -> (status, detail), filled in by tests/test_acceptance.py
ACCEPTANCE: dict = {}


def criterion(number: int, title: str):
    """Record a PASS/FAIL line for an acceptance test, then re-raise failures."""

    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException as e:
                if isinstance(e, pytest.skip.Exception):
                    raise
                ACCEPTANCE[number] = ("FAIL", title, f"{type(e).__name__}: {e}".splitlines()[0])
                raise
            dt = time.perf_counter() - t0
            msg = f"{detail}; " if detail else ""
            ACCEPTANCE[number] = ("PASS", title, f"{msg}{dt:.1f}s")

        return inner

    return wrap


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, title, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}  ({detail})")
