"""Kernel backend selection.

The hot inner loops (per-weight quadratic-basis tests, cycle scans) exist in
two versions: numba-compiled kernels and a pure-Python fallback.  The
environment variable ``TORIGRAPH_BACKEND`` picks one:

* ``numba``  — require the numba kernels (import error if numba is missing);
* ``python`` — force the fallback path;
* unset     — numba when importable, fallback otherwise.

Both paths consume identical random streams and produce identical results;
``benchmarks/bench_backends.py`` compares their throughput.
"""
from __future__ import annotations

import os


def _resolve() -> str:
    choice = os.environ.get("TORIGRAPH_BACKEND", "").strip().lower()
    if choice in ("python", "numpy"):
        return "python"
    if choice == "numba":
        import numba  # noqa: F401  -- fail loudly if forced but unavailable

        return "numba"
    if choice:
        raise ValueError(
            f"unknown TORIGRAPH_BACKEND={choice!r} (expected 'numba' or 'python')"
        )
    try:
        import numba  # noqa: F401

        return "numba"
    except ImportError:
        return "python"


BACKEND = _resolve()


def use_numba() -> bool:
    return BACKEND == "numba"
