"""Backend selection for the forcing kernels.

Prefers the compiled extension when it imported cleanly and the graph fits
in one machine word (n <= 64); larger graphs and the environment override
ZFORCE_PURE_PYTHON=1 use the pure-Python twin.  Both backends implement
identical semantics, so results never depend on which one ran.
"""

from __future__ import annotations

import os

from . import _kernels_py as _py

try:
    from . import _kernels as _c
except ImportError:
    _c = None

if os.environ.get("ZFORCE_PURE_PYTHON"):
    _c = None

HAVE_COMPILED = _c is not None


def backend_name(n: int = 1) -> str:
    return "compiled" if (_c is not None and n <= 64) else "pure-python"


def _impl(n: int):
    return _c if (_c is not None and n <= 64) else _py


def closure(adj, n: int, black: int, rule: str) -> int:
    impl = _impl(n)
    if rule == "psd":
        return impl.closure_psd(adj, n, black)
    return impl.closure_standard(adj, n, black)


def first_forcing_lex(adj, n, k, rule, start=None, count=-1, prune=True):
    return _impl(n).first_forcing_lex(
        adj, n, k, rule == "psd", start, count, prune
    )


def all_forcing_lex(adj, n, k, rule):
    return _impl(n).all_forcing_lex(adj, n, k, rule == "psd")
