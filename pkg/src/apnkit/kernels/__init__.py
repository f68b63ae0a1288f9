"""Hot loops behind the field sweeps.

The compiled extension ``_ckernels`` is used when it was built; otherwise
the pure-Python ``_pykernels`` module is selected. :func:`use_backend`
switches explicitly (tests and the benchmark run both).
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

_name = "cython" if _ckernels is not None else "python"
_impl = _BACKENDS[_name]


def available_backends():
    return sorted(_BACKENDS)


def backend():
    return _name


def use_backend(name):
    """Select ``"cython"`` or ``"python"``; returns the previous name."""
    global _impl, _name
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    prev, _name = _name, name
    _impl = _BACKENDS[name]
    return prev


def power_table(exp, log, e, zero_value):
    """Codes of x^e for every field code x, via discrete-log tables."""
    return _impl.power_table(exp, log, e, zero_value)


def difference_counts(table, shift, p, n):
    """Histogram over b of #{x : table[shift[x]] - table[x] = b}."""
    return _impl.difference_counts(table, shift, p, n)


def polymulmod(a, b, p):
    """Product of two dense polynomials mod (x^q - x, p), q = len(a)."""
    return _impl.polymulmod(a, b, p)


__all__ = [
    "available_backends", "backend", "use_backend",
    "power_table", "difference_counts", "polymulmod",
]
