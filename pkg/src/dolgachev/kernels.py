"""Backend selection for the hot loops.

The compiled module is used when it imports; set DOLGACHEV_PURE_PYTHON=1 to
force the pure-Python fallback.  Inputs whose int64 intermediates could
overflow are always routed to the fallback, which uses Python integers.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_compiled = None

if not os.environ.get("DOLGACHEV_PURE_PYTHON"):
    try:
        from . import _ckernels as _compiled

        BACKEND = "compiled"
    except ImportError:  # extension not built
        _compiled = None

_INT64_SAFE = 2**62


def _pick(use_compiled: bool):
    if use_compiled and _compiled is not None:
        return _compiled
    return _pykernels


def strata_sums(p, q, sigmas, taus, phis, n_max, backend=None):
    """(list of sum m, list of sum m Phi) for n = 1 .. n_max."""
    biggest_phi = max((abs(x) for x in phis), default=0)
    # |m| <= 4 (n/pq + 2) per cell
    bound = len(phis) * 4 * (n_max // (p * q) + 2) * max(biggest_phi, 1) * 4
    safe = bound < _INT64_SAFE and n_max * max(p, q) < _INT64_SAFE
    mod = _select(backend, safe)
    return mod.strata_sums(p, q, list(sigmas), list(taus), list(phis), n_max)


def shell_points(bound0, bound_s, parity, qlo, qhi, w0=None, w1=None, backend=None):
    """Integer points of a Lorentzian shell in a box; see _pykernels.shell_points."""
    big = max(bound0, bound_s, abs(qlo), abs(qhi), 1)
    wmax = max((abs(v) for v in list(w0 or []) + list(w1 or [])), default=1)
    safe = 10 * big * wmax < _INT64_SAFE and 10 * big * big < _INT64_SAFE
    mod = _select(backend, safe)
    return mod.shell_points(bound0, bound_s, list(parity), qlo, qhi,
                            None if w0 is None else list(w0), None if w1 is None else list(w1))


def _select(backend, safe):
    if backend == "python":
        return _pykernels
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        if not safe:
            raise OverflowError("inputs exceed the int64 range of the compiled kernels")
        return _compiled
    return _pick(safe)
