"""Composite Simpson rules on uniform grids.

Every integrand in this package is a smooth closed-form curve sampled on a
uniform grid with an odd number of points, so plain composite Simpson
(fourth order) is used throughout.  Prefix integrals keep the same grid:
even indices get full Simpson panels, odd indices get a trapezoid
correction on the final half-panel.
"""

from __future__ import annotations

import numpy as np

from .errors import BadGrid


def _check_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise BadGrid(f"need an odd number of samples >= 3, got {n}")


def simpson(values: np.ndarray, dx: float) -> float:
    """Integral of uniformly spaced samples by composite Simpson."""
    values = np.asarray(values, dtype=float)
    _check_odd(values.size)
    s = values[0] + values[-1] + 4.0 * values[1:-1:2].sum() + 2.0 * values[2:-1:2].sum()
    return float(s * dx / 3.0)


def cumulative_simpson(values: np.ndarray, dx: float) -> np.ndarray:
    """Prefix integrals F_k = int_{t_0}^{t_k} on the sample grid.

    Even k accumulate whole Simpson panels; odd k add a trapezoid on the
    trailing interval.  For smooth integrands the odd-index correction is
    O(dx^3) locally, far below the tolerances used downstream.
    """
    values = np.asarray(values, dtype=float)
    _check_odd(values.size)
    panels = (dx / 3.0) * (values[0:-2:2] + 4.0 * values[1:-1:2] + values[2::2])
    even = np.concatenate(([0.0], np.cumsum(panels)))
    odd = even[:-1] + (dx / 2.0) * (values[0:-1:2] + values[1::2])
    out = np.empty(values.size, dtype=float)
    out[0::2] = even
    out[1::2] = odd
    return out
