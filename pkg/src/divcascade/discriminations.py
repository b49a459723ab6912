"""Base discrimination measures and the generalized triangular families.

Six base measures drive everything downstream: the triangular
discrimination delta, Hellinger's h, the Jain-Srivastava measure K, the
symmetric chi-square psi, the Kumar-Johnson measure F, and the
cubic-weight measure L.  All six are instances (up to scale) of one
family

    L_t(a, b) = (a - b)^2 (a + b)^t / (2^t (ab)^((t+1)/2)),  t integer,

which is nondecreasing in t and convex in (a, b) for every t >= -1.
A second parametric family generalizes delta in the probability setting:
Topsoe's sum of (p_i - q_i)^(2t) / (p_i + q_i)^(2t-1).
"""

from __future__ import annotations

import numpy as np

from . import catalog
from .catalog import LT_T_RANGE

__all__ = ["base", "base_ids", "L_t", "A7", "topsoe_delta", "LT_T_RANGE"]


def base_ids() -> tuple[str, ...]:
    return catalog.BASE_IDS


def base(measure_id: str, a, b):
    """Value of a base measure (delta, h, K, psi, F, L) at a, b > 0."""
    if measure_id not in catalog.BASE_IDS:
        raise KeyError(f"unknown base measure {measure_id!r}; "
                       f"expected one of {catalog.BASE_IDS}")
    return catalog.get(measure_id).value(a, b)


def L_t(t: int, pair):
    """The t-th member of the unifying family at a positive pair.

    Accepts any integer t in the implemented window; the particular cases
    t = -1, 0, 1, 2, 3 reproduce 2*delta, K, psi/2, F/2 and L/8.
    """
    t = int(t)
    lo, hi = LT_T_RANGE
    if not lo <= t <= hi:
        raise ValueError(f"t={t} outside implemented range [{lo}, {hi}]")
    a, b = pair
    return catalog.family_gen("Lt", t).__call__(a / b) * b


def A7(x, t: int):
    """Convexity polynomial of the L_t family.

    f''_{L_t}(x) = (x+1)^(t-2) / (2^(t+2) x^2 (sqrt x)^(t+1)) * A7(x, t),
    so positivity of A7 certifies convexity.  A7(1, t) = 32 for every t.
    """
    x = np.asarray(x, dtype=float) if isinstance(x, np.ndarray) else float(x)
    return ((t + 1) * (t + 3) * (x ** 4 + 1)
            + 4 * x * (x * x + 1) * (2 - t) * (t + 1)
            + 2 * x * x * (3 * t - 5) * (t - 1))


def topsoe_delta(t: int, p, q):
    """Generalized triangular discrimination of order t >= 1.

    Sum over components of (p_i - q_i)^(2t) / (p_i + q_i)^(2t - 1).
    Order 1 is the ordinary triangular discrimination.
    """
    t = int(t)
    if t < 1:
        raise ValueError(f"order must be >= 1, got {t}")
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise ValueError("distributions must have matching shapes")
    d = p - q
    s = p + q
    return float(np.sum(d ** (2 * t) / s ** (2 * t - 1)))
