"""Catalog of the seven means, their differences, and the divergence measures.

All one-dimensional generators f with f(1) = 0 (divergences) or f(1) = 1
(means) live here, keyed by short string ids.  Wherever the generator is a
rational function of u = sqrt(x) it is stored as an exact ``RatU``; the six
differences involving the square-root mean S get conjugate closed forms
(exact polynomial numerator over f_S + f_other) so they stay accurate near
x = 1 as well.

Each entry carries a short ``ref`` string locating it in the source
catalog.  Those strings are report data; the code never depends on them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .ratfun import ONE, Poly, RatU, U, X

__all__ = [
    "Measure", "MEAN_ORDER", "MEAN_TAGS", "MEAN_LETTER", "BASE_IDS",
    "FAMILY_IDS", "get", "try_get", "all_ids", "iter_measures",
    "family_gen", "family_range", "sqrt_mean_fn", "PYRAMID_PAIRS",
]


def _p(*coeffs) -> Poly:
    """Polynomial in u from ascending integer coefficients."""
    return Poly(coeffs)


UM1 = _p(-1, 1)          # u - 1
UP1 = _p(1, 1)           # u + 1
XP1 = _p(1, 0, 1)        # x + 1
XM1 = _p(-1, 0, 1)       # x - 1
XM1SQ = XM1 * XM1        # (x - 1)^2


class Measure:
    """A named generator together with how to evaluate it.

    ``kind`` is "mean" (f(1) = 1) or "divergence" (f(1) = 0, f convex).
    ``gen`` is the exact rational form when one exists; measures touching
    the square-root mean fall back to a conjugate evaluation ``fn``.
    """

    __slots__ = ("id", "label", "kind", "ref", "gen", "fn", "fn_mp", "_fpp")

    def __init__(self, id: str, label: str, kind: str, ref: str,
                 gen: Optional[RatU] = None,
                 fn: Optional[Callable] = None,
                 fn_mp: Optional[Callable] = None):
        self.id = id
        self.label = label
        self.kind = kind
        self.ref = ref
        self.gen = gen
        self.fn = fn
        self.fn_mp = fn_mp
        self._fpp = None

    def __call__(self, x):
        """Generator value f(a/b) at x (scalar or numpy array)."""
        if self.gen is not None:
            return self.gen(x)
        return self.fn(x)

    def value(self, a, b):
        """Measure value b * f(a/b)."""
        return b * self(a / b)

    @property
    def fpp(self) -> Optional[RatU]:
        """Exact second derivative d2f/dx2, when the generator is rational."""
        if self.gen is None:
            return None
        if self._fpp is None:
            self._fpp = self.gen.d2x()
        return self._fpp

    def second_derivative(self, x):
        f2 = self.fpp
        if f2 is None:
            raise ValueError(f"{self.id} has no exact second derivative")
        return f2(x)

    def eval_mp(self, x, dps: int = 40):
        """Generator value in high-precision arithmetic."""
        if self.gen is not None:
            return self.gen.eval_mp(x, dps)
        if self.fn_mp is not None:
            return self.fn_mp(x, dps)
        raise ValueError(f"{self.id} has no high-precision evaluator")

    def __repr__(self):
        return f"Measure({self.id!r})"


# ---------------------------------------------------------------------------
# The seven means, ordered.  Letters index the catalog; tags name the kinds.

MEAN_ORDER = "HGNARSC"
MEAN_TAGS = {
    "H": "Harmonic",
    "G": "Geometric",
    "N": "Heronian",
    "A": "Arithmetic",
    "R": "Centroidal",
    "S": "RootMeanSquare",
    "C": "ContraHarmonic",
}
MEAN_LETTER = {tag: letter for letter, tag in MEAN_TAGS.items()}

_MEAN_GEN: dict[str, Optional[RatU]] = {
    "H": RatU(2 * X, XP1),
    "G": RatU(U),
    "N": RatU(_p(1, 1, 1), _p(3)),
    "A": RatU(XP1, _p(2)),
    "R": RatU(2 * _p(1, 0, 1, 0, 1), 3 * XP1),
    "S": None,
    "C": RatU(_p(1, 0, 0, 0, 1), XP1),
}


def sqrt_mean_fn(x):
    """Generator of the square-root mean, sqrt((x^2 + 1) / 2)."""
    x = np.asarray(x, dtype=float)
    return np.sqrt((x * x + 1.0) / 2.0)


def _mean_generator_fn(letter: str):
    if letter == "S":
        return sqrt_mean_fn
    return None


# Conjugate closed forms for the six differences involving S.  Each is an
# exact polynomial part divided by (f_S + f_partner), which keeps the
# (x - 1)^2 factor explicit instead of letting it cancel in floats.
#   id -> (numerator RatU, partner letter)
_S_DIFFS: dict[str, tuple[RatU, str]] = {
    "D_SH": (RatU(XM1SQ * _p(1, 0, 4, 0, 1), 2 * XP1 * XP1), "H"),
    "D_SG": (RatU(XM1SQ, _p(2)), "G"),
    "D_SN": (RatU(UM1 * UM1 * _p(7, 10, 7), _p(18)), "N"),
    "D_SA": (RatU(XM1SQ, _p(4)), "A"),
    "D_SR": (RatU(XM1SQ * _p(1, 0, 4, 0, 1), 18 * XP1 * XP1), "R"),
    "D_CS": (RatU(XM1SQ * _p(1, 0, 0, 0, 1), 2 * XP1 * XP1), "C"),
}


def _s_diff_fn(numer: RatU, partner: str):
    partner_gen = _MEAN_GEN[partner]

    def fn(x):
        return numer(x) / (sqrt_mean_fn(x) + partner_gen(x))

    def fn_mp(x, dps=40):
        import mpmath as mp

        with mp.workdps(dps):
            xv = mp.mpf(x)
            s = mp.sqrt((xv * xv + 1) / 2)
            return numer.eval_mp(x, dps) / (s + partner_gen.eval_mp(x, dps))

    return fn, fn_mp


# ---------------------------------------------------------------------------
# Base divergence measures.

_BASE_GEN = {
    "delta": RatU(XM1SQ, XP1),
    "h": RatU(UM1 * UM1, _p(2)),
    "K": RatU(XM1SQ, U),
    "psi": RatU(XM1SQ * XP1, X),
    "F": RatU((X * X - ONE) ** 2, _p(0, 0, 0, 2)),
    "L": RatU(XM1SQ * XP1 ** 3, X * X),
}
BASE_IDS = tuple(_BASE_GEN)

_BASE_META = {
    "delta": ("triangular discrimination", "Sec 1.1"),
    "h": ("Hellinger discrimination", "Sec 1.1"),
    "K": ("Jain-Srivastava measure", "Eq (5), t=0"),
    "psi": ("symmetric chi-square", "Eq (5), 2L_1"),
    "F": ("Kumar-Johnson measure", "Eq (5), 2L_2"),
    "L": ("cubic-weight measure", "Eq (5), 8L_3"),
}

# ---------------------------------------------------------------------------
# W_1 .. W_9, the common-scale ladder of Eq (10).

_W_GEN = {
    1: RatU(2 * XM1SQ, XP1),
    2: RatU(8 * UM1 * UM1 * _p(2, 3, 2), 7 * XP1),
    3: RatU(8 * UM1 * UM1 * _p(1, 1, 1), 3 * XP1),
    4: RatU(8 * UM1 * UM1 * _p(2, 1, 2), 5 * XP1),
    5: RatU(4 * UM1 * UM1),
    6: RatU(XM1SQ, U),
    7: RatU(XM1SQ * XP1, 2 * X),
    8: RatU((X * X - ONE) ** 2, _p(0, 0, 0, 4)),
    9: RatU(XM1SQ * XP1 ** 3, 8 * X * X),
}

_W_LABEL = {
    1: "2*Delta", 2: "(24/7)*D_CN", 3: "(8/3)*D_CG", 4: "(24/5)*D_RG",
    5: "8*h", 6: "K", 7: "Psi/2", 8: "F/2", 9: "L/8",
}

# Closed-form aliases shown by the registry listing.
FORMULA = {
    "W1": "2 delta", "W2": "(24/7)D_CN", "W3": "(8/3)D_CG",
    "W4": "(24/5)D_RG", "W5": "8 h", "W6": "K", "W7": "(1/2)psi",
    "W8": "(1/2)F", "W9": "(1/8)L",
}

# Pyramid of nonnegative differences D^k = W_i - W_j, row by row,
# each row walking j from i-1 down to 1.
PYRAMID_PAIRS: tuple[tuple[int, int], ...] = tuple(
    (i, j) for i in range(2, 10) for j in range(i - 1, 0, -1)
)

# ---------------------------------------------------------------------------
# V_1 .. V_14 (Eqs 13..26) and U_1 .. U_15 (Eqs 30..40, 43..45, 47).
# Interior polynomial factors are written in u; x + k*u + 1 etc. become
# ascending coefficient tuples.

_V_GEN = {
    1: RatU(UM1 ** 6, U * XP1),
    2: RatU(UM1 ** 8, X * XP1),
    3: RatU(_p(1, 6, 1) * UM1 ** 6, X * XP1),
    4: RatU(UM1 ** 6, X),
    5: RatU(UP1 ** 2 * UM1 ** 8, X * U * XP1),
    6: RatU(_p(1, 6, 22, 6, 1) * UM1 ** 6, X * U * XP1),
    7: RatU(_p(1, 6, 1) * UM1 ** 6, X * U),
    8: RatU(UP1 ** 2 * UM1 ** 6, X * U),
    9: RatU(UP1 ** 4 * UM1 ** 8, X * X * XP1),
    10: RatU(_p(1, 6, 23, 68, 23, 6, 1) * UM1 ** 6, X * X * XP1),
    11: RatU(_p(1, 6, 22, 6, 1) * UM1 ** 6, X * X),
    12: RatU(UP1 ** 2 * UM1 ** 8, X * X),
    13: RatU(XM1SQ * _p(1, 4, 1) * UM1 ** 4, X * X),
    14: RatU(XP1 * UP1 ** 2 * UM1 ** 6, X * X),
}

_V_REF = {t: f"Eq ({12 + t})" for t in range(1, 15)}
_V_REF[9] += ", corrected"
_V_REF[14] += ", corrected"

_U_GEN = {
    1: RatU(UM1 ** 8, X * XP1),
    2: RatU(UM1 ** 8, X * U),
    3: RatU(UM1 ** 8 * _p(2, 7, 2), X * U * XP1),
    4: RatU(UM1 ** 8 * _p(9, 40, 86, 40, 9), X * X * XP1),
    5: RatU(UM1 ** 8 * _p(1, 8, 38, 8, 1), X * X * XP1),
    6: RatU(UM1 ** 8 * _p(1, 8, 1), X * U * XP1),
    7: RatU(UM1 ** 8 * _p(1, -1, 1), X * X),
    8: RatU(UM1 ** 8 * _p(1, 8, 1), X * X),
    9: RatU(UM1 ** 8 * UP1 ** 2, X * X),
    10: RatU(UM1 ** 10, X * U * XP1),
    11: RatU(UP1 ** 2 * UM1 ** 10, X * X * XP1),
    12: RatU(UM1 ** 10 * _p(11, -2, 11), X * X * XP1),
    13: RatU(UM1 ** 10, X * X),
    14: RatU(UM1 ** 10 * _p(1, 10, 1), X * X * XP1),
    15: RatU(UM1 ** 12, X * X * XP1),
}

_U_REF = {t: f"Eq ({29 + t})" for t in range(1, 12)}
_U_REF.update({12: "Eq (43)", 13: "Eq (44)", 14: "Eq (45)", 15: "Eq (47)"})

# ---------------------------------------------------------------------------
# Parametric families.

FAMILY_IDS = ("Delta1", "Delta2", "K1", "K2", "Hgen", "Mnew")

_FAMILY_REF = {
    "Delta1": "Eq (49)", "Delta2": "Eq (53)", "K1": "Eq (54)",
    "K2": "Eq (55)", "Hgen": "Eq (56)", "Mnew": "Eq (57)",
    "Lt": "Eq (5)", "topsoe": "Eq (9b)",
}

FAMILY_T_MAX = 64
LT_T_RANGE = (-8, 8)


def _u_power(num: Poly, den: Poly, k: int) -> tuple[Poly, Poly]:
    """Divide num/den by u**k, keeping exponents nonnegative on both sides."""
    if k >= 0:
        return num, den.shift(k)
    return num.shift(-k), den


@lru_cache(maxsize=None)
def family_gen(name: str, t: int) -> RatU:
    """Exact generator of the t-th member of a parametric family."""
    lo, hi = family_range(name)
    if not lo <= t <= hi:
        raise ValueError(f"{name} parameter t={t} outside [{lo}, {hi}]")
    if name == "Delta1":
        return RatU(UP1 ** 2 * UM1 ** (2 * t + 2), XP1.shift(t))
    if name == "Delta2":
        return RatU((UM1 * UP1) ** (2 * t + 2), XP1.shift(2 * t))
    if name == "K1":
        return RatU(UP1 ** 2 * UM1 ** (2 * t + 2), ONE.shift(t + 1))
    if name == "K2":
        return RatU((UM1 * UP1) ** (2 * t + 2), ONE.shift(2 * t + 1))
    if name == "Hgen":
        return RatU(UM1 ** (2 * t + 2), ONE.shift(t))
    if name == "Mnew":
        return RatU(UM1 ** (2 * t + 4), XP1.shift(t))
    if name == "Lt":
        num, den = UM1 ** 2 * UP1 ** 2, ONE
        if t >= 0:
            num = num * XP1 ** t
            den = _p(2 ** t)
        else:
            num = num * _p(2 ** (-t))
            den = XP1 ** (-t)
        num, den = _u_power(num, den, t + 1)
        return RatU(num, den)
    if name == "topsoe":
        return RatU((UM1 * UP1) ** (2 * t), XP1 ** (2 * t - 1))
    raise KeyError(f"unknown family {name!r}")


def family_range(name: str) -> tuple[int, int]:
    if name == "Lt":
        return LT_T_RANGE
    if name == "topsoe":
        return (1, FAMILY_T_MAX)
    if name in FAMILY_IDS:
        return (0, FAMILY_T_MAX)
    raise KeyError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# Registry assembly.

_REGISTRY: dict[str, Measure] = {}


def _add(measure: Measure):
    if measure.id in _REGISTRY:
        raise ValueError(f"duplicate measure id {measure.id}")
    _REGISTRY[measure.id] = measure


for _letter in MEAN_ORDER:
    _add(Measure(_letter, f"{MEAN_TAGS[_letter]} mean", "mean", "Eq (1)",
                 gen=_MEAN_GEN[_letter], fn=_mean_generator_fn(_letter)))

for _i in range(len(MEAN_ORDER)):
    for _j in range(_i):
        _hi, _lo = MEAN_ORDER[_i], MEAN_ORDER[_j]
        _id = f"D_{_hi}{_lo}"
        _ref = "Sec 1.1"
        if _id in _S_DIFFS:
            _numer, _partner = _S_DIFFS[_id]
            _fn, _fn_mp = _s_diff_fn(_numer, _partner)
            _add(Measure(_id, f"{MEAN_TAGS[_hi]} minus {MEAN_TAGS[_lo]}",
                         "divergence", _ref, fn=_fn, fn_mp=_fn_mp))
        else:
            _gen = _MEAN_GEN[_hi] - _MEAN_GEN[_lo]
            _add(Measure(_id, f"{MEAN_TAGS[_hi]} minus {MEAN_TAGS[_lo]}",
                         "divergence", _ref, gen=_gen))

for _bid, _gen in _BASE_GEN.items():
    _label, _ref = _BASE_META[_bid]
    _add(Measure(_bid, _label, "divergence", _ref, gen=_gen))

for _k, _gen in _W_GEN.items():
    _add(Measure(f"W{_k}", f"ladder step {_W_LABEL[_k]}", "divergence",
                 f"Eq (9) position {_k}", gen=_gen))

for _k, (_i, _j) in enumerate(PYRAMID_PAIRS, start=1):
    _add(Measure(f"D{_k}", f"W{_i} - W{_j}", "divergence",
                 "Eq (11) pyramid", gen=_W_GEN[_i] - _W_GEN[_j]))

for _t, _gen in _V_GEN.items():
    _add(Measure(f"V{_t}", f"first-stage residual V_{_t}", "divergence",
                 _V_REF[_t], gen=_gen))

for _t, _gen in _U_GEN.items():
    _add(Measure(f"U{_t}", f"second-stage residual U_{_t}", "divergence",
                 _U_REF[_t], gen=_gen))


class _FamilyMember(Measure):
    __slots__ = ("family", "t")

    def __init__(self, family: str, t: int):
        gen = family_gen(family, t)
        super().__init__(f"{family}:{t}", f"{family} member t={t}",
                         "divergence", _FAMILY_REF[family], gen=gen)
        self.family = family
        self.t = t


_FAMILY_ALIASES = {name.lower(): name for name in FAMILY_IDS}
_FAMILY_ALIASES.update({"lt": "Lt", "l_t": "Lt", "topsoe": "topsoe"})


@lru_cache(maxsize=None)
def _family_member(family: str, t: int) -> Measure:
    return _FamilyMember(family, t)


def try_get(measure_id: str) -> Optional[Measure]:
    """Look up a measure id, returning None when unknown."""
    m = _REGISTRY.get(measure_id)
    if m is not None:
        return m
    if ":" in measure_id:
        name, _, t_str = measure_id.partition(":")
        family = _FAMILY_ALIASES.get(name.lower())
        if family is None:
            return None
        try:
            t = int(t_str)
        except ValueError:
            return None
        lo, hi = family_range(family)
        if not lo <= t <= hi:
            return None
        return _family_member(family, t)
    return None


def get(measure_id: str) -> Measure:
    m = try_get(measure_id)
    if m is None:
        raise KeyError(f"unknown measure id {measure_id!r}")
    return m


def all_ids() -> list[str]:
    """Ids of every non-parametric catalog entry, in catalog order."""
    return list(_REGISTRY)


def iter_measures():
    return iter(_REGISTRY.values())
