"""Numeric evaluators for the G2 zeta functions and the entire functions built from them.

``Z1`` and ``Z2`` are the zetas multiplied by polynomial prefactors that kill
every pole; they are evaluated through chi(s) = s(s-1)xi(s), which is entire,
so they never raise. ``f1``, ``f2`` (and the tilde versions without the linear
factor) satisfy ``Z(s) = chi(2s) f(s) - chi(2s-1) f(1-s)``.

The remainder families are the small correction terms in the factorisations
used to show that f_i and Z_i have no zeros in various half planes. They are
written in terms of chi-ratios, which stay finite far from the origin where the
individual chi values overflow.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from . import period
from .config import get_config
from .errors import AtPole, PrecisionLoss
from .specialfn import chi, chi_ratio, xi

A = math.pi / 3.0 - 1.0


class FunctionId(str, enum.Enum):
    ZETA_LONG = "long"
    ZETA_SHORT = "short"
    Z1 = "Z1"
    Z2 = "Z2"
    F1 = "F1"
    F2 = "F2"
    FT1 = "FT1"
    FT2 = "FT2"
    XI = "XI"

    @classmethod
    def parse(cls, name: "str | FunctionId") -> "FunctionId":
        if isinstance(name, FunctionId):
            return name
        key = name.strip()
        for member in cls:
            if key.lower() in (member.value.lower(), member.name.lower()):
                return member
        raise ValueError(f"unknown function {name!r}")


class RemainderFamily(str, enum.Enum):
    F1_LEFT_R = "F1_LEFT_R"
    F2_LEFT_R = "F2_LEFT_R"
    F1_RIGHT_Q = "F1_RIGHT_Q"
    F2_RIGHT_Q = "F2_RIGHT_Q"
    Z1_R = "Z1_R"
    Z2_R = "Z2_R"
    RATIO_R1 = "RATIO_R1"
    RATIO_R2 = "RATIO_R2"
    G_H_LONG = "G_H_LONG"
    G_H_SHORT = "G_H_SHORT"


FAMILY_INDICES = {
    RemainderFamily.F1_LEFT_R: (1, 2),
    RemainderFamily.F2_LEFT_R: (1, 2),
    RemainderFamily.F1_RIGHT_Q: (1, 2),
    RemainderFamily.F2_RIGHT_Q: (1, 2),
    RemainderFamily.Z1_R: (1, 2, 3, 4, 5),
    RemainderFamily.Z2_R: (1, 2, 3, 4, 5),
    RemainderFamily.RATIO_R1: (1,),
    RemainderFamily.RATIO_R2: (1,),
    RemainderFamily.G_H_LONG: (1, 2),  # 1 = g, 2 = h
    RemainderFamily.G_H_SHORT: (1, 2),
}

# Declared poles of the two zetas: location -> order.
POLES: Dict[FunctionId, Dict[float, int]] = {
    FunctionId.ZETA_LONG: {-1.0: 1, 0.0: 2, 1.0: 2, 2.0: 1},
    FunctionId.ZETA_SHORT: {-2.0: 1, 0.0: 1, 1.0: 1, 3.0: 1},
}

# Real zeros of Z_i that lie off the critical line (1/2 is on it).
EXCEPTIONAL_ZEROS: Dict[FunctionId, Tuple[float, ...]] = {
    FunctionId.Z1: (0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0),
    FunctionId.Z2: (-1.0, 0.0, 1.0, 2.0),
}

ZETA_FOR = {FunctionId.Z1: FunctionId.ZETA_LONG, FunctionId.Z2: FunctionId.ZETA_SHORT}
Z_FOR = {v: k for k, v in ZETA_FOR.items()}


def _arr(s):
    a = np.asarray(s, dtype=complex)
    return a, a.ndim == 0


def _out(v, scalar):
    return complex(v) if scalar else v


# ---------------------------------------------------------------------------
# f, f~, Z


def _ft1(s):
    return (
        (s - 1) * (3 * s - 2) * (A * s - A + 1) * chi(s + 1) * chi(3 * s)
        - (s + 1) * (s - 2) * chi(s) * chi(3 * s - 1)
        - 2 * (s - 1) * (s - 2) * chi(s) * chi(3 * s)
    )


def _ft2(s):
    return (
        (A * s + 3) * (s - 1) ** 2 * chi(s + 2)
        - 2 * (s - 1) * (s - 3) * chi(s + 1)
        - (s + 2) * (s - 3) * chi(s)
    )


_F_IMPL: Dict[FunctionId, Callable] = {
    FunctionId.FT1: _ft1,
    FunctionId.FT2: _ft2,
    FunctionId.F1: lambda s: (s - 1) * _ft1(s),
    FunctionId.F2: lambda s: (s - 2) * _ft2(s),
}

_F_OF_Z = {FunctionId.Z1: FunctionId.F1, FunctionId.Z2: FunctionId.F2}


def eval_f(kind, s):
    """f1, f2 or their tilde versions (entire)."""
    kind = FunctionId.parse(kind)
    z, scalar = _arr(s)
    return _out(_F_IMPL[kind](z), scalar)


def z_terms(kind, s):
    """The two halves chi(2s) f(s) and chi(2s-1) f(1-s) whose difference is Z."""
    kind = FunctionId.parse(kind)
    z, scalar = _arr(s)
    f = _F_IMPL[_F_OF_Z[kind]]
    first = chi(2 * z) * f(z)
    second = chi(2 * z - 1) * f(1 - z)
    return _out(first, scalar), _out(second, scalar)


def eval_Z(kind, s):
    """Z1 or Z2 through the chi-form; entire, so this never raises."""
    first, second = z_terms(kind, s)
    return first - second


def prefactor(kind, s):
    """Polynomial p with Z = p * zeta."""
    kind = FunctionId.parse(kind)
    s = np.asarray(s, dtype=complex) if np.ndim(s) else complex(s)
    if kind in (FunctionId.Z1, FunctionId.ZETA_LONG):
        return 12 * s**3 * (s - 1) ** 3 * (s + 1) * (3 * s - 1) * (2 * s - 1) * (3 * s - 2) * (s - 2)
    if kind in (FunctionId.Z2, FunctionId.ZETA_SHORT):
        return 4 * s**2 * (s - 1) ** 2 * (s + 2) * (s + 1) * (2 * s - 1) * (s - 2) * (s - 3)
    raise ValueError(f"no prefactor for {kind}")


# ---------------------------------------------------------------------------
# the zetas themselves


@dataclass
class DualPathResult:
    value: complex
    path: str
    term_sum: Optional[complex]
    chi_form: Optional[complex]
    condition: float


def _reference(kind: FunctionId) -> period.ZetaExpression:
    return period.reference_zeta(kind.value)


def eval_zeta_g2_detail(kind, s: complex) -> DualPathResult:
    kind = FunctionId.parse(kind)
    if kind not in POLES:
        raise ValueError(f"{kind} is not a G2 zeta")
    s = complex(s)
    cfg = get_config()
    for p in POLES[kind]:
        if abs(s - p) <= cfg.zeta_pole_radius:
            raise AtPole(s, f"declared pole at {p:g}")
    terms = _reference(kind).evaluate_terms(s)
    term_sum = complex(terms.sum())
    biggest = float(np.max(np.abs(terms)))
    cond = biggest / abs(term_sum) if term_sum != 0 else math.inf
    p = complex(prefactor(kind, s))
    # the chi-form is only usable away from zeros of the prefactor
    chi_form = complex(eval_Z(Z_FOR[kind], s)) / p if abs(p) > 1e-6 * max(1.0, abs(s)) ** 12 else None
    ill = cond > cfg.ill_conditioning_ratio
    if ill and chi_form is None:
        raise PrecisionLoss(s, f"term sum ill-conditioned (ratio {cond:.3g}) at a prefactor zero")
    if chi_form is not None and not ill:
        # allowed error: the configured tolerance plus rounding amplified by cancellation
        tol = cfg.dual_path_rtol * abs(chi_form) + 1e-12 * float(np.sum(np.abs(terms)))
        if abs(term_sum - chi_form) > tol:
            raise PrecisionLoss(s, f"evaluation paths disagree: {term_sum} vs {chi_form}")
    value = chi_form if ill else term_sum
    return DualPathResult(value, "chi-form" if ill else "term-sum", term_sum, chi_form, cond)


def eval_zeta_g2(kind, s):
    """The G2 zeta (long or short). Vectorised over arrays of s."""
    z, scalar = _arr(s)
    if scalar:
        return eval_zeta_g2_detail(kind, complex(z)).value
    out = np.empty(z.shape, dtype=complex)
    for idx in np.ndindex(z.shape):
        out[idx] = eval_zeta_g2_detail(kind, complex(z[idx])).value
    return out


def evaluate(kind, s):
    """Dispatch on FunctionId; the common entry point used by the zero finders."""
    kind = FunctionId.parse(kind)
    if kind in (FunctionId.Z1, FunctionId.Z2):
        return eval_Z(kind, s)
    if kind in _F_IMPL:
        return eval_f(kind, s)
    if kind is FunctionId.XI:
        return xi(s)
    return eval_zeta_g2(kind, s)


# ---------------------------------------------------------------------------
# local behaviour at a point


@dataclass
class LaurentProbe:
    order: int
    slope: float
    leading: complex


def laurent_probe(kind, s0: float, radii=(1e-2, 1e-3), samples: int = 64) -> LaurentProbe:
    """Order of f at s0 (positive = pole, negative = zero) and its leading coefficient.

    The order is the slope of the circle-average of log|f| against log r, which
    by Jensen's formula is exact when no other zero or pole lies inside the
    larger circle.
    """
    kind = FunctionId.parse(kind)
    theta = 2 * math.pi * (np.arange(samples) + 0.5) / samples
    unit = np.exp(1j * theta)

    def values(r):
        return np.asarray(evaluate(kind, s0 + r * unit), dtype=complex)

    r1, r2 = radii
    m1 = float(np.mean(np.log(np.abs(values(r1)))))
    v2 = values(r2)
    m2 = float(np.mean(np.log(np.abs(v2))))
    slope = -(m2 - m1) / (math.log(r2) - math.log(r1))
    order = int(round(slope))
    if abs(slope - order) > 0.1:
        raise PrecisionLoss(complex(s0), f"Laurent slope {slope:.4f} is not near an integer")
    leading = complex(np.mean(v2 * (r2 * unit) ** order))
    return LaurentProbe(order, slope, leading)


# ---------------------------------------------------------------------------
# remainder families


def _rational(s, num, den):
    """prod(num)/prod(den) with AtPole on vanishing denominators."""
    radius = get_config().pole_exclusion_radius
    val = np.ones_like(s)
    for d in den:
        dv = d(s)
        if np.any(np.abs(dv) <= radius):
            where = np.asarray(s)[np.abs(dv) <= radius].flat[0]
            raise AtPole(where, "remainder formula has a vanishing denominator")
        val = val / dv
    for n in num:
        val = val * n(s)
    return val


def _r(*xs):
    return tuple(xs)


def _f1_left(i, s):
    if i == 1:
        return 2 * _rational(s, _r(lambda s: s - 1), _r(lambda s: s + 1)) * chi_ratio(3 * s, 3 * s - 1)
    return (
        _rational(s, _r(lambda s: s - 1, lambda s: 3 * s - 2, lambda s: A * s - A + 1),
                  _r(lambda s: s + 1, lambda s: s - 2))
        * chi_ratio(s + 1, s) * chi_ratio(3 * s, 3 * s - 1)
    )


def _f2_left(i, s):
    if i == 1:
        return 2 * _rational(s, _r(lambda s: s - 1), _r(lambda s: s + 2)) * chi_ratio(s + 1, s)
    return (
        _rational(s, _r(lambda s: A * s + 3, lambda s: (s - 1) ** 2), _r(lambda s: s + 2, lambda s: s - 3))
        * chi_ratio(s + 2, s)
    )


def _f1_right(i, s):
    den = _r(lambda s: s - 1, lambda s: 3 * s - 2, lambda s: A * s - A + 1)
    if i == 1:
        return (
            _rational(s, _r(lambda s: s + 1, lambda s: s - 2), den)
            * chi_ratio(s, s + 1) * chi_ratio(3 * s - 1, 3 * s)
        )
    return 2 * _rational(s, _r(lambda s: s - 2), den[1:]) * chi_ratio(s, s + 1)


def _f2_right(i, s):
    if i == 1:
        return 2 * _rational(s, _r(lambda s: s - 3), _r(lambda s: A * s + 3, lambda s: s - 1)) * chi_ratio(s + 1, s + 2)
    return (
        _rational(s, _r(lambda s: s + 2, lambda s: s - 3), _r(lambda s: A * s + 3, lambda s: (s - 1) ** 2))
        * chi_ratio(s, s + 2)
    )


def _z1_r(i, s):
    den1 = _r(lambda s: s - 1, lambda s: 3 * s - 2, lambda s: A * s - A + 1)
    den2 = _r(lambda s: (s - 1) ** 2, lambda s: 3 * s - 2, lambda s: A * s - A + 1)
    if i == 1:
        return _f1_right(1, s)
    if i == 2:
        return _rational(s, _r(lambda s: 2 * (s - 1) * (s - 2)), den1) * chi_ratio(s, s + 1)
    c2 = chi_ratio(2 * s - 1, 2 * s)
    if i == 3:
        return (
            _rational(s, _r(lambda s: s**2, lambda s: 3 * s - 1, lambda s: A * s - 1), den2)
            * chi_ratio(s - 1, s + 1) * chi_ratio(3 * s - 2, 3 * s) * c2
        )
    if i == 4:
        return (
            _rational(s, _r(lambda s: s * (s + 1) * (s - 2)), den2)
            * chi_ratio(s, s + 1) * chi_ratio(3 * s - 1, 3 * s) * c2
        )
    return (
        _rational(s, _r(lambda s: 2 * s**2 * (s + 1)), den2)
        * chi_ratio(s, s + 1) * chi_ratio(3 * s - 2, 3 * s) * c2
    )


def _z2_r(i, s):
    if i in (1, 2):
        return _f2_right(i, s)
    den = _r(lambda s: (s - 1) ** 2, lambda s: s - 2, lambda s: A * s + 3)
    c2 = chi_ratio(2 * s - 1, 2 * s)
    if i == 3:
        return _rational(s, _r(lambda s: s**2 * (s + 1), lambda s: A * s - 3 - A), den) * chi_ratio(s - 2, s + 2) * c2
    if i == 4:
        return _rational(s, _r(lambda s: 2 * s * (s + 1) * (s + 2)), den) * chi_ratio(s - 1, s + 2) * c2
    return _rational(s, _r(lambda s: (s - 3) * (s + 1) * (s + 2)), den) * chi_ratio(s, s + 2) * c2


def _g_h_long(i, s):
    if i == 1:
        return (
            _rational(s, _r(lambda s: (s - 2) * (s + 1)), _r(lambda s: s, lambda s: 3 * s - 1, lambda s: A * s - 1))
            * chi_ratio(s, s - 1) * chi_ratio(3 * s - 1, 3 * s - 2)
            + _rational(s, _r(lambda s: 2 * (s + 1)), _r(lambda s: 3 * s - 1, lambda s: A * s - 1)) * chi_ratio(s, s - 1)
        )
    return _f1_right(1, s) + _f1_right(2, s)


def _g_h_short(i, s):
    if i == 1:
        den = _r(lambda s: A * s - A - 3)
        return (
            _rational(s, _r(lambda s: 2 * (s + 2)), _r(lambda s: s) + den) * chi_ratio(s - 1, s - 2)
            + _rational(s, _r(lambda s: (s + 2) * (s - 3)), _r(lambda s: s**2) + den) * chi_ratio(s, s - 2)
        )
    return _f2_right(1, s) + _f2_right(2, s)


_exceptional_zero: Dict[FunctionId, complex] = {}


def set_exceptional_zero(kind, rho0: complex) -> None:
    """Install the complex zero (upper half plane) of f_i with real part > 1/2."""
    _exceptional_zero[FunctionId.parse(kind)] = complex(rho0)


def exceptional_zero(kind) -> complex:
    """The stored zero rho0 of f1 or f2; located on first use if not installed."""
    kind = FunctionId.parse(kind)
    if kind not in _exceptional_zero:
        from .zeros import locate_exceptional_zero

        _exceptional_zero[kind] = locate_exceptional_zero(kind).location
    return _exceptional_zero[kind]


def _ratio_r(kind: FunctionId, s, rho0: complex | None):
    rho = exceptional_zero(kind) if rho0 is None else complex(rho0)
    rc = rho.conjugate()
    fac = _rational(s, _r(lambda s: s - 1 + rho, lambda s: s - 1 + rc), _r(lambda s: s - rho, lambda s: s - rc))
    if kind is FunctionId.F2:
        fac = fac * _rational(s, _r(lambda s: s), _r(lambda s: 1 - s))
    return np.abs(fac) * np.abs(chi_ratio(2 * s - 1, 2 * s))


_FAMILY_IMPL = {
    RemainderFamily.F1_LEFT_R: _f1_left,
    RemainderFamily.F2_LEFT_R: _f2_left,
    RemainderFamily.F1_RIGHT_Q: _f1_right,
    RemainderFamily.F2_RIGHT_Q: _f2_right,
    RemainderFamily.Z1_R: _z1_r,
    RemainderFamily.Z2_R: _z2_r,
    RemainderFamily.G_H_LONG: _g_h_long,
    RemainderFamily.G_H_SHORT: _g_h_short,
}


def eval_remainder(family, index: int, s, rho0: complex | None = None):
    """One remainder term. ``RATIO_R1``/``RATIO_R2`` return the real modulus r_i(s)."""
    family = RemainderFamily(family)
    if index not in FAMILY_INDICES[family]:
        raise ValueError(f"{family.value} has no index {index}")
    z, scalar = _arr(s)
    if family is RemainderFamily.RATIO_R1:
        val = _ratio_r(FunctionId.F1, z, rho0)
        return float(val) if scalar else val
    if family is RemainderFamily.RATIO_R2:
        val = _ratio_r(FunctionId.F2, z, rho0)
        return float(val) if scalar else val
    return _out(_FAMILY_IMPL[family](index, z), scalar)


# Sign with which each remainder enters its bracket 1 + sum(sign_i * R_i).
# These follow from expanding the defining formulas; the bounds only use |R_i|.
BRACKET_SIGNS = {
    RemainderFamily.F1_LEFT_R: (1, -1),
    RemainderFamily.F2_LEFT_R: (1, -1),
    RemainderFamily.F1_RIGHT_Q: (-1, -1),
    RemainderFamily.F2_RIGHT_Q: (-1, -1),
    RemainderFamily.Z1_R: (-1, -1, -1, -1, -1),
    RemainderFamily.Z2_R: (-1, -1, -1, -1, -1),
}


def _leading(family: RemainderFamily, s):
    if family is RemainderFamily.F1_LEFT_R:
        return -(s + 1) * (s - 1) * (s - 2) * chi(s) * chi(3 * s - 1)
    if family is RemainderFamily.F2_LEFT_R:
        return -(s + 2) * (s - 2) * (s - 3) * chi(s)
    if family is RemainderFamily.F1_RIGHT_Q:
        return (s - 1) ** 2 * (3 * s - 2) * (A * s - A + 1) * chi(s + 1) * chi(3 * s)
    if family is RemainderFamily.F2_RIGHT_Q:
        return (A * s + 3) * (s - 1) ** 2 * (s - 2) * chi(s + 2)
    if family is RemainderFamily.Z1_R:
        return (s - 1) ** 2 * (3 * s - 2) * (A * s - A + 1) * chi(s + 1) * chi(3 * s) * chi(2 * s)
    if family is RemainderFamily.Z2_R:
        return (s - 1) ** 2 * (s - 2) * (A * s + 3) * chi(s + 2) * chi(2 * s)
    raise ValueError(f"{family.value} is not a factorisation family")


def factorization(family, s) -> Tuple[complex, complex]:
    """(leading factor, bracket) whose product is the function the family describes."""
    family = RemainderFamily(family)
    z, scalar = _arr(s)
    bracket = np.ones_like(z)
    for sign, i in zip(BRACKET_SIGNS[family], FAMILY_INDICES[family]):
        bracket = bracket + sign * _FAMILY_IMPL[family](i, z)
    return _out(_leading(family, z), scalar), _out(bracket, scalar)


FACTORED_FUNCTION = {
    RemainderFamily.F1_LEFT_R: FunctionId.F1,
    RemainderFamily.F2_LEFT_R: FunctionId.F2,
    RemainderFamily.F1_RIGHT_Q: FunctionId.F1,
    RemainderFamily.F2_RIGHT_Q: FunctionId.F2,
    RemainderFamily.Z1_R: FunctionId.Z1,
    RemainderFamily.Z2_R: FunctionId.Z2,
}


def reflection_ratio(kind, sigma):
    """f(1-s)/f(s) rebuilt from the g, h decomposition (kind F1 or F2)."""
    kind = FunctionId.parse(kind)
    s, scalar = _arr(sigma)
    if kind is FunctionId.F1:
        g, h = _g_h_long(1, s), _g_h_long(2, s)
        poly = _rational(
            s,
            _r(lambda s: s**2, lambda s: 3 * s - 1, lambda s: A * s - 1),
            _r(lambda s: (s - 1) ** 2, lambda s: 3 * s - 2, lambda s: A * s - A + 1),
        )
        ch = chi_ratio(s - 1, s + 1) * chi_ratio(3 * s - 2, 3 * s)
    else:
        g, h = _g_h_short(1, s), _g_h_short(2, s)
        poly = _rational(
            s,
            _r(lambda s: s**2, lambda s: s + 1, lambda s: A * s - A - 3),
            _r(lambda s: (s - 1) ** 2, lambda s: s - 2, lambda s: A * s + 3),
        )
        ch = chi_ratio(s - 2, s + 2)
    return _out(poly * ch * (1 + g) / (1 - h), scalar)


def asymptotic_left_constant(kind) -> float:
    """Limit of |R_2| far to the left: 2 sqrt(3) pi A for f1, 2 pi A for f2."""
    kind = FunctionId.parse(kind)
    return 2 * math.sqrt(3) * math.pi * A if kind is FunctionId.F1 else 2 * math.pi * A


# ---------------------------------------------------------------------------
# cross-validation


@dataclass
class ConsistencyReport:
    s: complex
    residuals: Dict[str, float] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def consistency_check(s: complex, rtol: float = 1e-9) -> ConsistencyReport:
    """Compare Z_i with prefactor * (term-sum zeta) at one point."""
    s = complex(s)
    rep = ConsistencyReport(s)
    for z_kind, zeta_kind in ZETA_FOR.items():
        z_val = complex(eval_Z(z_kind, s))
        ref = complex(_reference(zeta_kind).evaluate(s)) * complex(prefactor(z_kind, s))
        res = abs(z_val - ref) / max(abs(z_val), 1e-300)
        rep.residuals[z_kind.value] = res
        if not res <= rtol:
            rep.failures.append(f"{z_kind.value}: relative residual {res:.3e} > {rtol:g}")
    return rep


def critical_line_value(kind, t):
    """Im Z(1/2 + it), a real function whose sign changes bracket critical-line zeros.

    Raises PrecisionLoss when Re Z(1/2+it) is not negligible against the size of
    the two halves of Z (the function is purely imaginary there).
    """
    t_arr = np.asarray(t, dtype=float)
    s = 0.5 + 1j * t_arr
    first, second = z_terms(kind, s)
    val = np.asarray(first) - np.asarray(second)
    scale = np.abs(first) + np.abs(second)
    bad = np.abs(val.real) > 1e-9 * scale + 1e-300
    if np.any(bad):
        raise PrecisionLoss(np.asarray(s)[bad].flat[0], "Z(1/2+it) has a non-negligible real part")
    return float(val.imag) if t_arr.ndim == 0 else val.imag
