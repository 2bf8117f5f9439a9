"""The two-variable period of G2 and the residues that turn it into zeta functions.

The period is a sum over the Weyl group of a rational coefficient
``1/(<w lambda - rho, alpha^vee> <w lambda - rho, beta^vee>)`` times a product of
xi-ratios ``xi(<lambda, gamma^vee>)/xi(<lambda, gamma^vee> + 1)`` over the
inversion set of ``w``. All manipulation (residues, multiplication by xi
factors, shifts) is exact on integer affine forms; numbers only appear in
``evaluate``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from . import specialfn
from .errors import AtPole
from .rootsystem import ALPHA, BETA, LinearForm, RootSystemData, build_g2, format_form, pairing_after_action

Forms = Tuple[LinearForm, ...]


def _form_key(f: LinearForm):
    return (f.a, f.b, f.c)


def _sorted(forms: Iterable[LinearForm]) -> Forms:
    return tuple(sorted(forms, key=_form_key))


def _cancel(num: Iterable[LinearForm], den: Iterable[LinearForm]) -> Tuple[Forms, Forms]:
    n, d = Counter(num), Counter(den)
    common = n & d
    return _sorted((n - common).elements()), _sorted((d - common).elements())


@dataclass(frozen=True)
class XiRatioFactor:
    """xi(arg) / xi(arg + 1)."""

    arg: LinearForm


@dataclass(frozen=True)
class RationalCoeff:
    constant: Fraction = Fraction(1)
    num: Forms = ()
    den: Forms = ()

    def evaluate(self, z1, z2=0):
        val = float(self.constant) * np.ones(np.broadcast(np.asarray(z1), np.asarray(z2)).shape, dtype=complex)
        for f in self.num:
            val = val * f(z1, z2)
        for f in self.den:
            val = val / f(z1, z2)
        return val


@dataclass(frozen=True)
class PeriodTerm:
    weyl: str
    coeff: RationalCoeff
    ratios: Tuple[XiRatioFactor, ...]


@dataclass(frozen=True)
class PeriodExpression:
    terms: Tuple[PeriodTerm, ...]

    def term(self, weyl: str) -> PeriodTerm:
        for t in self.terms:
            if t.weyl == weyl:
                return t
        raise KeyError(weyl)


@dataclass(frozen=True)
class SingleVarTerm:
    """constant * prod(num)/prod(den) * prod xi(xi_num)/prod xi(xi_den), forms in s."""

    coeff: RationalCoeff
    xi_num: Forms = ()
    xi_den: Forms = ()
    weyl: str = ""

    def canonical(self) -> "SingleVarTerm":
        const = Fraction(self.coeff.constant)
        num, den = [], []
        for target, forms, invert in ((num, self.coeff.num, False), (den, self.coeff.den, True)):
            for f in forms:
                if f.is_constant:
                    if f.c == 0 and invert:
                        raise ZeroDivisionError("constant zero in a denominator")
                    const = const / f.c if invert else const * f.c
                    continue
                g = gcd(gcd(abs(f.a), abs(f.b)), abs(f.c))
                lead = f.a if f.a != 0 else f.b
                sign = -1 if lead < 0 else 1
                k = sign * g
                prim = LinearForm(f.a // k, f.b // k, f.c // k)
                const = const / k if invert else const * k
                target.append(prim)
        num_f, den_f = _cancel(num, den)
        xn, xd = _cancel(self.xi_num, self.xi_den)
        return SingleVarTerm(RationalCoeff(const, num_f, den_f), xn, xd, self.weyl)

    def key(self):
        c = self.canonical()
        return (c.coeff.constant, c.coeff.num, c.coeff.den, c.xi_num, c.xi_den)

    def shifted(self, shift: int) -> "SingleVarTerm":
        """Replace s by s - shift."""
        def sh(f: LinearForm) -> LinearForm:
            return LinearForm(f.a, f.b, f.c - f.a * shift)

        return SingleVarTerm(
            RationalCoeff(self.coeff.constant, tuple(map(sh, self.coeff.num)), tuple(map(sh, self.coeff.den))),
            tuple(map(sh, self.xi_num)),
            tuple(map(sh, self.xi_den)),
            self.weyl,
        )

    def __str__(self) -> str:
        c = self.canonical()
        body = "".join(f"({format_form(f)})" for f in c.coeff.num)
        body += "".join(f"xi({format_form(f)})" for f in c.xi_num)
        text = f"{c.coeff.constant} * {body}" if body else str(c.coeff.constant)
        if c.coeff.den or c.xi_den:
            den = "".join(f"({format_form(f)})" for f in c.coeff.den)
            den += "".join(f"xi({format_form(f)})" for f in c.xi_den)
            text += f" / {den}"
        return text


@dataclass(frozen=True)
class ZetaExpression:
    terms: Tuple[SingleVarTerm, ...]
    label: str = ""

    def canonical(self) -> "ZetaExpression":
        return ZetaExpression(tuple(t.canonical() for t in self.terms), self.label)

    def term_keys(self) -> Counter:
        return Counter(t.key() for t in self.terms)

    def same_terms(self, other: "ZetaExpression") -> bool:
        return self.term_keys() == other.term_keys()

    def evaluate_terms(self, s) -> np.ndarray:
        """Per-term values, shape (n_terms, *s.shape)."""
        s_arr = np.asarray(s, dtype=complex)
        cache: Dict[LinearForm, np.ndarray] = {}

        def xi_of(f: LinearForm):
            if f not in cache:
                arg = f.a * s_arr + f.c
                if f.a == 0:
                    cache[f] = np.full(s_arr.shape, specialfn.xi(complex(f.c)))
                else:
                    cache[f] = np.asarray(specialfn.xi(arg))
            return cache[f]

        out = np.empty((len(self.terms),) + s_arr.shape, dtype=complex)
        for i, t in enumerate(self.terms):
            v = t.coeff.evaluate(s_arr)
            for f in t.xi_num:
                v = v * xi_of(f)
            for f in t.xi_den:
                v = v / xi_of(f)
            out[i] = v
        return out

    def evaluate(self, s):
        vals = self.evaluate_terms(s).sum(axis=0)
        return complex(vals) if np.ndim(s) == 0 else vals

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return "\n".join(("  + " if i else "    ") + str(t) for i, t in enumerate(self.terms))


# ---------------------------------------------------------------------------
# construction


def build_period(rs: RootSystemData | None = None) -> PeriodExpression:
    rs = rs or build_g2()
    rho_a = rs.pairing(ALPHA)(*rs.rho)
    rho_b = rs.pairing(BETA)(*rs.rho)
    terms = []
    for w in rs.elements:
        da = pairing_after_action(w, ALPHA) - rho_a
        db = pairing_after_action(w, BETA) - rho_b
        ratios = tuple(
            XiRatioFactor(rs.pairing(g)) for g in sorted(w.inversions, key=lambda r: (r.n, r.m))
        )
        terms.append(PeriodTerm(w.name, RationalCoeff(Fraction(1), (), (da, db)), ratios))
    return PeriodExpression(tuple(terms))


def _period_singular_forms(expr: PeriodExpression):
    for t in expr.terms:
        for f in t.coeff.den:
            yield f, 0
        for r in t.ratios:
            for v in (0, 1):
                yield r.arg, v
                yield r.arg + 1, v


def eval_period(expr: PeriodExpression, z1, z2, clearance: float = 1e-6):
    """Numeric value of the 12-term period at (z1, z2)."""
    z1a = np.asarray(z1, dtype=complex)
    z2a = np.asarray(z2, dtype=complex)
    for f, v in set(_period_singular_forms(expr)):
        dist = np.abs(f(z1a, z2a) - v) / max(1.0, np.hypot(f.a, f.b))
        if np.any(dist <= clearance):
            raise AtPole(complex(np.asarray(z1a).flat[0]), f"on singular hyperplane {f} = {v}")
    total = np.zeros(np.broadcast(z1a, z2a).shape, dtype=complex)
    for t in expr.terms:
        v = t.coeff.evaluate(z1a, z2a)
        for r in t.ratios:
            v = v * specialfn.xi(r.arg(z1a, z2a)) / specialfn.xi((r.arg + 1)(z1a, z2a))
        total = total + v
    return complex(total) if total.ndim == 0 else total


# ---------------------------------------------------------------------------
# residues

# (hyperplane, variable the residue is taken in, z1(s), z2(s))
HYPERPLANES = {
    "long": (LinearForm(1, -1, -1), "z1", LinearForm(1, 0, 1), LinearForm(1, 0, 0)),
    "short": (LinearForm(0, 1, -1), "z2", LinearForm(1, 0, 0), LinearForm(0, 0, 1)),
}


def residue_term(
    term: PeriodTerm,
    hyperplane: LinearForm,
    variable: str,
    z1_of_s: LinearForm,
    z2_of_s: LinearForm,
) -> Optional[SingleVarTerm]:
    """Residue of one period term along ``hyperplane = 0``; None when it has no pole there."""

    def coef(f: LinearForm) -> int:
        return f.a if variable == "z1" else f.b

    def on_plane(f: LinearForm) -> LinearForm:
        return f.substitute(z1_of_s, z2_of_s)

    h_v = coef(hyperplane)
    if h_v == 0:
        raise ValueError("hyperplane does not involve the residue variable")
    order = 0
    zero_factors = 0
    factor = Fraction(1)
    den = []
    for f in term.coeff.den:
        k = f.proportional_to(hyperplane)
        if k is not None:
            order += 1
            factor /= k * h_v
        else:
            den.append(on_plane(f))
    num = []
    for f in term.coeff.num:
        if f.proportional_to(hyperplane) is not None:
            order -= 1
            zero_factors += 1
        else:
            num.append(on_plane(f))
    xi_num, xi_den = [], []
    for r in term.ratios:
        top, bottom = r.arg, r.arg + 1
        ts = on_plane(top)
        if ts.is_constant and ts.c in (0, 1):
            order += 1
            factor *= Fraction(1 if ts.c == 1 else -1, coef(top))
        else:
            xi_num.append(ts)
        bs = on_plane(bottom)
        if bs.is_constant and bs.c in (0, 1):
            order -= 1
            zero_factors += 1
        else:
            xi_den.append(bs)
    if order >= 2:
        raise AssertionError(f"term {term.weyl} has a pole of order {order} along {hyperplane}")
    if order <= 0:
        return None
    if zero_factors:
        raise AssertionError(f"term {term.weyl} mixes poles and zeros along {hyperplane}")
    coeff = RationalCoeff(term.coeff.constant * factor, tuple(num), tuple(den))
    return SingleVarTerm(coeff, tuple(xi_num), tuple(xi_den), term.weyl).canonical()


def residue_along(
    expr: PeriodExpression,
    hyperplane: LinearForm | str,
    variable: str | None = None,
    z1_of_s: LinearForm | None = None,
    z2_of_s: LinearForm | None = None,
) -> ZetaExpression:
    """Residue of the period along a singular hyperplane, as a function of s.

    ``hyperplane`` may be ``"long"`` (z1 - z2 = 1, residue in z1, z2 = s) or
    ``"short"`` (z2 = 1, residue in z2, z1 = s).
    """
    label = ""
    if isinstance(hyperplane, str):
        label = hyperplane
        hyperplane, variable, z1_of_s, z2_of_s = HYPERPLANES[hyperplane]
    terms = []
    for t in expr.terms:
        r = residue_term(t, hyperplane, variable, z1_of_s, z2_of_s)
        if r is not None:
            terms.append(r)
    return ZetaExpression(tuple(terms), label)


def normalize(zexpr: ZetaExpression, multipliers: Sequence[LinearForm] = (), shift: int = 0) -> ZetaExpression:
    """Multiply every term by prod xi(multipliers), cancel, then replace s by s - shift."""
    out = []
    for t in zexpr.terms:
        nt = SingleVarTerm(t.coeff, tuple(t.xi_num) + tuple(multipliers), t.xi_den, t.weyl).canonical()
        if shift:
            nt = nt.shifted(shift).canonical()
        out.append(nt)
    return ZetaExpression(tuple(out), zexpr.label)


S = LinearForm(1, 0, 0)
XI2 = LinearForm(0, 0, 2)

MULTIPLIERS = {
    "long": (XI2, S + 2, 2 * S + 2, 3 * S + 3),
    "short": (XI2, S + 3, 2 * S + 2),
}


def unshifted_zeta(kind: str, expr: PeriodExpression | None = None) -> ZetaExpression:
    """The residue times the normalising xi factors, before the shift s -> s-1."""
    expr = expr or build_period()
    return normalize(residue_along(expr, kind), MULTIPLIERS[kind], 0)


def pipeline_zeta(kind: str, expr: PeriodExpression | None = None) -> ZetaExpression:
    expr = expr or build_period()
    return normalize(residue_along(expr, kind), MULTIPLIERS[kind], 1)


def _t(const, num=(), den=(), xi_num=()) -> SingleVarTerm:
    def lf(p):
        return LinearForm(p[0], 0, p[1])

    return SingleVarTerm(
        RationalCoeff(Fraction(const), tuple(map(lf, num)), tuple(map(lf, den))),
        tuple(map(lf, xi_num)),
        (),
    )


# Forms written as (coefficient of s, constant).
_REFERENCE = {
    "long": (
        _t(1, den=[(1, -2)], xi_num=[(0, 2), (1, 1), (2, 0), (3, 0)]),
        _t(-1, den=[(1, 1)], xi_num=[(0, 2), (1, -1), (2, -1), (3, -2)]),
        _t(-1, den=[(2, -2)], xi_num=[(1, 1), (2, 0), (3, 0)]),
        _t(1, den=[(2, 0)], xi_num=[(1, -1), (2, -1), (3, -2)]),
        _t(-1, den=[(3, 0), (2, -2)], xi_num=[(1, 0), (2, 0), (3, -1)]),
        _t(-1, den=[(3, -1), (1, -2)], xi_num=[(1, 0), (2, -1), (3, -2)]),
        _t(-1, den=[(3, -3), (2, 0)], xi_num=[(1, 0), (2, -1), (3, -1)]),
        _t(-1, den=[(3, -2), (1, 1)], xi_num=[(1, 0), (2, 0), (3, 0)]),
    ),
    "short": (
        _t(1, den=[(1, -3)], xi_num=[(0, 2), (1, 2), (2, 0)]),
        _t(-1, den=[(1, 2)], xi_num=[(0, 2), (1, -2), (2, -1)]),
        _t(1, den=[(2, -2)], xi_num=[(1, -2), (2, -1)]),
        _t(-1, den=[(2, 0)], xi_num=[(1, 2), (2, 0)]),
        _t(-1, den=[(1, 0), (1, -3)], xi_num=[(1, -1), (2, -1)]),
        _t(-1, den=[(1, -1), (1, 2)], xi_num=[(1, 1), (2, 0)]),
        _t(-1, den=[(2, -2), (1, 1)], xi_num=[(1, 0), (2, 0)]),
        _t(-1, den=[(2, 0), (1, -2)], xi_num=[(1, 0), (2, -1)]),
    ),
}


def reference_zeta(kind: str) -> ZetaExpression:
    """The eight-term closed forms of the two G2 zeta functions, as tabulated."""
    return ZetaExpression(_REFERENCE[kind], kind)


# ---------------------------------------------------------------------------
# JSON


def _coeff_json(c: RationalCoeff) -> dict:
    return {
        "const": str(c.constant),
        "num": [f.as_list() for f in c.num],
        "den": [f.as_list() for f in c.den],
    }


def _coeff_from(d: dict) -> RationalCoeff:
    return RationalCoeff(
        Fraction(d["const"]),
        tuple(LinearForm(*f) for f in d["num"]),
        tuple(LinearForm(*f) for f in d["den"]),
    )


def to_json(expr: PeriodExpression | ZetaExpression) -> list:
    if isinstance(expr, PeriodExpression):
        return [
            {"weyl": t.weyl, "coeff": _coeff_json(t.coeff), "ratios": [r.arg.as_list() for r in t.ratios]}
            for t in expr.terms
        ]
    return [
        {
            "weyl": t.weyl,
            "coeff": _coeff_json(t.coeff),
            "xi_num": [f.as_list() for f in t.xi_num],
            "xi_den": [f.as_list() for f in t.xi_den],
        }
        for t in expr.terms
    ]


def from_json(data: list | str) -> PeriodExpression | ZetaExpression:
    if isinstance(data, str):
        data = json.loads(data)
    if data and "ratios" in data[0]:
        return PeriodExpression(tuple(
            PeriodTerm(d["weyl"], _coeff_from(d["coeff"]), tuple(XiRatioFactor(LinearForm(*f)) for f in d["ratios"]))
            for d in data
        ))
    return ZetaExpression(tuple(
        SingleVarTerm(
            _coeff_from(d["coeff"]),
            tuple(LinearForm(*f) for f in d["xi_num"]),
            tuple(LinearForm(*f) for f in d["xi_den"]),
            d.get("weyl", ""),
        )
        for d in data
    ))


def format_period(expr: PeriodExpression) -> str:
    lines = []
    for t in expr.terms:
        den = "".join(f"({f})" for f in t.coeff.den)
        rat = " * ".join(f"xi({r.arg})/xi({r.arg + 1})" for r in t.ratios) or "1"
        lines.append(f"{t.weyl:<16} 1/{den} * {rat}")
    return "\n".join(lines)
