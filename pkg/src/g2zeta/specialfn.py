"""Complex Gamma, Riemann zeta, completed zeta xi(s) and chi(s) = s(s-1)xi(s).

Everything here is vectorised over numpy arrays: a scalar input gives a Python
``complex`` back, an array input gives an array of the same shape.

Gamma uses a Lanczos approximation (g = 7, nine coefficients) evaluated in
log form, with the reflection formula for Re s < 1/2. Zeta uses
Euler-Maclaurin summation with twelve Bernoulli corrections in Re s >= 1/2 and
the functional equation of xi to the left of that. Magnitudes of Gamma factors
are carried as logarithms until the last moment so that heights of a few
hundred do not underflow.

Validated range: |Im s| <= 250, -50 <= Re s <= 50, relative error about
1e-12 (away from zeros of the function being evaluated).
"""

from __future__ import annotations

import functools
import math

import numpy as np

from .config import get_config
from .errors import AtPole, PrecisionLoss

LOG_PI = math.log(math.pi)
LOG_2PI = math.log(2.0 * math.pi)

_LANCZOS_G = 7.0
_LANCZOS_COEF = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])

# B_{2k} / (2k)!  for k = 1..12
_BERNOULLI_2K = [
    (1, 6), (-1, 30), (1, 42), (-1, 30), (5, 66), (-691, 2730), (7, 6),
    (-3617, 510), (43867, 798), (-174611, 330), (854513, 138), (-236364091, 2730),
]
_EM_COEF = [p / q / math.factorial(2 * k) for k, (p, q) in enumerate(_BERNOULLI_2K, start=1)]


def _as_array(s):
    arr = np.asarray(s, dtype=complex)
    return arr, arr.ndim == 0


def _out(arr, scalar):
    return complex(np.asarray(arr).reshape(-1)[0]) if scalar else arr


def _near(s: np.ndarray, points, radius: float) -> np.ndarray:
    mask = np.zeros(s.shape, dtype=bool)
    for p in points:
        mask |= np.abs(s - p) <= radius
    return mask


def _check_poles(s: np.ndarray, points, radius: float, name: str) -> None:
    bad = _near(s, points, radius)
    if bad.any():
        where = s[bad].flat[0]
        raise AtPole(where, f"{name} has a pole within {radius:g}")


# ---------------------------------------------------------------------------
# Gamma


def _lanczos_loggamma(z: np.ndarray) -> np.ndarray:
    """log Gamma(z) for Re z >= 1/2 (any branch; only exp() of it is used)."""
    zm = z - 1.0
    x = np.full(z.shape, _LANCZOS_COEF[0], dtype=complex)
    for i in range(1, len(_LANCZOS_COEF)):
        x = x + _LANCZOS_COEF[i] / (zm + i)
    t = zm + _LANCZOS_G + 0.5
    return 0.5 * LOG_2PI + (zm + 0.5) * np.log(t) - t + np.log(x)


def _log_sin_pi(z: np.ndarray) -> np.ndarray:
    """log sin(pi z) without overflow for large |Im z| (branch arbitrary)."""
    n = np.round(z.real)
    f = z - n
    upper = f.imag >= 0
    g = np.where(upper, f, np.conj(f))
    # sin(pi g) = e^{-i pi g} (e^{2 i pi g} - 1) / (2i), |e^{2 i pi g}| <= 1
    with np.errstate(divide="ignore", invalid="ignore"):
        val = -1j * math.pi * g + np.log(np.expm1(2j * math.pi * g)) - np.log(2j)
    val = np.where(upper, val, np.conj(val))
    return val + 1j * math.pi * n


def log_gamma(s):
    """A logarithm of Gamma(s); exp(log_gamma(s)) == Gamma(s)."""
    z, scalar = _as_array(s)
    right = z.real >= 0.5
    out = np.empty(z.shape, dtype=complex)
    if right.any():
        out[right] = _lanczos_loggamma(z[right])
    left = ~right
    if left.any():
        zl = z[left]
        out[left] = LOG_PI - _log_sin_pi(zl) - _lanczos_loggamma(1.0 - zl)
    return _out(out, scalar)


def complex_gamma(s):
    """Gamma(s); raises AtPole near non-positive integers."""
    z, scalar = _as_array(s)
    radius = get_config().pole_exclusion_radius
    nearest = np.minimum(np.round(z.real), 0.0)
    bad = (np.abs(z - nearest) <= radius) & (z.real < 0.5)
    if bad.any():
        raise AtPole(z[bad].flat[0], "Gamma has a pole at non-positive integers")
    return _out(np.exp(log_gamma(z)), scalar)


def rgamma(s):
    """1/Gamma(s), entire; exactly zero at non-positive integers."""
    z, scalar = _as_array(s)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        out = np.exp(-np.asarray(log_gamma(z)))
    poles = (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))
    out = np.where(poles, 0.0, out)
    return _out(out, scalar)


# ---------------------------------------------------------------------------
# zeta


def em_cutoff(imag_max: float) -> int:
    return max(20, math.ceil(1.3 * imag_max) + 10)


def _zeta_em(s: np.ndarray) -> np.ndarray:
    """Euler-Maclaurin zeta(s); intended for Re s >= 1/2, s != 1."""
    if s.size == 0:
        return s.copy()
    N = em_cutoff(float(np.max(np.abs(s.imag))))
    acc = np.zeros(s.shape, dtype=complex)
    for n in range(1, N):
        acc += np.exp(-s * math.log(n))
    logN = math.log(N)
    n_pow = np.exp(-s * logN)  # N^{-s}
    acc += N * n_pow / (s - 1.0) + 0.5 * n_pow
    poch = s.copy()
    tail = n_pow / N  # N^{-s-1}
    for k, c in enumerate(_EM_COEF, start=1):
        acc += c * poch * tail
        poch = poch * (s + 2 * k - 1) * (s + 2 * k)
        tail = tail / (N * N)
    return acc


def _log_gfactor(s: np.ndarray) -> np.ndarray:
    """log of pi^{-s/2} Gamma(s/2)."""
    return -0.5 * s * LOG_PI + np.asarray(log_gamma(0.5 * s))


@functools.lru_cache(maxsize=1)
def _entire_part_taylor(radius: float = 0.25, samples: int = 64, degree: int = 24) -> np.ndarray:
    """Taylor coefficients about s = 1 of xi(s) - 1/(s-1) + 1/s (an entire function).

    Obtained once by discrete Cauchy integrals on a circle where the direct
    evaluation of xi is well conditioned.
    """
    theta = 2.0 * math.pi * np.arange(samples) / samples
    u = radius * np.exp(1j * theta)
    s = 1.0 + u
    xi_vals = np.exp(_log_gfactor(s)) * _zeta_em(s)
    entire = xi_vals - 1.0 / u + 1.0 / s
    coef = np.fft.fft(entire) / samples
    return coef[: degree + 1] / radius ** np.arange(degree + 1)


def _chi_parts(s: np.ndarray):
    """Split chi(s) = exp(L) * M with moderate-size M, without overflow in L.

    Works on the reflected point s' (Re s' >= 1/2); chi(s) = chi(1-s) and
    s(s-1) is invariant under s -> 1-s.
    """
    sr = np.where(s.real >= 0.5, s, 1.0 - s)
    radius = get_config().chi_series_radius
    series = np.abs(sr - 1.0) < radius
    L = np.zeros(s.shape, dtype=complex)
    M = np.empty(s.shape, dtype=complex)
    direct = ~series
    if direct.any():
        sd = sr[direct]
        L[direct] = _log_gfactor(sd)
        M[direct] = sd * (sd - 1.0) * _zeta_em(sd)
    if series.any():
        u = sr[series] - 1.0
        coef = _entire_part_taylor()
        ent = np.zeros(u.shape, dtype=complex)
        for c in coef[::-1]:
            ent = ent * u + c
        M[series] = 1.0 + (u + 1.0) * u * ent
    return L, M


def chi(s):
    """chi(s) = s(s-1) xi(s), entire, chi(0) = chi(1) = 1."""
    z, scalar = _as_array(s)
    L, M = _chi_parts(z)
    return _out(np.exp(L) * M, scalar)


def chi_ratio(a, b):
    """chi(a)/chi(b) computed without forming either factor separately."""
    za, scalar = _as_array(a)
    zb = np.asarray(b, dtype=complex)
    za, zb = np.broadcast_arrays(za, zb)
    La, Ma = _chi_parts(np.ascontiguousarray(za))
    Lb, Mb = _chi_parts(np.ascontiguousarray(zb))
    return _out(np.exp(La - Lb) * (Ma / Mb), scalar)


def xi(s):
    """Completed zeta pi^{-s/2} Gamma(s/2) zeta(s); poles at 0 and 1."""
    z, scalar = _as_array(s)
    _check_poles(z, (0.0, 1.0), get_config().pole_exclusion_radius, "xi")
    L, M = _chi_parts(z)
    return _out(np.exp(L) * M / (z * (z - 1.0)), scalar)


def xi_ratio(a, b):
    """xi(a)/xi(b) via chi_ratio; a, b must avoid 0 and 1."""
    za, scalar = _as_array(a)
    zb = np.asarray(b, dtype=complex)
    r = np.asarray(chi_ratio(za, zb)) * (zb * (zb - 1.0)) / (za * (za - 1.0))
    return _out(r, scalar)


def complex_zeta(s):
    """Riemann zeta(s); pole at s = 1."""
    z, scalar = _as_array(s)
    _check_poles(z, (1.0,), get_config().pole_exclusion_radius, "zeta")
    out = np.empty(z.shape, dtype=complex)
    right = z.real >= 0.5
    if right.any():
        out[right] = _zeta_em(z[right])
    left = ~right
    if left.any():
        zl = z[left]
        # zeta(s) = chi(1-s) pi^{s/2} / (2 (s-1) Gamma(1 + s/2))
        L, M = _chi_parts(1.0 - zl)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            lg = np.asarray(log_gamma(1.0 + 0.5 * zl))
            val = np.exp(L + 0.5 * zl * LOG_PI - lg) * M / (2.0 * (zl - 1.0))
        trivial = (zl.imag == 0) & (zl.real < 0) & (np.mod(zl.real, 2.0) == 0)
        out[left] = np.where(trivial, 0.0, val)
    return _out(out, scalar)


def xi_critical_real(t):
    """The real number xi(1/2 + it).

    The imaginary part left over from rounding is checked against the size of
    the Gamma factor (not against |xi|, which vanishes at zeros).
    """
    tt = np.asarray(t, dtype=float)
    scalar = tt.ndim == 0
    if np.any(np.abs(tt) > 250):
        from .errors import OutOfValidatedRange

        raise OutOfValidatedRange(complex(0.5, float(np.max(np.abs(tt)))), "|t| must be <= 250")
    s = 0.5 + 1j * tt
    L, M = _chi_parts(s)
    val = np.exp(L) * M / (s * (s - 1.0))
    zeta_part = M / (s * (s - 1.0))
    floor = np.exp(L.real) * np.maximum(np.abs(zeta_part), 1.0)
    bad = np.abs(val.imag) > 1e-10 * floor + 1e-300
    if bad.any():
        raise PrecisionLoss(s[bad].flat[0], "xi(1/2+it) has a non-negligible imaginary part")
    return float(val.real) if scalar else val.real


gamma = complex_gamma
zeta = complex_zeta
