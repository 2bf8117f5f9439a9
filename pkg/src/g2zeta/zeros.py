"""Zero counting, critical-line scanning and zero refinement.

Counting uses the argument principle realised by phase continuation: walk the
boundary of a rectangle, subdividing any step where the phase moves by a
quarter turn or more or the modulus jumps by more than a factor five, and add
up the phase increments. No derivative of f is needed, and how close the total
is to a whole number of turns is reported as ``integer_gap``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import zeta
from .config import get_config
from .errors import ContourNearZero, NoConvergence, NonIntegerWinding
from .specialfn import chi_ratio, xi_critical_real
from .zeta import FunctionId

Func = Union[FunctionId, str, Callable]


def _callable(f: Func) -> Callable:
    if callable(f) and not isinstance(f, (str, FunctionId)):
        return f
    fid = FunctionId.parse(f)
    return lambda s: np.asarray(zeta.evaluate(fid, s), dtype=complex)


def _fid(f: Func) -> Optional[FunctionId]:
    if isinstance(f, (str, FunctionId)):
        return FunctionId.parse(f)
    return None


@dataclass(frozen=True)
class Rectangle:
    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError(f"degenerate rectangle {self}")

    @classmethod
    def parse(cls, text: str) -> "Rectangle":
        parts = [float(p) for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError("rectangle must be re_min,re_max,im_min,im_max")
        return cls(*parts)

    @classmethod
    def around(cls, z: complex, half_width: float) -> "Rectangle":
        return cls(z.real - half_width, z.real + half_width, z.imag - half_width, z.imag + half_width)

    @property
    def center(self) -> complex:
        return complex(0.5 * (self.re_min + self.re_max), 0.5 * (self.im_min + self.im_max))

    @property
    def perimeter(self) -> float:
        return 2 * ((self.re_max - self.re_min) + (self.im_max - self.im_min))

    def dilated(self, factor: float) -> "Rectangle":
        c = self.center
        hw = 0.5 * (self.re_max - self.re_min) * factor
        hh = 0.5 * (self.im_max - self.im_min) * factor
        return Rectangle(c.real - hw, c.real + hw, c.imag - hh, c.imag + hh)

    def contains(self, z: complex) -> bool:
        return self.re_min < z.real < self.re_max and self.im_min < z.imag < self.im_max

    def split(self, frac: float = 0.5) -> Tuple["Rectangle", "Rectangle"]:
        """Cut across the longer side at the given fraction of its length."""
        if self.re_max - self.re_min >= self.im_max - self.im_min:
            m = self.re_min + frac * (self.re_max - self.re_min)
            return Rectangle(self.re_min, m, self.im_min, self.im_max), Rectangle(m, self.re_max, self.im_min, self.im_max)
        m = self.im_min + frac * (self.im_max - self.im_min)
        return Rectangle(self.re_min, self.re_max, self.im_min, m), Rectangle(self.re_min, self.re_max, m, self.im_max)

    def boundary_point(self, u: np.ndarray) -> np.ndarray:
        """Counter-clockwise arclength parametrisation starting at the lower-left corner."""
        w = self.re_max - self.re_min
        h = self.im_max - self.im_min
        u = np.mod(u, self.perimeter)
        z = np.empty(u.shape, dtype=complex)
        e1 = u < w
        e2 = (u >= w) & (u < w + h)
        e3 = (u >= w + h) & (u < 2 * w + h)
        e4 = u >= 2 * w + h
        z[e1] = self.re_min + u[e1] + 1j * self.im_min
        z[e2] = self.re_max + 1j * (self.im_min + u[e2] - w)
        z[e3] = self.re_max - (u[e3] - w - h) + 1j * self.im_max
        z[e4] = self.re_min + 1j * (self.im_max - (u[e4] - 2 * w - h))
        return z

    def corners_u(self) -> List[float]:
        w = self.re_max - self.re_min
        h = self.im_max - self.im_min
        return [0.0, w, w + h, 2 * w + h]


@dataclass
class WindingResult:
    count: int
    raw_phase_turns: float
    integer_gap: float
    edge_min_abs: float
    min_newton_distance: float = math.inf
    evaluations: int = 0
    rectangle: Optional[Rectangle] = None
    dilations: int = 0


def _phase_walk(f: Callable, rect: Rectangle, points: int, max_depth: int = 40):
    """Accumulated phase along the boundary with adaptive subdivision."""
    P = rect.perimeter
    base = np.linspace(0.0, P, points + 1)
    base = np.union1d(base, rect.corners_u())
    u = base
    vals = np.asarray(f(rect.boundary_point(u)), dtype=complex)
    vals[-1] = vals[0]
    evaluations = len(u)
    if not np.all(np.isfinite(vals)):
        raise ContourNearZero("non-finite value on the contour")
    for _ in range(max_depth):
        ratio = vals[1:] / vals[:-1]
        dphi = np.angle(ratio)
        mag = np.abs(ratio)
        bad = (np.abs(dphi) >= 0.5 * math.pi) | (mag < 0.2) | (mag > 5.0)
        if not bad.any():
            break
        idx = np.nonzero(bad)[0]
        mids = 0.5 * (u[idx] + u[idx + 1])
        mv = np.asarray(f(rect.boundary_point(mids)), dtype=complex)
        evaluations += len(mids)
        if not np.all(np.isfinite(mv)) or np.any(mv == 0):
            raise ContourNearZero("function vanishes on the contour")
        u = np.insert(u, idx + 1, mids)
        vals = np.insert(vals, idx + 1, mv)
    else:
        raise ContourNearZero("phase steps did not resolve after repeated halving")
    dphi = np.angle(vals[1:] / vals[:-1])
    total = float(np.sum(dphi))
    absv = np.abs(vals)
    # Newton distance |f| / |f'| at each node, with f' from neighbouring nodes
    z = rect.boundary_point(u)
    dz = np.abs(z[2:] - z[:-2])
    df = np.abs(vals[2:] - vals[:-2])
    with np.errstate(divide="ignore", invalid="ignore"):
        newton = np.where(df > 0, absv[1:-1] * dz / df, np.inf)
    return total, float(absv.min()), float(np.min(newton)), evaluations


def winding_count(f: Func, rect: Rectangle, clearance: float | None = None, points: int | None = None) -> WindingResult:
    """Number of zeros minus poles of f inside rect."""
    cfg = get_config()
    clearance = cfg.contour_clearance if clearance is None else clearance
    points = cfg.contour_points if points is None else points
    func = _callable(f)
    current = rect
    last_err = None
    for attempt in range(6):
        try:
            total, fmin, newton, n_eval = _phase_walk(func, current, points)
        except ContourNearZero as exc:
            last_err = exc
            current = current.dilated(1 + 1e-3)
            continue
        if newton < clearance:
            last_err = ContourNearZero(f"zero within ~{newton:.2e} of the contour")
            current = current.dilated(1 + 1e-3)
            continue
        turns = total / (2 * math.pi)
        count = int(round(turns))
        conf = abs(turns - count)
        if conf >= 0.25:
            raise NonIntegerWinding(f"winding {turns:.4f} turns is not near an integer")
        return WindingResult(count, turns, conf, fmin, newton, n_eval, current, attempt)
    raise ContourNearZero(f"{last_err} (after 5 dilations of {rect})")


# ---------------------------------------------------------------------------
# critical line


@dataclass(frozen=True)
class Bracket:
    t_lo: float
    t_hi: float
    v_lo: float
    v_hi: float


def line_function(f: Func) -> Callable[[np.ndarray], np.ndarray]:
    """The real-valued restriction of f to the critical line."""
    fid = FunctionId.parse(f)
    if fid is FunctionId.XI:
        return lambda t: np.asarray(xi_critical_real(t), dtype=float)
    if fid in (FunctionId.Z1, FunctionId.Z2):
        return lambda t: np.asarray(zeta.critical_line_value(fid, t), dtype=float)
    raise ValueError(f"line scans are defined for Z1, Z2 and XI, not {fid.value}")


def line_samples(f: Func, t0: float, t1: float, step: float) -> Tuple[np.ndarray, np.ndarray]:
    fid = FunctionId.parse(f)
    start = t0
    if fid is not FunctionId.XI and t0 <= 0.0:
        # Z_i vanishes at s = 1/2 identically; that zero is handled separately
        start = step
    n = int(math.floor((t1 - start) / step + 1e-9))
    t = start + step * np.arange(n + 1)
    if t[-1] < t1 - 1e-12:
        t = np.append(t, t1)
    return t, line_function(fid)(t)


def line_scan(f: Func, t0: float, t1: float, step: float | None = None) -> List[Bracket]:
    """Sign changes of the real restriction of f along 1/2 + it, t in [t0, t1]."""
    if step is None:
        step = get_config().scan_step
    if step > 0.05:
        raise ValueError("scan step must be at most 0.05")
    t, v = line_samples(f, t0, t1, step)
    out = []
    i = 0
    while i < len(t) - 1:
        if v[i] == 0.0:
            out.append(Bracket(t[i], t[i], 0.0, 0.0))
        elif v[i] * v[i + 1] < 0:
            out.append(Bracket(float(t[i]), float(t[i + 1]), float(v[i]), float(v[i + 1])))
        i += 1
    if v[-1] == 0.0:
        out.append(Bracket(t[-1], t[-1], 0.0, 0.0))
    return out


@dataclass
class ZeroRecord:
    function: str
    location: complex
    residual: float
    method: str
    tol: float
    local_scale: float = 1.0

    def to_json(self) -> dict:
        return {
            "function": self.function,
            "re": self.location.real,
            "im": self.location.imag,
            "residual": self.residual,
            "method": self.method,
            "tol": self.tol,
            "local_scale": self.local_scale,
        }


def local_scale(f: Func, z: complex, radius: float = 0.1, samples: int = 16) -> float:
    """max |f| on a small circle around z; the yardstick for residuals."""
    func = _callable(f)
    ring = z + radius * np.exp(2j * math.pi * np.arange(samples) / samples)
    return float(np.max(np.abs(func(ring))))


def _refine_line(f: Func, br: Bracket, tol: float) -> ZeroRecord:
    fid = FunctionId.parse(f)
    g = line_function(fid)
    lo, hi, vlo, vhi = br.t_lo, br.t_hi, br.v_lo, br.v_hi
    if lo == hi:
        t = lo
    else:
        it = 0
        while hi - lo > 1e-10:
            mid = 0.5 * (lo + hi)
            vm = float(g(mid))
            if vm == 0.0:
                lo = hi = mid
                break
            if vm * vlo < 0:
                hi, vhi = mid, vm
            else:
                lo, vlo = mid, vm
            it += 1
            if it > 200:
                raise NoConvergence(f"bisection did not converge on [{br.t_lo}, {br.t_hi}]")
        if lo == hi or vhi == vlo:
            t = 0.5 * (lo + hi)
        else:
            t = lo - vlo * (hi - lo) / (vhi - vlo)
            if not lo <= t <= hi:
                t = 0.5 * (lo + hi)
    z = complex(0.5, t)
    func = _callable(fid)
    resid = float(abs(func(np.array([z]))[0]))
    scale = local_scale(fid, z)
    return ZeroRecord(fid.value, z, resid, "bisect+secant", tol, scale)


def _refine_newton(f: Func, seed: complex, tol: float, max_iter: int = 200) -> ZeroRecord:
    func = _callable(f)

    def fv(z):
        return complex(np.asarray(func(np.array([z], dtype=complex)))[0])

    z = complex(seed)
    fz = fv(z)
    for _ in range(max_iter):
        h = 1e-6 * max(1.0, abs(z))
        d = (fv(z + h) - fv(z - h)) / (2 * h)
        if d == 0:
            raise NoConvergence(f"zero derivative at {z}")
        step = fz / d
        lam = 1.0
        while True:
            zn = z - lam * step
            fn = fv(zn)
            if abs(fn) < abs(fz) or lam < 1e-6:
                break
            lam *= 0.5
        z, fz = zn, fn
        if abs(lam * step) <= 1e-13 * max(1.0, abs(z)) or fz == 0:
            break
    else:
        raise NoConvergence(f"Newton iteration from {seed} did not converge")
    name = _fid(f).value if _fid(f) else getattr(f, "__name__", "f")
    scale = local_scale(f, z)
    return ZeroRecord(name, z, abs(fz), "newton", tol, scale)


def refine(f: Func, target: Union[Bracket, complex], tol: float | None = None) -> ZeroRecord:
    """Refine a bracketed critical-line sign change or a complex seed to a zero."""
    tol = get_config().refine_tol if tol is None else tol
    if isinstance(target, Bracket):
        return _refine_line(f, target, tol)
    return _refine_newton(f, complex(target), tol)


def multiplicity(f: Func, z: complex, half_width: float = 1e-3) -> int:
    return winding_count(f, Rectangle.around(z, half_width), clearance=1e-3 * half_width).count


_SPLIT_FRACTIONS = (0.4871, 0.5313, 0.4457, 0.5741)


def zeros_in_rectangle(f: Func, rect: Rectangle, min_size: float = 0.5, depth: int = 12) -> List[ZeroRecord]:
    """Locate every zero inside rect by subdividing until each cell holds one, then Newton."""
    found: List[ZeroRecord] = []
    n_total = winding_count(f, rect).count

    def visit(r: Rectangle, n: int, level: int):
        if n == 0:
            return
        size = max(r.re_max - r.re_min, r.im_max - r.im_min)
        if n == 1 and size <= min_size or level >= depth:
            rec = refine(f, r.center)
            if not r.dilated(1.01).contains(rec.location):
                raise NoConvergence(f"Newton left its cell {r} for {rec.location}")
            found.append(rec)
            return
        # off-centre cuts keep the cut line away from symmetric zeros such as real ones
        for frac in _SPLIT_FRACTIONS:
            a, b = r.split(frac)
            try:
                na, nb = winding_count(f, a).count, winding_count(f, b).count
            except ContourNearZero:
                continue
            if na + nb == n:
                break
        else:
            raise ContourNearZero(f"could not split {r} into cells whose counts add up")
        visit(a, na, level + 1)
        visit(b, nb, level + 1)

    visit(rect, n_total, 0)
    found.sort(key=lambda r: (r.location.real, r.location.imag))
    return found


def locate_exceptional_zero(kind) -> ZeroRecord:
    """The zero of f1 or f2 in Re s >= 1/2, Im s > 0 (the non-real one)."""
    fid = FunctionId.parse(kind)
    if fid not in (FunctionId.F1, FunctionId.F2):
        raise ValueError("exceptional zeros are defined for F1 and F2")
    recs = [r for r in zeros_in_rectangle(fid, Rectangle(0.5, 5.0, 0.05, 10.0)) if r.location.imag > 0.05]
    if len(recs) != 1:
        raise NoConvergence(f"expected one non-real zero of {fid.value} in the upper rectangle, found {len(recs)}")
    return recs[0]


# ---------------------------------------------------------------------------
# zeros of xi


@dataclass
class XiZeroTable:
    ordinates: List[float]
    height: float

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.ordinates, self.ordinates[1:])):
            raise ValueError("ordinates must be strictly increasing")

    def up_to(self, T: float) -> "XiZeroTable":
        if T > self.height:
            raise ValueError(f"table only validated up to {self.height}")
        return XiZeroTable([g for g in self.ordinates if g <= T], T)

    def to_json(self) -> dict:
        return {"height": self.height, "ordinates": list(self.ordinates)}

    @classmethod
    def from_json(cls, d: dict) -> "XiZeroTable":
        return cls([float(g) for g in d["ordinates"]], float(d["height"]))


def compute_xi_zeros(T: float, step: float | None = None) -> XiZeroTable:
    if T > 200:
        raise ValueError("xi zero tabulation is validated up to height 200")
    step = get_config().xi_scan_step if step is None else step
    brackets = line_scan(FunctionId.XI, step, T, step)
    ords = []
    for br in brackets:
        rec = _refine_line(FunctionId.XI, br, 1e-8)
        ords.append(rec.location.imag)
    return XiZeroTable(ords, float(T))


def xi_zeros_up_to(T: float, cache: str | Path | None = None, step: float | None = None) -> XiZeroTable:
    """Critical-line zero ordinates of xi in (0, T]; a JSON cache is reused when tall enough."""
    path = Path(cache) if cache is not None else None
    if path is not None and path.exists():
        try:
            table = XiZeroTable.from_json(json.loads(path.read_text()))
        except (ValueError, KeyError):
            table = None
        if table is not None and table.height >= T:
            return table.up_to(T)
    table = compute_xi_zeros(T, step)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(table.to_json(), indent=1) + "\n")
    return table


@dataclass
class LagariasReport:
    T: float
    window: float
    min_count: int
    argmin_t: float
    passed: bool


def lagarias_gap_check(table: XiZeroTable, T: float, window: float = 22.0, grid_step: float = 0.5) -> LagariasReport:
    """Minimum over t in [0, T] of the number of zeros (with negatives) within ``window`` of t."""
    if not table.ordinates:
        raise ValueError("zero table is empty")
    if table.height < T + window:
        raise ValueError(f"need zeros up to {T + window}, table reaches {table.height}")
    gammas = np.array(table.ordinates)
    gammas = np.concatenate([-gammas, gammas])
    n = int(round(T / grid_step))
    ts = grid_step * np.arange(n + 1)
    counts = np.sum(np.abs(ts[:, None] - gammas[None, :]) <= window, axis=1)
    k = int(np.argmin(counts))
    return LagariasReport(T, window, int(counts[k]), float(ts[k]), bool(counts[k] >= 3))


# ---------------------------------------------------------------------------
# chi(2s-1)/chi(2s) on a grid


@dataclass
class RatioScanReport:
    max_value: float
    argmax: complex
    points: int
    passed: bool


def ratio_bound_scan(re_range=(0.51, 20.0), im_max: float = 50.0, n_re: int = 200, n_im: int = 200) -> RatioScanReport:
    """max |chi(2s-1)/chi(2s)| over a rectangular grid strictly right of Re s = 1/2."""
    if re_range[0] <= 0.5:
        raise ValueError("grid must lie strictly inside Re s > 1/2")
    re = np.linspace(re_range[0], re_range[1], n_re)
    im = np.linspace(-im_max, im_max, n_im)
    s = re[None, :] + 1j * im[:, None]
    vals = np.abs(chi_ratio(2 * s - 1, 2 * s))
    k = np.unravel_index(int(np.argmax(vals)), vals.shape)
    vmax = float(vals[k])
    return RatioScanReport(vmax, complex(s[k]), int(vals.size), bool(vmax < 1.0))
