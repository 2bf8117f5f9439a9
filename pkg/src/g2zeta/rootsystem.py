"""Exact integer model of the G2 root system and its Weyl group.

Roots are written ``m*alpha + n*beta`` with alpha short and beta long.
Characters are written in the coordinates ``(z1, z2)`` of the basis
``(2alpha+beta, alpha+beta)``, so that a character pairs with a coroot as an
integer linear form in ``z1, z2``. The twelve Weyl elements are generated from
the two simple reflections and then named by what they do (reflection in a
positive root, or rotation by a multiple of pi/3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Tuple

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]


@dataclass(frozen=True, order=True)
class Root:
    m: int
    n: int

    def __neg__(self) -> "Root":
        return Root(-self.m, -self.n)

    @property
    def is_positive(self) -> bool:
        return self.m >= 0 and self.n >= 0 and (self.m, self.n) != (0, 0)

    def label(self) -> str:
        parts = []
        for coef, sym in ((self.m, "alpha"), (self.n, "beta")):
            if coef == 0:
                continue
            c = "" if abs(coef) == 1 else str(abs(coef))
            sign = "-" if coef < 0 else "+"
            parts.append((sign, c + sym))
        text = "".join(s + t for s, t in parts)
        return text[1:] if text.startswith("+") else text


@dataclass(frozen=True)
class LinearForm:
    """Affine form ``a*z1 + b*z2 + c`` with integer coefficients.

    Single-variable forms reuse this type with ``b == 0`` and read as
    ``a*s + c``.
    """

    a: int = 0
    b: int = 0
    c: int = 0

    def __add__(self, other):
        if isinstance(other, LinearForm):
            return LinearForm(self.a + other.a, self.b + other.b, self.c + other.c)
        return LinearForm(self.a, self.b, self.c + other)

    __radd__ = __add__

    def __neg__(self):
        return LinearForm(-self.a, -self.b, -self.c)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k: int):
        return LinearForm(self.a * k, self.b * k, self.c * k)

    __rmul__ = __mul__

    @property
    def is_constant(self) -> bool:
        return self.a == 0 and self.b == 0

    def __call__(self, z1, z2=0):
        return self.a * z1 + self.b * z2 + self.c

    def substitute(self, z1: "LinearForm", z2: "LinearForm") -> "LinearForm":
        """Compose with single-variable forms ``z1(s)``, ``z2(s)``; returns a form in s."""
        return z1 * self.a + z2 * self.b + self.c

    def as_list(self) -> List[int]:
        return [self.a, self.b, self.c]

    def proportional_to(self, other: "LinearForm") -> Fraction | None:
        """k with self == k*other, or None."""
        pairs = ((self.a, other.a), (self.b, other.b), (self.c, other.c))
        k = None
        for x, y in pairs:
            if y == 0:
                if x != 0:
                    return None
                continue
            r = Fraction(x, y)
            if k is None:
                k = r
            elif r != k:
                return None
        return k

    def __str__(self) -> str:
        return format_form(self, ("z1", "z2"))


def format_form(f: LinearForm, names=("s", "z2")) -> str:
    out = ""
    for coef, name in ((f.a, names[0]), (f.b, names[1])):
        if coef == 0:
            continue
        mag = "" if abs(coef) == 1 else str(abs(coef))
        if not out:
            out = ("-" if coef < 0 else "") + mag + name
        else:
            out += (" - " if coef < 0 else " + ") + mag + name
    if f.c or not out:
        if not out:
            out = str(f.c)
        else:
            out += (" - " if f.c < 0 else " + ") + str(abs(f.c))
    return out


# alpha, beta in (z1, z2)-coordinates
_ALPHA_Z = (1, -1)
_BETA_Z = (-1, 2)
# invariant inner product on roots: (alpha,alpha)=2, (beta,beta)=6, (alpha,beta)=-3
_GRAM = ((2, -3), (-3, 6))

POSITIVE_ROOTS = (Root(1, 0), Root(0, 1), Root(1, 1), Root(2, 1), Root(3, 1), Root(3, 2))
ALPHA, BETA = Root(1, 0), Root(0, 1)

# Row order and names used when printing the table.
WEYL_NAMES = (
    "e", "w_alpha", "w_beta", "w_3alpha+beta", "w_2alpha+beta", "w_3alpha+2beta",
    "w_alpha+beta", "sigma(pi/3)", "sigma(2pi/3)", "sigma(pi)", "sigma(4pi/3)", "sigma(5pi/3)",
)


def root_to_z(r: Root) -> Tuple[int, int]:
    return (r.m * _ALPHA_Z[0] + r.n * _BETA_Z[0], r.m * _ALPHA_Z[1] + r.n * _BETA_Z[1])


def z_to_root(x: int, y: int) -> Root:
    # inverse of root_to_z: m - n = x, -m + 2n = y
    return Root(2 * x + y, x + y)


def _inner(r: Root, s: Root) -> int:
    return (r.m * s.m * _GRAM[0][0] + (r.m * s.n + r.n * s.m) * _GRAM[0][1] + r.n * s.n * _GRAM[1][1])


def coroot_pairing(gamma: Root) -> LinearForm:
    """<lambda, gamma^vee> as a form in (z1, z2), lambda = z1(2a+b) + z2(a+b)."""
    norm = _inner(gamma, gamma)
    # lambda in root coordinates: (2 z1 + z2) alpha + (z1 + z2) beta
    ga, gb = _inner(ALPHA, gamma), _inner(BETA, gamma)
    a = Fraction(2 * (2 * ga + gb), norm)
    b = Fraction(2 * (ga + gb), norm)
    assert a.denominator == 1 and b.denominator == 1
    return LinearForm(int(a), int(b), 0)


def _matmul(x: Matrix, y: Matrix) -> Matrix:
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )  # type: ignore[return-value]


def _apply(mat: Matrix, v: Tuple[int, int]) -> Tuple[int, int]:
    return (mat[0][0] * v[0] + mat[0][1] * v[1], mat[1][0] * v[0] + mat[1][1] * v[1])


def _reflection(gamma: Root) -> Matrix:
    """lambda -> lambda - <lambda, gamma^vee> gamma on (z1, z2)-coordinates."""
    p = coroot_pairing(gamma)
    gz = root_to_z(gamma)
    return (
        (1 - p.a * gz[0], -p.b * gz[0]),
        (-p.a * gz[1], 1 - p.b * gz[1]),
    )


IDENTITY: Matrix = ((1, 0), (0, 1))


@dataclass(frozen=True)
class WeylElement:
    name: str
    action: Matrix
    inversions: FrozenSet[Root]
    word: Tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.inversions)

    def act_on_root(self, r: Root) -> Root:
        return z_to_root(*_apply(self.action, root_to_z(r)))

    def act_on_coords(self) -> Tuple[LinearForm, LinearForm]:
        """w lambda as a pair of forms in (z1, z2)."""
        (p, q), (r, s) = self.action
        return LinearForm(p, q, 0), LinearForm(r, s, 0)


def _euclid(r_z: Tuple[int, int]) -> Tuple[float, float]:
    """Plane picture with alpha at angle 0 and beta at angle 5pi/6."""
    r = z_to_root(*r_z)
    return (r.m * 1.0 + r.n * (-1.5), r.n * math.sqrt(3) / 2)


def _name_for(mat: Matrix) -> str:
    if mat == IDENTITY:
        return "e"
    det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    if det == -1:
        for g in POSITIVE_ROOTS:
            gz = root_to_z(g)
            if _apply(mat, gz) == (-gz[0], -gz[1]):
                return "w_" + g.label()
        raise AssertionError("reflection without a root")
    x0, y0 = _euclid(root_to_z(ALPHA))
    x1, y1 = _euclid(_apply(mat, root_to_z(ALPHA)))
    angle = math.atan2(x0 * y1 - y0 * x1, x0 * x1 + y0 * y1) % (2 * math.pi)
    k = round(angle / (math.pi / 3))
    return {1: "sigma(pi/3)", 2: "sigma(2pi/3)", 3: "sigma(pi)", 4: "sigma(4pi/3)", 5: "sigma(5pi/3)"}[k]


@dataclass(frozen=True)
class RootSystemData:
    simple_roots: Tuple[Root, Root]
    rho: Tuple[int, int]
    pairings: Dict[Root, LinearForm]
    elements: Tuple[WeylElement, ...]
    by_name: Dict[str, WeylElement] = field(repr=False)

    def __getitem__(self, name: str) -> WeylElement:
        return self.by_name[name]

    def pairing(self, gamma: Root) -> LinearForm:
        if gamma.is_positive:
            return self.pairings[gamma]
        return -self.pairings[-gamma]


def inversion_set(w: WeylElement) -> FrozenSet[Root]:
    return frozenset(g for g in POSITIVE_ROOTS if not w.act_on_root(g).is_positive)


def pairing_after_action(w: WeylElement, coroot: Root) -> LinearForm:
    """<w lambda, coroot^vee> as a form in (z1, z2)."""
    base = coroot_pairing(coroot)
    x, y = w.act_on_coords()
    return x * base.a + y * base.b


def build_g2() -> RootSystemData:
    """Generate W(G2) from the simple reflections by breadth-first closure."""
    gens = {"w_alpha": _reflection(ALPHA), "w_beta": _reflection(BETA)}
    words: Dict[Matrix, Tuple[str, ...]] = {IDENTITY: ()}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for mat in frontier:
            for gname, g in gens.items():
                prod = _matmul(g, mat)
                if prod not in words:
                    words[prod] = (gname,) + words[mat]
                    nxt.append(prod)
        frontier = nxt
    if len(words) != 12:
        raise AssertionError(f"Weyl group closure produced {len(words)} elements")

    named = {}
    for mat, word in words.items():
        name = _name_for(mat)
        inv = frozenset(
            g for g in POSITIVE_ROOTS if not z_to_root(*_apply(mat, root_to_z(g))).is_positive
        )
        named[name] = WeylElement(name, mat, inv, word)
    assert set(named) == set(WEYL_NAMES)
    elements = tuple(named[n] for n in WEYL_NAMES)

    # rho = half the sum of positive roots, in (z1, z2)-coordinates
    sx = sum(root_to_z(g)[0] for g in POSITIVE_ROOTS)
    sy = sum(root_to_z(g)[1] for g in POSITIVE_ROOTS)
    rho = (sx // 2, sy // 2)
    pairings = {g: coroot_pairing(g) for g in POSITIVE_ROOTS}
    return RootSystemData((ALPHA, BETA), rho, pairings, elements, named)


def format_table(rs: RootSystemData | None = None) -> str:
    """Text table of w lambda, the simple-coroot pairings minus one, and inversion sets."""
    rs = rs or build_g2()
    rows = []
    header = f"{'w':<16}| {'w lambda':<22}| {'<wl,a^v>-1':<16}| {'<wl,b^v>-1':<16}| inversions"
    rows.append(header)
    rows.append("-" * len(header))
    for w in rs.elements:
        x, y = w.act_on_coords()
        pa = pairing_after_action(w, ALPHA) - 1
        pb = pairing_after_action(w, BETA) - 1
        inv = ", ".join(g.label() for g in sorted(w.inversions, key=lambda r: (r.n, r.m))) or "-"
        wl = f"({format_form(x, ('z1', 'z2'))}, {format_form(y, ('z1', 'z2'))})"
        rows.append(
            f"{w.name:<16}| {wl:<22}| {format_form(pa, ('z1', 'z2')):<16}| "
            f"{format_form(pb, ('z1', 'z2')):<16}| {inv}"
        )
    return "\n".join(rows)
