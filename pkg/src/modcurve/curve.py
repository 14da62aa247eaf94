"""Cyclic covers y^p = prod (x - a_i)^(m_i) of the projective line as
geometric objects.

Local data at the added points comes from the explicit charts of the
compactification: over a branch value a_i there are gcd(p, m_i) points
where x - a_i vanishes to order p/gcd(p, m_i), y to order m_i/gcd(p, m_i)
and dx to order p/gcd(p, m_i) - 1; over infinity there are gcd(p, m)
points (m the exponent sum) with the corresponding negative orders.  Branch
values may stay symbolic (strings); only multiplicities enter the order
bookkeeping.

The deck transformation is (x, y) -> (x, zeta_p * y).  A fractional-linear
map T of the x-line lifts to an automorphism commuting with it exactly when
some unit s mod p matches multiplicities, m(T(b)) = s * m(b) for every
branch point b; over a genus-zero base that twist condition is sufficient,
and it is what the branch-constant solver enumerates.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from .equation import RotationNumber, SemiHyperellipticEquation, rotation_from_exponent
from .poly import Poly, rational_roots


class _Infinity:
    """The point at infinity of the projective x-line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = _Infinity()

BranchValue = Union[Fraction, str, complex]


@dataclass(frozen=True)
class SemiHyperellipticCurve:
    """Degree p with finite branch data ((value, exponent), ...).

    Values are exact rationals, symbolic labels (str), or, for curves that
    only ever get evaluated numerically, complex numbers.
    """

    p: int
    branches: tuple[tuple[BranchValue, int], ...]

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("degree p must be >= 2")
        values = [v for v, _ in self.branches]
        if len(set(values)) != len(values):
            raise ValueError("branch values must be pairwise distinct")
        for _, m in self.branches:
            if not 1 <= m < self.p:
                raise ValueError(f"branch exponents must lie in [1, p), got {m}")

    @classmethod
    def from_equation(cls, eq: SemiHyperellipticEquation) -> "SemiHyperellipticCurve":
        return cls(p=eq.p, branches=tuple((t.label, t.exponent) for t in eq.terms))

    @property
    def m_total(self) -> int:
        return sum(m for _, m in self.branches)

    @property
    def inf_exponent(self) -> int:
        return (-self.m_total) % self.p

    @property
    def inf_fiber_size(self) -> int:
        return math.gcd(self.p, self.m_total)

    def fiber_size(self, i: int) -> int:
        return math.gcd(self.p, self.branches[i][1])

    def branch_map(self) -> dict:
        """Branch point -> exponent, infinity included when it is branched."""
        out = dict(self.branches)
        if self.inf_exponent:
            out[INF] = self.inf_exponent
        return out

    def rhs_at(self, x: complex) -> complex:
        out = complex(1)
        for v, m in self.branches:
            if isinstance(v, str):
                raise TypeError(f"symbolic branch value {v!r} cannot be evaluated")
            out *= (x - complex(v)) ** m
        return out


@dataclass(frozen=True)
class BranchPoint:
    index: int
    sheet: int  # 1-based, up to gcd(p, m_i)


@dataclass(frozen=True)
class InfinityPoint:
    sheet: int  # 1-based, up to gcd(p, m)


@dataclass(frozen=True)
class AffinePoint:
    x: complex
    y: complex


CurvePoint = Union[BranchPoint, InfinityPoint, AffinePoint]


def ramification_profile(c: SemiHyperellipticCurve) -> list[tuple[object, int, int]]:
    """Per-fiber data (value, number of points, ramification index), the
    infinity fiber last.  Each fiber satisfies points * index = p."""
    out = []
    for v, m in c.branches:
        g = math.gcd(c.p, m)
        out.append((v, g, c.p // g))
    g = c.inf_fiber_size
    out.append((INF, g, c.p // g))
    return out


def curve_genus(c: SemiHyperellipticCurve) -> int:
    """Genus from the ramification profile: 2g - 2 = -2p + sum(e - 1)."""
    total = -2 * c.p
    for _, num, e in ramification_profile(c):
        total += num * (e - 1)
    if total % 2:
        raise ArithmeticError("ramification does not close to an even number")
    return total // 2 + 1


@dataclass(frozen=True)
class Monomial:
    """f = prod (x - a_i)^alpha_i * y^(-gamma), optionally times dx."""

    alphas: tuple[int, ...]
    gamma: int
    dx: bool = True


def differential_order(c: SemiHyperellipticCurve, mono: Monomial,
                       pt: CurvePoint) -> int:
    """Vanishing order of the monomial at a point, from the chart data."""
    if len(mono.alphas) != len(c.branches):
        raise ValueError("one exponent per branch value is required")
    if isinstance(pt, BranchPoint):
        i = pt.index
        m_i = c.branches[i][1]
        n_i = math.gcd(c.p, m_i)
        e_i = c.p // n_i
        order = mono.alphas[i] * e_i - mono.gamma * (m_i // n_i)
        if mono.dx:
            order += e_i - 1
        return order
    if isinstance(pt, InfinityPoint):
        g = c.inf_fiber_size
        e_inf = c.p // g
        order = -e_inf * sum(mono.alphas) + mono.gamma * (c.m_total // g)
        if mono.dx:
            order += -e_inf - 1
        return order
    if isinstance(pt, AffinePoint):
        return 0  # monomials have no zeros or poles off the special fibers
    raise TypeError(f"unsupported point {pt!r}")


def order_vector(c: SemiHyperellipticCurve, mono: Monomial) -> tuple[int, ...]:
    """Orders at one point of every special fiber, branch fibers first."""
    pts = [BranchPoint(i, 1) for i in range(len(c.branches))] + [InfinityPoint(1)]
    return tuple(differential_order(c, mono, pt) for pt in pts)


def divisor_degree(c: SemiHyperellipticCurve, mono: Monomial) -> int:
    """Total degree of the divisor of the monomial (2g - 2 for differentials,
    0 for functions)."""
    total = 0
    for i in range(len(c.branches)):
        total += c.fiber_size(i) * differential_order(c, mono, BranchPoint(i, 1))
    total += c.inf_fiber_size * differential_order(c, mono, InfinityPoint(1))
    return total


def holomorphic_basis(c: SemiHyperellipticCurve) -> list[Monomial]:
    """A basis of holomorphic differentials made of monomials
    prod (x - a_i)^alpha_i / y^gamma * dx.

    Differentials with distinct gamma lie in distinct eigenspaces of the
    deck transformation, hence are independent; within one gamma the chosen
    monomials have distinct degrees in x.  Fails loudly if the count does
    not come out to the genus.
    """
    g = curve_genus(c)
    if g < 1:
        raise ValueError("positive genus required")
    r = len(c.branches)
    basis: list[Monomial] = []
    m_over = c.m_total // c.inf_fiber_size
    e_inf = c.p // c.inf_fiber_size
    for gamma in range(c.p):
        lows = []
        for _, m_i in c.branches:
            n_i = math.gcd(c.p, m_i)
            e_i = c.p // n_i
            num = gamma * (m_i // n_i) - e_i + 1
            lows.append(max(0, -((-num) // e_i)))
        upper = (gamma * m_over - 1) // e_inf - 1
        slack = upper - sum(lows)
        if slack < 0:
            continue
        # raise the factor of the first branch value that is not pinned
        raise_at = next((i for i, lo in enumerate(lows) if lo == 0), 0)
        for j in range(slack, -1, -1):
            alphas = list(lows)
            alphas[raise_at] += j
            basis.append(Monomial(tuple(alphas), gamma))
    if len(basis) != g:
        raise RuntimeError(f"basis search found {len(basis)} differentials; "
                           f"genus is {g}")
    assert all(min(order_vector(c, mono)) >= 0 for mono in basis)
    return basis


def rotation_at_branch(c: SemiHyperellipticCurve, i: int) -> RotationNumber:
    """Rotation number of the deck transformation at the i-th branch fiber."""
    if not 0 <= i < len(c.branches):
        raise ValueError(f"branch index {i} out of range")
    return rotation_from_exponent(c.p, c.branches[i][1])


def deck_transform(c: SemiHyperellipticCurve, pt: CurvePoint) -> CurvePoint:
    """(x, y) -> (x, zeta_p y); on added points, advance the sheet index."""
    if isinstance(pt, BranchPoint):
        n = c.fiber_size(pt.index)
        return BranchPoint(pt.index, pt.sheet % n + 1)
    if isinstance(pt, InfinityPoint):
        return InfinityPoint(pt.sheet % c.inf_fiber_size + 1)
    if isinstance(pt, AffinePoint):
        return AffinePoint(pt.x, pt.y * cmath.exp(2j * cmath.pi / c.p))
    raise TypeError(f"unsupported point {pt!r}")


# ---------------------------------------------------------------------------
# fractional-linear maps of the x-line and lifts to the cover
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MoebiusMap:
    """x -> (a x + b) / (c x + d) with exact rational entries."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        if self.a * self.d - self.b * self.c == 0:
            raise ValueError("Moebius map needs nonzero determinant")

    @classmethod
    def scaling(cls, factor) -> "MoebiusMap":
        return cls(Fraction(factor), Fraction(0), Fraction(0), Fraction(1))

    def apply(self, v):
        if v is INF:
            return INF if self.c == 0 else Fraction(self.a, self.c)
        v = Fraction(v)
        den = self.c * v + self.d
        if den == 0:
            return INF
        return (self.a * v + self.b) / den

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        return MoebiusMap(self.a * other.a + self.b * other.c,
                          self.a * other.b + self.b * other.d,
                          self.c * other.a + self.d * other.c,
                          self.c * other.b + self.d * other.d)


@dataclass(frozen=True)
class LiftCertificate:
    """Witness that a base map lifts to the cover: twist unit s with
    m(T(b)) = s * m(b) mod p over every branch point, plus the induced
    branch permutation."""

    twist: int
    twists: tuple[int, ...]
    permutation: tuple[tuple[object, object], ...]
    note: str = ""


def moebius_lift_check(c: SemiHyperellipticCurve,
                       t: MoebiusMap) -> Optional[LiftCertificate]:
    """Certificate that t lifts to an automorphism of the cover commuting
    with the deck transformation, or None (also when t fails to permute the
    branch points)."""
    bmap = c.branch_map()
    for v in bmap:
        if not (v is INF or isinstance(v, (int, Fraction))):
            raise TypeError("lift checks need exact branch values")
    images = {}
    for v in bmap:
        w = t.apply(v)
        if w not in bmap:
            return None
        images[v] = w
    if set(images.values()) != set(bmap):
        return None
    twists = [s for s in range(1, c.p)
              if math.gcd(s, c.p) == 1
              and all(bmap[images[v]] % c.p == (s * bmap[v]) % c.p for v in bmap)]
    if not twists:
        return None
    return LiftCertificate(
        twist=twists[0], twists=tuple(twists),
        permutation=tuple(sorted(images.items(), key=repr)),
        note=f"multiplicities match with twist {twists[0]} mod {c.p}; "
             f"sufficient over a genus-zero base")


def _value_poly(v, sym: str):
    if v is INF:
        return INF
    if isinstance(v, str):
        if v != sym:
            raise ValueError(f"unexpected symbol {v!r}")
        return Poly.x()
    return Poly.const(Fraction(v))


def _to_zero_one_inf(z1, z2, z3) -> tuple:
    """2x2 polynomial matrix of the map sending (z1, z2, z3) to (0, 1, oo)."""
    if z1 is INF:
        return (Poly.const(0), z2 - z3, Poly.const(1), -z3)
    if z2 is INF:
        return (Poly.const(1), -z1, Poly.const(1), -z3)
    if z3 is INF:
        return (Poly.const(1), -z1, Poly.const(0), z2 - z1)
    return (z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1))


def _mat_mul2(m1, m2):
    a, b, c, d = m1
    e, f, g, h = m2
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _adj2(m):
    a, b, c, d = m
    return (d, -b, -c, a)


def _pair_condition(t_mat, u, v) -> Poly:
    """Polynomial condition (in the symbolic constant) for T(u) = v."""
    t00, t01, t10, t11 = t_mat
    if u is INF and v is INF:
        return t10
    if u is INF:
        return t00 - v * t10
    if v is INF:
        return t10 * u + t11
    return (t00 * u + t01) - v * (t10 * u + t11)


def solve_branch_constant(c: SemiHyperellipticCurve,
                          demand: tuple) -> list[Fraction]:
    """All exact values of the single symbolic branch constant for which some
    lifted automorphism swaps the two demanded branch points.

    Enumerates branch permutations compatible with a twist unit, pins the
    base map by three point images, turns the leftover images into
    polynomial conditions on the constant, and keeps the rational roots
    that survive an exact certificate re-check.  Degree of the conditions
    is guarded at 4.
    """
    symbols = [v for v, _ in c.branches if isinstance(v, str)]
    if len(symbols) != 1:
        raise ValueError("exactly one symbolic branch value is required")
    sym = symbols[0]
    bmap = c.branch_map()
    points = list(bmap)
    exps = [bmap[v] for v in points]
    if len(points) < 3:
        raise ValueError("need at least three branch points to pin a base map")
    u, v = demand
    if u not in bmap or v not in bmap or u == v:
        raise ValueError("demand must name two distinct branch points")
    iu, iv = points.index(u), points.index(v)
    exact_values = [Fraction(w) for w, _ in c.branches if not isinstance(w, str)]

    candidates = []
    for s in range(1, c.p):
        if math.gcd(s, c.p) != 1:
            continue
        allowed = [[j for j in range(len(points))
                    if exps[j] % c.p == (s * exps[i]) % c.p]
                   for i in range(len(points))]
        if iv not in allowed[iu] or iu not in allowed[iv]:
            continue
        for perm in _bijections(allowed, {iu: iv, iv: iu}):
            candidates.append((s, perm))
    if not candidates:
        raise ValueError("no branch permutation matches the demanded swap")

    solutions: set[Fraction] = set()
    for s, perm in candidates:
        src = [_value_poly(points[i], sym) for i in range(len(points))]
        dst = [_value_poly(points[perm[i]], sym) for i in range(len(points))]
        m_src = _to_zero_one_inf(*src[:3])
        m_dst = _to_zero_one_inf(*dst[:3])
        t_mat = _mat_mul2(_adj2(m_dst), m_src)
        conditions = []
        for i in range(3, len(points)):
            cond = _pair_condition(t_mat, src[i], dst[i])
            if not cond.is_zero():
                conditions.append(cond)
        if not conditions:
            continue  # the demand does not constrain the constant
        roots = None
        for cond in conditions:
            if cond.degree > 4:
                raise RuntimeError(f"condition degree {cond.degree} exceeds guard")
            rr = set(rational_roots(cond))
            roots = rr if roots is None else roots & rr
        for root in roots or ():
            if root in exact_values:
                continue  # degenerate: branch values must stay distinct
            solved = SemiHyperellipticCurve(
                c.p, tuple((root if isinstance(w, str) else w, m)
                           for w, m in c.branches))
            entries = [e(root) for e in t_mat]
            if entries[0] * entries[3] - entries[1] * entries[2] == 0:
                continue
            t_exact = MoebiusMap(*entries)
            if moebius_lift_check(solved, t_exact) is not None:
                solutions.add(root)
    return sorted(solutions)


def _bijections(allowed: list[list[int]], pinned: dict[int, int]):
    """All bijections i -> pi(i) with pi(i) in allowed[i], respecting pins."""
    n = len(allowed)
    used = set(pinned.values())
    assign: dict[int, int] = dict(pinned)

    def rec(i: int):
        if i == n:
            yield dict(assign)
            return
        if i in assign:
            yield from rec(i + 1)
            return
        for j in allowed[i]:
            if j in used:
                continue
            assign[i] = j
            used.add(j)
            yield from rec(i + 1)
            used.remove(j)
            del assign[i]

    yield from rec(0)


# ---------------------------------------------------------------------------
# numeric verification of explicit isomorphisms
# ---------------------------------------------------------------------------

def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def verify_isomorphism_numeric(c1: SemiHyperellipticCurve,
                               c2: SemiHyperellipticCurve,
                               forward: Callable,
                               inverse: Optional[Callable] = None,
                               samples: int = 100,
                               tol: float = 1e-9,
                               seed: int = 0) -> dict:
    """Push sampled points of c1 through the map and report the worst
    relative failure of c2's equation (and of the round trip, when an
    inverse is supplied).  Sampling avoids a 1e-3 neighborhood of the
    branch values; the generator is seeded for reproducibility."""
    rng = random.Random(seed)
    branch_xs = [complex(v) for v, _ in c1.branches]
    max_res = 0.0
    max_rt = 0.0 if inverse is not None else None
    count = 0
    attempts = 0
    while count < samples:
        attempts += 1
        if attempts > 1000 * samples:
            raise RuntimeError("sampling keeps hitting excluded regions")
        x = complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))
        if any(abs(x - b) < 1e-3 for b in branch_xs):
            continue
        y0 = c1.rhs_at(x) ** (1.0 / c1.p)
        for j in range(c1.p):
            if count >= samples:
                break
            y = y0 * cmath.exp(2j * cmath.pi * j / c1.p)
            big_x, big_y = forward(x, y)
            res = _rel(big_y ** c2.p, c2.rhs_at(big_x))
            max_res = max(max_res, res)
            if inverse is not None:
                x_back, y_back = inverse(big_x, big_y)
                rt = max(_rel(x_back, x), _rel(y_back, y))
                max_rt = max(max_rt, rt)
            count += 1
    report = {
        "samples": count,
        "max_residual": max_res,
        "max_roundtrip": max_rt,
        "tol": tol,
        "pass": max_res < tol and (max_rt is None or max_rt < tol),
    }
    return report


def octic_model() -> SemiHyperellipticCurve:
    """y^8 = x^2 (x - 1)(x + 1)."""
    return SemiHyperellipticCurve(8, ((Fraction(0), 2), (Fraction(1), 1),
                                      (Fraction(-1), 1)))


def quartic_model() -> SemiHyperellipticCurve:
    """y^4 = x (x - 1)(x + 1)(x^2 + 1)^2, with x^2 + 1 split into the two
    imaginary branch values (numeric use only)."""
    return SemiHyperellipticCurve(4, ((Fraction(0), 1), (Fraction(1), 1),
                                      (Fraction(-1), 1), (1j, 2), (-1j, 2)))


def octic_to_quartic_maps() -> tuple[Callable, Callable]:
    """The explicit degree-preserving pair between y^8 = x^2(x-1)(x+1) and
    y^4 = x(x-1)(x+1)(x^2+1)^2, built from a primitive 16th root of unity
    and real fourth roots."""
    zeta = cmath.exp(2j * cmath.pi / 16)
    root8 = 8 ** 0.25
    root2 = 2 ** 0.25

    def forward(x: complex, y: complex) -> tuple[complex, complex]:
        return (zeta**4 * y**4 / (x * (x + 1)), root8 * y / (zeta * (x + 1)))

    def inverse(x: complex, y: complex) -> tuple[complex, complex]:
        return (-(x * x - 1) / (x * x + 1), root2 * zeta * y / (x * x + 1))

    return forward, inverse
