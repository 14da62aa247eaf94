"""Cusps of the level-q principal congruence subgroup, their translation
orbits, widths and width distributions.

A cusp is a coprime pair (x, z) with z >= 0, infinity stored as (1, 0) and
gcd(x, 0) read as |x|.  Two cusps are level-q equivalent exactly when their
residue pairs agree mod q up to a global sign; a class is named by the
lexicographic minimum of the two sign choices.  That rule is validated
constructively here (witness search) and numerically (class counts).

The width of x/z for the intermediate group of level q and step n is
q / gcd(q/n, z) once q >= 5; below that only the brute-force congruence
scan is trustworthy, so width() delegates to it there.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from .arith import ext_gcd, factorize, mult_n, n3
from .psl import Mat, r_n_formula

Cusp = tuple[int, int]
ClassPair = tuple[int, int]


def check_cusp(c: Cusp) -> Cusp:
    x, z = c
    if z < 0 or math.gcd(x, z) != 1 or (z == 0 and x != 1):
        raise ValueError(f"not a valid cusp pair: {c}")
    return c


def cusp_canonical(q: int, c: Cusp) -> ClassPair:
    """Canonical class pair of a cusp: min of +-(x, z) mod q."""
    if q < 3:
        raise ValueError("cusp classes require q >= 3")
    x, z = check_cusp(c)
    xq, zq = x % q, z % q
    return min((xq, zq), ((-xq) % q, (-zq) % q))


def class_to_cusp(q: int, cls: ClassPair) -> Cusp:
    """A coprime representative cusp of a class pair (deterministic lift)."""
    xq, zq = cls
    if zq == 0:
        if xq == 1:
            return (1, 0)
        return (xq, q)
    x = xq
    while math.gcd(x, zq) != 1:
        x += q
    return (x, zq)


def cusp_str(q: int, cls: ClassPair) -> str:
    x, z = class_to_cusp(q, cls)
    return f"{x}/{z}"


def find_equivalence_witness(q: int, c1: Cusp, c2: Cusp):
    """Integer matrix g of determinant 1 with g = I (mod q) and g(c1) = c2,
    or None when the classes differ.

    Complete c1, c2 to unimodular A, A2 sending oo to each cusp; every
    unimodular map c1 -> c2 is +-A2 * T^j * A^-1 with T the unit translation,
    and membership mod q only depends on j mod q, so scanning j in [0, q)
    over both signs is exhaustive.
    """
    x1, z1 = check_cusp(c1)
    x2, z2 = check_cusp(c2)
    a_mat = _complete_to_unimodular(x1, z1)
    a2_mat = _complete_to_unimodular(x2, z2)
    a_inv = (a_mat[3], -a_mat[1], -a_mat[2], a_mat[0])
    for j in range(q):
        t_j = (1, j, 0, 1)
        g = _imul(a2_mat, _imul(t_j, a_inv))
        for s in (1, -1):
            gs = tuple(s * e for e in g)
            if ((gs[0] - 1) % q == 0 and (gs[3] - 1) % q == 0
                    and gs[1] % q == 0 and gs[2] % q == 0):
                return gs
    return None


def _complete_to_unimodular(x: int, z: int) -> Mat:
    g, u, v = ext_gcd(x, z)
    assert g == 1
    return (x, -v, z, u)  # det = x*u + v*z = 1


def _imul(m1: Mat, m2: Mat) -> Mat:
    a, b, c, d = m1
    e, f, g, h = m2
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def h_formula(q: int) -> int:
    """Number of level-q cusp classes: q^2/2 * prod(1 - 1/l^2), q >= 3."""
    if q < 3:
        raise ValueError("cusp count formula requires q >= 3")
    h = Fraction(q * q, 2)
    for l, _ in factorize(q):
        h *= 1 - Fraction(1, l * l)
    assert h.denominator == 1
    return int(h)


def enumerate_cusps(q: int) -> set[ClassPair]:
    """All level-q cusp classes, by scanning residue pairs."""
    if not 3 <= q <= 60:
        raise ValueError("cusp enumeration supports 3 <= q <= 60")
    out = set()
    for x in range(q):
        for z in range(q):
            if math.gcd(math.gcd(x, z), q) == 1:
                out.add(min((x, z), ((-x) % q, (-z) % q)))
    return out


def h_n_formula(q: int, n: int) -> int:
    """Cusp count of the intermediate group: n*q*N(q/n)/2 * prod(1 - 1/l^2).

    Valid for q >= 5 (the width formula underneath it fails at q = 4).
    """
    if q < 5:
        raise ValueError("intermediate cusp count formula requires q >= 5")
    if n < 1 or q % n:
        raise ValueError(f"n = {n} must divide q = {q}")
    h = Fraction(n * q, 2) * mult_n(q // n)
    for l, _ in factorize(q):
        h *= 1 - Fraction(1, l * l)
    assert h.denominator == 1
    return int(h)


def tau_orbits(q: int, n: int) -> list[tuple[ClassPair, ...]]:
    """Orbits of translation-by-n on the level-q cusp classes.

    The translation acts by (x, z) -> (x + n*z, z); the orbit of x/z has
    size (q/n) / gcd(q/n, z).  Orbits are sorted by (size, representative).
    """
    if n < 1 or q % n:
        raise ValueError(f"n = {n} must divide q = {q}")
    seen: set[ClassPair] = set()
    orbits = []
    for cls in sorted(enumerate_cusps(q)):
        if cls in seen:
            continue
        orbit = []
        cur = cls
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            x, z = cur
            cur = min(((x + n * z) % q, z), ((-(x + n * z)) % q, (-z) % q))
        orbits.append(tuple(sorted(orbit)))
    orbits.sort(key=lambda o: (len(o), o[0]))
    return orbits


def orbit_rep(orbit: tuple[ClassPair, ...]) -> ClassPair:
    return orbit[0]


def width(q: int, n: int, c: Cusp) -> int:
    """Width of a cusp for the intermediate group of level q and step n.

    Closed form q / gcd(q/n, z) for q >= 5; brute force below (the closed
    form provably fails at level 4).
    """
    if n < 1 or q % n:
        raise ValueError(f"n = {n} must divide q = {q}")
    x, z = check_cusp(c)
    if q <= 4:
        return width_bruteforce(q, n, c)
    p = q // n
    return q // math.gcd(p, z)


def width_bruteforce(q: int, n: int, c: Cusp) -> int:
    """Least R >= 1 whose conjugated translation lands in the group (or its
    negative): R*x*z = 0, R*z^2 = 0 (mod q) and R*x^2 = 0 (mod n), with the
    negative-sign branch (x*z*R = +-2 mod q) only possible when q | 4."""
    if n < 1 or q % n:
        raise ValueError(f"n = {n} must divide q = {q}")
    x, z = check_cusp(c)
    for r in range(1, q * n + 1):
        if (r * x * z) % q == 0 and (r * z * z) % q == 0 and (r * x * x) % n == 0:
            return r
        if ((r * x * z - 2) % q == 0 and (r * x * z + 2) % q == 0
                and (r * z * z) % q == 0 and (r * x * x) % n == 0):
            return r
    raise RuntimeError("width scan exhausted")  # unreachable: R = q*n always works


def width_distribution(q: int, n: int) -> dict[int, int]:
    """Map width -> number of translation orbits with that width.

    Widths are n * prod(p_i^j_i) over exponent tuples 0 <= j_i <= r_i for
    q/n = prod(p_i^r_i); the count of each is h_q/(q/n) * prod(N3(j_i)).
    """
    if q < 5:
        raise ValueError("width distribution formula requires q >= 5")
    if n < 1 or q % n:
        raise ValueError(f"n = {n} must divide q = {q}")
    p = q // n
    fact = factorize(p)
    base = Fraction(h_formula(q), p)
    out: dict[int, int] = {}
    for js in product(*(range(r + 1) for _, r in fact)):
        w = n
        cnt = base
        for (pi, ri), j in zip(fact, js):
            w *= pi**j
            cnt *= n3(pi, ri, j)
        assert cnt.denominator == 1
        out[w] = int(cnt)
    return dict(sorted(out.items()))


def orbit_width_sum_check(q: int, n: int, orbit: tuple[ClassPair, ...]) -> bool:
    """Index-p width sum: (q/n) * W(rep) must equal q * orbit size, the
    level-q width of every class being q."""
    rep = class_to_cusp(q, orbit_rep(orbit))
    return (q // n) * width(q, n, rep) == q * len(orbit)


def orbit_width_sum(q: int, n: int) -> int:
    """Sum of widths over all translation orbits; must equal the group index."""
    return sum(width(q, n, class_to_cusp(q, orbit_rep(o))) for o in tau_orbits(q, n))


def width_sum_matches_index(q: int, n: int) -> bool:
    return orbit_width_sum(q, n) == r_n_formula(q, n)
