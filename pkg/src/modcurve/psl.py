"""SL(2, Z/qZ) and its projective quotients: enumeration, orders, center,
cusp action.

Matrices are flat tuples (a, b, c, d) of residues with ad - bc = 1 (mod q).
Two quotients matter and they differ for composite q:

  * the sign quotient SL/{+-I}, whose size is the group index R_q and which
    carries the cusp action and the automorphism counts;
  * the projective group SL/{scalars}, where a scalar is lambda*I with
    lambda^2 = 1 (four such lambda exist mod 8, for instance).

Element-order statements (largest order 3q/2 or q, trivial center) are
theorems about the projective group only: the sign quotient contains, e.g.,
an element of order 30 at level 15, namely (4, 4; 0, 4) = 4I * (1, 1; 0, 1),
because 4I is a non-sign scalar there.

A canonical representative is the lexicographic minimum over the coset; the
choice is deterministic and independent of enumeration order.  Enumeration
is guarded at q <= 40 (|SL| grows like q^3); beyond that only the index
formulas apply.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .arith import factorize

Mat = tuple[int, int, int, int]

ENUM_GUARD = 40

IDENTITY: Mat = (1, 0, 0, 1)


def _check_guard(q: int) -> None:
    if not 2 <= q <= ENUM_GUARD:
        raise ValueError(f"enumeration supports 2 <= q <= {ENUM_GUARD}, got {q}")


def psl_canon(q: int, m: Mat) -> Mat:
    """Canonical representative of {M, -M} mod q."""
    m = tuple(x % q for x in m)
    n = tuple(-x % q for x in m)
    return min(m, n)


def mat_mul(q: int, m1: Mat, m2: Mat) -> Mat:
    a, b, c, d = m1
    e, f, g, h = m2
    return ((a * e + b * g) % q, (a * f + b * h) % q,
            (c * e + d * g) % q, (c * f + d * h) % q)


def psl_mul(q: int, m1: Mat, m2: Mat) -> Mat:
    return psl_canon(q, mat_mul(q, m1, m2))


def psl_identity(q: int) -> Mat:
    return psl_canon(q, IDENTITY)


def enumerate_sl(q: int) -> list[Mat]:
    """All of SL(2, Z/qZ), by solving a*d = 1 + b*c for d."""
    _check_guard(q)
    out = []
    for a in range(q):
        g = math.gcd(a, q)
        qg = q // g
        ainv = pow(a // g, -1, qg) if qg > 1 else 0
        for b in range(q):
            for c in range(q):
                rhs = (1 + b * c) % q
                if rhs % g:
                    continue
                d0 = (rhs // g) * ainv % qg
                for k in range(g):
                    out.append((a, b, c, d0 + k * qg))
    return out


def enumerate_psl(q: int) -> set[Mat]:
    """All of PSL(2, Z/qZ) as canonical representatives."""
    return {psl_canon(q, m) for m in enumerate_sl(q)}


def r_formula(q: int) -> int:
    """Index of the level-q principal congruence subgroup (with -I adjoined)
    in SL(2, Z): q^3/2 * prod(1 - 1/l^2) over primes l | q.  Equals
    |PSL(2, Z/qZ)|.  Valid for q >= 3."""
    if q < 3:
        raise ValueError("index formula requires q >= 3")
    r = Fraction(q**3, 2)
    for l, _ in factorize(q):
        r *= 1 - Fraction(1, l * l)
    assert r.denominator == 1
    return int(r)


def r_n_formula(q: int, n: int) -> int:
    """Index of the intermediate group of level q and translation step n:
    n*q^2/2 * prod(1 - 1/l^2).  Requires q >= 3 and n | q."""
    if q < 3:
        raise ValueError("index formula requires q >= 3")
    if n < 1 or q % n:
        raise ValueError(f"n = {n} must divide q = {q}")
    r = Fraction(n * q * q, 2)
    for l, _ in factorize(q):
        r *= 1 - Fraction(1, l * l)
    assert r.denominator == 1
    return int(r)


def element_order(q: int, g: Mat) -> int:
    """Order of g in the sign quotient SL/{+-I}."""
    ident = psl_identity(q)
    x = psl_canon(q, g)
    k = 1
    while x != ident:
        x = psl_mul(q, x, g)
        k += 1
        if k > 2 * q * q:
            raise RuntimeError("order computation runaway")
    return k


def scalar_units(q: int) -> list[int]:
    """All lambda mod q with lambda^2 = 1; lambda * I is a scalar of SL."""
    return [lam for lam in range(1, q) if (lam * lam) % q == 1]


def projective_canon(q: int, m: Mat) -> Mat:
    """Canonical representative of the scalar class {lambda * M}."""
    return min(tuple((lam * x) % q for x in m) for lam in scalar_units(q))


def enumerate_projective(q: int) -> set[Mat]:
    """SL(2, Z/qZ) modulo all scalars."""
    return {projective_canon(q, m) for m in enumerate_sl(q)}


def projective_element_order(q: int, g: Mat) -> int:
    """Order of g in the projective group SL/{scalars}."""
    ident = projective_canon(q, IDENTITY)
    x = projective_canon(q, g)
    g = tuple(e % q for e in g)
    k = 1
    while x != ident:
        x = projective_canon(q, mat_mul(q, x, g))
        k += 1
        if k > 2 * q * q:
            raise RuntimeError("order computation runaway")
    return k


def type_classify(q: int) -> str:
    """"I" when q = 2 mod 4 and 3 does not divide q, else "II"."""
    return "I" if (q % 4 == 2 and q % 3 != 0) else "II"


def max_order_formula(q: int) -> int:
    """Largest projective element order: 3q/2 for type I, q for type II."""
    return 3 * q // 2 if type_classify(q) == "I" else q


def max_element_order(q: int) -> int:
    """Largest element order of the projective group, by enumeration.

    Taken modulo all scalars: the sign quotient is bigger for some
    composite q and its longer elements (order 30 at level 15) are scalar
    multiples of shorter ones.
    """
    return max(projective_element_order(q, g) for g in enumerate_projective(q))


def _center_of(q: int, elems: set[Mat], canon, mul) -> set[Mat]:
    gens = [canon(q, (1, 1, 0, 1)), canon(q, (0, q - 1, 1, 0))]
    cand = {g for g in elems if all(mul(q, g, s) == mul(q, s, g) for s in gens)}
    return {g for g in cand if all(mul(q, g, h) == mul(q, h, g) for h in elems)}


def center(q: int) -> set[Mat]:
    """Center of the projective group SL/{scalars}, by commutation scan.

    Candidates are cut down against the images of the two standard
    generators of SL(2, Z), then verified against the whole group.
    """
    def mul(qq, m1, m2):
        return projective_canon(qq, mat_mul(qq, m1, m2))

    return _center_of(q, enumerate_projective(q), projective_canon, mul)


def sign_center(q: int) -> set[Mat]:
    """Center of the sign quotient SL/{+-I}; the scalar classes show up
    here (for level 8: the identity and the class of 3I)."""
    return _center_of(q, enumerate_psl(q), psl_canon, psl_mul)


def gamma_qn_member(m: Mat, q: int, n: int) -> bool:
    """Membership of an integer matrix in the group with a = d = 1, c = 0
    (mod q) and b = 0 (mod n).  The case n = q is the principal congruence
    subgroup of level q."""
    a, b, c, d = m
    if a * d - b * c != 1:
        raise ValueError("matrix must have determinant 1")
    if n < 1 or q % n:
        raise ValueError(f"n = {n} must divide q = {q}")
    return a % q == 1 and d % q == 1 and c % q == 0 and b % n == 0


def cusp_action(m: Mat, cusp: tuple[int, int]) -> tuple[int, int]:
    """Fractional-linear action of an integer matrix on x/z in Q u {oo}.

    Input and output are coprime pairs, with oo stored as (1, 0) and the
    denominator normalized nonnegative.
    """
    a, b, c, d = m
    x, z = cusp
    if math.gcd(x, z) != 1:
        raise ValueError(f"cusp {x}/{z} is not a coprime pair")
    nx, nz = a * x + b * z, c * x + d * z
    g = math.gcd(nx, nz)
    if g:
        nx, nz = nx // g, nz // g
    if nz < 0 or (nz == 0 and nx < 0):
        nx, nz = -nx, -nz
    return (nx, nz)


def cusp_class_action(q: int, m: Mat, cls: tuple[int, int]) -> tuple[int, int]:
    """Induced action on level-q cusp classes +-(x, z) mod q."""
    a, b, c, d = m
    x, z = cls
    nx, nz = (a * x + b * z) % q, (c * x + d * z) % q
    return min((nx, nz), ((-nx) % q, (-nz) % q))


def maps_between_cusps(q: int, c1: tuple[int, int], c2: tuple[int, int]) -> list[Mat]:
    """All PSL(2, Z/qZ) elements whose cusp-class action sends c1 to c2."""
    return sorted(g for g in enumerate_psl(q)
                  if cusp_class_action(q, g, c1) == c2)
