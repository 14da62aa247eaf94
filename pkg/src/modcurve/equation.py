"""From rotation numbers of the translation automorphism to defining
equations y^p = prod (x - a_i)^(m_i).

For a cusp x/z (coprime) and the translation-by-n automorphism of the
level-q curve (p = q/n, q >= 5):

  * the orbit length is p / gcd(p, z);
  * the local rotation exponent is k = w^2 mod gcd(p, z), where w is any
    Bezout cofactor x*w - y*z = 1 (w is determined mod z, and gcd(p, z)
    divides z, so the choice does not matter);
  * the branch exponent m is the unique 1 <= m < p with gcd(p, m) equal to
    the orbit length and k * (m / gcd(p, m)) = 1 mod (p / gcd(p, m)).

Branched orbits are exactly those of size < p, and the exponent sum over
them is divisible by p.  Normalization sends three chosen orbits to
infinity, 0 and 1; leftover branch values stay symbolic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .arith import ext_gcd, solve_unit_congruence
from .cusps import ClassPair, Cusp, check_cusp, class_to_cusp, cusp_str, tau_orbits
from .genus import genus_qn


class RotationNumber(NamedTuple):
    """Orbit length and local rotation exponent of an automorphism at a point.

    orbit_len is the least n with tau^n fixing the point; k in [0, p/n) is
    the root-of-unity exponent of tau^orbit_len in a centered chart.  The
    group divisor n is deliberately named orbit_len here to keep it apart
    from the translation step.
    """

    orbit_len: int
    k: int


def rotation_number(q: int, n: int, c: Cusp) -> RotationNumber:
    """Rotation number of translation-by-n at a cusp of the level-q curve."""
    if q < 5:
        raise ValueError("rotation numbers at cusps require q >= 5")
    if n < 1 or q % n:
        raise ValueError(f"n = {n} must divide q = {q}")
    x, z = check_cusp(c)
    p = q // n
    g = math.gcd(p, z)  # gcd(p, 0) = p
    if g == 1:
        return RotationNumber(p, 0)
    _, w, _ = ext_gcd(x, z)  # x*w + z*v = 1, so w is a Bezout cofactor
    return RotationNumber(p // g, (w * w) % g)


def rotation_of_class(q: int, n: int, cls: ClassPair) -> RotationNumber:
    return rotation_number(q, n, class_to_cusp(q, cls))


def exponent_from_rotation(p: int, rot: RotationNumber) -> int:
    """The unique exponent 1 <= m < p with gcd(p, m) = orbit_len and
    k * (m / orbit_len) = 1 mod (p / orbit_len)."""
    n_orb, k = rot
    if n_orb < 1 or p % n_orb:
        raise ValueError(f"orbit length {n_orb} must divide p = {p}")
    if n_orb == p:
        raise ValueError("unbranched orbit carries no exponent")
    big_p = p // n_orb
    if math.gcd(k, big_p) != 1:
        raise ValueError(f"rotation exponent {k} is not a unit mod {big_p}")
    m = n_orb * solve_unit_congruence(k, big_p)
    assert 1 <= m < p and math.gcd(p, m) == n_orb
    return m


def rotation_from_exponent(p: int, m: int) -> RotationNumber:
    """Rotation number of the deck transformation at a branch point of
    exponent m on y^p = ...: orbit length gcd(p, m), exponent the inverse
    of m/gcd(p, m) modulo p/gcd(p, m)."""
    if not 1 <= m < p:
        raise ValueError(f"exponent must satisfy 1 <= m < p, got {m}")
    g = math.gcd(p, m)
    return RotationNumber(g, solve_unit_congruence(m // g, p // g))


Label = Union[None, str, Fraction]


@dataclass(frozen=True)
class BranchTerm:
    """One branch orbit of the quotient map with its equation exponent."""

    exponent: int
    label: Label = None
    orbit: Optional[tuple[ClassPair, ...]] = None
    rotation: Optional[RotationNumber] = None


@dataclass(frozen=True)
class SemiHyperellipticEquation:
    """y^p = prod over terms of (x - label)^exponent, possibly with one
    orbit sent to infinity (inf_exponent > 0)."""

    p: int
    terms: tuple[BranchTerm, ...]
    inf_exponent: int = 0

    def __post_init__(self):
        total = sum(t.exponent for t in self.terms) + self.inf_exponent
        if total % self.p:
            raise ValueError("exponent sum must vanish mod p")
        if not all(1 <= t.exponent < self.p for t in self.terms):
            raise ValueError("finite exponents must lie in [1, p)")

    @property
    def exponent_multiset(self) -> tuple[int, ...]:
        ms = [t.exponent for t in self.terms]
        if self.inf_exponent:
            ms.append(self.inf_exponent)
        return tuple(sorted(ms))


def build_equation(q: int, n: int) -> SemiHyperellipticEquation:
    """Equation data for the level-q curve from the translation-by-n
    quotient: one term per branched orbit (orbit size < p), exponents from
    the rotation numbers.  Requires q >= 5 and quotient genus zero."""
    if q < 5:
        raise ValueError("equation building requires q >= 5")
    if n < 1 or q % n:
        raise ValueError(f"n = {n} must divide q = {q}")
    p = q // n
    if p < 2:
        raise ValueError("the quotient must have degree >= 2 (n < q)")
    g = genus_qn(q, n)
    if g != 0:
        raise ValueError(f"quotient genus is {g}, not zero; no cyclic-cover "
                         f"equation of the projective line exists")
    terms = []
    for orbit in tau_orbits(q, n):
        if len(orbit) >= p:
            continue
        rots = {rotation_of_class(q, n, cls) for cls in orbit}
        assert len(rots) == 1, "rotation number must be constant on an orbit"
        rot = rots.pop()
        assert rot.orbit_len == len(orbit)
        m = exponent_from_rotation(p, rot)
        terms.append(BranchTerm(exponent=m, orbit=orbit, rotation=rot))
    eq = SemiHyperellipticEquation(
        p=p,
        terms=tuple(BranchTerm(t.exponent, f"a{i + 1}", t.orbit, t.rotation)
                    for i, t in enumerate(terms)),
    )
    return eq


def rotation_table(q: int, n: int) -> list[tuple[str, int, int, int]]:
    """Rows (cusp, orbit size, k, m) for the branched orbits, in
    (size, representative) order."""
    eq = build_equation(q, n)
    rows = []
    for t in eq.terms:
        rows.append((cusp_str(q, t.orbit[0]), t.rotation.orbit_len,
                     t.rotation.k, t.exponent))
    return rows


CONVENTIONS = ("gcd", "ascending", "minimal")


def normalize_equation(eq: SemiHyperellipticEquation, to_inf: int,
                       to_zero: int, to_one: int) -> SemiHyperellipticEquation:
    """Send the term with index to_inf to infinity, to_zero to x = 0 and
    to_one to x = 1; leftover terms get symbolic labels.  The three indices
    must be distinct positions in eq.terms."""
    idxs = (to_inf, to_zero, to_one)
    if len(set(idxs)) != 3 or not all(0 <= i < len(eq.terms) for i in idxs):
        raise ValueError(f"need three distinct term indices out of {len(eq.terms)}")
    rest = sorted((t for i, t in enumerate(eq.terms) if i not in idxs),
                  key=lambda t: (t.exponent, t.orbit or ()))
    new_terms = [replace(eq.terms[to_zero], label=Fraction(0)),
                 replace(eq.terms[to_one], label=Fraction(1))]
    letter = {9: "p", 10: "q", 12: "r"}.get(eq.p, "a")
    for i, t in enumerate(rest):
        label = "a" if (len(rest) == 1 and letter == "a") else f"{letter}{i + 1}"
        new_terms.append(replace(t, label=label))
    return SemiHyperellipticEquation(
        p=eq.p, terms=tuple(new_terms),
        inf_exponent=eq.terms[to_inf].exponent)


def normalize_with_convention(eq: SemiHyperellipticEquation,
                              convention: str = "gcd") -> SemiHyperellipticEquation:
    """Pick the three normalization targets by a named convention.

    "gcd":       largest exponent to infinity, then the largest
                 gcd(p, m) to zero, the rest ascending;
    "ascending": largest exponent to infinity, the rest ascending;
    "minimal":   smallest exponent to infinity, the rest ascending.

    No choice is canonical; different presentations in the literature use
    different ones, so the convention stays caller-selectable.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}; choose from {CONVENTIONS}")
    if len(eq.terms) < 3:
        raise ValueError("normalization conventions need at least 3 branch orbits")
    order = sorted(range(len(eq.terms)),
                   key=lambda i: (eq.terms[i].exponent, eq.terms[i].orbit or ()))
    if convention == "minimal":
        to_inf = order[0]
    else:
        to_inf = order[-1]
    remaining = [i for i in order if i != to_inf]
    if convention == "gcd":
        # largest gcd(p, m) wins; ties fall back to the smallest exponent
        to_zero = sorted(remaining,
                         key=lambda i: (-math.gcd(eq.p, eq.terms[i].exponent),
                                        eq.terms[i].exponent,
                                        eq.terms[i].orbit or ()))[0]
        remaining = [i for i in remaining if i != to_zero]
    else:
        to_zero = remaining.pop(0)
    to_one = remaining[0]
    return normalize_equation(eq, to_inf, to_zero, to_one)


def substitute_label(eq: SemiHyperellipticEquation, label: str,
                     value: Fraction) -> SemiHyperellipticEquation:
    """Replace a symbolic branch label by an exact value."""
    if not any(t.label == label for t in eq.terms):
        raise ValueError(f"no term labeled {label!r}")
    return replace(eq, terms=tuple(
        replace(t, label=value) if t.label == label else t for t in eq.terms))


def _factor_str(label: Label, m: int) -> str:
    if isinstance(label, Fraction):
        if label == 0:
            base = "x"
        elif label < 0:
            base = f"(x+{-label})"
        else:
            base = f"(x-{label})"
    else:
        base = f"(x-{label})"
    return base if m == 1 else f"{base}^{m}"


def equation_string(eq: SemiHyperellipticEquation) -> str:
    """Render y^p = product of factors, in label-assignment order (x first,
    then (x-1), then the symbolic constants); unit exponents are omitted
    and the infinity orbit does not appear."""
    if not eq.terms:
        return f"y^{eq.p} = 1"
    factors = [_factor_str(t.label, t.exponent) for t in eq.terms]
    return f"y^{eq.p} = " + "*".join(factors)


def undetermined_labels(eq: SemiHyperellipticEquation) -> list[str]:
    return [t.label for t in eq.terms if isinstance(t.label, str)]
