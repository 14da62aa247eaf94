"""End-to-end acceptance suite.

One test per criterion; each prints its own PASS line (visible with -s or
in verbose runs via the test name).  Everything is exact except the numeric
isomorphism check, which carries an explicit 1e-9 tolerance.
"""

from fractions import Fraction

from modcurve.arith import Cyclotomic, divisors
from modcurve.canonical import (automorphism_count_crosscheck,
                                elimination_solve, sigma_preserves_ideal)
from modcurve.cli import octic_family, verify_table6
from modcurve.cusps import (class_to_cusp, cusp_canonical, enumerate_cusps,
                            h_formula, h_n_formula, orbit_rep, tau_orbits,
                            width, width_bruteforce)
from modcurve.curve import (SemiHyperellipticCurve, divisor_degree,
                            holomorphic_basis, octic_model,
                            octic_to_quartic_maps, order_vector, quartic_model,
                            solve_branch_constant, verify_isomorphism_numeric)
from modcurve.equation import (build_equation, equation_string,
                               normalize_with_convention, rotation_table,
                               substitute_label)
from modcurve.genus import genus_prime_quotient, genus_q, genus_qn, \
    hurwitz_deficiency
from modcurve.psl import (cusp_class_action, enumerate_psl, maps_between_cusps,
                          max_element_order, max_order_formula, r_formula,
                          r_n_formula, type_classify)


def report(number: int, label: str):
    print(f"PASS criterion {number}: {label}")


def test_criterion_01_table1_reproduction():
    expect_g = (0, 0, 0, 0, 0, 1, 3, 5, 10, 13, 26, 25, 50, 49, 73, 81,
                133, 109, 196, 169)
    expect_g1 = (0, 0, 0, 0, 0, 0, 1, 0, 2, 1, 1, 2, 5, 2, 7, 3)
    assert tuple(genus_q(q) for q in range(1, 21)) == expect_g
    assert tuple(genus_qn(q, 1) for q in range(5, 21)) == expect_g1
    report(1, "level and quotient genera for q = 1..20")


def test_criterion_02_formula_vs_oracle():
    for q in range(3, 25):
        assert len(enumerate_psl(q)) == r_formula(q), f"group count q={q}"
        assert len(enumerate_cusps(q)) == h_formula(q), f"cusp count q={q}"
        if q < 5:
            continue
        for n in divisors(q):
            orbits = tau_orbits(q, n)
            assert len(orbits) == h_n_formula(q, n), f"orbits q={q} n={n}"
            total = 0
            for orbit in orbits:
                rep = class_to_cusp(q, orbit_rep(orbit))
                w = width(q, n, rep)
                assert w == width_bruteforce(q, n, rep), \
                    f"width mismatch q={q} n={n} at {rep}"
                total += w
            assert total == r_n_formula(q, n), f"width sum q={q} n={n}"
    report(2, "enumeration matches every index/count/width formula, q <= 24")


def test_criterion_03_rotation_table():
    assert rotation_table(8, 1) == [("1/0", 1, 1, 1), ("3/8", 1, 1, 1),
                                    ("1/4", 2, 1, 2), ("1/2", 4, 1, 4)]
    report(3, "level-8 rotation numbers and exponents")


def test_criterion_04_level8_end_to_end():
    eq = build_equation(8, 1)
    assert eq.exponent_multiset == (1, 1, 2, 4)
    eq = normalize_with_convention(eq)
    assert equation_string(eq) == "y^8 = x^2*(x-1)*(x-a)"
    curve = SemiHyperellipticCurve.from_equation(eq)
    solutions = solve_branch_constant(curve, (Fraction(1), "a"))
    assert solutions == [Fraction(-1)]
    final = substitute_label(eq, "a", Fraction(-1))
    assert equation_string(final) == "y^8 = x^2*(x-1)*(x+1)"
    report(4, "level-8 equation determined including the constant")


def test_criterion_05_level7_end_to_end():
    eq = normalize_with_convention(build_equation(7, 1))
    assert equation_string(eq) == "y^7 = x*(x-1)^2"
    report(5, "level-7 classical equation")


def test_criterion_06_exponent_multisets():
    assert build_equation(9, 1).exponent_multiset == (1, 3, 3, 4, 7)
    assert build_equation(10, 1).exponent_multiset == (1, 2, 5, 5, 8, 9)
    assert build_equation(12, 1).exponent_multiset == (1, 1, 2, 3, 3, 4, 4, 6)
    # the displayed normalized forms drop exactly the infinity exponent
    eq9 = normalize_with_convention(build_equation(9, 1), "ascending")
    assert eq9.inf_exponent == 7
    assert sorted(t.exponent for t in eq9.terms) == [1, 3, 3, 4]
    eq10 = normalize_with_convention(build_equation(10, 1), "ascending")
    assert eq10.inf_exponent == 9
    assert sorted(t.exponent for t in eq10.terms) == [1, 2, 5, 5, 8]
    eq12 = normalize_with_convention(build_equation(12, 1), "minimal")
    assert eq12.inf_exponent == 1
    assert sorted(t.exponent for t in eq12.terms) == [1, 2, 3, 3, 4, 4, 6]
    report(6, "exponent multisets for levels 9, 10, 12")


def test_criterion_07_order_table():
    checks = verify_table6()
    assert len(checks) == 36
    assert all(c["pass"] for c in checks)
    report(7, "all 36 order-table entries")


def test_criterion_08_holomorphic_basis():
    fam = octic_family()
    basis = holomorphic_basis(fam)
    assert len(basis) == 5
    vectors = [order_vector(fam, mono) for mono in basis]
    assert vectors == [(0, 4, 4, 0), (2, 2, 2, 0), (1, 1, 1, 1),
                       (0, 8, 0, 0), (0, 0, 0, 2)]
    for mono in basis:
        assert divisor_degree(fam, mono) == 8  # 2g - 2
    report(8, "holomorphic basis matches the order table, degree 8 each")


def test_criterion_09_type_one_quotient_genera():
    expected = {10: 1, 14: 2, 22: 6, 26: 9, 34: 17, 38: 22}
    for q, g in expected.items():
        assert genus_prime_quotient(q) == g
    report(9, "type I order-3p quotient genera")


def test_criterion_10_max_element_orders():
    for q in range(2, 25):
        expect = max_order_formula(q)
        assert max_element_order(q) == expect, \
            f"q={q} ({type_classify(q)}) expected {expect}"
    report(10, "largest projective element order, q = 2..24")


def test_criterion_11_canonical_model():
    for j in range(8):
        assert sigma_preserves_ideal(-1, Cyclotomic.root(8, j))
    for bad in (2, 3, -2):
        assert not any(sigma_preserves_ideal(bad, Cyclotomic.root(8, j))
                       for j in range(8))
    assert elimination_solve().a == Fraction(-1)
    inf_cls = cusp_canonical(8, (1, 0))
    target = cusp_canonical(8, (3, 8))
    movers = maps_between_cusps(8, inf_cls, target)
    assert len(movers) == 8
    quarter = {cusp_canonical(8, (1, 4)), cusp_canonical(8, (3, 4))}
    halves = {cusp_canonical(8, (x, 2)) for x in (1, 3, 5, 7)}
    for g in movers:
        assert cusp_class_action(8, g, target) == inf_cls
        assert {cusp_class_action(8, g, c) for c in quarter} == quarter
        assert {cusp_class_action(8, g, c) for c in halves} == halves
    assert automorphism_count_crosscheck()
    report(11, "canonical model: eight matrices, a = -1, matching counts")


def test_criterion_12_numeric_isomorphism():
    forward, inverse = octic_to_quartic_maps()
    result = verify_isomorphism_numeric(octic_model(), quartic_model(),
                                        forward, inverse, samples=100,
                                        tol=1e-9, seed=0)
    assert result["samples"] == 100
    assert result["max_residual"] < 1e-9, result
    assert result["max_roundtrip"] < 1e-9, result
    report(12, "explicit degree-4 model reached within 1e-9")


def test_criterion_13_hurwitz_consistency():
    for q in (7, 8, 12):
        assert hurwitz_deficiency(r_formula(q), 0, [q, 3, 2]) \
            == 2 * genus_q(q) - 2
    report(13, "Hurwitz relation closes for q = 7, 8, 12")
