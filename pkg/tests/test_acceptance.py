"""Acceptance suite: the eleven exact end-to-end checks, one test per criterion.

Every comparison is exact equality; each test prints a single PASS line on
success (visible with `pytest -s` or in captured output on failure).
"""

import random
from fractions import Fraction
from math import comb

from orbk3.cyclotomic import sum_inverse_one_minus_cos
from orbk3.groups import (
    Character,
    abelian_character_table,
    char_inner_product,
    char_inner_product_elementwise,
    cyclic_group,
    direct_product,
    symmetric_group_s3,
    trivial_character,
)
from orbk3.hilbert import HilbClassMu2, dim_mu2, enumerate_mu2
from orbk3.hrr import (
    euler_pairing,
    generic_point_class,
    moduli_dimension,
    structure_sheaf_class,
    tangent_bundle_class,
)
from orbk3.inertia import (
    fixed_points_closed_form,
    preset_cyclic,
    solve_fixed_points_cyclic,
    trivial_model,
    validate_identity,
)
from orbk3.lattice import (
    MukaiVector,
    check_hypotheses,
    elliptic_k3_lattice,
    fermat_quotient_lattice,
    hilbert_polynomial,
)
from orbk3.polyring import poly
from orbk3.toystacks import (
    GroupRingElement,
    parseval_check,
    projective_space_euler_class,
    wps_euler_class_tangent,
    wps_relation_element,
)


def _report(number: int, text: str):
    print(f"ACCEPTANCE {number}: PASS - {text}")


def test_criterion_1_fixed_point_table():
    expected = [8, 6, 4, 4, 2, 3, 2]
    solved = [solve_fixed_points_cyclic(n) for n in range(2, 9)]
    closed = [fixed_points_closed_form(n) for n in range(2, 9)]
    assert solved == expected
    assert closed == expected
    _report(1, f"f_n for n = 2..8 is {solved}, matching the closed form")


def test_criterion_2_unit_identity():
    values = {n: validate_identity(preset_cyclic(n)) for n in range(2, 9)}
    assert all(v == 1 for v in values.values())
    _report(2, "unit identity is exactly 1 for every cyclic preset n = 2..8")


def test_criterion_3_trig_identity():
    for n in range(2, 51):
        assert sum_inverse_one_minus_cos(n) == Fraction(n * n - 1, 6)
    _report(3, "sum 1/(1 - cos(2 pi k/n)) = (n^2 - 1)/6 exactly for 2 <= n <= 50")


def test_criterion_4_worked_dimensions():
    mu2 = preset_cyclic(2)
    tx = tangent_bundle_class(mu2)
    assert euler_pairing(mu2, tx, tx) == -40
    assert moduli_dimension(mu2, tx) == 42

    trivial = trivial_model()
    tx0 = tangent_bundle_class(trivial)
    assert euler_pairing(trivial, tx0, tx0) == -88
    assert moduli_dimension(trivial, tx0) == 90

    op = generic_point_class(mu2)
    assert euler_pairing(mu2, op, op) == 0
    assert moduli_dimension(mu2, op) == 2

    ox = structure_sheaf_class(mu2)
    assert euler_pairing(mu2, ox, ox) == 2
    assert moduli_dimension(mu2, ox) == 0
    _report(4, "TX gives (-40, 42) on [K3/mu_2] and (-88, 90) on K3; O_p (0, 2); O_X (2, 0)")


def test_criterion_5_hilbert_enumeration():
    tables = {l: [(r.count, r.dims) for r in enumerate_mu2(l)] for l in range(4)}
    assert tables[0] == [(1, (0,))]
    assert tables[1] == [(8, (0,) * 8)]
    assert tables[2] == [(1, (2,)), (28, (0,) * 28)]
    assert tables[3] == [(8, (0,) * 8), (8, (2,) * 8), (56, (0,) * 56)]
    _report(5, "l = 0..3 tables have counts (1), (8), (1, 28), (8, 8, 56) with dims (0), (0), (2, 0), (0, 2, 0)")


def test_criterion_6_dimension_cross_check():
    checked = 0
    for n in range(0, 11):
        for _ in range(40):
            rng = random.Random(1000 * n + checked)
            m = tuple(rng.randint(-3, 3) for _ in range(8))
            d = dim_mu2(HilbClassMu2(n, m))  # raises on formula disagreement
            assert d == 2 * (n - sum(x * x for x in m))
            assert d % 2 == 0
            checked += 1
    # plus the full exhaustive small cube
    for n in range(0, 4):
        for m1 in range(-3, 4):
            for m2 in range(-3, 4):
                m = (m1, m2, 0, 0, 0, 0, 0, 0)
                assert dim_mu2(HilbClassMu2(n, m)) == 2 * (n - m1 * m1 - m2 * m2)
                checked += 1
    _report(6, f"pairing dimension equals 2(n - sum m_i^2) and is even on {checked} classes")


def test_criterion_7_parseval():
    for n in range(2, 13):
        rng = random.Random(n)
        for _ in range(100):
            f = GroupRingElement(n, tuple(rng.randint(-9, 9) for _ in range(n)))
            g = GroupRingElement(n, tuple(rng.randint(-9, 9) for _ in range(n)))
            assert parseval_check(f, g)
    _report(7, "Parseval holds for 100 seeded random pairs for every n in 2..12")


def test_criterion_8_weighted_projective_identities():
    for weights in ((2, 3), (1, 1, 2), (2, 2)):
        assert wps_relation_element(weights).is_zero()
    for n in range(1, 7):
        assert wps_euler_class_tangent((1,) * (n + 1)) == projective_space_euler_class(n)
    _report(8, "K-ring relation vanishes for (2,3), (1,1,2), (2,2); P^n Euler class matches (n+1)(1-x^-1)^n for n <= 6")


def test_criterion_9_character_oracle():
    groups = [
        cyclic_group(n) for n in (2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12)
    ] + [
        direct_product(cyclic_group(2), cyclic_group(2)),
        direct_product(cyclic_group(2), cyclic_group(4)),
        direct_product(cyclic_group(2), cyclic_group(6)),
        direct_product(cyclic_group(3), cyclic_group(3)),
        direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2))),
        direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(3))),
    ]
    pairs = 0
    for g in groups:
        table = abelian_character_table(g)
        for i, chi in enumerate(table):
            for j, psi in enumerate(table):
                weighted = char_inner_product(chi, psi)
                direct = char_inner_product_elementwise(chi, psi)
                assert weighted == direct == (1 if i == j else 0)
                pairs += 1
    s3 = symmetric_group_s3()
    external = (
        trivial_character(s3),
        Character(s3, [1, 1, -1]),
        Character(s3, [2, -1, 0]),
    )
    for i, chi in enumerate(external):
        for j, psi in enumerate(external):
            weighted = char_inner_product(chi, psi)
            direct = char_inner_product_elementwise(chi, psi)
            assert weighted == direct == (1 if i == j else 0)
            pairs += 1
    _report(9, f"both pairing forms agree and are delta_ij on {pairs} irreducible pairs")


def test_criterion_10_hilbert_polynomials():
    fermat = fermat_quotient_lattice()
    for n in range(0, 9):
        v = MukaiVector(1, (0,), 1 - n)
        assert hilbert_polynomial(fermat, v) == poly([2 - n, 0, 8])  # 8z^2 + 2 - n
    elliptic = elliptic_k3_lattice()
    fiber_sum = MukaiVector(0, (1, 3), 0)  # c1 = h = s + 3f
    assert hilbert_polynomial(elliptic, fiber_sum) == poly([0, 4])  # 4z
    _report(10, "Fermat quotient gives 8z^2 + 2 - n; elliptic K3 gives 4z")


def test_criterion_11_theorem_hypotheses():
    fermat = fermat_quotient_lattice()
    tx = MukaiVector(2, (0,), -22)
    report = check_hypotheses(fermat, tx, generic=True)
    assert not report.primitive
    assert not report.main_theorem_hypotheses
    for n in range(1, 9):
        v = MukaiVector(1, (0,), 1 - n)
        rep = check_hypotheses(fermat, v, generic=True)
        assert rep.main_theorem_hypotheses  # d = 0 but gcd(r, d) = 1
    _report(11, "v(TX) fails primitivity; (1, 0, 1-n) passes the main-theorem check with the generic flag")
