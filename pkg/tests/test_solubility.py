import random

import pytest
import sympy

from rigicert.algebra.solubility import (
    RULE_BURNSIDE,
    RULE_JORDAN,
    RULE_TABLE,
    SolubilityVerdict,
    cycle_type,
    frobenius_cycle_types,
    maximal_soluble_transitive_groups,
    nonsolubility_certificate,
    rules_for_degree,
    soluble_cycle_types,
)
from rigicert.algebra.unipoly import UniPoly
from rigicert.errors import InputError

from test_systems import DEG6_FACTOR, DEG8_FACTOR


def test_cycle_type():
    assert cycle_type((1, 0, 2, 3)) == (1, 1, 2)
    assert cycle_type((1, 2, 0)) == (3,)
    assert cycle_type(tuple(range(5))) == (1, 1, 1, 1, 1)


def test_group_orders_and_transitivity():
    expected = {6: {"S2_wr_S3": 48, "S3_wr_S2": 72}, 8: {"S2_wr_S4": 384, "S4_wr_S2": 1152, "AGammaL_1_8": 168}}
    for degree, orders in expected.items():
        groups = maximal_soluble_transitive_groups(degree)
        assert {name: order for name, order, _ in groups} == orders
        for name, order, elements in groups:
            assert len(elements) == order
            # closure under composition
            sample = random.Random(degree).sample(sorted(elements), 12)
            for a in sample:
                for b in sample:
                    assert tuple(a[b[i]] for i in range(degree)) in elements
            # transitivity
            images = {p[0] for p in elements}
            assert images == set(range(degree))


def test_soluble_cycle_types_no_five_cycles():
    # none of the maximal soluble groups of degree 6 or 8 has order divisible by 5
    for degree in (6, 8):
        for t in soluble_cycle_types(degree):
            assert 5 not in t


def test_frobenius_cycle_types_examples():
    reports, skipped = frobenius_cycle_types(UniPoly([1, 0, 1]), 20)
    by_prime = {r.prime: r for r in reports}
    assert by_prime[3].degree_multiset == (2,)
    assert by_prime[5].degree_multiset == (1, 1)
    assert skipped == []
    for r in reports:
        assert sum(r.degree_multiset) == 2

    reports, skipped = frobenius_cycle_types(UniPoly([3, 10]), 11)
    assert skipped == [2, 5]
    with pytest.raises(InputError):
        frobenius_cycle_types(UniPoly([1, -2, 1]), 10)  # not squarefree


def test_certificates_for_published_factors():
    f6 = UniPoly(DEG6_FACTOR)
    cert = nonsolubility_certificate(f6, 10000)
    assert cert.verdict == SolubilityVerdict.NOT_SOLUBLE
    prime, multiset, rule = cert.witness
    assert multiset == (1, 5) and rule == RULE_BURNSIDE and prime == 71
    assert set(cert.rules_checked) == {RULE_JORDAN, RULE_BURNSIDE, RULE_TABLE}

    f8 = UniPoly(DEG8_FACTOR)
    cert = nonsolubility_certificate(f8, 10000)
    assert cert.verdict == SolubilityVerdict.NOT_SOLUBLE
    prime, multiset, rule = cert.witness
    assert prime == 23 and multiset == (3, 5) and rule == RULE_TABLE


def test_jordan_rule_fires_on_degree8_five_cycle():
    # x^8 - x - 1 has Galois group S8; scan until a {1,1,1,5} type appears
    p = UniPoly([-1, -1, 0, 0, 0, 0, 0, 0, 1])
    cert = nonsolubility_certificate(p, 10000)
    assert cert.verdict == SolubilityVerdict.NOT_SOLUBLE


def test_certificate_requires_irreducible():
    with pytest.raises(InputError):
        nonsolubility_certificate(UniPoly([-1, 0, 1]), 100)


def test_soluble_controls_stay_inconclusive():
    # cyclotomic polynomials of degree <= 8 (abelian, hence soluble)
    x = sympy.symbols("x")
    controls = []
    for k in range(1, 31):
        poly = sympy.Poly(sympy.cyclotomic_poly(k, x), x)
        if poly.degree() <= 8:
            controls.append(UniPoly([int(c) for c in reversed(poly.all_coeffs())]))
    # x^8 - 2 (soluble: 2-group times cyclic data inside a metabelian extension)
    controls.append(UniPoly([-2, 0, 0, 0, 0, 0, 0, 0, 1]))
    for p in controls:
        if p.degree < 1:
            continue
        cert = nonsolubility_certificate(p, 2000)
        assert cert.verdict == SolubilityVerdict.INCONCLUSIVE, p


def quadratic_tower_minimal_poly(rng: random.Random):
    """Minimal polynomial of sqrt(a + b*sqrt(c)) for random rationals."""
    x = sympy.symbols("x")
    while True:
        a = rng.randint(1, 9)
        b = rng.randint(1, 5)
        c = rng.choice([2, 3, 5, 6, 7, 10])
        expr = sympy.sqrt(a + b * sympy.sqrt(c))
        poly = sympy.minimal_polynomial(expr, x, domain=sympy.QQ)
        p = sympy.Poly(poly, x)
        if p.degree() in (4, 8):
            return UniPoly([int(c_) for c_ in reversed(p.all_coeffs())])


def test_quadratic_tower_controls_inconclusive():
    rng = random.Random(401)
    seen = 0
    while seen < 12:
        p = quadratic_tower_minimal_poly(rng)
        cert = nonsolubility_certificate(p, 1000)
        assert cert.verdict == SolubilityVerdict.INCONCLUSIVE, p
        seen += 1


def test_rules_for_degree():
    assert rules_for_degree(6) == [RULE_JORDAN, RULE_BURNSIDE, RULE_TABLE]
    assert rules_for_degree(5) == [RULE_JORDAN, RULE_BURNSIDE]


def test_rule_hits_directly():
    from rigicert.algebra.solubility import _rule_hit

    assert _rule_hit((1, 1, 1, 5), 8) == RULE_JORDAN
    assert _rule_hit((1, 5), 6) == RULE_BURNSIDE
    assert _rule_hit((3, 5), 8) == RULE_TABLE
    # a 7-cycle with a fixed point lives in the affine semilinear group: no rule
    assert _rule_hit((1, 7), 8) is None
    # 8 is a prime power, so a 7-cycle alone cannot trigger the 2-transitive rule
    assert _rule_hit((8,), 8) is None
    assert _rule_hit((2, 2, 2), 6) is None
    # degree without a table: only the two generic rules can fire
    assert _rule_hit((1, 1, 5), 7) is None  # 5 > n-3 = 4: outside the safe range
    assert _rule_hit((1, 6), 7) is None  # 7 is prime (a prime power)


def test_inert_prime_appears_for_generic_irreducibles():
    # polynomials with full symmetric Galois group have n-cycles, so some
    # good prime below a generous bound must show the one-block multiset
    rng = random.Random(443)
    from rigicert.algebra.solubility import _sieve_reports
    from rigicert.algebra.unipoly import is_irreducible

    found = 0
    while found < 6:
        deg = rng.randint(2, 7)
        coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [1]
        p = UniPoly(coeffs)
        if not is_irreducible(p):
            continue
        multisets = {r.degree_multiset for r in _sieve_reports(p, 3000) if r.squarefree}
        assert all(sum(m) == deg for m in multisets)
        assert (deg,) in multisets
        found += 1
