import random
from fractions import Fraction

import pytest

from conftest import random_homogeneous_poly, random_poly
from initalg.family import (
    FreenessReport,
    HomogenizedFamily,
    fiber,
    freeness_basis_check,
    homogenize_ideal,
    monomials_of_weight,
)
from initalg.groebner import buchberger, initial_ideal, initial_ideal_weight
from initalg.hilbert import hilbert_series_monomial
from initalg.orders import DegLex, ExtendedOrder, Lex, RevLex, WeightOrder, leading_monomial
from initalg.poly import Monomial, PolyRing, WeightVector, is_weight_homogeneous

R2 = PolyRing(("x", "y"))
x, y = R2.gens()
R3 = PolyRing(("x", "y", "z"))
X, Y, Z = R3.gens()


def random_weight(rng, n, hi=3):
    return WeightVector(tuple(rng.randint(1, hi) for _ in range(n)))


def test_monomials_of_weight():
    ms = monomials_of_weight(2, WeightVector((1, 1)), 2)
    assert set(ms) == {Monomial((2, 0)), Monomial((1, 1)), Monomial((0, 2))}
    ms2 = monomials_of_weight(2, WeightVector((2, 3)), 6)
    assert set(ms2) == {Monomial((3, 0)), Monomial((0, 2))}
    assert monomials_of_weight(2, WeightVector((2, 3)), 1) == []


def test_homogenize_ideal_single():
    fam = homogenize_ideal([x**2 - y], WeightVector((1, 1)))
    t = fam.extended_ring.gens()[-1]
    xt, yt = fam.extended_ring.gens()[:2]
    assert fam.total.elements == (xt**2 - yt * t,)
    assert fiber(fam, 0) == (x**2,)
    assert fiber(fam, 1) == (x**2 - y,)
    assert fiber(fam, 2) == (x**2 - 2 * y,)


def test_fiber_scaling_same_ideal():
    fam = homogenize_ideal([x**2 - y], WeightVector((1, 1)))
    at2 = fiber(fam, 2)
    assert buchberger(list(at2), DegLex()).elements == buchberger([x**2 - 2 * y], DegLex()).elements


def test_weight_homogeneous_ideal_needs_no_t():
    fam = homogenize_ideal([x**2 - y**2], WeightVector((1, 1)))
    for g in fam.total:
        assert all(t.mono.exponents[-1] == 0 for t in g.terms)


def test_total_elements_weight_homogeneous_fixture():
    a = WeightVector((1, 1, 1))
    fam = homogenize_ideal([X**2 - Y, X * Y - Z], a, Lex())
    ext = a.extend()
    for g in fam.total:
        assert is_weight_homogeneous(g, ext)
    assert len(fam.total) == len(fam.base_gb)


def test_homogenized_gb_is_already_reduced():
    rng = random.Random(97)
    for _ in range(15):
        a = random_weight(rng, 3)
        tie = rng.choice([Lex(), DegLex(), RevLex()])
        gens = [random_poly(rng, R3, max_terms=3, max_exp=2) for _ in range(2)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        fam = homogenize_ideal(gens, a, tie)
        recomputed = buchberger(list(fam.total), ExtendedOrder(a, tie))
        assert recomputed.elements == fam.total.elements


def test_leading_monomials_match_base():
    rng = random.Random(101)
    for _ in range(15):
        a = random_weight(rng, 2)
        tie = rng.choice([Lex(), DegLex(), RevLex()])
        gens = [random_poly(rng, R2, max_terms=3, max_exp=3) for _ in range(2)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        fam = homogenize_ideal(gens, a, tie)
        base_leads = [leading_monomial(g, fam.base_gb.order) for g in fam.base_gb]
        total_leads = [leading_monomial(g, fam.total.order) for g in fam.total]
        assert [m.exponents + (0,) for m in base_leads] == [m.exponents for m in total_leads]


def test_fiber_one_and_zero_random():
    rng = random.Random(103)
    for _ in range(15):
        a = random_weight(rng, 2)
        tie = rng.choice([Lex(), DegLex(), RevLex()])
        gens = [random_poly(rng, R2, max_terms=3, max_exp=3) for _ in range(2)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        fam = homogenize_ideal(gens, a, tie)
        order = WeightOrder(a, tie)
        assert buchberger(list(fiber(fam, 1)), order).elements == fam.base_gb.elements
        assert fiber(fam, 0) == initial_ideal_weight(gens, a, tie)


def test_freeness_fixtures():
    fam = homogenize_ideal([x**2 - y], WeightVector((1, 1)))
    rep = freeness_basis_check(fam, 3)
    assert rep.ok and rep.bound == 3
    # degree d piece of K[x,y,t]/(x^2 - yt) vs standard monomials of (x^2)
    assert rep.rows[0] == (0, 1, 1)

    zero_fam = homogenize_ideal([R2.zero()], WeightVector((1, 1)))
    assert freeness_basis_check(zero_fam, 4).ok

    R1 = PolyRing(("x",))
    only = homogenize_ideal([R1.gens()[0]], WeightVector((1,)))
    rep1 = freeness_basis_check(only, 5)
    assert rep1.ok
    assert [r[1] for r in rep1.rows] == [1] * 6  # the single standard monomial is 1


def test_freeness_random():
    rng = random.Random(107)
    for _ in range(8):
        a = random_weight(rng, 2)
        gens = [random_poly(rng, R2, max_terms=3, max_exp=2) for _ in range(2)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        fam = homogenize_ideal(gens, a)
        assert freeness_basis_check(fam).ok


def test_fiber_hilbert_functions_match_for_graded_ideals():
    rng = random.Random(109)
    for _ in range(8):
        gens = [random_homogeneous_poly(rng, R3, rng.randint(1, 3)) for _ in range(2)]
        a = random_weight(rng, 3)
        fam = homogenize_ideal(gens, a)
        alpha = Fraction(rng.randint(1, 4))
        general = fiber(fam, alpha)
        H_base = hilbert_series_monomial(initial_ideal(gens, DegLex()))
        H_fiber = hilbert_series_monomial(initial_ideal(list(general), DegLex()))
        assert H_base.expand(8) == H_fiber.expand(8)
