import random
from fractions import Fraction

import pytest

from splicezeta.algebra import (
    CycloProduct,
    Poly2,
    RatFuncS,
    cyclo_multiplicity,
    eval_at_one_with_cancellation,
)
from splicezeta.errors import PoleAtOne

from oracles import root_order, sum_terms_at


def lpoly(*coeffs):
    """Polynomial in L from constant term upward."""
    return Poly2({(k, 0): c for k, c in enumerate(coeffs) if c})


def random_poly(rng, size=5):
    return Poly2({(rng.randint(-3, 4), rng.randint(0, 4)): rng.randint(-5, 5)
                  for _ in range(size)})


def test_poly2_ring_laws():
    rng = random.Random(7)
    for _ in range(60):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * Poly2.one() == a
        assert (a - a).is_zero()


def test_poly2_mul_binomial_matches_mul():
    rng = random.Random(3)
    for _ in range(40):
        p = random_poly(rng)
        nu, n = rng.randint(-3, 4), rng.randint(0, 4)
        assert p.mul_binomial(nu, n) == p * Poly2.binomial_l_minus_t(nu, n)


def test_poly2_render_is_sorted_and_stable():
    p = Poly2({(2, 0): 1, (0, 1): -3, (0, 0): 2})
    assert str(p) == "L^2 - 3*T + 2"
    assert str(Poly2.zero()) == "0"
    assert str(Poly2({(-2, 3): 1})) == "L^-2*T^3"


def test_eval_at_one_simple_cancellation():
    # (L^2 - 1)/(L - 1) at 1
    assert eval_at_one_with_cancellation(lpoly(-1, 0, 1), lpoly(-1, 1)) == 2
    assert eval_at_one_with_cancellation(lpoly(-1, 1), lpoly(-1, 0, 1)) == Fraction(1, 2)
    # (L - 1)^2 / (L - 1) leaves one vanishing factor
    sq = lpoly(-1, 1) * lpoly(-1, 1)
    assert eval_at_one_with_cancellation(sq, lpoly(-1, 1)) == 0


def test_eval_at_one_pole():
    with pytest.raises(PoleAtOne):
        eval_at_one_with_cancellation(lpoly(2), lpoly(-1, 1))


def test_eval_at_one_laurent_shift_invariance():
    num, den = lpoly(-1, 0, 1), lpoly(-1, 1)
    shifted = num.mul_monomial(1, -4, 0)
    assert eval_at_one_with_cancellation(shifted, den) == 2


# ---------------------------------------------------------------------------
# RatFuncS
# ---------------------------------------------------------------------------


def test_ratfunc_basic_sum_and_render():
    # 1/(2s+2) + 1/(3s+3) = 5 / (6*(s+1)) up to factor bookkeeping
    r = RatFuncS.from_term(1, [(2, 2)]) + RatFuncS.from_term(1, [(3, 3)])
    for s in (0, 1, Fraction(1, 2), 7):
        assert r.evaluate(s) == Fraction(5, 6) / (s + 1)


def test_ratfunc_cancellation_keeps_primitive_factor():
    # the cusp sum collapses onto (4s+5)/((s+1)(6s+5))
    terms = [
        (1, [(2, 2)]), (1, [(3, 3)]), (-1, [(6, 5)]),
        (1, [(2, 2), (6, 5)]), (1, [(3, 3), (6, 5)]), (1, [(6, 5), (1, 1)]),
    ]
    acc = RatFuncS.zero()
    for chi, pairs in terms:
        acc = acc + RatFuncS.from_term(chi, pairs)
    assert str(acc) == "(4*s + 5) / ((1*s + 1)*(6*s + 5))"
    assert acc.pole_list() == [(Fraction(-1), 1), (Fraction(-5, 6), 1)]
    # agreement with plain term-by-term evaluation
    for s in (0, 1, 2, Fraction(3, 7)):
        assert acc.evaluate(s) == sum_terms_at(terms, s)


def test_ratfunc_value_equality_across_representations():
    a = RatFuncS.from_term(2, [(6, 21)])
    b = RatFuncS.from_term(2, [(2, 7)])
    # 2/(6s+21) = (2/3)/(2s+7)
    assert a + a + a == b
    assert not (a == b)


def test_ratfunc_constant_factor_folds_into_scale():
    r = RatFuncS.from_term(1, [(0, 3), (2, 2)])
    assert r.evaluate(0) == Fraction(1, 6)
    assert "3" in str(r)


def test_ratfunc_random_reexpansion_idempotent():
    rng = random.Random(11)
    for _ in range(50):
        terms = []
        for _ in range(rng.randint(1, 5)):
            pairs = [(rng.randint(0, 4), rng.randint(-3, 5))
                     for _ in range(rng.randint(1, 2))]
            pairs = [p for p in pairs if p != (0, 0)] or [(1, 1)]
            terms.append((rng.randint(-3, 3), pairs))
        acc = RatFuncS.zero()
        for chi, pairs in terms:
            acc = acc + RatFuncS.from_term(chi, pairs)
        again = acc + RatFuncS.zero()
        assert again == acc
        assert (acc - acc).is_zero()
        s = Fraction(rng.randint(50, 99), 7)
        assert acc.evaluate(s) == sum_terms_at(terms, s)


def test_ratfunc_negative_nu_rendering():
    r = RatFuncS.from_term(1, [(2, -7)])
    assert str(r) == "1 / (2*s - 7)"


# ---------------------------------------------------------------------------
# CycloProduct
# ---------------------------------------------------------------------------


def test_cyclo_multiplicity_cusp_values():
    p = CycloProduct({6: 1, 2: -1, 3: -1})
    assert cyclo_multiplicity(p, Fraction(1, 6)) == 1
    assert cyclo_multiplicity(p, Fraction(1, 2)) == 0
    p1 = CycloProduct({6: 1, 2: -1, 3: -1, 1: 1})
    assert cyclo_multiplicity(p1, Fraction(0)) == 0


def test_cyclo_multiplicity_matches_expansion():
    rng = random.Random(5)
    for _ in range(12):
        exps = {rng.randint(1, 30): rng.randint(1, 2) for _ in range(rng.randint(1, 3))}
        p = CycloProduct(exps)
        for d in sorted({1} | set(exps) | {n // 2 for n in exps if n % 2 == 0}):
            q = Fraction(1, d) if d > 1 else Fraction(0)
            assert cyclo_multiplicity(p, q) == root_order(exps, q)


def test_cyclo_multiplicity_matches_expansion_with_negatives():
    exps = {6: 1, 2: -1, 3: -1, 1: 1}
    p = CycloProduct(exps)
    for d in (1, 2, 3, 6):
        q = Fraction(1, d) if d > 1 else Fraction(0)
        assert cyclo_multiplicity(p, q) == root_order(exps, q)


def test_cyclo_product_and_polynomiality():
    zeta = CycloProduct({6: 1, 2: -1, 3: -1})
    delta1 = zeta * CycloProduct({1: 1})
    assert delta1.is_polynomial()
    assert not CycloProduct({2: -1}).is_polynomial()
    assert str(zeta) == "(t^6 - 1) / ((t^2 - 1)*(t^3 - 1))"
