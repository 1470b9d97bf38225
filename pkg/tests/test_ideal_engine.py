import pytest

from conftest import random_poly
from errors import RingMismatchError, ZeroPolynomialError
from ideal_engine import (Ideal, contains, dimension, groebner_basis, ideal_colon,
                          ideal_contains_ideal, ideal_intersection, ideal_power, ideal_product,
                          ideal_quotient, ideal_sum, ideals_equal, is_comaximal, is_monomial_ideal,
                          is_unit, membership_by_linear_algebra, normal_form, radical_membership,
                          saturation, standard_monomial_count)
from poly_core import leading_term, poly_ring


def test_groebner_basis_lex(xy):
    I = Ideal(xy, ["x + y", "x - y"])
    assert groebner_basis(I, "lex") == [xy.parse("x"), xy.parse("y")]


def test_groebner_basis_twisted_cubic():
    ring = poly_ring(("x", "y", "z"))
    I = Ideal(ring, ["x^2 - y", "x^3 - z"])
    G = groebner_basis(I, "lex")
    assert all(contains(I, g) for g in G)
    assert ideals_equal(I, Ideal(ring, G))
    assert ring.parse("y^3 - z^2") in G


def test_groebner_basis_is_reduced(xyz, rng):
    for _ in range(10):
        I = Ideal(xyz, [random_poly(xyz, rng) for _ in range(3)])
        G = groebner_basis(I)
        for k, g in enumerate(G):
            monom, coeff = leading_term(g)
            assert coeff == 1
            others = G[:k] + G[k + 1:]
            # no term of g is divisible by another leading monomial
            for m in g.keys():
                for h in others:
                    lm = leading_term(h)[0]
                    assert not all(a >= b for a, b in zip(m, lm))


def test_groebner_basis_independent_of_generator_order(xyz, rng):
    for _ in range(10):
        gens = [random_poly(xyz, rng) for _ in range(3)]
        assert groebner_basis(Ideal(xyz, gens)) == groebner_basis(Ideal(xyz, gens[::-1]))


def test_zero_and_unit_ideals(xy):
    assert groebner_basis(Ideal(xy, [])) == []
    assert groebner_basis(Ideal(xy, [0, "0"])) == []
    assert groebner_basis(Ideal(xy, ["x", "1 - x*y", "y"])) == [xy.one]
    assert is_unit(Ideal.unit(xy))
    assert not is_unit(Ideal(xy, []))


def test_membership_examples(t1t2):
    I = Ideal(t1t2, ["t1^2", "t1*t2"])
    assert contains(I, t1t2.parse("t1^3 + t1*t2^5"))
    assert not contains(I, t1t2.parse("t1"))
    assert contains(I, t1t2.zero)


def test_normal_form_examples(xy):
    assert normal_form(xy.parse("x + y"), Ideal(xy, ["x", "y"])) == xy.zero
    assert normal_form(xy.one, Ideal(xy, ["x", "y"])) == xy.one
    assert normal_form(xy.parse("x^2"), Ideal(xy, ["x^2 - y"]), "lex") == xy.parse("y")


def test_normal_form_of_member_is_zero(xy):
    I = Ideal(xy, ["x^2 - y", "x*y - 1"])
    f = xy.parse("(x^2 - y)*(x + 3) - 2*y*(x*y - 1)")
    assert normal_form(f, I) == xy.zero


@pytest.mark.parametrize("order", ["grevlex", "lex"])
def test_normal_form_is_idempotent(xyz, rng, order):
    for _ in range(12):
        I = Ideal(xyz, [random_poly(xyz, rng) for _ in range(int(rng.integers(1, 4)))])
        f = random_poly(xyz, rng, max_degree=4, max_terms=5)
        r = normal_form(f, I, order)
        assert normal_form(r, I, order) == r
        assert contains(I, f - r)


def test_mixed_rings_rejected(xy, t1t2):
    with pytest.raises(RingMismatchError):
        contains(Ideal(xy, ["x"]), t1t2.parse("t1"))
    with pytest.raises(RingMismatchError):
        ideal_sum(Ideal(xy, ["x"]), Ideal(t1t2, ["t1"]))
    with pytest.raises(RingMismatchError):
        Ideal(xy, [t1t2.gen("t1")])


def test_sum_product_power(xy):
    x, y = Ideal(xy, ["x"]), Ideal(xy, ["y"])
    assert ideals_equal(ideal_sum(x, y), Ideal(xy, ["x", "y"]))
    assert ideals_equal(ideal_product(x, y), Ideal(xy, ["x*y"]))
    assert ideals_equal(ideal_power(ideal_sum(x, y), 2), Ideal(xy, ["x^2", "x*y", "y^2"]))
    assert is_unit(ideal_power(x, 0))


def test_intersection_examples(t1t2):
    I = Ideal(t1t2, ["t1"])
    J = Ideal(t1t2, ["t2"])
    assert ideals_equal(ideal_intersection(I, J), Ideal(t1t2, ["t1*t2"]))
    a = Ideal(t1t2, ["t1^2", "t2"])
    b = Ideal(t1t2, ["t1", "t2^2"])
    assert ideals_equal(ideal_intersection(a, b), Ideal(t1t2, ["t1^2", "t1*t2", "t2^2"]))
    assert ideal_intersection(I, Ideal(t1t2, [])).is_zero


def test_intersection_of_comaximal_is_product(t):
    I = Ideal(t, ["t - 1"])
    J = Ideal(t, ["(t - 2)^2"])
    assert is_comaximal(I, J)
    assert ideals_equal(ideal_intersection(I, J), ideal_product(I, J))


def test_intersection_lies_in_both(xy, rng):
    for _ in range(8):
        I = Ideal(xy, [random_poly(xy, rng, max_degree=2) for _ in range(2)])
        J = Ideal(xy, [random_poly(xy, rng, max_degree=2) for _ in range(2)])
        meet = ideal_intersection(I, J)
        assert ideal_contains_ideal(I, meet)
        assert ideal_contains_ideal(J, meet)
        assert ideal_contains_ideal(meet, ideal_product(I, J))


def test_quotient_examples(t1t2):
    I = Ideal(t1t2, ["t1^2", "t1*t2"])
    assert ideals_equal(ideal_quotient(I, t1t2.parse("t2")), Ideal(t1t2, ["t1"]))
    assert ideals_equal(ideal_quotient(I, t1t2.parse("t1")), Ideal(t1t2, ["t1", "t2"]))
    assert is_unit(ideal_quotient(I, t1t2.parse("t1^2")))


def test_quotient_by_zero(t1t2):
    with pytest.raises(ZeroPolynomialError):
        ideal_quotient(Ideal(t1t2, ["t1"]), t1t2.zero)


def test_colon_and_saturation(t1t2):
    I = Ideal(t1t2, ["t1^2", "t1*t2"])
    m = Ideal(t1t2, ["t1", "t2"])
    assert ideals_equal(ideal_colon(I, m), Ideal(t1t2, ["t1"]))
    assert ideals_equal(saturation(I, m), Ideal(t1t2, ["t1"]))
    assert ideals_equal(saturation(I, Ideal(t1t2, ["t2"])), Ideal(t1t2, ["t1"]))
    assert is_unit(ideal_colon(I, Ideal(t1t2, [])))


def test_saturation_removes_point_component(t):
    I = Ideal(t, ["(t - 1)^3*(t - 2)"])
    assert ideals_equal(saturation(I, Ideal(t, ["t - 1"])), Ideal(t, ["t - 2"]))
    assert ideals_equal(saturation(I, Ideal(t, ["t - 2"])), Ideal(t, ["(t - 1)^3"]))


def test_radical_membership(t1t2):
    I = Ideal(t1t2, ["t1^3", "t2^2"])
    assert radical_membership(t1t2.parse("t1 + t2"), I)
    assert not radical_membership(t1t2.parse("t1 + 1"), I)
    assert radical_membership(t1t2.zero, I)
    assert not contains(I, t1t2.parse("t1"))


def test_dimension_examples():
    ring = poly_ring(("t1", "t2", "t3"))
    assert dimension(Ideal(ring, ["t1*t2", "t1*t3"])) == 2
    assert dimension(Ideal(ring, [])) == 3
    assert dimension(Ideal(ring, ["t1", "t2", "t3"])) == 0
    assert dimension(Ideal.unit(ring)) == -1
    assert dimension(Ideal(ring, ["t1^2 + t2^2 + t3^2 - 1"])) == 2


def test_dimension_drops_as_ideals_grow(xyz, rng):
    for _ in range(15):
        I = Ideal(xyz, [random_poly(xyz, rng, max_degree=2) for _ in range(int(rng.integers(0, 3)))])
        J = ideal_sum(I, Ideal(xyz, [random_poly(xyz, rng, max_degree=2)]))
        assert ideal_contains_ideal(J, I)
        assert dimension(I) >= dimension(J)


def test_monomial_ideal_detection(xy):
    assert is_monomial_ideal(Ideal(xy, ["x^2", "x*y + x^2"]))
    assert not is_monomial_ideal(Ideal(xy, ["x + y"]))


def test_standard_monomial_count(xy, t):
    assert standard_monomial_count(Ideal(xy, ["x^2", "y^3"])) == 6
    assert standard_monomial_count(Ideal(xy, ["x"])) is None
    assert standard_monomial_count(Ideal(t, ["(t - 1)^2*(t - 2)"])) == 3
    assert standard_monomial_count(Ideal.unit(xy)) == 0


def test_linear_algebra_membership_agrees(xy):
    I = Ideal(xy, ["x^2 - y", "x*y"])
    member = xy.parse("x^3 - x*y")
    assert membership_by_linear_algebra(member, I, 3)
    assert not membership_by_linear_algebra(xy.parse("x"), I, 6)
    # a certificate exists but needs more degree than allowed
    assert not membership_by_linear_algebra(member, I, 2)
