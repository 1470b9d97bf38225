"""Groebner bases and the ideal operations built on them.

The Buchberger loop keeps the classical layout: s-polynomials, normal pair
selection, Gebauer-Moeller pair updates, then minimalize and interreduce.
Intersection and radical membership run the same loop in a ring with one
auxiliary variable.
"""
import logging
from functools import reduce
from itertools import combinations, product

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement

import monomial_ideals
from errors import RingMismatchError, ZeroPolynomialError
from poly_core import (DEFAULT_ORDER, BlockEliminationOrder, format_poly, monomial_order,
                       total_degree)

logger = logging.getLogger(__name__)


class Ideal:
    """Ideal of a PolyRing given by generators; zero generators are dropped."""

    def __init__(self, ring, generators=()):
        self.ring = ring
        gens = []
        for f in generators:
            if isinstance(f, str):
                f = ring.parse(f)
            elif not isinstance(f, PolyElement):
                f = ring.constant(f)
            elif not ring.owns(f):
                raise RingMismatchError(f"generator {f} does not belong to {ring}")
            if f:
                gens.append(f)
        self.generators = tuple(gens)
        # order -> reduced basis in that order's ring; filled once per order
        self._bases = {}

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one])

    @property
    def is_zero(self):
        return not self.generators

    def __repr__(self):
        return "<" + ", ".join(format_poly(g) for g in self.generators) + ">"


def _check_same_ring(*ideals):
    if len({I.ring for I in ideals}) > 1:
        raise RingMismatchError("ideals belong to different polynomial rings")


def _check_member_ring(I, f):
    if not I.ring.owns(f):
        raise RingMismatchError(f"{f} does not belong to {I.ring}")


def spoly(f, g):
    """S-polynomial of monic f and g."""
    R = f.ring
    lcm = R.monomial_lcm(f.LM, g.LM)
    return f.mul_monom(R.monomial_div(lcm, f.LM)) - g.mul_monom(R.monomial_div(lcm, g.LM))


def select(G, P):
    """Normal strategy: the pair with the smallest lcm, index pair breaking ties."""
    R = G[0].ring
    return min(P, key=lambda p: (R.order(R.monomial_lcm(G[p[0]].LM, G[p[1]].LM)), p))


def update(G, P, f):
    """Add f to G and prune the pair set with the Gebauer-Moeller criteria."""
    R = f.ring
    lcm, mul, div = R.monomial_lcm, R.monomial_mul, R.monomial_div
    lmf = f.LM
    lmG = [g.LM for g in G]

    P = {p for p in P if (not div(lcm(lmG[p[0]], lmG[p[1]]), lmf) or
                          lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[0]], lmf) or
                          lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[1]], lmf))}
    lcm_groups = {}
    for i in range(len(G)):
        lcm_groups.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimal_lcms = []
    for L in sorted(lcm_groups, key=R.order):
        if all(not div(L, L_) for L_ in minimal_lcms):
            minimal_lcms.append(L)
    new_pairs = set()
    for L in minimal_lcms:
        # coprime leading monomials: the whole group reduces to zero
        if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in lcm_groups[L]):
            new_pairs.add((min(lcm_groups[L]), len(G)))
    return G + [f], P | new_pairs


def minimalize(G):
    """Drop elements whose leading monomial is divisible by another one."""
    R = G[0].ring
    Gmin = []
    for f in sorted(G, key=lambda h: R.order(h.LM)):
        if all(not R.monomial_div(f.LM, g.LM) for g in Gmin):
            Gmin.append(f)
    return Gmin


def interreduce(G):
    """Reduce each element by the others and make it monic."""
    return [G[i].rem(G[:i] + G[i + 1:]).monic() for i in range(len(G))]


def buchberger(F):
    """Reduced Groebner basis of the polynomials F, sorted by descending leading monomial."""
    F = [f for f in F if f]
    if not F:
        return []
    R = F[0].ring
    # Seed the basis and the pair set from the input polynomials
    G, P = [], set()
    for f in F:
        G, P = update(G, P, f.monic())

    # Reduce S-polynomials until no pairs remain
    processed = 0
    while P:
        pair = select(G, P)
        P.remove(pair)
        processed += 1
        r = spoly(G[pair[0]], G[pair[1]]).rem(G)
        if r:
            if r.LM == R.zero_monom:
                logger.debug("unit ideal detected after %d pairs", processed)
                return [R.one]
            G, P = update(G, P, r.monic())
    logger.debug("buchberger: %d generators, %d pairs processed, %d basis elements",
                 len(F), processed, len(G))
    # Minimal, then reduced
    basis = interreduce(minimalize(G))
    return sorted(basis, key=lambda g: R.order(g.LM), reverse=True)


def _ordered_basis(I, order):
    """Reduced Groebner basis of I in the ring of the given order."""
    key = monomial_order(order)
    if key not in I._bases:
        I._bases[key] = tuple(buchberger([I.ring.to_ordered(f, key) for f in I.generators]))
    return I._bases[key]


def groebner_basis(I, order=DEFAULT_ORDER):
    """Reduced Groebner basis of I, as polynomials of I's ring."""
    return [I.ring.from_ordered(g) for g in _ordered_basis(I, order)]


def normal_form(f, I, order=DEFAULT_ORDER):
    """Remainder of f on division by the reduced Groebner basis of I."""
    _check_member_ring(I, f)
    G = list(_ordered_basis(I, order))
    r = I.ring.to_ordered(f, order).rem(G)
    return I.ring.from_ordered(r)


def contains(I, f):
    """Ideal membership: f reduces to zero."""
    return not normal_form(f, I)


def is_unit(I):
    """Whether I is the whole ring."""
    return contains(I, I.ring.one)


def ideals_equal(I, J):
    """Equality through reduced Groebner bases."""
    _check_same_ring(I, J)
    return groebner_basis(I) == groebner_basis(J)


def ideal_contains_ideal(I, J):
    """True when J is a subset of I."""
    _check_same_ring(I, J)
    return all(contains(I, g) for g in J.generators)


def ideal_sum(I, J):
    """I + J, generated by both generator lists."""
    _check_same_ring(I, J)
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I, J):
    """IJ, generated by pairwise products."""
    _check_same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.generators for g in J.generators])


def ideal_power(I, k):
    """I^k; I^0 is the unit ideal."""
    return reduce(ideal_product, [I] * k, Ideal.unit(I.ring))


def ideal_intersection(I, J):
    """I ∩ J as the w-free part of <w*I, (1 - w)*J> under an elimination order on w."""
    _check_same_ring(I, J)
    ring = I.ring
    if I.is_zero or J.is_zero:
        return Ideal(ring)
    order = BlockEliminationOrder(1)
    w = ring.aux_ring(order).gens[0]
    F = [w * ring.embed(f, order) for f in I.generators]
    F += [(1 - w) * ring.embed(g, order) for g in J.generators]
    G = buchberger(F)
    return Ideal(ring, [ring.project(g) for g in G if all(m[0] == 0 for m in g.keys())])


def ideal_quotient(I, f):
    """Colon ideal (I : f) = (I ∩ <f>) / f."""
    _check_member_ring(I, f)
    if not f:
        raise ZeroPolynomialError("cannot take the colon by the zero polynomial")
    meet = ideal_intersection(I, Ideal(I.ring, [f]))
    return Ideal(I.ring, [g.exquo(f) for g in meet.generators])


def ideal_colon(I, J):
    """(I : J) as the intersection of (I : g) over the generators of J."""
    _check_same_ring(I, J)
    if J.is_zero:
        return Ideal.unit(I.ring)
    return reduce(ideal_intersection, [ideal_quotient(I, g) for g in J.generators])


def saturation(I, J):
    """(I : J^∞), iterating the colon until the reduced basis stops changing."""
    current = I
    iterations = 0
    while True:
        following = ideal_colon(current, J)
        iterations += 1
        if ideals_equal(following, current):
            logger.debug("saturation stable after %d colon steps", iterations)
            return current
        current = following


def is_comaximal(I, J):
    """Whether I + J is the unit ideal."""
    return is_unit(ideal_sum(I, J))


def radical_membership(f, I):
    """f ∈ √I, decided by 1 ∈ I + <1 - w*f> in the ring with an auxiliary variable."""
    _check_member_ring(I, f)
    if not f:
        return True
    ring = I.ring
    R = ring.aux_ring(grevlex)
    w = R.gens[0]
    F = [ring.embed(g, grevlex) for g in I.generators] + [1 - w * ring.embed(f, grevlex)]
    G = buchberger(F)
    return G == [R.one]


def _leading_monomials(I):
    return [g.LM for g in _ordered_basis(I, grevlex)]


def dimension(I):
    """Krull dimension of Γ/I via maximal independent sets of the initial ideal; -1 for <1>."""
    if is_unit(I):
        return -1
    leads = _leading_monomials(I)
    d = I.ring.dimension
    for size in range(d, -1, -1):
        for subset in combinations(range(d), size):
            outside = [i for i in range(d) if i not in subset]
            if all(any(m[i] for i in outside) for m in leads):
                return size
    return 0


def is_monomial_ideal(I):
    """Whether the reduced Groebner basis consists of monomials."""
    return all(len(g) == 1 for g in groebner_basis(I))


def standard_monomial_count(I):
    """Vector-space dimension of Γ/I when it is finite, else None."""
    # Γ/I and Γ/in(I) share their standard monomials
    return monomial_ideals.standard_monomial_count(_leading_monomials(I), I.ring.dimension)


def monomials_up_to(d, degree):
    """Exponent tuples in d variables of total degree at most degree."""
    return [m for m in product(range(degree + 1), repeat=d) if sum(m) <= degree]


def membership_by_linear_algebra(f, I, degree_bound):
    """Whether f = sum c_j g_j with every deg(c_j g_j) <= degree_bound.

    Sound but incomplete: True proves membership, False only rules out
    certificates within the bound.
    """
    _check_member_ring(I, f)
    if not f:
        return True
    if I.is_zero or total_degree(f) > degree_bound:
        return False
    d = I.ring.dimension
    rows = {m: k for k, m in enumerate(monomials_up_to(d, degree_bound))}
    columns = []
    for g in I.generators:
        for m in monomials_up_to(d, degree_bound - total_degree(g)):
            columns.append(g.mul_monom(m))
    if not columns:
        return False

    A, Ab = {}, {}
    for j, column in enumerate(columns):
        for monom, coeff in column.items():
            A.setdefault(rows[monom], {})[j] = coeff
            Ab.setdefault(rows[monom], {})[j] = coeff
    for monom, coeff in f.items():
        Ab.setdefault(rows[monom], {})[len(columns)] = coeff

    shape = (len(rows), len(columns))
    rank_a = DomainMatrix(A, shape, QQ).rank()
    rank_ab = DomainMatrix(Ab, (shape[0], shape[1] + 1), QQ).rank()
    return rank_a == rank_ab
