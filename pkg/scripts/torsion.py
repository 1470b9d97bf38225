"""Cyclic modules Γ/I: assassins, torsion radicals, coheight strata and CRT splitting.

A module is either monomial (primary components computed from exponent
vectors) or carries a declared primary decomposition that is checked on
construction. Primary-ness of declared components is taken on trust.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import combinations

import monomial_ideals
from errors import (CoprimalityError, DecompositionError, ImproperIdealError, ModuleError,
                    RingMismatchError)
from ideal_engine import (Ideal, contains, dimension, ideal_colon, ideal_contains_ideal,
                          ideal_intersection, ideal_product, ideal_quotient, ideal_sum,
                          ideals_equal, groebner_basis, is_comaximal, is_monomial_ideal, is_unit,
                          radical_membership, saturation, standard_monomial_count)
from poly_core import ring_of
from spectrum import (Certificate, CoheightAtMost, PrimeIdeal, coheight, height, min_elements,
                      primes_equal, z_contains)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimaryComponent:
    """A p-primary ideal Q with its prime p."""
    primary: Ideal
    prime: PrimeIdeal


@dataclass(frozen=True, eq=False)
class SubquotientHandle:
    """The submodule numerator/denominator of Γ/denominator."""

    numerator: Ideal
    denominator: Ideal

    def __post_init__(self):
        if not ideal_contains_ideal(self.numerator, self.denominator):
            raise ModuleError("denominator is not contained in numerator")

    @property
    def is_zero(self):
        return ideals_equal(self.numerator, self.denominator)

    @property
    def is_whole(self):
        return is_unit(self.numerator)


@dataclass(frozen=True, eq=False)
class CyclicModule:
    """Γ/I with an optional declared primary decomposition."""
    defining_ideal: Ideal
    decomposition: tuple = None
    name: str = None

    @property
    def ring(self):
        return self.defining_ideal.ring

    @property
    def declared(self):
        return self.decomposition is not None

    @cached_property
    def is_monomial(self):
        return is_monomial_ideal(self.defining_ideal)


def _exponents(I):
    return [next(iter(g.keys())) for g in groebner_basis(I)]


def _monomial_ideal(ring, exponents):
    return Ideal(ring, [ring.base.from_dict({m: 1}) for m in exponents])


def _monomial_prime(ring, variables):
    return PrimeIdeal(Ideal(ring, [ring.base.gens[i] for i in sorted(variables)]),
                      Certificate.MONOMIAL)


def make_module(ideal, decomposition=None, name=None):
    """Γ/I, checking that a declared decomposition intersects to I with the right radicals."""
    if is_unit(ideal):
        raise ImproperIdealError("the defining ideal must be proper")
    if decomposition is None:
        return CyclicModule(ideal, None, name)

    components = []
    for entry in decomposition:
        component = entry if isinstance(entry, PrimaryComponent) else PrimaryComponent(*entry)
        Q, p = component.primary, component.prime
        if Q.ring != ideal.ring or p.ring != ideal.ring:
            raise RingMismatchError("decomposition lives in a different ring")
        if not ideal_contains_ideal(p.ideal, Q):
            raise DecompositionError(f"{Q!r} is not contained in {p!r}")
        if not all(radical_membership(g, Q) for g in p.generators):
            raise DecompositionError(f"{p!r} is not the radical of {Q!r}")
        components.append(component)
    if not components:
        raise DecompositionError("a decomposition needs at least one component")
    meet = reduce(ideal_intersection, [c.primary for c in components])
    if not ideals_equal(meet, ideal):
        raise DecompositionError("the components do not intersect to the defining ideal")
    logger.info("primary-ness of declared components of %r is not verified", ideal)
    return CyclicModule(ideal, tuple(components), name)


def prime_module(p):
    """Γ/p with its one-component decomposition."""
    return make_module(p.ideal, [PrimaryComponent(p.ideal, p)])


def components(M):
    """Primary components: declared ones, or computed for a monomial defining ideal."""
    if M.declared:
        return list(M.decomposition)
    if not M.is_monomial:
        raise ModuleError("no declared decomposition and the defining ideal is not monomial")
    ring = M.ring
    return [PrimaryComponent(_monomial_ideal(ring, gens), _monomial_prime(ring, radical))
            for gens, radical in monomial_ideals.primary_components(_exponents(M.defining_ideal))]


def ass_module(M):
    """Associated primes: brute force over monomial colons, or the declared primes."""
    if M.declared:
        primes = []
        for c in M.decomposition:
            if not any(primes_equal(c.prime, p) for p in primes):
                primes.append(c.prime)
        return primes
    if not M.is_monomial:
        raise ModuleError("no declared decomposition and the defining ideal is not monomial")
    d = M.ring.dimension
    return [_monomial_prime(M.ring, s)
            for s in monomial_ideals.associated_primes(_exponents(M.defining_ideal), d)]


def min_supp(M):
    """Minimal primes of the support."""
    return min_elements(ass_module(M))


def torsion_radical(M, Z):
    """t_Z(M): the intersection of the components whose prime lies outside Z, over I."""
    outside = [c.primary for c in components(M) if not z_contains(Z, c.prime)]
    numerator = reduce(ideal_intersection, outside) if outside else Ideal.unit(M.ring)
    return SubquotientHandle(numerator, M.defining_ideal)


@dataclass(frozen=True)
class StratumRow:
    """Whether t_i(M) is nonzero and whether it is all of M."""
    index: int
    nonzero: bool
    whole: bool


@dataclass(frozen=True)
class StrataProfile:
    rows: tuple
    pure_stratum: int = None

    @property
    def is_mixed(self):
        return self.pure_stratum is None


def strata_profile(M):
    """Rows t_0, ..., t_d and the pure stratum, if any."""
    rows = []
    for i in range(M.ring.dimension + 1):
        handle = torsion_radical(M, CoheightAtMost(i))
        rows.append(StratumRow(i, not handle.is_zero, handle.is_whole))
    pure = None
    for i, row in enumerate(rows):
        if row.whole and (i == 0 or not rows[i - 1].nonzero):
            pure = i
            break
    return StrataProfile(tuple(rows), pure)


def p_component(M, p):
    """M(p): elements killed by a power of p."""
    return SubquotientHandle(saturation(M.defining_ideal, p.ideal), M.defining_ideal)


@dataclass(frozen=True)
class CRTDecomposition:
    """The p-components of M with their dimensions when M is finite-dimensional."""
    parts: tuple
    dimensions: tuple = None
    total: int = None


def crt_decompose(M):
    """M as the direct sum of its p-components over pairwise comaximal minimal primes."""
    # Minimal primes must be pairwise comaximal
    minimal = min_supp(M)
    for p, q in combinations(minimal, 2):
        if not is_comaximal(p.ideal, q.ideal):
            raise CoprimalityError(f"{p!r} and {q!r} are not comaximal")
    if len(ass_module(M)) != len(minimal):
        logger.warning("embedded associated primes of %r are absorbed by the components",
                       M.defining_ideal)

    I = M.defining_ideal
    # One p-component per minimal prime; check directness and spanning
    parts = [(p, p_component(M, p)) for p in minimal]
    numerators = [h.numerator for _, h in parts]
    for k, numerator in enumerate(numerators):
        others = numerators[:k] + numerators[k + 1:]
        if others and not ideals_equal(ideal_intersection(numerator, reduce(ideal_intersection, others)), I):
            raise DecompositionError("the components do not form a direct sum")
    if not is_unit(reduce(ideal_sum, numerators)):
        raise DecompositionError("the components do not span the module")

    # Dimensions only exist when M is finite-dimensional
    total = standard_monomial_count(I)
    dims = None
    if total is not None:
        dims = tuple(total - standard_monomial_count(n) for n in numerators)
        if sum(dims) != total:
            raise DecompositionError(f"component dimensions {dims} do not add up to {total}")
    return CRTDecomposition(tuple(parts), dims, total)


def hom_cyclic_is_zero(I, J):
    """Hom(Γ/I, Γ/J) = (J : I)/J vanishes."""
    return ideals_equal(ideal_colon(J, I), J)


def hom_vanishes_both_ways(I, J):
    """Hom vanishes from Γ/I to Γ/J and back."""
    return hom_cyclic_is_zero(I, J) and hom_cyclic_is_zero(J, I)


def is_regular_sequence(seq):
    """Each element is a non-zero-divisor modulo the previous ones, and the ideal is proper."""
    if not seq:
        return True
    ring = ring_of(seq[0])
    if is_unit(Ideal(ring, seq)):
        return False
    for k, f in enumerate(seq):
        if not f:
            return False
        prefix = Ideal(ring, seq[:k])
        if not ideals_equal(ideal_quotient(prefix, f), prefix):
            return False
    return True


def annihilator(M, x):
    """(I : x), the unit ideal for x = 0."""
    if not x:
        return Ideal.unit(M.ring)
    return ideal_quotient(M.defining_ideal, x)


def element_module(M, x):
    """The cyclic submodule Γx ≅ Γ/(I : x), decomposed by the colons (Q_j : x), or None when x is zero in M."""
    if contains(M.defining_ideal, x):
        return None
    kept = [PrimaryComponent(ideal_quotient(c.primary, x), c.prime)
            for c in components(M) if not contains(c.primary, x)]
    return make_module(annihilator(M, x), kept)


def is_torsion_by_dimension(M, x, i):
    """Every prime over (I : x) has coheight at most i."""
    return dimension(annihilator(M, x)) <= i


def is_torsion_by_components(M, x, Z):
    """x lies in the numerator of t_Z(M)."""
    return contains(torsion_radical(M, Z).numerator, x)


def is_killed_by_prime_powers(M, x, Z):
    """Some product of powers of the component primes lying in Z kills x."""
    primes = [c.prime.ideal for c in components(M) if z_contains(Z, c.prime)]
    if not primes:
        return contains(M.defining_ideal, x)
    J = reduce(ideal_product, primes)
    return contains(saturation(M.defining_ideal, J), x)


def quotient_module(M, handle):
    """M / (numerator/I) presented as Γ/numerator, or None when it is zero."""
    if handle.is_whole:
        return None
    numerator = handle.numerator
    if not M.declared:
        return make_module(numerator)
    kept = [c for c in M.decomposition if ideal_contains_ideal(c.primary, numerator)]
    return make_module(numerator, kept)


def regular_sequence_stratum(M):
    """Stratum i and the length of the variable regular sequence in an associated prime."""
    primes = ass_module(M)
    if any(p.certificate is not Certificate.MONOMIAL for p in primes):
        raise ModuleError("associated primes must be generated by variables")
    strata = {coheight(p) for p in primes}
    if len(strata) != 1:
        raise ModuleError("associated primes have different coheights")
    stratum = strata.pop()
    p = primes[0]
    variables = list(p.generators)
    if not is_regular_sequence(variables):
        raise ModuleError(f"variables of {p!r} do not form a regular sequence")
    if len(variables) != height(p) or len(variables) != M.ring.dimension - stratum:
        raise ModuleError("regular sequence length differs from the height")
    return stratum, len(variables)
