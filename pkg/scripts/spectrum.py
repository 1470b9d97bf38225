"""Prime ideals with primality certificates, coheight and specialization-closed subsets."""
import logging
from dataclasses import dataclass
from enum import Enum

from errors import CertificateError, ImproperIdealError, RingMismatchError, SpecSubsetError
from ideal_engine import Ideal, contains, dimension, groebner_basis, ideals_equal, is_unit
from poly_core import total_degree

logger = logging.getLogger(__name__)


class Certificate(Enum):
    """How primality of a declared ideal is justified."""
    MONOMIAL = "monomial"
    LINEAR_MAXIMAL = "linear-maximal"
    PRINCIPAL_IRREDUCIBLE = "principal-irreducible"
    DECLARED = "declared"

    @classmethod
    def parse(cls, text):
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise CertificateError(f"unknown certificate '{text}'") from None


@dataclass(frozen=True, eq=False)
class PrimeIdeal:
    """An ideal together with its primality certificate."""
    ideal: Ideal
    certificate: Certificate
    name: str = None

    @property
    def ring(self):
        return self.ideal.ring

    @property
    def generators(self):
        return self.ideal.generators

    @property
    def trusted(self):
        """False when primality rests on the user's word."""
        return self.certificate in (Certificate.MONOMIAL, Certificate.LINEAR_MAXIMAL)

    def __repr__(self):
        label = f"{self.name}=" if self.name else ""
        return f"{label}{self.ideal!r}[{self.certificate.value}]"


def _check_monomial(ideal):
    for g in ideal.generators:
        if len(g) != 1 or total_degree(g) != 1:
            raise CertificateError(f"{ideal!r} is not generated by variables")


def _check_linear_maximal(ideal):
    ring = ideal.ring
    seen = set()
    for g in ideal.generators:
        linear = [m for m in g.keys() if sum(m) == 1]
        if len(linear) != 1 or any(sum(m) > 1 for m in g.keys()):
            raise CertificateError(f"{ideal!r}: generators must have the form t_i - c")
        seen.add(linear[0].index(1))
    if len(ideal.generators) != ring.dimension or len(seen) != ring.dimension:
        raise CertificateError(f"{ideal!r}: need one generator t_i - c per variable")
    if dimension(ideal) != 0:
        raise CertificateError(f"{ideal!r} is not maximal")


def make_prime(ideal, certificate, name=None):
    """Build a PrimeIdeal, verifying the certificate where it is decidable."""
    if isinstance(certificate, str):
        certificate = Certificate.parse(certificate)
    if is_unit(ideal):
        raise ImproperIdealError(f"{ideal!r} is the unit ideal")
    if certificate is Certificate.MONOMIAL:
        _check_monomial(ideal)
    elif certificate is Certificate.LINEAR_MAXIMAL:
        _check_linear_maximal(ideal)
    elif certificate is Certificate.PRINCIPAL_IRREDUCIBLE:
        if len(ideal.generators) != 1 or total_degree(ideal.generators[0]) < 1:
            raise CertificateError(f"{ideal!r} needs exactly one non-constant generator")
        logger.info("irreducibility of %r over the closure is assumed", ideal)
    else:
        logger.warning("primality of %r is declared, not verified", ideal)
    return PrimeIdeal(ideal, certificate, name)


def variable_prime(ring, names, name=None):
    """The prime generated by the named variables."""
    return make_prime(Ideal(ring, [ring.gen(v) for v in names]), Certificate.MONOMIAL, name)


def coheight(p):
    """Krull dimension of Γ/p."""
    if is_unit(p.ideal):
        raise ImproperIdealError(f"{p!r} is the unit ideal")
    return dimension(p.ideal)


def height(p):
    """Number of variables minus the coheight."""
    return p.ring.dimension - coheight(p)


def prime_contained_in(p, q):
    """p ⊆ q, decided generator by generator."""
    if p.ring != q.ring:
        raise RingMismatchError("primes belong to different rings")
    return all(contains(q.ideal, g) for g in p.generators)


def primes_equal(p, q):
    """Equality as ideals."""
    return ideals_equal(p.ideal, q.ideal)


def min_elements(family):
    """Inclusion-minimal members, first occurrence kept among equal primes."""
    kept = []
    for p in family:
        if any(primes_equal(p, k) for k in kept):
            continue
        if any(prime_contained_in(q, p) and not prime_contained_in(p, q) for q in family):
            continue
        kept.append(p)
    return kept


def canonical_generators(p):
    """Reduced grevlex Groebner basis of p."""
    return groebner_basis(p.ideal)


@dataclass(frozen=True)
class CoheightAtMost:
    """Z_i: primes of coheight at most i."""

    bound: int


@dataclass(frozen=True, eq=False)
class UpClosureOf:
    """Primes containing a member of a finite antichain."""

    antichain: tuple

    def __post_init__(self):
        for p in self.antichain:
            for q in self.antichain:
                if prime_contained_in(p, q) and not prime_contained_in(q, p):
                    raise SpecSubsetError(f"{p!r} and {q!r} are comparable")


def chain_subset(i):
    """Z_i: the primes of coheight at most i."""
    return CoheightAtMost(i)


def z_contains(Z, p):
    """Whether p belongs to the specialization-closed subset Z."""
    match Z:
        case CoheightAtMost(bound=bound):
            return coheight(p) <= bound
        case UpClosureOf(antichain=antichain):
            return any(prime_contained_in(a, p) for a in antichain)
    raise TypeError(f"not a specialization-closed subset: {Z!r}")
