"""Exact multivariate polynomials over QQ.

Polynomials are sympy sparse ``PolyElement`` values living in the grevlex
ring of a ``PolyRing``. Other monomial orders (lex, block elimination) are
separate sympy rings over the same variables, built on demand and cached.
"""
import keyword
import logging
import re
from dataclasses import dataclass
from functools import lru_cache

from sympy import QQ, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.orderings import MonomialOrder, grevlex, lex
from sympy.polys.rings import PolyElement
from sympy.polys.rings import PolyRing as SparseRing

from errors import (PolynomialSyntaxError, RingError, RingMismatchError,
                    UnknownOrderError, UnknownVariableError, ZeroPolynomialError)

logger = logging.getLogger(__name__)

DEFAULT_ORDER = "grevlex"
AUX_VARIABLE = "_w"

_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<number>\d+)|(?P<op>\*\*|[-+*/^()]))")
_ELIMINATION = re.compile(r"^elim(?:ination-block)?[:(]\s*(\d+)\s*\)?$")


class BlockEliminationOrder(MonomialOrder):
    """Grevlex on the first ``block`` variables, ties broken by grevlex on the rest."""

    alias = "elim"
    is_global = True

    def __init__(self, block):
        self.block = block

    def __call__(self, monomial):
        return (grevlex(monomial[:self.block]), grevlex(monomial[self.block:]))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.block})"

    def __str__(self):
        return f"elim({self.block})"

    def __eq__(self, other):
        return isinstance(other, BlockEliminationOrder) and other.block == self.block

    def __hash__(self):
        return hash((self.alias, self.block))


def monomial_order(kind=DEFAULT_ORDER):
    """Resolve ``"lex"``, ``"grevlex"`` or ``"elim:k"`` into an order object."""
    if isinstance(kind, MonomialOrder):
        return kind
    text = str(kind).strip().lower()
    if text == "lex":
        return lex
    if text == "grevlex":
        return grevlex
    match = _ELIMINATION.match(text)
    if match:
        return BlockEliminationOrder(int(match.group(1)))
    raise UnknownOrderError(f"unknown monomial order '{kind}'")


@lru_cache(maxsize=None)
def _sparse_ring(variables, order):
    # sympy builds monomial code per ring, so each (variables, order) is made once
    logger.debug("building sparse ring %s under %s", ",".join(variables), order)
    return SparseRing([Symbol(name) for name in variables], QQ, order)


@dataclass(frozen=True)
class PolyRing:
    """K[v1, ..., vd] with the variables in declaration order."""

    variables: tuple

    def __post_init__(self):
        if not self.variables:
            raise RingError("a ring needs at least one variable")
        for name in self.variables:
            if not _NAME.match(name) or keyword.iskeyword(name):
                raise RingError(f"invalid variable name '{name}'")
        if len(set(self.variables)) != len(self.variables):
            raise RingError(f"repeated variable in {', '.join(self.variables)}")

    @property
    def dimension(self):
        return len(self.variables)

    @property
    def base(self):
        """The grevlex sympy ring every Poly of this ring lives in."""
        return _sparse_ring(self.variables, grevlex)

    def ordered(self, order=DEFAULT_ORDER):
        return _sparse_ring(self.variables, monomial_order(order))

    def aux_ring(self, order):
        """Ring with ``AUX_VARIABLE`` prepended, used for elimination tricks."""
        return _sparse_ring((AUX_VARIABLE,) + self.variables, monomial_order(order))

    @property
    def zero(self):
        return self.base.zero

    @property
    def one(self):
        return self.base.one

    def gen(self, name):
        try:
            return self.base.gens[self.variables.index(name)]
        except ValueError:
            raise UnknownVariableError(f"'{name}' is not a variable of {self}") from None

    def constant(self, value):
        return self.base.ground_new(QQ.convert(value))

    def owns(self, f):
        return isinstance(f, PolyElement) and f.ring == self.base

    def parse(self, text):
        """Parse polynomial text written with the ring variables, integers and + - * / ^ ( )."""
        source = text.strip()
        if not source:
            raise PolynomialSyntaxError("empty polynomial")
        position = 0
        while position < len(source):
            match = _TOKEN.match(source, position)
            if match is None or match.end() == position:
                raise PolynomialSyntaxError(f"unexpected character in '{text}' at {position}")
            name = match.group("name")
            if name is not None and name not in self.variables:
                raise PolynomialSyntaxError(f"unknown variable '{name}' in '{text}'")
            position = match.end()

        symbols = {name: Symbol(name) for name in self.variables}
        try:
            expr = parse_expr(source, local_dict=symbols,
                              transformations=standard_transformations + (convert_xor,))
            return self.base.from_expr(expr)
        except Exception as e:
            # sympy reports malformed input through many exception types
            raise PolynomialSyntaxError(f"not a polynomial over {self}: '{text}' ({e})") from None

    def to_ordered(self, f, order):
        return self.ordered(order).from_dict(dict(f))

    def from_ordered(self, f):
        return self.base.from_dict(dict(f))

    def embed(self, f, order):
        """Image of ``f`` in ``aux_ring(order)`` (zero exponent on the auxiliary variable)."""
        return self.aux_ring(order).from_dict({(0,) + monom: coeff for monom, coeff in f.items()})

    def project(self, f):
        """Inverse of ``embed`` on polynomials free of the auxiliary variable."""
        if any(monom[0] for monom in f.keys()):
            raise ValueError("polynomial still involves the auxiliary variable")
        return self.base.from_dict({monom[1:]: coeff for monom, coeff in f.items()})

    def __str__(self):
        return f"QQ[{','.join(self.variables)}]"


@lru_cache(maxsize=None)
def poly_ring(variables):
    """Validated ring over QQ in the given variables."""
    if isinstance(variables, str):
        variables = tuple(name.strip() for name in variables.split(",") if name.strip())
    return PolyRing(tuple(variables))


def ring_of(f):
    """The PolyRing a polynomial belongs to."""
    return poly_ring(tuple(str(symbol) for symbol in f.ring.symbols))


def same_ring(*polys):
    """Raise RingMismatchError unless all polynomials share a ring."""
    rings = {f.ring for f in polys}
    if len(rings) > 1:
        raise RingMismatchError("operands belong to different polynomial rings")


def poly_mul(f, g):
    """Product of two polynomials of the same ring."""
    same_ring(f, g)
    return f * g


def apply_shift(f, substitutions):
    """Image of ``f`` under the endomorphism sending each named variable to a polynomial.

    Keys are variable names; variables not mentioned are fixed.
    """
    ring = ring_of(f)
    replacements = []
    for name, image in substitutions.items():
        if name not in ring.variables:
            raise UnknownVariableError(f"'{name}' is not a variable of {ring}")
        if isinstance(image, str):
            image = ring.parse(image)
        elif not isinstance(image, PolyElement):
            image = ring.constant(image)
        same_ring(f, image)
        replacements.append((ring.gen(name), image))
    if not replacements:
        return f.copy()
    return f.compose(replacements)


def leading_term(f, order=DEFAULT_ORDER):
    """Order-maximal monomial of ``f`` and its coefficient."""
    if not f:
        raise ZeroPolynomialError("the zero polynomial has no leading term")
    key = monomial_order(order)
    monom = max(f.keys(), key=key)
    return monom, f[monom]


def total_degree(f):
    """Largest total degree of a term; -1 for zero."""
    if not f:
        return -1
    return max(sum(monom) for monom in f.keys())


def _format_coefficient(coeff):
    numerator, denominator = int(coeff.numerator), int(coeff.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def _format_monomial(monom, variables):
    factors = []
    for name, exp in zip(variables, monom):
        if exp == 1:
            factors.append(name)
        elif exp > 1:
            factors.append(f"{name}^{exp}")
    return "*".join(factors)


def format_poly(f):
    """Canonical text: grevlex-descending terms, reduced a/b coefficients, ^ for powers."""
    if not f:
        return "0"
    variables = tuple(str(symbol) for symbol in f.ring.symbols)
    pieces = []
    for monom, coeff in f.terms(grevlex):
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        monomial = _format_monomial(monom, variables)
        if not monomial:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{_format_coefficient(magnitude)}*{monomial}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)
