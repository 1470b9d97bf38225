"""Exception hierarchy shared by the algebra engines and the session runner."""


class AlgebraError(Exception):
    """Base class for every domain error raised by the scripts."""


class RingError(AlgebraError):
    """Invalid ring declaration (empty, repeated or malformed variable names)."""


class RingMismatchError(AlgebraError):
    """Operands live in different polynomial rings."""


class UnknownOrderError(AlgebraError):
    """A monomial order name that is not lex, grevlex or elim:k."""


class UnknownVariableError(AlgebraError):
    """A substitution mentions a variable the ring does not have."""


class PolynomialSyntaxError(AlgebraError):
    """Text that is not a polynomial over the declared ring."""


class ZeroPolynomialError(AlgebraError):
    """An operation that needs a nonzero polynomial received zero."""


class ImproperIdealError(AlgebraError):
    """The unit ideal was given where a proper ideal is required."""


class CertificateError(AlgebraError):
    """A primality certificate does not match the generators."""


class SpecSubsetError(AlgebraError):
    """An up-closure was built from primes that are not an antichain."""


class DecompositionError(AlgebraError):
    """A declared or computed primary decomposition fails its checks."""


class ModuleError(AlgebraError):
    """The module presentation does not support the requested computation."""


class CoprimalityError(AlgebraError):
    """Minimal primes are not pairwise comaximal."""


class MixedCoheightError(AlgebraError):
    """Chain search candidates do not share the start prime's coheight."""


class GeneratorError(AlgebraError):
    """Invalid Harish-Chandra generator data."""


class SessionSyntaxError(AlgebraError):
    """A session line does not match the grammar."""

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: parse error: {message}")
        self.lineno = lineno


class SessionError(AlgebraError):
    """A well-formed session statement that cannot be executed."""
