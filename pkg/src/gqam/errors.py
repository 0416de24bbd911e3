"""Exception hierarchy. Every library error is a ``ValueError`` subclass."""


class GqamError(ValueError):
    """Base class for all errors raised by the library."""


class MalformedSpec(GqamError):
    """A function spec document could not be parsed."""


class InvariantViolation(GqamError):
    """A constructed object breaks one of its structural invariants."""


class OutOfDomain(GqamError):
    """An argument lies outside the interval a function is defined on."""


class EmptyVector(GqamError):
    pass


class WeightViolation(GqamError):
    """Negative weight, or weights summing to zero."""


class LengthMismatch(GqamError):
    pass


class BadArity(GqamError):
    pass


class DomainMismatch(GqamError):
    """Two generators compared on different intervals."""


class NotAWitness(GqamError):
    """A claimed counterexample triple failed exact verification."""


class BadParameters(GqamError):
    pass
