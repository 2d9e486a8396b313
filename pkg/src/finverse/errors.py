"""Exception types shared across the library."""


class FinverseError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(FinverseError):
    """Malformed input data: bad JSON schema, ragged tables, out-of-range indices."""


class ParseError(FinverseError):
    """Malformed textual input (words, element literals)."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownLetter(ParseError):
    """A letter name that does not occur in the ambient generator set."""


class TermSyntaxError(ParseError):
    """Syntax error while parsing an enriched term."""


class NotAssociative(FinverseError):
    """A multiplication table fails associativity; the message names a witness triple."""


class NoIdentity(FinverseError):
    """Index 0 is not a two-sided identity of the table."""


class NoInverse(FinverseError):
    """Some element has no inverse; the message names the element."""


class GeneratorsDoNotGenerate(FinverseError):
    """The generator images do not generate the whole structure."""


class NotAPermutation(FinverseError):
    """A generator image is not a bijection of the stated point set."""


class WrongFlavor(FinverseError):
    """Operation applied to a subgraph family of the wrong flavor."""


class TooLarge(FinverseError):
    """An enumeration would exceed the configured size cap."""

    def __init__(self, predicted: int, cap: int):
        super().__init__(f"predicted enumeration size {predicted} exceeds cap {cap}")
        self.predicted = predicted
        self.cap = cap


class NotConnected(FinverseError):
    """The subgraph is not connected."""


class VertexAbsent(FinverseError):
    """A required vertex is missing from the subgraph."""


class UndefinedAction(FinverseError):
    """A partial map was applied outside its domain (the premorphism is invalid)."""


class InvalidMonoid(FinverseError):
    """A table fails one of the inverse-monoid axioms; the message names the axiom."""


class NotEUnitary(FinverseError):
    """The monoid is not E-unitary."""


class NotFInverse(FinverseError):
    """The monoid is not F-inverse (some sigma-class has no maximum)."""


class NotInvariant(FinverseError):
    """The operator does not commute with the partial group action."""


class NotDualClosure(FinverseError):
    """The map is not a dual-closure (interior) operator."""


class NuNotCanonical(FinverseError):
    """The supplied group map is not a canonical morphism onto the sigma-quotient."""


class WellDefinednessFailure(FinverseError):
    """Two spanning paths of one element evaluated differently in the target."""


class FactorizationFailure(FinverseError):
    """A morphism does not factor through the closure quotient."""
