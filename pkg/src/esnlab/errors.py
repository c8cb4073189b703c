"""Exception types shared across the package."""


class EsnlabError(Exception):
    """Base class for every error this package raises on purpose."""


class ParseError(EsnlabError):
    """Malformed table, groupoid, or presheaf input."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotASemigroupError(EsnlabError):
    """Operation is not associative; carries the least violating triple."""

    def __init__(self, witness):
        super().__init__(f"not associative, witness (a,b,c) = {witness}")
        self.witness = witness


class NoInverseError(EsnlabError):
    def __init__(self, element):
        super().__init__(f"element {element} has no generalized inverse")
        self.element = element


class NonUniqueInverseError(EsnlabError):
    def __init__(self, element, first, second):
        super().__init__(
            f"element {element} has at least two generalized inverses: {first}, {second}"
        )
        self.element = element
        self.witnesses = (first, second)


class NotIdempotentError(EsnlabError):
    def __init__(self, element):
        super().__init__(f"element {element} is not idempotent")
        self.element = element


class OrderAxiomViolation(EsnlabError):
    """The candidate natural partial order failed reflexivity/antisymmetry/transitivity."""


class InvalidGroupoidError(EsnlabError):
    """An inductive-groupoid value failed validation; carries the report."""

    def __init__(self, report):
        super().__init__(f"invalid inductive groupoid: {report.summary()}")
        self.report = report


class NotDoubleInverseError(EsnlabError):
    def __init__(self, reason):
        super().__init__(f"not a double inverse semigroup: {reason}")
        self.reason = reason


class InvalidDigError(EsnlabError):
    def __init__(self, report):
        super().__init__(f"invalid double inductive groupoid: {report.summary()}")
        self.report = report


class InvalidPresheafError(EsnlabError):
    def __init__(self, report):
        super().__init__(f"invalid presheaf: {report.summary()}")
        self.report = report


class ComponentNotClosedError(EsnlabError):
    """A per-object cell component escaped its own compositions/meets/restrictions."""


class ComponentNotGroupError(EsnlabError):
    """A per-object cell component is not an Abelian group under its compositions."""


class OrderTooLargeError(EsnlabError):
    def __init__(self, n, cap):
        super().__init__(f"order {n} exceeds the search cap {cap}")
        self.n = n
        self.cap = cap


class TheoremViolation(EsnlabError):
    """A statement that must hold on every valid input failed; signals a bug, not bad data."""
