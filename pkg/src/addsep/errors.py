"""Exception hierarchy.

Everything raised on bad input derives from :class:`AddSepError` so the CLI
can map it to exit code 1 in one place.
"""


class AddSepError(Exception):
    """Base class for all library errors."""


class ParseError(AddSepError, ValueError):
    """A document does not conform to its schema."""


class DuplicatePoint(ParseError):
    def __init__(self, first: int, second: int, point=None):
        self.first = first
        self.second = second
        self.point = point
        super().__init__(f"duplicate point at indices {first} and {second}: {point!r}")


class ArityMismatch(ParseError):
    def __init__(self, index: int, expected: int, got: int):
        self.index = index
        self.expected = expected
        self.got = got
        super().__init__(f"point {index} has {got} coordinates, expected {expected}")


class EmptySet(ParseError):
    def __init__(self):
        super().__init__("point list is empty")


class DomainError(AddSepError, KeyError):
    """A point or symbol is outside the domain of a table."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class DimensionError(AddSepError, ValueError):
    pass


class ZeroVector(AddSepError, ValueError):
    pass


class UnsupportedArity(AddSepError, ValueError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"link structure is only defined here for n in (2, 3), got n={n}")


class PreconditionViolated(AddSepError, ValueError):
    pass


class ResourceLimit(AddSepError, RuntimeError):
    """Path enumeration exceeded its cutoff; no answer is returned."""
