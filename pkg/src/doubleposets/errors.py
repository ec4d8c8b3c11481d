"""Exception types shared across the package."""


class DoublePosetError(Exception):
    """Base class for all domain errors raised by this package."""


class CycleError(DoublePosetError):
    """The transitive closure of a relation contains a cycle."""


class SizeCapError(DoublePosetError):
    """An exact-enumeration routine was asked to exceed its size cap."""


class NotSpecialError(DoublePosetError):
    """Operation requires the second order to be total."""


class NotIncreasingError(DoublePosetError):
    """A supplied bijection is not increasing between the required orders."""


class InvalidPartitionError(DoublePosetError):
    """Parts are not a weakly decreasing sequence of positive integers."""


class NotAPartitionError(DoublePosetError):
    """Letter multiplicities of a word are not weakly decreasing."""


class NotLatticeError(DoublePosetError):
    """Word fails the lattice (prefix-dominance) condition."""


class LengthMismatchError(DoublePosetError):
    """Word length does not match the ground-set size."""


class SizeMismatchError(DoublePosetError):
    """Partition weight does not match the ground-set size."""


class PreconditionError(DoublePosetError):
    """Input violates a documented precondition."""


class EmptyError(DoublePosetError):
    """Operation is undefined on empty input."""


class ParseError(DoublePosetError):
    """Malformed text input.  Carries 1-based line and column positions."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
