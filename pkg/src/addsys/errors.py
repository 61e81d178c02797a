"""Exception types raised across the package."""

from __future__ import annotations


class AddsysError(Exception):
    """Base class for every error raised by addsys."""


class DuplicateRepresentationError(AddsysError, ValueError):
    """Some integer below the bound has two representations in a proposed direct sum."""

    def __init__(self, n: int, rep1: tuple, rep2: tuple):
        self.n = n
        self.rep1 = rep1
        self.rep2 = rep2
        super().__init__(f"{n} has two representations: {rep1} and {rep2}")


class InvalidRadix(AddsysError, ValueError):
    pass


class InvalidSystem(AddsysError, ValueError):
    """A family of sets violates the structural rules of an additive system."""


class BoundTooSmall(AddsysError, ValueError):
    pass


class SingletonSystem(AddsysError, ValueError):
    pass


class NotAPartition(AddsysError, ValueError):
    pass


class LabelMismatch(AddsysError, ValueError):
    pass


class InsufficientSchedule(AddsysError, ValueError):
    pass


class Unsupported(AddsysError, ValueError):
    pass


class DigitOutOfRange(AddsysError, ValueError):
    def __init__(self, index: int, digit: int, radix: int):
        self.index = index
        self.digit = digit
        self.radix = radix
        super().__init__(f"digit x_{index} = {digit} is outside [0, {radix})")


class UnknownPreset(AddsysError, ValueError):
    pass


class DslSyntaxError(AddsysError, ValueError):
    def __init__(self, line: int, column: int, expected: str, found: str = ""):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        msg = f"line {line}, column {column}: expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg)


class DuplicateLabel(AddsysError, ValueError):
    pass


class NonZeroBase(AddsysError, ValueError):
    """A finite set literal does not contain 0."""


class BudgetExceeded(AddsysError):
    """A search ran out of its node or time budget; ``partial`` holds what was found."""

    def __init__(self, partial):
        self.partial = partial
        super().__init__(
            f"search budget exhausted after {partial.nodes_explored} nodes "
            f"({len(partial.witnesses)} witnesses so far)"
        )
