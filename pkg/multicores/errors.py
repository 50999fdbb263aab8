"""Exceptions raised by the multicores library.

Every precondition failure derives from MulticoreError so the CLI can turn it into a
one-line message and exit code 1.
"""


class MulticoreError(ValueError):
    """Base class for violated preconditions."""


class DomainError(MulticoreError):
    """Argument outside the range where the formula is defined."""


class NotCoprimeError(MulticoreError):
    def __init__(self, values, divisor: int):
        self.values = tuple(values)
        self.divisor = divisor
        super().__init__(
            f"{self.values} are not coprime (common divisor {divisor}); "
            f"the (s,t) counts require gcd(s,t) = 1"
        )


class InfinitePosetError(MulticoreError):
    def __init__(self, generators, divisor: int):
        self.generators = tuple(generators)
        self.divisor = divisor
        super().__init__(
            f"P_S for S={self.generators} is infinite: every generator is divisible by {divisor} "
            f"(P_S is finite if and only if the elements of S are relatively prime)"
        )


class NotACoreError(MulticoreError):
    def __init__(self, parts, divisor: int, hook: int):
        self.parts = tuple(parts)
        self.divisor = divisor
        self.hook = hook
        super().__init__(
            f"partition {self.parts} is not a {divisor}-core: hook length {hook} is divisible by {divisor}"
        )


class NotAnIdealError(MulticoreError):
    def __init__(self, subset, element: int, missing: int | None):
        self.subset = tuple(sorted(subset))
        self.element = element
        self.missing = missing
        if missing is None:
            message = f"{self.subset} is not a lower ideal: {element} is not a gap of the poset"
        else:
            message = (f"{self.subset} is not a lower ideal: it contains {element} but not {missing}, "
                       f"which lies below it")
        super().__init__(message)


class CapExceededError(MulticoreError):
    def __init__(self, what: str, cap: int):
        self.what = what
        self.cap = cap
        super().__init__(f"more than {cap} {what}; raise --max-items to enumerate them")


class NonExactDivisionError(MulticoreError, ArithmeticError):
    """A division that must be exact left a remainder."""


class FormulaViolation(MulticoreError, ArithmeticError):
    """A closed formula produced a value its statement rules out."""


class LabelingError(AssertionError):
    """The generalized-path labeling produced a set that is not a lower ideal."""
