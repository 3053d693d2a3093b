"""Exception hierarchy shared by every module of the package."""


class TachyonError(Exception):
    """Base class for all errors raised by the package."""


class RegimeError(TachyonError, ValueError):
    """A velocity lies outside the regime an operation is defined for."""


class SingularVelocityError(RegimeError):
    """The transformation coefficients blow up (K V^2 = 1, a light-speed frame)."""


class ConstraintViolation(RegimeError):
    """Tachyon parameters violate w^2 - c^2 < (s.w)^2."""


class UndefinedHelicity(TachyonError, ValueError):
    """sgn(c^2 - w.V) is requested exactly at w.V = c^2."""


class EnumerationCapError(TachyonError):
    """Brute-force path enumeration would exceed the configured cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"lattice has {count} paths, enumeration cap is {cap}")
        self.count = count
        self.cap = cap
