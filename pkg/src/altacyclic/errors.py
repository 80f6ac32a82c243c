"""Exception types raised across the package."""


class AltacyclicError(ValueError):
    pass


class NotAltAcyclic(AltacyclicError):
    pass


class NotLinearExtension(AltacyclicError):
    pass


class NotLmax(AltacyclicError):
    pass


class NotAscending(AltacyclicError):
    pass


class SizeOne(AltacyclicError):
    pass


class CapExceeded(AltacyclicError):
    pass


class OutOfRange(AltacyclicError):
    pass


class NonIntegral(AltacyclicError):
    pass


class NonDivisible(AltacyclicError):
    pass


class NotPrime(AltacyclicError):
    pass


class DomainViolation(AltacyclicError):
    pass


class OrderMismatch(AltacyclicError):
    pass


class ZeroTailViolation(AltacyclicError):
    pass


class OnHyperplane(AltacyclicError):
    def __init__(self, i: int, j: int):
        super().__init__(f"point lies on the hyperplane for pair ({i}, {j})")
        self.i = i
        self.j = j


class SeriesMismatch(AltacyclicError):
    pass
