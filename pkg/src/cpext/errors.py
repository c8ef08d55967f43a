"""Exceptions raised by cpext."""


class LatticeError(Exception):
    pass


class NotALattice(LatticeError):
    def __init__(self, a, b, what="bound"):
        self.pair = (a, b)
        super().__init__(f"elements {a} and {b} have no unique {what}")


class CyclicCovers(LatticeError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(f"cover relation is cyclic: {a} <= {b} <= {a}")


class SizeLimitExceeded(LatticeError):
    def __init__(self, what, size, cap):
        self.what, self.size, self.cap = what, size, cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class NotDistributive(LatticeError):
    pass


class NotBoolean(LatticeError):
    pass


class TrivialLattice(LatticeError):
    pass


class NotAFilter(LatticeError):
    pass


class NotAnIdeal(LatticeError):
    pass


class NotIsomorphism(LatticeError):
    pass


class NotAnEmbedding(LatticeError):
    pass


class FilterTooSmall(LatticeError):
    pass


class UnknownName(LatticeError):
    pass


class FormatError(LatticeError):
    pass
