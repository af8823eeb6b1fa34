"""Exceptions shared across the package.

Exceptions are reserved for contract violations (bad input, moment
underflow, inadmissible pairs).  Diagnostic outcomes such as a failed
regularity check are reported as data, not raised.
"""


class LatticeOpsError(Exception):
    """Base class for all package errors."""


class MomentLengthError(LatticeOpsError):
    """A functional was asked for more moments than it carries."""

    def __init__(self, needed: int, available: int):
        self.needed = needed
        self.available = available
        super().__init__(
            f"need moments up to index {needed}, only {available} available"
        )


class AdmissibilityError(LatticeOpsError):
    """d_n = 0 for some n: the Pearson pair is not x-admissible."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"pair is not x-admissible: d_{n} = 0")


class RegularityBreakError(LatticeOpsError):
    """The Gram orthogonalization hit a vanishing norm at index n."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"vanishing norm (P_{n}, P_{n}) = 0")


class RegularityError(LatticeOpsError):
    """A closed-form computation requires regularity that does not hold."""

    def __init__(self, n: int, kind: str):
        self.n = n
        self.kind = kind
        super().__init__(f"functional is not regular: {kind} at n = {n}")
