"""Preset Pearson pairs for the Racah and Askey-Wilson families.

Each bundle carries the lattice, the Pearson pair, and closed-form
evaluators for the recurrence coefficients, used as cross-check
oracles against the theorem-path computation.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .classical import PearsonPair
from .lattice import LatticeSpec, QLattice, Quadratic


@dataclass(frozen=True)
class RacahParams:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def is_regular(self) -> bool:
        """Regularity set: {a,c,d,d+c-1,b+c,c+d-a,d-b} avoids Z^-."""
        a, b, c, d = self.a, self.b, self.c, self.d
        values = (a, c, d, d + c - 1, b + c, c + d - a, d - b)
        return not any(v.denominator == 1 and v < 0 for v in values)


@dataclass(frozen=True)
class AWParams:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    p: Fraction  # q^{1/2}
    r: Fraction  # sqrt(c1*c2)
    c3: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "p", "r", "c3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.p <= 0 or self.p == 1:
            raise ValueError("AWParams requires p > 0 and p != 1")

    @property
    def q(self) -> Fraction:
        return self.p * self.p


@dataclass(frozen=True)
class FamilyBundle:
    lattice: LatticeSpec
    pair: PearsonPair
    closed_B: Callable[[int], Fraction] = field(compare=False)
    closed_C: Callable[[int], Fraction] = field(compare=False)


def racah_bundle(params: RacahParams) -> FamilyBundle:
    """Racah preset on the quadratic lattice x(s) = s(s + a + b + 1)."""
    a, b, c, d = params.a, params.b, params.c, params.d
    lattice = Quadratic(c4=Fraction(1), c5=a + b + 1, c6=Fraction(0))
    pair = PearsonPair(
        a=Fraction(2),
        b=(a + b + 2 * c + 3) * d + c * (a - b + 3) + 2 * (a + b + a * b + 2),
        c=(1 + a) * (1 + d) * (a + b + 1) * (b + c + 1),
        d=2 * (d + c + 2),
        e=2 * (1 + a) * (1 + d) * (b + c + 1),
    )

    def closed_B(n: int) -> Fraction:
        first = (
            (n + a + 1) * (n + d + 1) * (n + b + c + 1) * (n + d + c + 1)
        ) / ((2 * n + d + c + 1) * (2 * n + d + c + 2))
        second = (
            n * (n + c) * (n + d + c - a) * (n + d - b)
        ) / ((2 * n + d + c) * (2 * n + d + c + 1))
        return -first - second

    def closed_C(n: int) -> Fraction:
        # printed formula gives C_{m+1}; shift to C_n
        m = n - 1
        num = (
            (m + 1)
            * (m + a + 1)
            * (m + c + 1)
            * (m + d + 1)
            * (m + d + c + 1)
            * (m + b + c + 1)
            * (m + c + d - a + 1)
            * (m + d - b + 1)
        )
        den = (
            (2 * m + d + c + 1)
            * (2 * m + d + c + 2) ** 2
            * (2 * m + d + c + 3)
        )
        return num / den

    return FamilyBundle(lattice=lattice, pair=pair,
                        closed_B=closed_B, closed_C=closed_C)


def aw_bundle(params: AWParams) -> FamilyBundle:
    """Askey-Wilson preset on the q-quadratic lattice with m = r^2."""
    a, b, c, d = params.a, params.b, params.c, params.d
    p, r, c3 = params.p, params.r, params.c3
    q = params.q
    lattice = QLattice(p=p, c3=c3, m=r * r)
    abcd = a * b * c * d
    e3 = a * b * c + a * b * d + a * c * d + b * c * d
    e2 = a * b + a * c + a * d + b * c + b * d + c * d
    e1 = a + b + c + d
    # phi and psi expanded around z - c3
    phi_a = 2 * (1 + abcd)
    phi_b = -2 * r * (e1 + e3)
    phi_c = 4 * r * r * (e2 - abcd - 1)
    psi_d = 4 * p / (q - 1) * (abcd - 1)
    psi_e = 4 * p / (q - 1) * r * (e1 - e3)
    pair = PearsonPair(
        a=phi_a,
        b=phi_b - 2 * phi_a * c3,
        c=phi_a * c3 * c3 - phi_b * c3 + phi_c,
        d=psi_d,
        e=psi_e - psi_d * c3,
    )

    def closed_B(n: int) -> Fraction:
        if a == 0:
            raise ValueError(
                "closed-form B_n needs a != 0 (use the theorem path)"
            )
        qn = q ** n
        bracket = (
            a
            + 1 / a
            - (1 - a * b * qn) * (1 - a * c * qn) * (1 - a * d * qn)
            * (1 - abcd * qn / q)
            / (a * (1 - abcd * qn * qn / q) * (1 - abcd * qn * qn))
            - a * (1 - qn) * (1 - b * c * qn / q) * (1 - b * d * qn / q)
            * (1 - c * d * qn / q)
            / ((1 - abcd * qn * qn / q) * (1 - abcd * qn * qn / (q * q)))
        )
        # prefactor sqrt(c1*c2), not 2*sqrt(c1*c2): forced by
        # B_0 = -e/d and confirmed against the moment/Gram oracle
        return c3 + r * bracket

    def closed_C(n: int) -> Fraction:
        m = n - 1
        qm = q ** m
        num = (
            r * r
            * (1 - q * qm)
            * (1 - abcd * qm / q)
            * (1 - a * b * qm)
            * (1 - a * c * qm)
            * (1 - a * d * qm)
            * (1 - b * c * qm)
            * (1 - b * d * qm)
            * (1 - c * d * qm)
        )
        den = (
            (1 - abcd * qm * qm / q)
            * (1 - abcd * qm * qm) ** 2
            * (1 - abcd * qm * qm * q)
        )
        return num / den

    return FamilyBundle(lattice=lattice, pair=pair,
                        closed_B=closed_B, closed_C=closed_C)
