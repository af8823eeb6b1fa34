"""Lattice specifications and their structural constants.

A lattice is either a q-lattice x(s) = c1*q^{-s} + c2*q^s + c3 (q != 1)
or a quadratic one x(s) = c4*s^2 + c5*s + c6.  Everything downstream is
rational in p = q^{1/2} and in the product m = c1*c2, so those are what
we store: no root extraction ever happens in the core.
"""

from dataclasses import dataclass
from fractions import Fraction

from .rationals import format_rational, parse_rational

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class QLattice:
    """q-lattice parametrized by p = q^{1/2}, c3, and m = c1*c2."""

    p: Fraction
    c3: Fraction
    m: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "c3", Fraction(self.c3))
        object.__setattr__(self, "m", Fraction(self.m))
        if self.p <= 0:
            raise ValueError("q-lattice requires p > 0")
        if self.p == 1:
            raise ValueError("q-lattice requires p != 1 (q != 1)")

    @property
    def q(self) -> Fraction:
        return self.p * self.p

    @property
    def is_q_quadratic(self) -> bool:
        return self.m != 0


@dataclass(frozen=True)
class Quadratic:
    """Quadratic (c4 != 0) or linear (c4 = 0) lattice c4*s^2 + c5*s + c6."""

    c4: Fraction
    c5: Fraction
    c6: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c4", Fraction(self.c4))
        object.__setattr__(self, "c5", Fraction(self.c5))
        object.__setattr__(self, "c6", Fraction(self.c6))
        # (c4, c5) = (0, 0) would make x(s) constant and the divided
        # difference 0/0; rejected rather than given a limit meaning.
        if self.c4 == 0 and self.c5 == 0:
            raise ValueError("degenerate constant lattice: (c4, c5) = (0, 0)")

    @property
    def is_quadratic(self) -> bool:
        return self.c4 != 0


# Either variant.
LatticeSpec = QLattice | Quadratic


def alpha_of(L: LatticeSpec) -> Fraction:
    if isinstance(L, QLattice):
        return (L.p + 1 / L.p) * HALF
    return Fraction(1)


def beta_of(L: LatticeSpec) -> Fraction:
    if isinstance(L, QLattice):
        return (1 - alpha_of(L)) * L.c3
    return L.c4 / 4


@dataclass(frozen=True)
class LatticeConstants:
    """alpha, beta, delta and the fundamental polynomials U1, U2."""

    alpha: Fraction
    beta: Fraction
    delta: Fraction
    u1: "Poly"
    u2: "Poly"


def constants(L: LatticeSpec) -> LatticeConstants:
    """Structural constants of the lattice.

    For a q-lattice: alpha = (p + 1/p)/2, beta = (1-alpha)c3,
    delta = (alpha^2-1)(c3^2 - 4m), U1 = (alpha^2-1)(z - c3),
    U2 = (alpha^2-1)((z - c3)^2 - 4m).  For a quadratic lattice:
    alpha = 1, beta = c4/4, delta = c5^2/4 - c4 c6, U1 = c4/2,
    U2 = c4(z - c6) + c5^2/4.
    """
    from .polyops import Poly

    a = alpha_of(L)
    b = beta_of(L)
    if isinstance(L, QLattice):
        a2m1 = a * a - 1
        delta = a2m1 * (L.c3 * L.c3 - 4 * L.m)
        u1 = Poly((-a2m1 * L.c3, a2m1))
        zc = Poly((-L.c3, Fraction(1)))
        u2 = a2m1 * (zc * zc - Poly((4 * L.m,)))
    else:
        delta = L.c5 * L.c5 / 4 - L.c4 * L.c6
        u1 = Poly((L.c4 * HALF,))
        u2 = Poly((L.c4 * (-L.c6) + L.c5 * L.c5 / 4, L.c4))
    return LatticeConstants(alpha=a, beta=b, delta=delta, u1=u1, u2=u2)


class LatticeSequences:
    """The sequences alpha_n, beta_n, gamma_n for -1 <= n <= N.

    q-lattice closed forms: alpha_n = (p^n + p^-n)/2 and
    gamma_n = (p^n - p^-n)/(p - 1/p); beta_n is generated by its
    recurrence beta_{n+1} = 2 beta_n - beta_{n-1} + 2 beta alpha_n
    (the closed form contains q^{1/4} and is never used).
    Quadratic lattice: alpha_n = 1, beta_n = beta n^2, gamma_n = n.
    Conventions alpha_{-1} = alpha and gamma_{-1} = -1 are exposed.
    """

    def __init__(self, L: LatticeSpec, N: int):
        if N < 0:
            raise ValueError("N must be >= 0")
        self.lattice = L
        self.N = N
        a = alpha_of(L)
        b = beta_of(L)
        if isinstance(L, QLattice):
            p = L.p
            pn = Fraction(1)
            alphas, gammas = [], []
            for _ in range(N + 1):
                alphas.append((pn + 1 / pn) * HALF)
                gammas.append((pn - 1 / pn) / (p - 1 / p))
                pn *= p
        else:
            alphas = [Fraction(1)] * (N + 1)
            gammas = [Fraction(n) for n in range(N + 1)]
        betas = [Fraction(0), b]
        for n in range(1, N):
            betas.append(2 * betas[n] - betas[n - 1] + 2 * b * alphas[n])
        self._alphas = alphas
        self._betas = betas[: N + 1]
        self._gammas = gammas
        self._alpha = a

    def alpha(self, n: int) -> Fraction:
        if n == -1:
            return self._alpha
        return self._alphas[n]

    def beta(self, n: int) -> Fraction:
        return self._betas[n]

    def gamma(self, n: int) -> Fraction:
        if n == -1:
            return Fraction(-1)
        return self._gammas[n]

    def gamma_factorial(self, n: int) -> Fraction:
        """gamma_n! := gamma_1 * ... * gamma_n, with gamma_0! = 1."""
        out = Fraction(1)
        for j in range(1, n + 1):
            out *= self.gamma(j)
        return out


def sequences(L: LatticeSpec, N: int) -> LatticeSequences:
    return LatticeSequences(L, N)


def lattice_to_config(L: LatticeSpec) -> dict:
    """Serializable config record with rational-string fields."""
    if isinstance(L, QLattice):
        return {
            "type": "q",
            "p": format_rational(L.p),
            "c3": format_rational(L.c3),
            "m": format_rational(L.m),
        }
    return {
        "type": "quadratic",
        "c4": format_rational(L.c4),
        "c5": format_rational(L.c5),
        "c6": format_rational(L.c6),
    }


def lattice_from_config(cfg: dict) -> LatticeSpec:
    kind = cfg.get("type")
    if kind == "q":
        return QLattice(
            p=parse_rational(cfg["p"]),
            c3=parse_rational(cfg["c3"]),
            m=parse_rational(cfg["m"]),
        )
    if kind == "quadratic":
        return Quadratic(
            c4=parse_rational(cfg["c4"]),
            c5=parse_rational(cfg["c5"]),
            c6=parse_rational(cfg["c6"]),
        )
    raise ValueError(f"unknown lattice type: {kind!r}")
