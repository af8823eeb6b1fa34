"""Pearson pairs on a lattice: admissibility, iterated pairs, regularity
diagnostics, closed-form recurrence coefficients, and the functional
Rodrigues identity.

The central objects are d_n = (phi''/2) gamma_n + psi' alpha_n and
e_n (whose form depends on the lattice kind), the iterated coefficient
pairs (phi^[k], psi^[k]), and the derived functionals u^[k].
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import AdmissibilityError, MomentLengthError, RegularityError
from .lattice import (
    LatticeSpec,
    QLattice,
    Quadratic,
    alpha_of,
    beta_of,
    constants,
    sequences,
)
from .momentfun import MomentSeq, dual_dx, dual_sx, mul, pearson_moments
from .polyops import ONE, Poly, dx, sx
from .rationals import format_rational, parse_rational


@dataclass(frozen=True)
class PearsonPair:
    """Coefficients of phi(z) = a z^2 + b z + c and psi(z) = d z + e."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "e"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a == self.b == self.c == self.d == self.e == 0:
            raise ValueError("(phi, psi) must not both be zero")

    @property
    def phi(self) -> Poly:
        return Poly((self.c, self.b, self.a))

    @property
    def psi(self) -> Poly:
        return Poly((self.e, self.d))

    def to_config(self) -> dict:
        return {k: format_rational(getattr(self, k)) for k in "abcde"}

    @classmethod
    def from_config(cls, cfg: dict) -> "PearsonPair":
        return cls(*(parse_rational(cfg[k]) for k in "abcde"))


class DnEn:
    """The admissibility sequences d_n and e_n, defined for n >= -1.

    q-lattice: d_n = a gamma_n + d alpha_n,
               e_n = phi'(c3) gamma_n + psi(c3) alpha_n.
    Quadratic: d_n = a n + d, e_n = b n + e + 2 beta d n^2.
    The n = -1 values use gamma_{-1} = -1, alpha_{-1} = alpha.
    """

    def __init__(self, L: LatticeSpec, pair: PearsonPair):
        self.lattice = L
        self.pair = pair
        self._cache: dict = {}

    def _compute(self, n: int) -> tuple:
        L, pair = self.lattice, self.pair
        if isinstance(L, QLattice):
            pn = L.p ** n
            alpha_n = (pn + 1 / pn) / 2
            gamma_n = (pn - 1 / pn) / (L.p - 1 / L.p)
            dn = pair.a * gamma_n + pair.d * alpha_n
            en = pair.phi.deriv()(L.c3) * gamma_n + pair.psi(L.c3) * alpha_n
        else:
            beta = beta_of(L)
            dn = pair.a * n + pair.d
            en = pair.b * n + pair.e + 2 * beta * pair.d * n * n
        return dn, en

    def d(self, n: int) -> Fraction:
        if n < -1:
            raise IndexError("d_n is defined for n >= -1")
        if n not in self._cache:
            self._cache[n] = self._compute(n)
        return self._cache[n][0]

    def e(self, n: int) -> Fraction:
        if n < -1:
            raise IndexError("e_n is defined for n >= -1")
        if n not in self._cache:
            self._cache[n] = self._compute(n)
        return self._cache[n][1]


def dn_en(L: LatticeSpec, pair: PearsonPair, N: int) -> tuple:
    """Arrays d_{-1}..d_N and e_{-1}..e_N (index offset one)."""
    seq = DnEn(L, pair)
    d = [seq.d(n) for n in range(-1, N + 1)]
    e = [seq.e(n) for n in range(-1, N + 1)]
    return d, e


@dataclass(frozen=True)
class IteratedPair:
    """Coefficients of the k-th iterated pair (phi^[k], psi^[k])."""

    k: int
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    @property
    def phi(self) -> Poly:
        return Poly((self.c, self.b, self.a))

    @property
    def psi(self) -> Poly:
        return Poly((self.e, self.d))


def _pair_from_polys(k: int, phi: Poly, psi: Poly) -> IteratedPair:
    if phi.degree > 2 or psi.degree > 1:
        raise ValueError("iterated pair left its degree class")
    return IteratedPair(
        k=k,
        a=phi.coeff(2),
        b=phi.coeff(1),
        c=phi.coeff(0),
        d=psi.coeff(1),
        e=psi.coeff(0),
    )


def iterated_pairs(L: LatticeSpec, pair: PearsonPair, kmax: int) -> list:
    """phi^[k], psi^[k] for k = 0..kmax via the defining recurrence

        phi^[k+1] = S_x phi^[k] + U1 S_x psi^[k] + alpha U2 D_x psi^[k],
        psi^[k+1] = D_x phi^[k] + alpha S_x psi^[k] + U1 D_x psi^[k].
    """
    cons = constants(L)
    alpha, u1, u2 = cons.alpha, cons.u1, cons.u2
    phi, psi = pair.phi, pair.psi
    out = [_pair_from_polys(0, phi, psi)]
    for k in range(kmax):
        phi, psi = (
            sx(L, phi) + u1 * sx(L, psi) + alpha * (u2 * dx(L, psi)),
            dx(L, phi) + alpha * sx(L, psi) + u1 * dx(L, psi),
        )
        out.append(_pair_from_polys(k + 1, phi, psi))
    return out


def iterate_pair_closed(L: LatticeSpec, pair: PearsonPair, k: int) -> IteratedPair:
    """Closed-form coefficients of (phi^[k], psi^[k])."""
    a, b, c, d, e = pair.a, pair.b, pair.c, pair.d, pair.e
    if isinstance(L, QLattice):
        seq = sequences(L, 2 * k)
        alpha = alpha_of(L)
        c3, m = L.c3, L.m
        a2m1 = alpha * alpha - 1
        phi1_c3 = pair.phi.deriv()(c3)
        psi_c3 = pair.psi(c3)
        phi_c3 = pair.phi(c3)
        g2k, a2k = seq.gamma(2 * k), seq.alpha(2 * k)
        gk, ak = seq.gamma(k), seq.alpha(k)
        lead = d * a2m1 * g2k + a * a2k
        ak_ = lead
        bk_ = psi_c3 * a2m1 * gk + phi1_c3 * ak - 2 * c3 * lead
        ck_ = (
            phi_c3
            + 2 * a * m
            - c3 * (psi_c3 * a2m1 * gk + phi1_c3 * ak)
            + (c3 * c3 - 2 * m) * lead
        )
        dk_ = a * g2k + d * a2k
        ek_ = phi1_c3 * gk + psi_c3 * ak - c3 * dk_
        return IteratedPair(k=k, a=ak_, b=bk_, c=ck_, d=dk_, e=ek_)
    beta = beta_of(L)
    c5, c6 = L.c5, L.c6
    dn = a * k + d
    bk2 = beta * k * k
    return IteratedPair(
        k=k,
        a=a,
        b=b + 6 * beta * k * dn,
        c=pair.phi(bk2)
        + 2 * beta * k * pair.psi(bk2)
        - Fraction(k, 4) * (16 * beta * c6 - c5 * c5) * dn,
        d=2 * a * k + d,
        e=b * k + e + 2 * d * beta * k * k + bk2 * (2 * a * k + d),
    )


def iterate_pair(
    L: LatticeSpec, pair: PearsonPair, k: int, method: str = "recurrence"
) -> IteratedPair:
    """The k-th iterated pair, by recurrence or closed form."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if method == "recurrence":
        return iterated_pairs(L, pair, k)[k]
    if method == "closed":
        return iterate_pair_closed(L, pair, k)
    raise ValueError(f"unknown method: {method!r}")


def regularity_point(L: LatticeSpec, dn: DnEn, n: int) -> Fraction:
    """The evaluation point c3 - e_n/d_{2n} (q) or -beta n^2 - e_n/d_{2n}."""
    base = L.c3 if isinstance(L, QLattice) else -beta_of(L) * n * n
    return base - dn.e(n) / dn.d(2 * n)


@dataclass(frozen=True)
class FirstFailure:
    n: int
    kind: str  # "d_n_zero" | "phi_k_root"


@dataclass(frozen=True)
class RegularityReport:
    N: int
    d_seq: tuple
    e_seq: tuple
    admissible_up_to: Union[int, str]
    regular_up_to: Union[int, str]
    first_failure: Optional[FirstFailure]

    @property
    def ok(self) -> bool:
        return self.first_failure is None


def regularity(L: LatticeSpec, pair: PearsonPair, N: int) -> RegularityReport:
    """Check d_n != 0 and phi^[n](point_n) != 0 for 0 <= n <= N.

    Failures are data: the first one is recorded with its kind and the
    check stops there.  A vanishing d_{2n} met while forming the
    evaluation point is classified as d_n_zero at index 2n.
    """
    dn = DnEn(L, pair)
    d_seq = tuple(dn.d(n) for n in range(N + 1))
    e_seq = tuple(dn.e(n) for n in range(N + 1))

    first_admissibility_zero = next(
        (n for n in range(N + 1) if d_seq[n] == 0), None
    )
    admissible_up_to = (
        "all" if first_admissibility_zero is None
        else first_admissibility_zero - 1
    )

    pairs = iterated_pairs(L, pair, N)
    failure = None
    regular_up_to = "all"
    for n in range(N + 1):
        if dn.d(n) == 0:
            failure = FirstFailure(n=n, kind="d_n_zero")
        elif dn.d(2 * n) == 0:
            failure = FirstFailure(n=2 * n, kind="d_n_zero")
        elif pairs[n].phi(regularity_point(L, dn, n)) == 0:
            failure = FirstFailure(n=n, kind="phi_k_root")
        if failure is not None:
            regular_up_to = n - 1
            break
    return RegularityReport(
        N=N,
        d_seq=d_seq,
        e_seq=e_seq,
        admissible_up_to=admissible_up_to,
        regular_up_to=regular_up_to,
        first_failure=failure,
    )


def ttrr_coeffs(L: LatticeSpec, pair: PearsonPair, N: int):
    """Closed-form TTRR coefficients B_0..B_{N-1}, C_1..C_{N-1}.

    q-lattice:  B_n = c3 + gamma_n e_{n-1}/d_{2n-2}
                       - gamma_{n+1} e_n/d_{2n},
                C_{n+1} = -gamma_{n+1} d_{n-1}/(d_{2n-1} d_{2n+1})
                          * phi^[n](c3 - e_n/d_{2n}).
    Quadratic:  same with gamma_n = n, the extra B_n term
                -2 beta n(n-1), and the point -beta n^2 - e_n/d_{2n}.
    At n = 0 the gamma_0 term of B_n vanishes and C_1's d_{-1} factor
    cancels against the identical denominator index.
    """
    from .momentfun import TTRRCoeffs

    if N < 1:
        raise ValueError("N must be >= 1")
    report = regularity(L, pair, N)
    if not report.ok:
        raise RegularityError(report.first_failure.n, report.first_failure.kind)
    dn = DnEn(L, pair)
    seq = sequences(L, N + 1)
    beta = beta_of(L)
    pairs = iterated_pairs(L, pair, max(N - 2, 0))

    def _nonzero(idx: int) -> Fraction:
        val = dn.d(idx)
        if val == 0:
            raise RegularityError(idx, "d_n_zero")
        return val

    B = []
    for n in range(N):
        if isinstance(L, QLattice):
            bn = L.c3
        else:
            bn = -2 * beta * n * (n - 1)
        if n >= 1:
            bn += seq.gamma(n) * dn.e(n - 1) / _nonzero(2 * n - 2)
        bn -= seq.gamma(n + 1) * dn.e(n) / _nonzero(2 * n)
        B.append(bn)

    C = []
    for n in range(N - 1):
        # d_{n-1}/d_{2n-1} is exactly 1 at n = 0 (same index).
        ratio = Fraction(1) if n == 0 else dn.d(n - 1) / _nonzero(2 * n - 1)
        point = regularity_point(L, dn, n)
        C.append(
            -seq.gamma(n + 1) * ratio * pairs[n].phi(point) / _nonzero(2 * n + 1)
        )
    return TTRRCoeffs(B=tuple(B), C=tuple(C))


def u_k_moments(
    L: LatticeSpec, pair: PearsonPair, u: MomentSeq, k: int
) -> MomentSeq:
    """Moments of the derived functional u^[k].

    u^[0] = u and u^[k+1] = D_x(U2 psi^[k] u^[k]) - S_x(phi^[k] u^[k]).
    Each step consumes two moment indices.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    u2 = constants(L).u2
    pairs = iterated_pairs(L, pair, max(k - 1, 0))
    cur = u
    for j in range(k):
        lhs = dual_dx(mul(u2 * pairs[j].psi, cur))
        rhs = dual_sx(mul(pairs[j].phi, cur))
        top = min(lhs.top, rhs.top)
        cur = MomentSeq(
            tuple(lhs.moments[i] - rhs.moments[i] for i in range(top + 1)), L
        )
    return cur


def kn_constant(L: LatticeSpec, pair: PearsonPair, n: int) -> Fraction:
    """Rodrigues constant k_n = (-alpha)^{-n} prod_{j=1}^n d_{n+j-2}^{-1}."""
    alpha = alpha_of(L)
    dn = DnEn(L, pair)
    out = (-alpha) ** (-n) if n else Fraction(1)
    for j in range(1, n + 1):
        dval = dn.d(n + j - 2)
        if dval == 0:
            raise AdmissibilityError(n + j - 2)
        out /= dval
    return out


def r_n_sequence(L: LatticeSpec, pair: PearsonPair, N: int) -> list:
    """The simple set R_0..R_N with R_n u = D_x^n u^[n].

    R_{n+1} = (a_n z - s_n) R_n - t_n R_{n-1}, where
    a_n = -alpha d_{2n} d_{2n-1}/d_{n-1}, s_n = a_n B_n, and
    t_n = a_n alpha gamma_n d_{2n-2}/d_{2n-1} * phi^[n-1](point_{n-1}),
    with the conventions a_0 = -alpha d and s_0 = alpha e.  Needs only
    x-admissibility, not regularity.
    """
    alpha = alpha_of(L)
    beta = beta_of(L)
    dn = DnEn(L, pair)
    seq = sequences(L, N + 1)
    pairs = iterated_pairs(L, pair, max(N - 1, 0))

    def _d(idx: int) -> Fraction:
        val = dn.d(idx)
        if val == 0:
            raise AdmissibilityError(idx)
        return val

    rs = [ONE]
    if N >= 1:
        a0 = -alpha * pair.d
        s0 = alpha * pair.e
        rs.append(Poly((-s0, a0)))
    for n in range(1, N):
        a_n = -alpha * _d(2 * n) * _d(2 * n - 1) / _d(n - 1)
        if isinstance(L, QLattice):
            bn = L.c3
        else:
            bn = -2 * beta * n * (n - 1)
        bn += seq.gamma(n) * dn.e(n - 1) / _d(2 * n - 2)
        bn -= seq.gamma(n + 1) * dn.e(n) / _d(2 * n)
        s_n = a_n * bn
        point = regularity_point(L, dn, n - 1)
        t_n = (
            a_n
            * alpha
            * seq.gamma(n)
            * _d(2 * n - 2)
            / _d(2 * n - 1)
            * pairs[n - 1].phi(point)
        )
        rs.append(Poly((-s_n, a_n)) * rs[n] - t_n * rs[n - 1])
    return rs


@dataclass(frozen=True)
class RodriguesVerdict:
    n: int
    max_moment: int
    equal: bool
    first_difference: Optional[int]


def rodrigues_check(
    L: LatticeSpec, pair: PearsonPair, n: int, M: int
) -> RodriguesVerdict:
    """Compare moments 0..M of P_n u against k_n D_x^n u^[n].

    u is generated from the Pearson pair with u_0 = 1 and enough length
    for the derivative consumption; P_n = k_n R_n, so only
    x-admissibility is required.
    """
    if n < 0 or M < n:
        raise MomentLengthError(n, M)
    u = pearson_moments(L, pair, M + n)
    k_n = kn_constant(L, pair, n)
    p_n = k_n * r_n_sequence(L, pair, n)[n]
    lhs = mul(p_n, u)
    rhs = u_k_moments(L, pair, u, n)
    for _ in range(n):
        rhs = dual_dx(rhs)
    rhs = rhs.scaled(k_n)
    top = min(lhs.top, rhs.top)
    if top < M:
        raise MomentLengthError(M, top)
    first = next(
        (m for m in range(M + 1) if lhs.moments[m] != rhs.moments[m]), None
    )
    return RodriguesVerdict(
        n=n, max_moment=M, equal=first is None, first_difference=first
    )


class MonicOPS:
    """The monic OPS P_0..P_N of a regular pair, with derived P_n^[k]."""

    def __init__(self, L: LatticeSpec, pair: PearsonPair, N: int):
        self.lattice = L
        self.pair = pair
        self.ttrr = ttrr_coeffs(L, pair, N)
        polys = [ONE]
        if N >= 1:
            polys.append(Poly((-self.ttrr.Bn(0), Fraction(1))))
        for n in range(1, N):
            polys.append(
                Poly((-self.ttrr.Bn(n), Fraction(1))) * polys[n]
                - self.ttrr.Cn(n) * polys[n - 1]
            )
        self.polys = polys
        self._seq = sequences(L, N + 1)

    def derived_poly(self, n: int, k: int) -> Poly:
        """P_n^[k] = (gamma_n!/gamma_{n+k}!) D_x^k P_{n+k}."""
        f = self.polys[n + k]
        for _ in range(k):
            f = dx(self.lattice, f)
        return f * (
            self._seq.gamma_factorial(n) / self._seq.gamma_factorial(n + k)
        )


def monic_ops(L: LatticeSpec, pair: PearsonPair, N: int) -> MonicOPS:
    return MonicOPS(L, pair, N)
