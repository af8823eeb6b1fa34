"""Linear functionals as finite moment prefixes.

A functional u is identified with u_n = <u, z^n> for 0 <= n <= N.  The
dual operators D_x, S_x and left multiplication act on these prefixes
with explicit length accounting:

    dual_dx: indices 0..N+1   (<D_x u, z^n> needs u-moments to n-1)
    dual_sx: indices 0..N
    mul(f):  indices 0..N-deg f

Also here: moment generation from a Pearson equation, Hankel
determinants, and the Gram-orthogonalization TTRR oracle that the
closed recurrence formulas are tested against.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import AdmissibilityError, MomentLengthError, RegularityBreakError
from .lattice import LatticeSpec
from .polyops import Poly, Z, operator_table

__all__ = [
    "MomentSeq",
    "TTRRCoeffs",
    "apply",
    "dual_dx",
    "dual_sx",
    "mul",
    "pearson_moments",
    "hankel",
    "ttrr_oracle",
]


@dataclass(frozen=True)
class MomentSeq:
    """Moments u_0..u_N of a functional on a fixed lattice."""

    moments: tuple
    lattice: LatticeSpec

    def __post_init__(self):
        ms = tuple(Fraction(m) for m in self.moments)
        if not ms:
            raise ValueError("a moment sequence needs at least u_0")
        object.__setattr__(self, "moments", ms)

    @property
    def top(self) -> int:
        """Largest represented moment index N."""
        return len(self.moments) - 1

    def moment(self, n: int) -> Fraction:
        if n > self.top:
            raise MomentLengthError(n, self.top)
        return self.moments[n]

    def scaled(self, lam) -> "MomentSeq":
        return MomentSeq(tuple(lam * m for m in self.moments), self.lattice)


def apply(u: MomentSeq, f: Poly) -> Fraction:
    """Pairing <u, f>; requires deg f <= N."""
    if f.is_zero():
        return Fraction(0)
    if f.degree > u.top:
        raise MomentLengthError(int(f.degree), u.top)
    return sum(
        (c * u.moments[k] for k, c in enumerate(f.coeffs)), Fraction(0)
    )


def dual_dx(u: MomentSeq) -> MomentSeq:
    """Moments of D_x u: <D_x u, z^n> = -<u, D_x z^n> for n <= N+1."""
    tab = operator_table(u.lattice)
    out = [
        -apply(u, tab.dx_monomial(n)) for n in range(u.top + 2)
    ]
    return MomentSeq(tuple(out), u.lattice)


def dual_sx(u: MomentSeq) -> MomentSeq:
    """Moments of S_x u: <S_x u, z^n> = <u, S_x z^n> for n <= N."""
    tab = operator_table(u.lattice)
    out = [apply(u, tab.sx_monomial(n)) for n in range(u.top + 1)]
    return MomentSeq(tuple(out), u.lattice)


def mul(f: Poly, u: MomentSeq) -> MomentSeq:
    """Moments of f*u: <f u, z^n> = <u, f z^n>; shrinks by deg f."""
    if f.is_zero():
        return MomentSeq((Fraction(0),) * (u.top + 1), u.lattice)
    d = int(f.degree)
    if d > u.top:
        raise MomentLengthError(d, u.top)
    zn = Poly((Fraction(1),))
    out = []
    for _ in range(u.top - d + 1):
        out.append(apply(u, f * zn))
        zn = zn * Z
    return MomentSeq(tuple(out), u.lattice)


def pearson_moments(L: LatticeSpec, pair, N: int) -> MomentSeq:
    """Moments u_0 = 1, ..., u_N of a solution of D_x(phi u) = S_x(psi u).

    The functional equation projected on z^n reads <u, h_n> = 0 with
    h_n = phi * D_x z^n + psi * S_x z^n, whose top coefficient (of
    z^{n+1}) is the admissibility quantity d_n.  Each u_{n+1} is solved
    from that projection; a vanishing top coefficient raises
    AdmissibilityError at the offending n.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    tab = operator_table(L)
    phi, psi = pair.phi, pair.psi
    moments = [Fraction(1)]
    for n in range(N):
        h = phi * tab.dx_monomial(n) + psi * tab.sx_monomial(n)
        top = h.coeff(n + 1)
        if top == 0:
            raise AdmissibilityError(n)
        acc = sum(
            (h.coeff(j) * moments[j] for j in range(n + 1)), Fraction(0)
        )
        moments.append(-acc / top)
    return MomentSeq(tuple(moments), L)


def pearson_top_coefficient(L: LatticeSpec, pair, n: int) -> Fraction:
    """Coefficient multiplying u_{n+1} in the projected Pearson equation."""
    tab = operator_table(L)
    h = pair.phi * tab.dx_monomial(n) + pair.psi * tab.sx_monomial(n)
    return h.coeff(n + 1)


def hankel(u: MomentSeq, n: int) -> Fraction:
    """det[u_{i+j}] for i,j = 0..n, by fraction-free (Bareiss) elimination."""
    if 2 * n > u.top:
        raise MomentLengthError(2 * n, u.top)
    m = [[u.moments[i + j] for j in range(n + 1)] for i in range(n + 1)]
    sign = 1
    denom = Fraction(1)
    for k in range(n):
        if m[k][k] == 0:
            for r in range(k + 1, n + 1):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n + 1):
            for j in range(k + 1, n + 1):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / denom
            m[i][k] = Fraction(0)
        denom = pivot
    return sign * m[n][n]


@dataclass(frozen=True)
class TTRRCoeffs:
    """Coefficients of P_{n+1} = (z - B_n) P_n - C_n P_{n-1}.

    B holds B_0..B_{K-1}; C holds C_1..C_{K-1} (offset one).
    """

    B: tuple
    C: tuple

    def Bn(self, n: int) -> Fraction:
        return self.B[n]

    def Cn(self, n: int) -> Fraction:
        if n < 1:
            raise IndexError("C_n is defined for n >= 1")
        return self.C[n - 1]

    @property
    def count(self) -> int:
        return len(self.B)


def ttrr_oracle(u: MomentSeq) -> TTRRCoeffs:
    """Recurrence coefficients from the moments alone.

    Gram-orthogonalizes the monomial basis under (f, g) -> <u, f g>
    and reads off B_n = (z P_n, P_n)/(P_n, P_n) and
    C_n = (P_n, P_n)/(P_{n-1}, P_{n-1}).  Independent of every closed
    formula in the package; used as the cross-check oracle.
    """
    N = u.top
    B, C = [], []
    p_prev = Poly()
    p_cur = Poly((Fraction(1),))
    norm_prev = None
    n = 0
    while 2 * n <= N:
        norm = apply(u, p_cur * p_cur)
        if norm == 0:
            raise RegularityBreakError(n)
        if n >= 1:
            C.append(norm / norm_prev)
        if 2 * n + 1 > N:
            break
        bn = apply(u, Z * p_cur * p_cur) / norm
        B.append(bn)
        p_next = (Z - Poly((bn,))) * p_cur
        if n >= 1:
            p_next = p_next - C[-1] * p_prev
        p_prev, p_cur = p_cur, p_next
        norm_prev = norm
        n += 1
    return TTRRCoeffs(B=tuple(B), C=tuple(C))
