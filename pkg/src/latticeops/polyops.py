"""Dense exact polynomials in the lattice variable z, and the operators
D_x (divided difference), S_x (average) and T_{n,k} acting on them.

D_x and S_x are realized as cached linear maps on the monomial basis,
built from the product rules
    D_x z^{n+1} = (alpha z + beta) D_x z^n + S_x z^n,
    S_x z^{n+1} = U2 D_x z^n + (alpha z + beta) S_x z^n,
so all arithmetic stays rational in z.
"""

from fractions import Fraction

from .lattice import LatticeSpec, alpha_of, beta_of, constants, sequences

NEG_INF = float("-inf")


class Poly:
    """Immutable dense polynomial over Fraction, coefficients low-to-high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self):
        """Degree; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            [self.coeff(k) + other.coeff(k) for k in range(n)]
        )

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Poly([c / scalar for c in self.coeffs])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def deriv(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def shift(self, c) -> "Poly":
        """Compose with z -> z + c (i.e. return f(z + c))."""
        zc = Poly((Fraction(c), Fraction(1)))
        acc = Poly()
        for coef in reversed(self.coeffs):
            acc = acc * zc + Poly((coef,))
        return acc

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly((Fraction(x),))
    raise TypeError(f"cannot coerce {type(x).__name__} to Poly")


ZERO = Poly()
ONE = Poly((Fraction(1),))
Z = Poly((Fraction(0), Fraction(1)))


def poly_to_strings(f: Poly) -> list:
    from .rationals import format_rational

    return [format_rational(c) for c in f.coeffs]


def poly_from_strings(items) -> Poly:
    from .rationals import parse_rational

    return Poly([parse_rational(s) for s in items])


class OperatorTable:
    """Cached images of the monomial basis under D_x and S_x.

    Rows grow monotonically; extension happens in ensure() and is not
    thread-safe, but published rows may be read concurrently.
    """

    def __init__(self, L: LatticeSpec):
        self.lattice = L
        a = alpha_of(L)
        b = beta_of(L)
        self._az_b = Poly((b, a))
        self._u2 = constants(L).u2
        self.drow = [ZERO]
        self.srow = [ONE]

    def ensure(self, n: int):
        while len(self.drow) <= n:
            d, s = self.drow[-1], self.srow[-1]
            self.drow.append(self._az_b * d + s)
            self.srow.append(self._u2 * d + self._az_b * s)

    def dx_monomial(self, n: int) -> Poly:
        self.ensure(n)
        return self.drow[n]

    def sx_monomial(self, n: int) -> Poly:
        self.ensure(n)
        return self.srow[n]


_tables: dict = {}


def operator_table(L: LatticeSpec) -> OperatorTable:
    tab = _tables.get(L)
    if tab is None:
        tab = _tables[L] = OperatorTable(L)
    return tab


def dx(L: LatticeSpec, f: Poly) -> Poly:
    """x-derivative of a polynomial: lowers degree by one."""
    tab = operator_table(L)
    out = ZERO
    for n, c in enumerate(f.coeffs):
        if c != 0:
            out = out + tab.dx_monomial(n) * c
    return out


def sx(L: LatticeSpec, f: Poly) -> Poly:
    """x-average of a polynomial: preserves degree."""
    tab = operator_table(L)
    out = ZERO
    for n, c in enumerate(f.coeffs):
        if c != 0:
            out = out + tab.sx_monomial(n) * c
    return out


def t_nk(L: LatticeSpec, f: Poly, n: int, k: int) -> Poly:
    """The Leibniz coefficient polynomial T_{n,k} f.

    Defined by T_{0,0} f = f and the recurrence
        T_{n,k} f = S_x T_{n-1,k} f
                    - (gamma_{n-k}/alpha_{n-k}) U1 D_x T_{n-1,k} f
                    + (1/alpha_{n+1-k}) D_x T_{n-1,k-1} f,
    with T_{n,k} f = 0 for k < 0 or k > n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return ZERO
    seq = sequences(L, n + 1)
    u1 = constants(L).u1
    cache: dict = {(0, 0): f}

    def tee(i: int, j: int) -> Poly:
        if j < 0 or j > i:
            return ZERO
        got = cache.get((i, j))
        if got is not None:
            return got
        prev = tee(i - 1, j)
        out = (
            sx(L, prev)
            - (seq.gamma(i - j) / seq.alpha(i - j)) * (u1 * dx(L, prev))
            + dx(L, tee(i - 1, j - 1)) / seq.alpha(i + 1 - j)
        )
        cache[(i, j)] = out
        return out

    return tee(n, k)
