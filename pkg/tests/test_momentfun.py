"""Moment prefixes, dual operators, Pearson moment generation, Hankel
determinants, and the Gram TTRR oracle."""

import random
from fractions import Fraction as F

import pytest

from latticeops import (
    AdmissibilityError,
    MomentLengthError,
    PearsonPair,
    QLattice,
    apply,
    dual_dx,
    dual_sx,
    hankel,
    mul,
    pearson_moments,
    ttrr_oracle,
)
from latticeops.classical import DnEn
from latticeops.lattice import alpha_of
from latticeops.momentfun import MomentSeq, pearson_top_coefficient
from latticeops.polyops import ZERO, Z, Poly, dx, sx, t_nk

from conftest import ALL_LATTICES


def _u(moments, L=None):
    return MomentSeq(tuple(F(m) for m in moments), L or ALL_LATTICES[0])


def rand_poly(rng, max_deg):
    return Poly(
        [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(max_deg + 1)]
    )


class TestApply:
    def test_monomial_reads_moment(self):
        u = _u((1, 2, 5))
        assert apply(u, Z * Z) == 5

    def test_zero_poly(self):
        assert apply(_u((1, 2, 5)), ZERO) == 0

    def test_linearity(self):
        u = _u((1, 2, 5))
        assert apply(u, Z * Z - Z) == 3

    def test_underflow(self):
        with pytest.raises(MomentLengthError):
            apply(_u((1, 2)), Z * Z)


class TestDuals:
    def test_trivial_values(self):
        for L in ALL_LATTICES:
            u = _u((1, 2, 5, 7), L)
            d = dual_dx(u)
            s = dual_sx(u)
            assert d.moment(0) == 0
            assert d.moment(1) == -1
            assert s.moment(0) == 1

    def test_length_accounting(self):
        L = ALL_LATTICES[0]
        u = _u((1, 2, 5, 7), L)
        assert dual_dx(u).top == u.top + 1
        assert dual_sx(u).top == u.top
        assert mul(Z * Z, u).top == u.top - 2

    @pytest.mark.parametrize("L", ALL_LATTICES)
    def test_duality(self, L):
        rng = random.Random(19)
        u = _u([F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(9)], L)
        for _ in range(6):
            f = rand_poly(rng, rng.randint(0, 6))
            if f.degree <= u.top - 1:
                assert apply(dual_dx(u), f) == -apply(u, dx(L, f))
            if f.degree <= u.top:
                assert apply(dual_sx(u), f) == apply(u, sx(L, f))
                assert apply(mul(f, u), Poly((F(1),))) == apply(u, f)

    def test_mul_zero(self):
        u = _u((1, 2, 5))
        assert mul(ZERO, u).moments == (0, 0, 0)


class TestPearsonMoments:
    def test_u1_law(self, racah_std, aw_std):
        for bundle in (racah_std, aw_std):
            u = pearson_moments(bundle.lattice, bundle.pair, 3)
            assert u.moment(0) == 1
            assert u.moment(1) == -bundle.pair.e / bundle.pair.d

    def test_u2_law_centered(self, aw_std):
        # with c3 = 0 (so beta = 0) the second projection reads
        # u2 = -[-(b + e alpha) e/d + c]/(d alpha + a)
        pair = aw_std.pair
        a_ = alpha_of(aw_std.lattice)
        u = pearson_moments(aw_std.lattice, pair, 2)
        expected = (
            -(-(pair.b + pair.e * a_) * pair.e / pair.d + pair.c)
            / (pair.d * a_ + pair.a)
        )
        assert u.moment(2) == expected

    @pytest.mark.parametrize("L", ALL_LATTICES)
    def test_projection_coefficient_is_dn(self, L):
        """The coefficient multiplying u_{n+1} equals d_n exactly."""
        pair = PearsonPair(F(1, 3), F(2), F(-1), F(5, 7), F(1))
        dn = DnEn(L, pair)
        for n in range(10):
            assert pearson_top_coefficient(L, pair, n) == dn.d(n)

    def test_inadmissible_raises(self):
        L = ALL_LATTICES[0]
        pair = PearsonPair(F(0), F(1), F(0), F(0), F(1))  # d = 0
        with pytest.raises(AdmissibilityError) as err:
            pearson_moments(L, pair, 3)
        assert err.value.n == 0

    def test_pearson_equation_holds_on_moments(self, racah_std, aw_std):
        """<D_x(phi u) - S_x(psi u), z^n> = 0 on the generated prefix."""
        for bundle in (racah_std, aw_std):
            u = pearson_moments(bundle.lattice, bundle.pair, 12)
            lhs = dual_dx(mul(bundle.pair.phi, u))
            rhs = dual_sx(mul(bundle.pair.psi, u))
            top = min(lhs.top, rhs.top)
            assert lhs.moments[: top + 1] == rhs.moments[: top + 1]


class TestHankel:
    def test_small_determinants(self):
        u = _u((1, 2, 5, 7, 9))
        assert hankel(u, 0) == 1
        assert hankel(u, 1) == 1 * 5 - 4
        # 3x3 checked against cofactor expansion by hand
        expected = 1 * (5 * 9 - 49) - 2 * (2 * 9 - 35) + 5 * (14 - 25)
        assert hankel(u, 2) == expected

    def test_underflow(self):
        with pytest.raises(MomentLengthError):
            hankel(_u((1, 2, 5)), 2)

    def test_singular_matrix_is_zero(self):
        assert hankel(_u((1, 1, 1, 1, 1)), 2) == 0

    def test_racah_h2_golden(self, racah_std):
        u = pearson_moments(racah_std.lattice, racah_std.pair, 4)
        assert hankel(u, 2) == F(48816747908500, 1588995725005269)


class TestOracle:
    def test_b0_c1_formulas(self, racah_std):
        u = pearson_moments(racah_std.lattice, racah_std.pair, 6)
        coeffs = ttrr_oracle(u)
        u0, u1, u2 = u.moments[0], u.moments[1], u.moments[2]
        assert coeffs.Bn(0) == u1 / u0
        assert coeffs.Cn(1) == u2 / u0 - (u1 / u0) ** 2

    def test_c1_matches_phi_evaluation(self):
        """C_1 = -(1/d_1) phi(c3 - e_0/d_0) for a q-lattice pair."""
        L = QLattice(p=F(1, 3), c3=F(1, 2), m=F(2))
        pair = PearsonPair(F(1), F(-1, 2), F(1, 5), F(3), F(1, 7))
        u = pearson_moments(L, pair, 4)
        dn = DnEn(L, pair)
        point = L.c3 - dn.e(0) / dn.d(0)
        assert ttrr_oracle(u).Cn(1) == -pair.phi(point) / dn.d(1)

    def test_rescaling_invariance(self, aw_std):
        u = pearson_moments(aw_std.lattice, aw_std.pair, 10)
        a = ttrr_oracle(u)
        b = ttrr_oracle(u.scaled(F(-7, 3)))
        assert a.B == b.B and a.C == b.C

    def test_cn_accessor_offset(self, racah_std):
        u = pearson_moments(racah_std.lattice, racah_std.pair, 6)
        coeffs = ttrr_oracle(u)
        assert coeffs.Cn(1) == coeffs.C[0]
        with pytest.raises(IndexError):
            coeffs.Cn(0)


def _dnsk(u, nd, ns):
    for _ in range(ns):
        u = dual_sx(u)
    for _ in range(nd):
        u = dual_dx(u)
    return u


@pytest.mark.parametrize("preset", ["racah", "aw"])
def test_leibniz_on_moments(preset, racah_std, aw_std):
    """D_x^n(f u) = sum_k T_{n,k}f D_x^{n-k} S_x^k u on moments."""
    bundle = racah_std if preset == "racah" else aw_std
    L = bundle.lattice
    u = pearson_moments(L, bundle.pair, 24)
    rng = random.Random(23)
    for _ in range(3):
        f = rand_poly(rng, 3)
        for n in range(6):
            lhs = mul(f, u)
            for _ in range(n):
                lhs = dual_dx(lhs)
            acc = None
            for k in range(n + 1):
                term = mul(t_nk(L, f, n, k), _dnsk(u, n - k, k))
                if acc is None:
                    acc = list(term.moments)
                else:
                    top = min(len(acc), len(term.moments))
                    acc = [acc[i] + term.moments[i] for i in range(top)]
            top = min(lhs.top + 1, len(acc))
            assert list(lhs.moments[:top]) == acc[:top]


def test_leibniz_corollaries_q_lattice(aw_std):
    """The degree <= 2 closed forms, on the Askey-Wilson functional."""
    L = aw_std.lattice
    from latticeops import constants, sequences

    cons = constants(L)
    seq = sequences(L, 8)
    a_ = cons.alpha
    c3, m = L.c3, L.m
    zc = Poly((-c3, F(1)))
    u = pearson_moments(L, aw_std.pair, 24)
    rng = random.Random(29)
    for _ in range(3):
        a, b, c = (F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(3))
        f = a * (zc * zc) + b * zc + Poly((c,))
        for n in range(6):
            lhs = mul(f, u)
            for _ in range(n):
                lhs = dual_dx(lhs)
            an, an1 = seq.alpha(n), seq.alpha(n - 1)
            gn, gn1 = seq.gamma(n), seq.gamma(n - 1)
            t0 = (
                (a_ * a / (an * an1)) * (zc * zc)
                + (b / an) * zc
                + Poly((c + 4 * a * (1 - a_ * a_) * gn * m / an1,))
            )
            t1 = (gn / an) * (
                (a * (an + a_ * an1) / (an1 * an1)) * zc + Poly((b,))
            )
            t2 = Poly((a * gn * gn1 / (an1 * an1),))
            acc = None
            for tf, (nd, ns) in (
                (t0, (n, 0)),
                (t1, (n - 1, 1)),
                (t2, (n - 2, 2)),
            ):
                if nd < 0 or tf.is_zero():
                    continue
                term = mul(tf, _dnsk(u, nd, ns))
                if acc is None:
                    acc = list(term.moments)
                else:
                    top = min(len(acc), len(term.moments))
                    acc = [acc[i] + term.moments[i] for i in range(top)]
            top = min(lhs.top + 1, len(acc))
            assert list(lhs.moments[:top]) == acc[:top]
