import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quasicover.exact import (
    ONE, TAU, TAU_INV, ZERO, QTau, Vec, FrameMismatch,
    format_qtau, parse_qtau, qtau,
)


def interval_sign(x: QTau, lo=Fraction(75025, 46368), hi=Fraction(121393, 75025)):
    """Independent oracle: bracket tau between consecutive Fibonacci quotients
    and narrow until the sign of a + b*tau is decided."""
    # F(25)/F(24) < tau < F(26)/F(25); refine by the map t -> 1 + 1/t
    a, b = x.a, x.b
    for _ in range(64):
        v_lo = a + b * lo if b >= 0 else a + b * hi
        v_hi = a + b * hi if b >= 0 else a + b * lo
        if v_lo > 0:
            return 1
        if v_hi < 0:
            return -1
        if v_lo == 0 and v_hi == 0:
            return 0
        lo, hi = 1 + 1 / hi, 1 + 1 / lo
    # only reachable when a + b*tau == 0 exactly, i.e. a == b == 0
    return 0


rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)
qtaus = st.builds(QTau.of, rationals, rationals)


class TestAlgebra:
    def test_tau_squared_is_tau_plus_one(self):
        assert TAU * TAU == ONE + TAU

    def test_tau_times_tau_minus_one_is_one(self):
        assert TAU * (TAU - 1) == ONE
        assert TAU * TAU_INV == ONE

    def test_product_expansion(self):
        # (1 + tau)^2 = 2 + 3 tau, by hand: 1 + 2tau + tau^2 = 2 + 3tau
        assert (ONE + TAU) * (ONE + TAU) == qtau(2, 3)

    @given(qtaus, qtaus)
    def test_mul_commutes_and_reduces(self, u, v):
        w = u * v
        assert w == v * u
        # lowest terms, positive denominator
        from math import gcd
        assert w.d > 0 and gcd(gcd(w.p, w.q), w.d) == 1

    @given(qtaus)
    def test_inverse(self, u):
        if u:
            assert u * u.inverse() == ONE

    def test_division_identity(self):
        # tau / (1 + tau) = tau - 1
        assert TAU / (ONE + TAU) == TAU_INV


class TestSign:
    def test_one_minus_tau_negative(self):
        assert (ONE - TAU).sign() == -1

    def test_zero(self):
        assert ZERO.sign() == 0

    def test_five_minus_three_tau_positive(self):
        x = qtau(5, -3)
        assert x.sign() == 1
        assert interval_sign(x) == 1

    @given(qtaus, qtaus)
    def test_sign_multiplicative(self, u, v):
        assert (u * v).sign() == u.sign() * v.sign()

    @given(qtaus)
    def test_sign_matches_interval_oracle(self, u):
        assert u.sign() == interval_sign(u)

    def test_bulk_random_against_oracle_and_float(self):
        rng = random.Random(20260809)
        for _ in range(20_000):
            u = QTau(rng.randint(-999, 999), rng.randint(-999, 999),
                     rng.randint(1, 99))
            s = u.sign()
            assert s == interval_sign(u)
            f = float(u)
            if abs(f) > 1e-9:
                assert s == (1 if f > 0 else -1)


class TestConjugate:
    def test_tau_maps_to_one_minus_tau(self):
        assert TAU.conjugate() == ONE - TAU

    def test_rationals_fixed(self):
        assert qtau(3).conjugate() == qtau(3)

    def test_substitution(self):
        assert qtau(1, 2).conjugate() == qtau(3, -2)

    @given(qtaus, qtaus)
    def test_multiplicative(self, u, v):
        assert (u * v).conjugate() == u.conjugate() * v.conjugate()

    @given(qtaus)
    def test_involution(self, u):
        assert u.conjugate().conjugate() == u


class TestSerialization:
    @given(qtaus)
    def test_roundtrip(self, u):
        assert parse_qtau(format_qtau(u)) == u

    def test_format_examples(self):
        assert format_qtau(qtau(Fraction(1, 2), Fraction(3, 4))) == "1/2+3/4τ"
        assert format_qtau(TAU) == "τ"
        assert format_qtau(qtau(0, -1)) == "-τ"
        assert format_qtau(qtau(-2)) == "-2"
        assert parse_qtau("1/2-3/4τ") == qtau(Fraction(1, 2), Fraction(-3, 4))
        assert parse_qtau("-τ") == -TAU


class TestVec:
    def test_arithmetic(self):
        v = Vec([1, 2], "f") + Vec([TAU, 0], "f")
        assert v == Vec([ONE + TAU, qtau(2)], "f")

    def test_frame_mismatch(self):
        with pytest.raises(FrameMismatch):
            Vec([1], "a") + Vec([1], "b")

    def test_scale_and_dot(self):
        v = Vec([1, TAU]).scale(TAU)
        assert v.coords == (TAU, ONE + TAU)
        assert Vec([1, TAU]).dot(Vec([TAU, -1])) == ZERO
