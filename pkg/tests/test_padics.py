from fractions import Fraction
from math import inf, isqrt

import pytest

from fqhyper import eisenstein, padics
from fqhyper.fields import make_field
from fqhyper.padics import (PadicRationalZq, default_precision, frac,
                            gamma_p, padic_context, teichmuller, zq_context)


def test_default_precision_policy():
    for p, r in [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (7, 2), (13, 2)]:
        q = p ** r
        M = default_precision(p, r)
        # exact meaning: p^M > 4*(q + 1 + 2*sqrt(q))^2 and p^(M-1) is not
        bound = 4 * (q + 1 + 2 * (q ** 0.5)) ** 2
        assert p ** M > bound
        assert p ** (M - 1) <= bound * (1 + 1e-12)


def test_gamma_small_values():
    assert gamma_p(5, 0, 3) == 1
    assert gamma_p(5, 1, 3) == (-1) % 125
    assert gamma_p(5, 3, 3) == (-2) % 125  # (-1)^3 * (1*2)
    assert gamma_p(7, 3, 2) == (-2) % 49


@pytest.mark.parametrize("p,M", [(3, 4), (5, 3), (7, 2)])
def test_gamma_functional_equation(p, M):
    ctx = padic_context(p, M)
    size = p ** M
    for m in range(1, size - 1):
        lhs = ctx.gamma(m + 1)
        if m % p:
            assert lhs == (-m * ctx.gamma(m)) % size
        else:
            assert lhs == (-ctx.gamma(m)) % size


def test_gamma_rational_argument_matches_integer_representative():
    ctx = padic_context(7, 3)
    x = Fraction(1, 2)
    m = ctx.residue(x)
    assert (2 * m) % 343 == 1
    assert ctx.gamma(x) == ctx.gamma(m)
    with pytest.raises(ValueError):
        ctx.gamma(Fraction(1, 7))


def test_frac_helper():
    assert frac(Fraction(7, 3)) == Fraction(1, 3)
    assert frac(Fraction(-1, 3)) == Fraction(2, 3)
    assert frac(Fraction(4)) == 0


def test_teichmuller_examples():
    F7 = make_field(7, 1)
    M = 3
    assert teichmuller(F7.elem(1), M) == (1,)
    assert teichmuller(F7.elem(6), M) == (7 ** 3 - 1,)  # -1 lifts to itself
    z = teichmuller(F7.elem(2), M)[0]
    assert z % 7 == 2
    assert pow(z, 6, 7 ** 3) == 1
    with pytest.raises(ValueError):
        teichmuller(F7.elem(0), M)


@pytest.mark.parametrize("p,r", [(5, 1), (3, 2)])
def test_teichmuller_multiplicative_and_reduces(p, r):
    F = make_field(p, r)
    ctx = zq_context(p, r, 4)
    lifts = {x: ctx.teichmuller(x) for x in range(1, F.q)}
    for x in range(1, F.q):
        assert ctx.reduce(lifts[x]) == x
        for y in range(1, F.q):
            assert ctx.mul(lifts[x], lifts[y]) == lifts[F.mul_idx(x, y)]


def test_zq_unit_inverse_and_pow():
    ctx = zq_context(3, 2, 5)
    u = (7, 5)
    v = ctx.inv(u)
    assert ctx.mul(u, v) == ctx.one
    assert ctx.pow(u, 3) == ctx.mul(u, ctx.mul(u, u))
    with pytest.raises(ZeroDivisionError):
        ctx.inv((3, 6))  # divisible by p


def test_padic_rational_arithmetic_and_recovery():
    ctx = zq_context(5, 1, 6)
    a = PadicRationalZq.from_fraction(ctx, Fraction(1, 5))
    b = PadicRationalZq.from_int(ctx, 2)
    s = a + b
    # 1/5 + 2 = 11/5
    eleven_fifths = PadicRationalZq.from_fraction(ctx, Fraction(11, 5))
    ok, prec = s.same_value(eleven_fifths)
    assert ok and prec == 5
    assert (a * b).same_value(PadicRationalZq.from_fraction(ctx, Fraction(2, 5)))[0]
    assert b.recover_integer(-10, 10) == 2
    assert PadicRationalZq.from_int(ctx, -3).recover_integer(-10, 10) == -3
    assert a.recover_integer(-10, 10) is None  # not an integer
    q = 5
    qq = PadicRationalZq.from_fraction(ctx, Fraction(1, q))
    assert qq.shift == 1 and qq.prec == 5
    assert qq.str_value().startswith("5^-1")


def test_padic_rational_zero_and_str():
    ctx = zq_context(7, 1, 4)
    z = PadicRationalZq.from_int(ctx, 0)
    ok, _ = z.is_zero()
    assert ok
    assert z.str_value() == "0"
    assert PadicRationalZq.from_int(ctx, 11).str_value() == "11"


def test_eisenstein_basic_relation():
    ctx = eisenstein.eis_context(5, 1, 4)
    pi4 = ctx.pow(ctx.pi, 4)
    assert ctx.eq_mod(pi4, ctx.from_int(-5))  # pi^(p-1) = -p
    assert eisenstein.valuation(ctx.pi, ctx) == Fraction(1, 4)
    assert eisenstein.valuation(ctx.from_int(5), ctx) == 1
    assert eisenstein.valuation(ctx.zero, ctx) == inf


@pytest.mark.parametrize("p,r,M", [(3, 1, 6), (5, 1, 5), (7, 1, 4), (3, 2, 5), (5, 2, 4)])
def test_zeta_p_defining_properties(p, r, M):
    ctx = eisenstein.eis_context(p, r, M)
    z = ctx.zeta()
    assert ctx.eq_mod(ctx.pow(z, p), ctx.one)       # zeta^p = 1
    assert not ctx.eq_mod(z, ctx.one)               # zeta != 1
    u = ctx.sub(z, ctx.one)
    d = ctx.val_pi(ctx.sub(u, ctx.pi))
    assert d is None or d >= 2                       # zeta - 1 = pi mod pi^2


def test_zeta_p3_solves_quadratic():
    # p = 3: u must satisfy u^2 + 3u + 3 = 0 with u = pi mod pi^2
    ctx = eisenstein.eis_context(3, 1, 6)
    u = ctx.sub(ctx.zeta(), ctx.one)
    val = ctx.add(ctx.mul(u, u), ctx.add(ctx.scalar_int(3, u), ctx.from_int(3)))
    assert ctx.val_pi(val) is None or ctx.val_pi(val) >= (3 - 1) * 6


def test_eis_division_roundtrip():
    ctx = eisenstein.eis_context(5, 1, 4)
    x = ctx.add(ctx.from_int(3), ctx.mul(ctx.pi, ctx.from_int(2)))
    y = ctx.mul(x, ctx.pow(ctx.pi, 3))
    assert ctx.eq_mod(ctx.div(y, x), ctx.pow(ctx.pi, 3))
    got = ctx.div(y, ctx.pow(ctx.pi, 3))
    # one pi-division costs one digit in one slot: compare at M-1
    assert ctx.eq_mod(got, x, digits=3)
