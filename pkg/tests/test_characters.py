from fractions import Fraction

import pytest

from fqhyper import eisenstein
from fqhyper.characters import (CharIndex, binomial, char_eval, char_group,
                                complex_gauss_max_deviation, delta, gauss_sum,
                                jacobi_sum)
from fqhyper.padics import PadicRationalZq
from fqhyper.varieties import h_alpha_roots


def test_delta():
    G = char_group(5, 1)
    assert delta(G.eps) == 1
    assert delta(G.phi) == 0
    assert delta(G.chi(G.q - 1)) == 1  # exponent reduces to 0


def test_char_eval_basics():
    G = char_group(7, 1)
    zq = G.zq
    for a in range(6):
        assert char_eval(G.chi(a), G.field.elem(1)) == zq.one
    assert char_eval(G.eps, G.field.elem(0)) == zq.zero
    # quadratic character at a non-square is -1; oracle: dlog parity
    for x in range(1, 7):
        want = zq.from_int(1 if G.field.dlog[x] % 2 == 0 else -1)
        assert char_eval(G.phi, G.field.elem(x)) == want


def test_char_eval_multiplicative():
    G = char_group(3, 2)
    for a in range(0, 8, 3):
        for x in range(1, 9):
            for y in range(1, 9):
                lhs = G.zq.mul(G.char_val(a, x), G.char_val(a, y))
                assert lhs == G.char_val(a, G.field.mul_idx(x, y))
    # and multiplicative in the index
    for x in range(1, 9):
        assert G.zq.mul(G.char_val(2, x), G.char_val(3, x)) == G.char_val(5, x)


def test_char_index_algebra():
    G = char_group(5, 1)
    A = G.chi(3)
    assert (A * A.conj()).is_trivial
    assert (A ** 2).a == 2  # 6 mod 4
    assert G.phi.a == 2


def test_gauss_eps_is_minus_one():
    G = char_group(5, 1)
    eis = G.eis()
    direct, dec = gauss_sum(G.eps)
    assert eis.eq_mod(direct, eis.from_int(-1))
    assert dec.s == 0 and dec.unit == 1


def test_gauss_conjugate_product():
    # g(chi) g(chi-bar) = q chi(-1) - (q-1) delta(chi), all chi, two fields
    for (p, r) in [(5, 1), (3, 2)]:
        G = char_group(p, r)
        eis = G.eis()
        for m in range(G.q - 1):
            lhs = eis.mul(G.gauss_direct(m), G.gauss_direct(-m))
            rhs = eis.from_int(G.q * G.char_sign_at_minus1(m)
                               - (G.q - 1) * G.delta(m))
            assert eis.eq_mod(lhs, rhs)


def test_gauss_quadratic_square_is_five():
    G = char_group(5, 1)
    eis = G.eis()
    g_phi = G.gauss_direct(G.phi.a)
    assert eis.eq_mod(eis.mul(g_phi, g_phi), eis.from_int(5))
    # valuation of g(phi) is 1/2 here
    assert eisenstein.valuation(g_phi, eis) == Fraction(1, 2)


@pytest.mark.parametrize("p,r", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_gross_koblitz(p, r):
    G = char_group(p, r, max(6, 4))
    eis = G.eis()
    for a in range(G.q - 1):
        direct = G.gauss_direct(-a)  # g(omega-bar^a)
        dec = G.gk_conj_omega(a)
        assert eis.eq_mod(direct, dec.to_eis(eis)), (p, r, a)


def test_jacobi_trivial_pair():
    for (p, r) in [(5, 1), (3, 2)]:
        G = char_group(p, r)
        assert jacobi_sum(G.eps, G.eps) == G.zq.from_int(G.q - 2)


def test_jacobi_reflection_and_gauss_relation():
    G = char_group(5, 1)
    zq = G.zq
    P = zq.modulus
    q, p = G.q, G.p
    for a in range(q - 1):
        for b in range(q - 1):
            J = G.jacobi(a, b)
            refl = zq.scalar(G.char_sign_at_minus1(a),
                             G.jacobi(a, (-(a + b)) % (q - 1)))
            assert J == refl
            ga, gb, gab = G.gauss_gk(a), G.gauss_gk(b), G.gauss_gk(a + b)
            S = ga.s + gb.s - gab.s
            assert S >= 0 and S % (p - 1) == 0
            unit = ga.unit * gb.unit * pow(gab.unit, -1, P) % P
            rhs = (-((-p) ** (S // (p - 1))) * unit
                   + (q - 1) * G.char_sign_at_minus1(b) * G.delta(a + b)) % P
            assert J == zq.from_int(rhs)


def test_binomial_special_values():
    G = char_group(7, 1)
    zq = G.zq
    q = G.q
    minus_1_over_q = PadicRationalZq.from_fraction(zq, Fraction(-1, q))
    # (phi | eps) = -1/q
    assert binomial(G.phi, G.eps).same_value(minus_1_over_q)[0]
    # (eps | eps) = (q-2)/q by both routes
    direct = binomial(G.eps, G.eps)
    closed = PadicRationalZq.from_fraction(zq, Fraction(q - 2, q))
    assert direct.same_value(closed)[0]
    # (A | eps) = (A | A) = -1/q + (q-1)/q delta(A) for every A
    for a in range(q - 1):
        want = PadicRationalZq.from_fraction(
            zq, Fraction(-1, q) + Fraction(q - 1, q) * G.delta(a))
        assert binomial(G.chi(a), G.eps).same_value(want)[0]
        assert binomial(G.chi(a), G.chi(a)).same_value(want)[0]


def test_theta_expansion():
    G3 = char_group(3, 1)
    assert G3.theta_expansion_check(1)
    G5 = char_group(5, 1)
    assert G5.theta_expansion_check(G5.field.generator)
    G9 = char_group(3, 2)
    for alpha in range(1, 9):
        assert G9.theta_expansion_check(alpha)
    with pytest.raises(ValueError):
        G9.theta_expansion_check(0)


def test_orthogonality():
    G = char_group(5, 1)
    assert G.orthogonality_sum(1) == G.zq.from_int(G.q - 1)
    assert G.orthogonality_sum(0) == G.zq.zero
    assert G.orthogonality_sum(G.field.generator) == G.zq.zero


def test_char_sum_C_against_root_count():
    # C(d,k,alpha) = (q-1) n_q(alpha) - (q-1) sum_{chi^k1 = eps} chi((-1)^d alpha)
    from math import gcd
    for (p, r, d, k) in [(7, 1, 2, 1), (5, 1, 3, 2), (3, 2, 2, 1)]:
        G = char_group(p, r)
        fld = G.field
        q = G.q
        zq = G.zq
        k1 = gcd(q - 1, k)
        step = (q - 1) // k1
        for alpha in range(1, q):
            lhs = G.char_sum_C(d, k, alpha)
            n = h_alpha_roots(fld, d, k, alpha)
            beta = fld.mul_idx(fld.from_int((-1) ** d), alpha)
            sub = zq.zero
            for j in range(k1):
                sub = zq.add(sub, G.char_val(j * step, beta))
            rhs = zq.sub(zq.scalar(q - 1, zq.from_int(n)), zq.scalar(q - 1, sub))
            assert lhs == rhs, (p, r, d, k, alpha)


def test_char_sum_C_preconditions():
    G = char_group(5, 1)
    with pytest.raises(ValueError):
        G.char_sum_C(3, 1, 0)
    with pytest.raises(ValueError):
        G.char_sum_C(5, 1, 1)  # p | d


def test_complex_shadow_small():
    from fqhyper.fields import make_field
    for (p, r) in [(5, 1), (3, 2), (13, 1)]:
        assert complex_gauss_max_deviation(make_field(p, r)) < 1e-8
