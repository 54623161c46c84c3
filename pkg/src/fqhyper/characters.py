"""Multiplicative characters of F_q with Z_q values, Gauss and Jacobi sums.

Characters are indexed by their Teichmuller exponent: chi_a = omega^a with
omega the Teichmuller character, so the trivial character is a = 0, the
quadratic character is a = (q-1)/2, and conjugation is negation mod q-1.
chi(0) = 0 for every character, the trivial one included; Jacobi sums
therefore always skip x in {0, 1}.

Gauss sums exist in two independent forms: the direct pi-ring summation
sum_x chi(x) zeta^tr(x), and the decomposition -pi^s * unit with
s = (p-1) * sum_i <a p^i/(q-1)> and unit a product of p-adic gamma values.
The harness compares the two; all divisions elsewhere (F*, the character
sum C(d,k,alpha)) consume only the decomposition, keeping the two routes
independent.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .eisenstein import EisContext
from .fields import FieldContext, FqElem, make_field
from .padics import (PadicRationalZq, frac, working_precision, zq_context)


@dataclass(frozen=True)
class CharIndex:
    """A multiplicative character omega^a of a fixed group."""

    group: "CharacterGroup"
    a: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % (self.group.q - 1))

    def conj(self) -> "CharIndex":
        return CharIndex(self.group, -self.a)

    def __mul__(self, other: "CharIndex") -> "CharIndex":
        if other.group is not self.group:
            raise TypeError("characters of different groups")
        return CharIndex(self.group, self.a + other.a)

    def __pow__(self, e: int) -> "CharIndex":
        return CharIndex(self.group, self.a * e)

    @property
    def is_trivial(self) -> bool:
        return self.a == 0


@dataclass(frozen=True)
class GaussSumValue:
    """g(chi) = -pi^s * unit; `unit` is a Z_p unit held mod p^M."""

    s: int
    unit: int

    def to_eis(self, eis: EisContext) -> tuple:
        return eis.neg(eis.scalar_int(self.unit, eis.pi_pow(self.s)))


class CharacterGroup:
    """All of F_q-hat with Z_q-valued evaluation tables at one precision."""

    def __init__(self, field: FieldContext, M: int):
        self.field = field
        self.zq = zq_context(field.p, field.r, M)
        self.p = field.p
        self.r = field.r
        self.q = field.q
        self.M = M
        self.order = field.q - 1
        tau = self.zq.teichmuller(field.generator)
        pows = [self.zq.one]
        for _ in range(self.order - 1):
            pows.append(self.zq.mul(pows[-1], tau))
        self.tau_pow = pows
        self.trace = [field.trace_idx(x) for x in range(field.q)]
        # dlog of 1-x, used by every Jacobi-type sum
        self.dlog_one_minus = [field.dlog[field.sub_idx(1, x)] if x != 1 else -1
                               for x in range(field.q)]
        self._eis = None
        self._gauss_direct = {}
        self._jacobi = {}
        self._g_evaluators = {}

    # -- basic evaluation ---------------------------------------------------

    def chi(self, a: int) -> CharIndex:
        return CharIndex(self, a)

    @property
    def eps(self) -> CharIndex:
        return CharIndex(self, 0)

    @property
    def phi(self) -> CharIndex:
        return CharIndex(self, self.order // 2)

    def char_val(self, a: int, x: int) -> tuple:
        """chi_a(x) in Z_q, with chi(0) = 0 for every a."""
        if x == 0:
            return self.zq.zero
        return self.tau_pow[(a * self.field.dlog[x]) % self.order]

    def char_sign_at_minus1(self, a: int) -> int:
        """chi_a(-1) = (-1)^a."""
        return -1 if a % 2 else 1

    def delta(self, a: int) -> int:
        return 1 if a % self.order == 0 else 0

    def eis(self) -> EisContext:
        if self._eis is None:
            from .eisenstein import eis_context
            self._eis = eis_context(self.p, self.r, self.M)
        return self._eis

    # -- Gauss sums: direct pi-ring summation --------------------------------

    def gauss_direct(self, m: int) -> tuple:
        """g(chi_m) = sum_x chi_m(x) zeta^tr(x), summed in the pi-ring."""
        m %= self.order
        cached = self._gauss_direct.get(m)
        if cached is not None:
            return cached
        eis = self.eis()
        zq = self.zq
        by_trace = [zq.zero] * self.p
        for x in range(1, self.q):
            c = self.trace[x]
            by_trace[c] = zq.add(by_trace[c], self.char_val(m, x))
        acc = eis.zero
        for c, coeff in enumerate(by_trace):
            if coeff != zq.zero:
                acc = eis.add(acc, eis.scalar(coeff, eis.zeta_pows()[c]))
        if m != 0 and eis.val_pi(acc) is None:
            raise ArithmeticError("Gauss sum vanished at working precision")
        self._gauss_direct[m] = acc
        return acc

    # -- Gauss sums: gamma-product decomposition ------------------------------

    def gk_conj_omega(self, a: int) -> GaussSumValue:
        """Decomposition of g(omega-bar^a): s = (p-1) sum_i <a p^i/(q-1)>,
        unit = prod_i Gamma_p(<a p^i/(q-1)>)."""
        a %= self.order
        s = Fraction(0)
        unit = 1
        pctx = self.zq.pctx
        P = pctx.modulus
        for i in range(self.r):
            f = Fraction((a * self.p ** i) % self.order, self.order)
            s += f
            unit = (unit * pctx.gamma(f)) % P
        s_int = s * (self.p - 1)
        if s_int.denominator != 1:
            raise AssertionError("Gauss valuation is not an integer")
        return GaussSumValue(int(s_int), unit)

    def gauss_gk(self, m: int) -> GaussSumValue:
        """Decomposition of g(chi_m) (chi_m = omega-bar^{-m})."""
        return self.gk_conj_omega(-m)

    # -- Jacobi sums and binomial coefficients ---------------------------------

    def jacobi(self, a: int, b: int) -> tuple:
        """J(A, B) = sum_x A(x) B(1-x) in Z_q; x in {0, 1} never contributes."""
        a %= self.order
        b %= self.order
        key = (a, b)
        cached = self._jacobi.get(key)
        if cached is not None:
            return cached
        zq = self.zq
        dlog = self.field.dlog
        acc = zq.zero
        for x in range(2, self.q):
            e = (a * dlog[x] + b * self.dlog_one_minus[x]) % self.order
            acc = zq.add(acc, self.tau_pow[e])
        self._jacobi[key] = acc
        return acc

    def binomial(self, a: int, b: int) -> PadicRationalZq:
        """(A choose B) = B(-1)/q * J(A, B-bar)."""
        j = self.jacobi(a, -b)
        num = self.zq.scalar(self.char_sign_at_minus1(b), j)
        return PadicRationalZq(self.zq, num, shift=self.r)

    # -- identity-shaped character sums -----------------------------------------

    def orthogonality_sum(self, x: int) -> tuple:
        """sum over all chi of chi(x), computed by actual summation."""
        acc = self.zq.zero
        for a in range(self.order):
            acc = self.zq.add(acc, self.char_val(a, x))
        return acc

    def theta_expansion_check(self, alpha: int) -> bool:
        """theta(alpha) = (1/(q-1)) sum_m g(T^{-m}) T^m(alpha), T = omega."""
        if alpha == 0:
            raise ValueError("alpha must be nonzero")
        eis = self.eis()
        lhs = eis.zeta_pows()[self.trace[alpha]]
        acc = eis.zero
        for m in range(self.order):
            g = self.gauss_direct(-m)
            acc = eis.add(acc, eis.scalar(self.char_val(m, alpha), g))
        inv_qm1 = pow(self.q - 1, -1, self.zq.modulus)
        rhs = eis.scalar_int(inv_qm1, acc)
        return eis.eq_mod(lhs, rhs)

    def char_sum_C(self, d: int, k: int, alpha: int) -> tuple:
        """C(d, k, alpha) = sum_chi g(chi^d) g(chi-bar^{d-k}) chi(alpha) / g(chi^k).

        Every quotient goes through the gamma decompositions; the net pi
        power of each term must be a nonnegative multiple of p-1.
        """
        if alpha == 0:
            raise ValueError("alpha must be nonzero")
        if (d * k * (d - k)) % self.p == 0:
            raise ValueError("p must not divide d*k*(d-k)")
        zq = self.zq
        P = zq.modulus
        acc = zq.zero
        for m in range(self.order):
            g1 = self.gk_conj_omega(-m * d)
            g2 = self.gk_conj_omega(m * (d - k))
            g3 = self.gk_conj_omega(-m * k)
            S = g1.s + g2.s - g3.s
            if S < 0 or S % (self.p - 1):
                raise AssertionError("term of C(d,k,alpha) left Z_q")
            w = (g1.unit * g2.unit * pow(g3.unit, -1, P)) % P
            coeff = (-((-self.p) ** (S // (self.p - 1))) * w) % P
            acc = zq.add(acc, zq.scalar(coeff, self.char_val(m, alpha)))
        return acc


@functools.lru_cache(maxsize=None)
def char_group(p: int, r: int, M: int | None = None) -> CharacterGroup:
    if M is None:
        M = working_precision(p, r)
    return CharacterGroup(make_field(p, r), M)


# -- free-function operation wrappers --------------------------------------------

def delta(A: CharIndex) -> int:
    return A.group.delta(A.a)


def char_eval(A: CharIndex, x: FqElem) -> tuple:
    return A.group.char_val(A.a, x.idx if isinstance(x, FqElem) else x)


def gauss_sum(A: CharIndex) -> tuple[tuple, GaussSumValue]:
    """(direct pi-ring value, gamma-product decomposition) for g(A)."""
    return A.group.gauss_direct(A.a), A.group.gauss_gk(A.a)


def jacobi_sum(A: CharIndex, B: CharIndex) -> tuple:
    if A.group is not B.group:
        raise TypeError("characters of different groups")
    return A.group.jacobi(A.a, B.a)


def binomial(A: CharIndex, B: CharIndex) -> PadicRationalZq:
    if A.group is not B.group:
        raise TypeError("characters of different groups")
    return A.group.binomial(A.a, B.a)


# -- complex floating shadow (sanity only, never for exact claims) -------------

def complex_gauss_max_deviation(field: FieldContext) -> float:
    """max over chi != eps of | |g(chi)|^2 - q |, in complex floats."""
    import numpy as np
    q, p = field.q, field.p
    dlog = np.array([0] + [field.dlog[x] for x in range(1, q)], dtype=np.float64)
    tr = np.array([field.trace_idx(x) for x in range(q)], dtype=np.float64)
    theta = np.exp(2j * np.pi * tr / p)
    worst = 0.0
    for a in range(1, q - 1):
        chi = np.exp(2j * np.pi * a * dlog / (q - 1))
        chi[0] = 0.0
        g = np.sum(chi * theta)
        worst = max(worst, abs(abs(g) ** 2 - q))
    return worst
