"""The totally ramified extension Z_q[pi]/(pi^{p-1} + p) hosting Gauss sums.

An element is a length-(p-1) tuple of Z_q coefficients (c_0, ..., c_{p-2})
for c_0 + c_1*pi + ... + c_{p-2}*pi^{p-2}; multiplication folds pi^{p-1}
back in as -p.  With coefficients held uniformly mod p^M this represents
the element exactly mod pi^{(p-1)M}: comparisons at that absolute
precision are plain coefficientwise congruences mod p^M.

The p-th root of unity is produced as zeta = 1 + u where u is the Newton
root of ((1+u)^p - 1)/u = sum_j C(p, j+1) u^j with u = pi mod pi^2; the
iteration error e_n obeys e_{n+1} >= 2 e_n - 1 from e_0 = 2, so it
converges to full working precision in O(log((p-1)M)) steps.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import comb, inf

from .padics import ZqContext, zq_context


class EisContext:
    """Arithmetic context for Z_q[pi]; immutable and shareable."""

    __slots__ = ("zq", "p", "r", "M", "nslots", "zero", "one", "pi",
                 "_zeta", "_zeta_pows")

    def __init__(self, zq: ZqContext):
        self.zq = zq
        self.p = zq.p
        self.r = zq.r
        self.M = zq.M
        self.nslots = zq.p - 1
        self.zero = (zq.zero,) * self.nslots
        self.one = (zq.one,) + (zq.zero,) * (self.nslots - 1)
        self.pi = self.pi_pow(1)
        self._zeta = None
        self._zeta_pows = None

    # -- basic ring operations ------------------------------------------------

    def from_zq(self, u) -> tuple:
        return (u,) + (self.zq.zero,) * (self.nslots - 1)

    def from_int(self, n: int) -> tuple:
        return self.from_zq(self.zq.from_int(n))

    def add(self, x, y):
        zq = self.zq
        return tuple(zq.add(a, b) for a, b in zip(x, y))

    def sub(self, x, y):
        zq = self.zq
        return tuple(zq.sub(a, b) for a, b in zip(x, y))

    def neg(self, x):
        zq = self.zq
        return tuple(zq.neg(a) for a in x)

    def scalar(self, c, x):
        """Multiply by a Z_q coefficient."""
        zq = self.zq
        return tuple(zq.mul(c, a) for a in x)

    def scalar_int(self, n: int, x):
        zq = self.zq
        return tuple(zq.scalar(n, a) for a in x)

    def mul(self, x, y):
        zq = self.zq
        n = self.nslots
        conv = [zq.zero] * (2 * n - 1)
        for i, a in enumerate(x):
            if a != zq.zero:
                for j, b in enumerate(y):
                    if b != zq.zero:
                        conv[i + j] = zq.add(conv[i + j], zq.mul(a, b))
        for k in range(2 * n - 2, n - 1, -1):
            c = conv[k]
            if c != zq.zero:
                conv[k - n] = zq.add(conv[k - n], zq.scalar(-self.p, c))
        return tuple(conv[:n])

    def pow(self, x, e: int):
        result = self.one
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def pi_pow(self, s: int) -> tuple:
        """pi^s for s >= 0, reduced by pi^{p-1} = -p."""
        if s < 0:
            raise ValueError("use div_pi_pow for negative powers")
        k, slot = divmod(s, self.nslots)
        c = self.zq.from_int((-self.p) ** k)
        out = [self.zq.zero] * self.nslots
        out[slot] = c
        return tuple(out)

    def eq_mod(self, x, y, digits: int | None = None) -> bool:
        """Coefficientwise congruence mod p^digits (default full precision)."""
        k = self.M if digits is None else digits
        zq = self.zq
        return all(zq.is_zero_mod(zq.sub(a, b), k) for a, b in zip(x, y))

    # -- valuation and exact division -----------------------------------------

    def val_pi(self, x):
        """pi-adic valuation in pi-units, or None when 0 at working precision.

        Coefficient j contributes (p-1)*ord_p(c_j) + j; the contributions
        are distinct mod p-1, so the minimum is exact.
        """
        best = None
        for j, c in enumerate(x):
            o = self.zq.ord_p(c)
            if o < self.M:
                v = (self.p - 1) * o + j
                if best is None or v < best:
                    best = v
        return best

    def div_pi(self, x):
        """Exact division by pi; the constant slot must be divisible by p."""
        zq = self.zq
        c0 = x[0]
        if not zq.is_zero_mod(c0, 1):
            raise ArithmeticError("element is not divisible by pi")
        top = tuple((-(a // self.p)) % zq.modulus for a in c0)
        return x[1:] + (top,)

    def div_pi_pow(self, x, s: int):
        for _ in range(s):
            x = self.div_pi(x)
        return x

    def inv_unit(self, x):
        """Inverse of a pi-unit by Newton iteration from the residue field."""
        if self.val_pi(x) != 0:
            raise ZeroDivisionError("not a unit in Z_q[pi]")
        zq = self.zq
        red = zq.reduce(x[0])
        v = self.from_zq(zq.lift(zq.field.inv_idx(red)))
        two = self.from_int(2)
        for _ in range(((self.p - 1) * self.M).bit_length() + 2):
            t = self.sub(two, self.mul(x, v))
            v = self.mul(v, t)
        if not self.eq_mod(self.mul(x, v), self.one):
            raise AssertionError("Eisenstein unit inversion failed")
        return v

    def div(self, x, y):
        """Exact division x / y (the quotient must lie in the ring)."""
        s = self.val_pi(y)
        if s is None:
            raise ZeroDivisionError("division by 0 at working precision")
        w = self.div_pi_pow(y, s) if s else y
        out = self.mul(x, self.inv_unit(w))
        return self.div_pi_pow(out, s) if s else out

    # -- the p-th root of unity -------------------------------------------------

    def _hensel_zeta(self) -> tuple:
        fcoeffs = [comb(self.p, j + 1) for j in range(self.p)]  # degree p-1
        dcoeffs = [(j + 1) * fcoeffs[j + 1] for j in range(self.p - 1)]
        u = self.pi

        def horner(coeffs, x):
            acc = self.from_int(coeffs[-1])
            for c in reversed(coeffs[:-1]):
                acc = self.add(self.mul(acc, x), self.from_int(c))
            return acc

        target = (self.p - 1) * self.M
        for _ in range(64):
            fu = horner(fcoeffs, u)
            v = self.val_pi(fu)
            if v is None or v >= target:
                break
            u = self.sub(u, self.div(fu, horner(dcoeffs, u)))
        else:
            raise AssertionError("Hensel iteration for zeta_p stalled")
        return self.add(self.one, u)

    def zeta(self):
        """zeta_p = 1 + u, u the root of sum_j C(p,j+1) u^j with u = pi mod pi^2.

        The Newton loop runs at one extra digit (the final division costs
        p-2 pi-units) and the result is truncated back to M.
        """
        if self._zeta is None:
            big = eis_context(self.p, self.r, self.M + 1)
            zb = big._hensel_zeta()
            P = self.zq.modulus
            z = tuple(tuple(c % P for c in coeff) for coeff in zb)
            if not self.eq_mod(self.pow(z, self.p), self.one):
                raise AssertionError("zeta_p^p != 1 at working precision")
            d = self.val_pi(self.sub(z, self.add(self.one, self.pi)))
            if d is not None and d < 2:
                raise AssertionError("zeta_p - 1 is not pi mod pi^2")
            self._zeta = z
        return self._zeta

    def zeta_pows(self):
        """[zeta^0, ..., zeta^{p-1}] for additive-character evaluation."""
        if self._zeta_pows is None:
            z = self.zeta()
            pows = [self.one]
            for _ in range(self.p - 1):
                pows.append(self.mul(pows[-1], z))
            self._zeta_pows = pows
        return self._zeta_pows

    def __repr__(self):
        return f"EisContext(p={self.p}, r={self.r}, M={self.M})"


@functools.lru_cache(maxsize=None)
def eis_context(p: int, r: int, M: int) -> EisContext:
    return EisContext(zq_context(p, r, M))


def zeta_p(ctx: EisContext) -> tuple:
    return ctx.zeta()


def valuation(x, ctx: EisContext):
    """pi-adic valuation as a multiple of 1/(p-1); inf for 0 at precision."""
    v = ctx.val_pi(x)
    return inf if v is None else Fraction(v, ctx.p - 1)
