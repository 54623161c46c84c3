"""Truncated p-adic arithmetic: gamma tables, Z_q contexts, valued rationals.

Three layers live here:

* ``PadicContext`` -- residues mod p^M and the p-adic gamma function,
  tabulated once per (p, M) by the functional equation
  G(m+1) = -m*G(m) (p not dividing m) / -G(m) (p dividing m), G(0) = 1.
  A rational argument x with denominator prime to p is evaluated as
  G(m) for the integer m = x mod p^M; 1-Lipschitz continuity of the
  gamma function makes that exact mod p^M.

* ``ZqContext`` -- the unramified extension Z_q as length-r coefficient
  tuples mod p^M over a monic lift of the field modulus, with
  Teichmuller lifting by q-power iteration.

* ``PadicRationalZq`` -- a Z_q value divided by an explicit power of p,
  carrying its absolute precision.  Every division by q or q-1 in the
  identities goes through this type; nothing is ever silently truncated.

All fractional-part/floor computations use fractions.Fraction; there is
no floating point anywhere on this path.
"""

from __future__ import annotations

import functools
from array import array
from fractions import Fraction

from .fields import FieldContext, make_field

GAMMA_TABLE_BUDGET = 1 << 27   # hard cap on p^M for the gamma table
GAMMA_GUARD_BUDGET = 1 << 22   # extra digits are free below this table size
GAMMA_GUARD_CAP = 6


def default_precision(p: int, r: int) -> int:
    """Smallest M with p^M > 4*(q + 1 + 2*sqrt(q))^2, q = p^r.

    Wide enough to pin any point count (<= q + 1 + 2*sqrt(q)) or trace
    (|a_q| <= 2*sqrt(q)) from its residue, with margin for the unit
    divisions by q and q - 1.  Compared exactly in integers:
    p^M - 4(q+1)^2 - 16q > 16(q+1)*sqrt(q) iff the left side is positive
    and its square exceeds 256*(q+1)^2*q.
    """
    q = p ** r
    M = 1
    while True:
        lhs = p ** M - 4 * (q + 1) ** 2 - 16 * q
        if lhs > 0 and lhs * lhs > 256 * (q + 1) ** 2 * q:
            return M
        M += 1


def working_precision(p: int, r: int, min_m: int = 0) -> int:
    """Default precision plus free guard digits within the table budget.

    Guard digits absorb the precision a check loses to negative
    valuations (terms carrying 1/q), keeping comparisons at or above the
    default precision whenever the gamma table stays cheap.
    """
    M = max(default_precision(p, r), min_m)
    guard = 0
    while guard < GAMMA_GUARD_CAP and p ** (M + guard + 1) <= GAMMA_GUARD_BUDGET:
        guard += 1
    return M + guard


def frac(x: Fraction) -> Fraction:
    """Fractional part <x> in [0, 1)."""
    return x - (x.numerator // x.denominator)


class PadicContext:
    """Residue arithmetic mod p^M plus the tabulated p-adic gamma function."""

    __slots__ = ("p", "M", "modulus", "_gamma")

    def __init__(self, p: int, M: int):
        if M < 1:
            raise ValueError("precision M must be >= 1")
        self.p = p
        self.M = M
        self.modulus = p ** M
        self._gamma = None  # built on first gamma() call

    def _build_gamma(self):
        p, size = self.p, self.modulus
        if size > GAMMA_TABLE_BUDGET:
            raise ValueError(f"p^M = {size} exceeds the gamma table budget")
        g = array("q", bytes(8 * size))
        g[0] = 1
        acc = 1
        for m in range(1, size):
            prev = m - 1
            if prev % p:
                acc = (acc * prev) % size
            g[m] = (-acc) % size
        # g[m] = (-1)^m * prod_{0<j<m, p∤j} j;  g[0] = 1 by convention
        for m in range(2, size, 2):
            g[m] = (-g[m]) % size
        self._gamma = g

    def residue(self, x) -> int:
        """x mod p^M for an integer or a rational with denominator prime to p."""
        if isinstance(x, int):
            return x % self.modulus
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ValueError(f"{x} is not a p-adic integer for p={self.p}")
        return (x.numerator * pow(x.denominator, -1, self.modulus)) % self.modulus

    def gamma(self, x) -> int:
        """Gamma_p(x) mod p^M for x in Z_p cap Q."""
        if self._gamma is None:
            self._build_gamma()
        return self._gamma[self.residue(x)]

    def unit_inv(self, u: int) -> int:
        return pow(u, -1, self.modulus)

    def __repr__(self):
        return f"PadicContext(p={self.p}, M={self.M})"


@functools.lru_cache(maxsize=None)
def padic_context(p: int, M: int) -> PadicContext:
    return PadicContext(p, M)


def gamma_p(p: int, x, M: int) -> int:
    """Gamma_p(x) mod p^M; convenience wrapper over a cached context."""
    return padic_context(p, M).gamma(x)


class ZqContext:
    """Z_q = Z_p[x]/(m(x)) truncated mod p^M, m a monic lift of the field modulus.

    Elements are length-r tuples of ints in [0, p^M); reduction mod p is a
    ring morphism onto the attached FieldContext.
    """

    __slots__ = ("field", "pctx", "p", "r", "M", "modulus", "mod_low",
                 "zero", "one")

    def __init__(self, field: FieldContext, M: int):
        self.field = field
        self.pctx = padic_context(field.p, M)
        self.p = field.p
        self.r = field.r
        self.M = M
        self.modulus = self.pctx.modulus
        # monic lift: keep the F_p coefficients as integers
        self.mod_low = tuple(field.modulus[:-1])
        self.zero = (0,) * self.r
        self.one = (1,) + (0,) * (self.r - 1)

    # -- ring operations ---------------------------------------------------

    def from_int(self, n: int) -> tuple:
        return (n % self.modulus,) + (0,) * (self.r - 1)

    def lift(self, idx: int) -> tuple:
        """Coefficientwise lift of a field element (residues as integers)."""
        return tuple(self.field.coeffs_of(idx))

    def reduce(self, u: tuple) -> int:
        """Reduction Z_q -> F_q."""
        return self.field.index_of(tuple(c % self.p for c in u))

    def add(self, u, v):
        P = self.modulus
        return tuple((a + b) % P for a, b in zip(u, v))

    def sub(self, u, v):
        P = self.modulus
        return tuple((a - b) % P for a, b in zip(u, v))

    def neg(self, u):
        P = self.modulus
        return tuple((-a) % P for a in u)

    def scalar(self, c: int, u):
        P = self.modulus
        return tuple((c * a) % P for a in u)

    def mul(self, u, v):
        r, P = self.r, self.modulus
        if r == 1:
            return ((u[0] * v[0]) % P,)
        conv = [0] * (2 * r - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    conv[i + j] = (conv[i + j] + a * b) % P
        # reduce by the monic modulus: x^r = -mod_low
        for i in range(2 * r - 2, r - 1, -1):
            c = conv[i]
            if c:
                conv[i] = 0
                for j, mj in enumerate(self.mod_low):
                    conv[i - r + j] = (conv[i - r + j] - c * mj) % P
        return tuple(conv[:r])

    def pow(self, u, e: int):
        result = self.one
        base = u
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, u):
        """Inverse of a unit (reduction mod p nonzero), by Newton lifting."""
        red = self.reduce(u)
        if red == 0:
            raise ZeroDivisionError("not a unit in Z_q")
        v = self.lift(self.field.inv_idx(red))
        for _ in range(self.M.bit_length() + 2):
            # v <- v*(2 - u*v)
            t = self.mul(u, v)
            t = self.sub(self.from_int(2), t)
            v = self.mul(v, t)
        if self.mul(u, v) != self.one:
            raise AssertionError("unit inversion failed to converge")
        return v

    def is_zero_mod(self, u, k: int) -> bool:
        """True iff every coefficient of u vanishes mod p^k (k <= M)."""
        m = self.p ** min(k, self.M)
        return all(c % m == 0 for c in u)

    def ord_p(self, u) -> int:
        """min_i ord_p(coefficient i), capped at M (M means 0 at precision)."""
        best = self.M
        for c in u:
            if c:
                o = 0
                while c % self.p == 0:
                    c //= self.p
                    o += 1
                best = min(best, o)
        return best

    # -- Teichmuller lifting -------------------------------------------------

    def teichmuller(self, t) -> tuple:
        """The unique z with z^{q-1} = 1 (mod p^M) and z = t (mod p), t != 0.

        Lift t and iterate z -> z^q; every step gains at least one digit.
        """
        idx = t.idx if hasattr(t, "idx") else t
        if idx == 0:
            raise ValueError("Teichmuller lift of 0 is undefined")
        z = self.lift(idx)
        for _ in range(self.M + 2):
            zq = self.pow(z, self.field.q)
            if zq == z:
                return z
            z = zq
        raise AssertionError("Teichmuller iteration did not stabilize")

    def __repr__(self):
        return f"ZqContext(p={self.p}, r={self.r}, M={self.M})"


@functools.lru_cache(maxsize=None)
def zq_context(p: int, r: int, M: int | None = None) -> ZqContext:
    if M is None:
        M = default_precision(p, r)
    return ZqContext(make_field(p, r), M)


def teichmuller(t, M: int) -> tuple:
    """Teichmuller lift of a nonzero FqElem at precision M."""
    ctx = zq_context(t.ctx.p, t.ctx.r, M)
    return ctx.teichmuller(t.idx)


class PadicRationalZq:
    """A value num / p^shift with num in Z_q known mod p^M.

    `prec` is the absolute precision exponent: the value is correct
    modulo p^prec.  Construction from exact data has prec = M - shift;
    additions take the min, multiplications subtract the partner's shift,
    explicit p-power division costs precision one digit per power.
    """

    __slots__ = ("ctx", "num", "shift", "prec")

    def __init__(self, ctx: ZqContext, num: tuple, shift: int = 0,
                 prec: int | None = None):
        self.ctx = ctx
        self.num = num
        self.shift = shift
        self.prec = (ctx.M - shift) if prec is None else prec

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_int(cls, ctx: ZqContext, n: int) -> "PadicRationalZq":
        return cls(ctx, ctx.from_int(n))

    @classmethod
    def from_zq(cls, ctx: ZqContext, u: tuple) -> "PadicRationalZq":
        return cls(ctx, u)

    @classmethod
    def from_fraction(cls, ctx: ZqContext, x: Fraction) -> "PadicRationalZq":
        x = Fraction(x)
        num, den = x.numerator, x.denominator
        s = 0
        while den % ctx.p == 0:
            den //= ctx.p
            s += 1
        val = (num * pow(den, -1, ctx.modulus)) % ctx.modulus
        return cls(ctx, ctx.from_int(val), shift=s, prec=ctx.M - s)

    # -- arithmetic ---------------------------------------------------------

    def _aligned(self, other):
        if self.ctx is not other.ctx:
            raise TypeError("mixed Z_q contexts")
        s = max(self.shift, other.shift)
        p = self.ctx.p
        a = self.ctx.scalar(p ** (s - self.shift), self.num)
        b = self.ctx.scalar(p ** (s - other.shift), other.num)
        return a, b, s

    def __add__(self, other):
        a, b, s = self._aligned(other)
        return PadicRationalZq(self.ctx, self.ctx.add(a, b), s,
                               min(self.prec, other.prec))

    def __sub__(self, other):
        a, b, s = self._aligned(other)
        return PadicRationalZq(self.ctx, self.ctx.sub(a, b), s,
                               min(self.prec, other.prec))

    def __neg__(self):
        return PadicRationalZq(self.ctx, self.ctx.neg(self.num),
                               self.shift, self.prec)

    def __mul__(self, other):
        if self.ctx is not other.ctx:
            raise TypeError("mixed Z_q contexts")
        return PadicRationalZq(self.ctx, self.ctx.mul(self.num, other.num),
                               self.shift + other.shift,
                               min(self.prec - other.shift,
                                   other.prec - self.shift))

    def times_int(self, c: int) -> "PadicRationalZq":
        return PadicRationalZq(self.ctx, self.ctx.scalar(c, self.num),
                               self.shift, self.prec)

    def times_fraction(self, x: Fraction) -> "PadicRationalZq":
        return self * PadicRationalZq.from_fraction(self.ctx, Fraction(x))

    def div_p_pow(self, k: int) -> "PadicRationalZq":
        return PadicRationalZq(self.ctx, self.num, self.shift + k,
                               self.prec - k)

    # -- comparisons and recovery --------------------------------------------

    def same_value(self, other) -> tuple[bool, int]:
        """(equal, compared-at absolute precision)."""
        d = self - other
        A = min(self.prec, other.prec)
        if A <= 0:
            raise ValueError("no precision left to compare at")
        ok = d.ctx.is_zero_mod(d.num, min(A + d.shift, d.ctx.M))
        return ok, A

    def is_zero(self) -> tuple[bool, int]:
        A = self.prec
        return self.ctx.is_zero_mod(self.num,
                                    min(A + self.shift, self.ctx.M)), A

    def recover_integer(self, lo: int, hi: int) -> int | None:
        """The unique integer z in [lo, hi] congruent to this value, or None.

        Requires the value to be a rational integer at precision: every
        Z_q coordinate beyond the constant one vanishes, the constant one
        is divisible by p^shift, and the centered lift stays within a
        quarter of the usable modulus.
        """
        ctx = self.ctx
        ps = ctx.p ** self.shift
        pm = ctx.p ** min(self.prec + self.shift, ctx.M)
        if any(c % pm for c in self.num[1:]):
            return None
        c0 = self.num[0] % pm
        if c0 % ps:
            return None
        mod = pm // ps
        z = (c0 // ps) % mod
        if z > mod // 2:
            z -= mod
        if 4 * abs(z) >= mod and z != 0:
            return None
        if hi - lo >= mod:
            raise ValueError("forced range wider than the usable precision")
        return z if lo <= z <= hi else None

    # -- display ---------------------------------------------------------------

    def str_value(self) -> str:
        bound = min(10 ** 6, self.ctx.p ** max(self.prec, 0) // 4)
        z = self.recover_integer(-bound, bound) if bound > 0 else None
        if z is not None:
            return str(z)
        ctx = self.ctx
        v = ctx.ord_p(self.num)
        if v >= min(self.prec + self.shift, ctx.M):
            return "0"
        pv = ctx.p ** v
        unit = tuple((c // pv) % (ctx.p ** (ctx.M - v)) for c in self.num)
        e = v - self.shift
        coeffs = ",".join(str(c) for c in unit)
        return f"{ctx.p}^{e}*({coeffs}) mod {ctx.p}^{self.prec}"

    def __repr__(self):
        return f"PadicRationalZq({self.str_value()})"
