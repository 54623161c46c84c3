"""Finite fields F_q = F_p[x]/(m(x)) with full discrete-log tables.

Elements are indexed by integers in [0, q): the element with residue
polynomial c_0 + c_1*x + ... + c_{r-1}*x^{r-1} gets index
c_0 + c_1*p + ... + c_{r-1}*p^{r-1}.  Construction is deterministic:
the modulus is the lexicographically smallest monic irreducible of
degree r (coefficient tuples compared lowest degree first) and the
generator is the order-(q-1) element with the smallest coefficient
tuple, so rebuilding (p, r) always yields bit-identical tables.

Everything here is meant for exhaustive desk-scale work (q is capped so
the dlog table stays cheap); multiplication goes through the dlog/exp
tables and root counting is plain exhaustive evaluation, which is the
ground-truth oracle the p-adic formulas are tested against.
"""

from __future__ import annotations

import functools
import itertools

MAX_Q = 200_000  # full dlog table is built eagerly; keep q desk-sized


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# -- polynomial helpers over F_p ---------------------------------------------
# Coefficient tuples, lowest degree first, no trailing zeros; () is zero.

def _ptrim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _ptrim(a)


def _ppowmod(a, e, m, p):
    result = (1,)
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    while b:
        a, b = b, _prem(a, b, p)
    return a


def _prem(a, b, p):
    # remainder of a by b (b nonzero, not necessarily monic)
    inv_lead = pow(b[-1], -1, p)
    a = list(a)
    db = len(b) - 1
    while len(_ptrim(a)) - 1 >= db and _ptrim(a):
        a = list(_ptrim(a))
        if len(a) - 1 < db:
            break
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        for j in range(len(b)):
            a[shift + j] = (a[shift + j] - c * b[j]) % p
    return _ptrim(a)


def _is_irreducible(m, p):
    """Monic m of degree r is irreducible iff gcd(x^{p^i} - x, m) = 1 for i <= r/2."""
    r = len(m) - 1
    if r == 1:
        return True
    xp = (0, 1)
    for _ in range(r // 2):
        xp = _ppowmod(xp, p, m, p)  # x^{p^i} mod m
        n = max(len(xp), 2)
        diff = _ptrim(tuple(((xp[j] if j < len(xp) else 0) - (1 if j == 1 else 0)) % p
                            for j in range(n)))
        g = _pgcd(m, diff, p)
        if len(g) != 1:
            return False
    return True


def _smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree r over F_p.

    Coefficient tuples (c_0, ..., c_{r-1}) are compared low degree first.
    """
    for low in itertools.product(range(p), repeat=r):
        m = low + (1,)
        if _is_irreducible(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldContext:
    """Immutable arithmetic context for F_{p^r}; safe to share across threads."""

    __slots__ = ("p", "r", "q", "modulus", "generator", "exp", "dlog",
                 "_pweights", "_np")

    def __init__(self, p: int, r: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if p == 2:
            raise ValueError("p must be an odd prime")
        if not isinstance(r, int) or r < 1:
            raise ValueError(f"extension degree r = {r} must be >= 1")
        q = p ** r
        if q > MAX_Q:
            raise ValueError(f"q = {q} exceeds the desk-scale bound {MAX_Q}")
        self.p = p
        self.r = r
        self.q = q
        self._pweights = tuple(p ** i for i in range(r))
        self.modulus = _smallest_irreducible(p, r)
        self.generator = self._find_generator()
        self._build_dlog()
        self._np = None

    # -- construction ---------------------------------------------------

    def _find_generator(self) -> int:
        p, r, q = self.p, self.r, self.q
        factors = prime_factors(q - 1)
        for coeffs in itertools.product(range(p), repeat=r):
            if all(c == 0 for c in coeffs):
                continue
            poly = _ptrim(coeffs)
            if _ppowmod(poly, q - 1, self.modulus, p) != (1,):
                continue
            if all(_ppowmod(poly, (q - 1) // ell, self.modulus, p) != (1,)
                   for ell in factors):
                return self.index_of(coeffs)
        raise AssertionError("no generator found")  # unreachable

    def _build_dlog(self):
        p, q = self.p, self.q
        gpoly = self.coeffs_of(self.generator)
        exp = [0] * (q - 1)
        dlog = [-1] * q
        cur = (1,)
        for e in range(q - 1):
            idx = self.index_of(cur + (0,) * (self.r - len(cur)))
            exp[e] = idx
            dlog[idx] = e
            cur = _pmod(_pmul(cur, _ptrim(gpoly), p), self.modulus, p)
        if cur != (1,):
            raise AssertionError("generator order is not q-1")
        if dlog.count(-1) != 1 or dlog[0] != -1:
            raise AssertionError("dlog table is not a bijection on F_q^x")
        self.exp = exp
        self.dlog = dlog

    # -- index <-> coefficients ------------------------------------------

    def coeffs_of(self, idx: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.r):
            idx, c = divmod(idx, p)
            out.append(c)
        return tuple(out)

    def index_of(self, coeffs) -> int:
        return sum((c % self.p) * w for c, w in zip(coeffs, self._pweights))

    # -- arithmetic on indices --------------------------------------------

    def add_idx(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        for w in self._pweights:
            out += (((a // w) + (b // w)) % p) * w
        return out

    def sub_idx(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a - b) % self.p
        p = self.p
        out = 0
        for w in self._pweights:
            out += (((a // w) - (b // w)) % p) * w
        return out

    def neg_idx(self, a: int) -> int:
        return self.sub_idx(0, a)

    def mul_idx(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.dlog[a] + self.dlog[b]) % (self.q - 1)]

    def inv_idx(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self.exp[(-self.dlog[a]) % (self.q - 1)]

    def pow_idx(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of 0 in F_q")
            return 0 if e else 1
        return self.exp[(self.dlog[a] * e) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> F_q."""
        return n % self.p

    def trace_idx(self, a: int) -> int:
        """tr(a) = a + a^p + ... + a^{p^{r-1}}, returned as a residue mod p."""
        if a == 0:
            return 0
        t = 0
        for i in range(self.r):
            t = self.add_idx(t, self.pow_idx(a, self.p ** i))
        if t >= self.p:
            raise AssertionError("trace left the prime subfield")
        return t

    def phi_idx(self, a: int) -> int:
        """Quadratic character as an integer in {-1, 0, 1}."""
        if a == 0:
            return 0
        return 1 if self.dlog[a] % 2 == 0 else -1

    def elements(self):
        return range(self.q)

    # -- element objects and serialization --------------------------------

    def elem(self, value) -> "FqElem":
        """Wrap an index, an integer residue ('from Z'), or a coeff tuple."""
        if isinstance(value, FqElem):
            if value.ctx is not self:
                raise TypeError("element belongs to a different field context")
            return value
        if isinstance(value, tuple):
            return FqElem(self, self.index_of(value))
        return FqElem(self, value % self.p if self.r == 1 else value)

    def parse_elem(self, text: str) -> "FqElem":
        """Parse comma-separated base-p coefficients, lowest degree first."""
        parts = [s.strip() for s in text.split(",")]
        if len(parts) > self.r or not all(s.lstrip("-").isdigit() for s in parts):
            raise ValueError(f"bad element {text!r} for F_{self.p}^{self.r}")
        coeffs = [int(s) % self.p for s in parts]
        return FqElem(self, self.index_of(coeffs))

    def format_elem(self, idx: int) -> str:
        return ",".join(str(c) for c in self.coeffs_of(idx))

    def __repr__(self):
        return f"FieldContext(p={self.p}, r={self.r})"

    # -- numpy lookup tables for the counting kernels ---------------------

    def np_tables(self):
        """(add, mul, phi, dlog) as numpy arrays; built lazily, q <= 4096."""
        if self._np is None:
            import numpy as np
            q = self.q
            if q > 4096:
                raise ValueError("numpy tables capped at q <= 4096")
            idx = np.arange(q)
            add = np.zeros((q, q), dtype=np.int32)
            for w in self._pweights:
                da = (idx // w) % self.p
                add += ((da[:, None] + da[None, :]) % self.p) * w
            lg = np.array([0] + [self.dlog[a] for a in range(1, q)], dtype=np.int64)
            ex = np.array(self.exp, dtype=np.int32)
            mul = np.zeros((q, q), dtype=np.int32)
            nz = np.arange(1, q)
            mul[1:, 1:] = ex[(lg[nz][:, None] + lg[nz][None, :]) % (q - 1)]
            phi = np.zeros(q, dtype=np.int64)
            phi[self.exp[0::2]] = 1
            phi[self.exp[1::2]] = -1
            self._np = (add, mul, phi, lg)
        return self._np


@functools.lru_cache(maxsize=None)
def make_field(p: int, r: int) -> FieldContext:
    """Deterministic shared F_{p^r} context (cached per (p, r))."""
    return FieldContext(p, r)


class FqElem:
    """An element of a FieldContext; cross-context arithmetic is an error."""

    __slots__ = ("ctx", "idx")

    def __init__(self, ctx: FieldContext, idx: int):
        if not 0 <= idx < ctx.q:
            raise ValueError(f"index {idx} out of range for q={ctx.q}")
        self.ctx = ctx
        self.idx = idx

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.coeffs_of(self.idx)

    def _other(self, other) -> int:
        if isinstance(other, FqElem):
            if other.ctx is not self.ctx:
                raise TypeError("mixed field contexts in arithmetic")
            return other.idx
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FqElem(self.ctx, self.ctx.add_idx(self.idx, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FqElem(self.ctx, self.ctx.sub_idx(self.idx, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FqElem(self.ctx, self.ctx.sub_idx(b, self.idx))

    def __mul__(self, other):
        b = self._other(other)
        return FqElem(self.ctx, self.ctx.mul_idx(self.idx, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FqElem(self.ctx, self.ctx.mul_idx(self.idx, self.ctx.inv_idx(b)))

    def __pow__(self, e: int):
        return FqElem(self.ctx, self.ctx.pow_idx(self.idx, e))

    def __neg__(self):
        return FqElem(self.ctx, self.ctx.neg_idx(self.idx))

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.ctx is other.ctx and self.idx == other.idx
        if isinstance(other, int):
            return self.idx == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.idx))

    def __bool__(self):
        return self.idx != 0

    def __repr__(self):
        return f"Fq({self.ctx.p}^{self.ctx.r}: {self.ctx.format_elem(self.idx)})"


def trace(x: FqElem) -> int:
    return x.ctx.trace_idx(x.idx)


def dlog(x: FqElem) -> int:
    """Exponent e in [0, q-2] with generator^e = x; x = 0 is a domain error."""
    if x.idx == 0:
        raise ValueError("dlog(0) is undefined")
    return x.ctx.dlog[x.idx]


def count_distinct_roots(poly, ctx: FieldContext) -> int:
    """Number of distinct roots in F_q of a coefficient-vector polynomial.

    `poly` lists coefficients lowest degree first, as FqElem, index ints,
    or a mix; exhaustive evaluation over all of F_q.
    """
    coeffs = [c.idx if isinstance(c, FqElem) else ctx.elem(c).idx for c in poly]
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial has every point as a root")
    if len(coeffs) == 1:
        return 0
    if ctx.q <= 4096:
        import numpy as np
        add, mul, _, _ = ctx.np_tables()
        ys = np.arange(ctx.q)
        acc = np.full(ctx.q, coeffs[-1], dtype=np.int64)
        for c in reversed(coeffs[:-1]):
            acc = add[mul[acc, ys], c]
        return int(np.count_nonzero(acc == 0))
    count = 0
    for y in range(ctx.q):
        acc = coeffs[-1]
        for c in reversed(coeffs[:-1]):
            acc = ctx.add_idx(ctx.mul_idx(acc, y), c)
        if acc == 0:
            count += 1
    return count

