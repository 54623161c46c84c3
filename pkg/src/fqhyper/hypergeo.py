"""The three hypergeometric evaluators over F_q and the bridges between them.

* ``gn_eval`` -- the p-adic function
  -1/(q-1) * sum_{a=0}^{q-2} (-1)^{an} omega-bar^a(t) *
  prod_{k,i} (-p)^{-fl(<a_k p^i> - a p^i/(q-1)) - fl(<-b_k p^i> + a p^i/(q-1))}
            * G(<(a_k - a/(q-1)) p^i>)/G(<a_k p^i>)
            * G(<(-b_k + a/(q-1)) p^i>)/G(<-b_k p^i>),
  with G the p-adic gamma function and fl/<.> floor and fractional part.
  Per (k, i) the (-p)-exponent lies in {-1, 0, 1} (asserted); the summand
  valuations are tracked exactly and the value is returned as a Z_q
  number divided by an explicit power of p.  The argument t = 0 returns
  exactly 0: chi(0) = 0 applies to every summand including a = 0, which
  is what makes the t-sums in the summation identities close.

* ``greene_f`` -- the binomial-coefficient sum q/(q-1) sum_chi
  (A_0 chi | chi)(A_1 chi | B_1 chi)...(A_n chi | B_n chi) chi(x).

* ``mccarthy_fstar`` -- the Gauss-sum-ratio sum; every ratio is consumed
  through the gamma-product decomposition, so no pi-ring division ever
  happens: numerator pi-powers land in p-1 slots and the single slot
  matching the denominator valuation survives (the rest are asserted to
  cancel exactly).

gn_eval never touches Gauss sums, so harness comparisons against the
decomposition-based routes are genuinely independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import CharacterGroup
from .padics import PadicRationalZq, frac


@dataclass(frozen=True)
class GParams:
    """Top/bottom parameter lists of the p-adic hypergeometric function."""

    top: tuple[Fraction, ...]
    bottom: tuple[Fraction, ...]

    def __post_init__(self):
        top = tuple(Fraction(x) for x in self.top)
        bottom = tuple(Fraction(x) for x in self.bottom)
        if len(top) != len(bottom) or not top:
            raise ValueError("parameter lists must have equal length n >= 1")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @property
    def n(self) -> int:
        return len(self.top)

    def validate_for(self, p: int):
        for x in self.top + self.bottom:
            if x.denominator % p == 0:
                raise ValueError(f"parameter {x} has denominator divisible by p={p}")


class GEvaluator:
    """One parameter list over one group, with the a-independent work hoisted.

    For fixed (k, i) everything in the summand depends on a only through
    c = a*p^i mod (q-1), so per-c arrays of gamma values and exponents are
    built once; evaluation at any t is then O(q * r) table arithmetic.
    """

    def __init__(self, group: CharacterGroup, params: GParams):
        params.validate_for(group.p)
        self.group = group
        self.params = params
        zq = group.zq
        p, r, q, P = group.p, group.r, group.q, zq.modulus
        n = params.n
        order = q - 1
        pctx = zq.pctx

        etot = [0] * order
        utot = [1] * order
        dinv = 1
        for i in range(r):
            e_i = [0] * order
            u_i = [1] * order
            for ak, bk in zip(params.top, params.bottom):
                u = frac(Fraction(ak) * p ** i)
                v = frac(Fraction(-bk) * p ** i)
                dinv = (dinv * pctx.gamma(u) * pctx.gamma(v)) % P
                # work over the common denominator L: exact integer floors
                L = order * u.denominator * v.denominator
                un = int(u * L)
                vn = int(v * L)
                step = u.denominator * v.denominator
                gamma = pctx.gamma
                for c in range(order):
                    fn = c * step
                    # indicator form of -fl(u - f) - fl(v + f), f = c/(q-1);
                    # each per-(k,i) exponent lies in {-1, 0, 1}, and the raw
                    # two-floor value must agree (a mismatch is a bug)
                    e = (1 if un < fn else 0) - (1 if vn + fn >= L else 0)
                    if e != -((un - fn) // L) - ((vn + fn) // L):
                        raise AssertionError("floor exponent fast path broke")
                    e_i[c] += e
                    g1 = gamma(Fraction((un - fn) % L, L))
                    g2 = gamma(Fraction((vn + fn) % L, L))
                    u_i[c] = (u_i[c] * g1 * g2) % P
            ci = pow(p, i, order)
            for a in range(order):
                c = (a * ci) % order
                etot[a] += e_i[c]
                utot[a] = (utot[a] * u_i[c]) % P

        shift = max(0, -min(etot))
        self.shift = shift
        sign_n = n % 2
        w = [0] * order
        for a in range(order):
            e = etot[a]
            s = -1 if (a * sign_n + e) % 2 else 1
            w[a] = (s * pow(p, e + shift, P) * utot[a]) % P
        self.weights = w
        inv_q1 = pow(order, -1, P)
        self.outer = (-inv_q1 * pow(dinv, -1, P)) % P
        self.prec = zq.M - shift

    def eval(self, t: int) -> PadicRationalZq:
        group = self.group
        zq = group.zq
        if t == 0:
            return PadicRationalZq(zq, zq.zero, 0, zq.M)
        order = group.q - 1
        dt = group.field.dlog[t]
        P = zq.modulus
        w = self.weights
        tau = group.tau_pow
        acc = [0] * group.r
        for a in range(order):
            tp = tau[(-a * dt) % order]
            wa = w[a]
            for j in range(group.r):
                acc[j] += wa * tp[j]
        num = tuple((self.outer * x) % P for x in acc)
        return PadicRationalZq(zq, num, self.shift, self.prec)


def g_evaluator(group: CharacterGroup, top, bottom) -> GEvaluator:
    params = GParams(tuple(Fraction(x) for x in top),
                     tuple(Fraction(x) for x in bottom))
    key = (params.top, params.bottom)
    ev = group._g_evaluators.get(key)
    if ev is None:
        ev = GEvaluator(group, params)
        group._g_evaluators[key] = ev
    return ev


def gn_eval(group: CharacterGroup, top, bottom, t: int) -> PadicRationalZq:
    """_nG_n[top; bottom | t]_q as a valuation-tracked Z_q value."""
    return g_evaluator(group, top, bottom).eval(t)


# -- Greene's hypergeometric function -------------------------------------------

def greene_f(group: CharacterGroup, tops: list[int], bottoms: list[int],
             x: int) -> PadicRationalZq:
    """{n+1}F_n (A_0, ..., A_n; B_1, ..., B_n | x) over F_q.

    `tops` are the n+1 character exponents A_0..A_n, `bottoms` the n
    exponents B_1..B_n.
    """
    if len(tops) != len(bottoms) + 1:
        raise ValueError("need n+1 top characters and n bottom characters")
    zq = group.zq
    n = len(bottoms)
    if x == 0:
        return PadicRationalZq(zq, zq.zero, 0, zq.M)
    order = group.q - 1
    acc = zq.zero
    for c in range(order):
        sign = group.char_sign_at_minus1(c)  # chi(-1) for the (A0 chi | chi) factor
        num = group.jacobi(tops[0] + c, -c)
        term = zq.scalar(sign, num)
        for aj, bj in zip(tops[1:], bottoms):
            sign_j = group.char_sign_at_minus1(bj + c)
            jj = group.jacobi(aj + c, -(bj + c))
            term = zq.mul(term, zq.scalar(sign_j, jj))
        term = zq.mul(term, group.char_val(c, x))
        acc = zq.add(acc, term)
    inv_q1 = pow(order, -1, zq.modulus)
    num = zq.scalar(inv_q1, acc)
    return PadicRationalZq(zq, num, shift=group.r * n, prec=zq.M - group.r * n)


# -- McCarthy's F* ---------------------------------------------------------------

def mccarthy_fstar(group: CharacterGroup, tops: list[int], bottoms: list[int],
                   x: int) -> PadicRationalZq:
    """{n+1}F_n^* (A_0..A_n; B_1..B_n | x)_q via Gauss-sum decompositions."""
    if len(tops) != len(bottoms) + 1:
        raise ValueError("need n+1 top characters and n bottom characters")
    zq = group.zq
    n = len(bottoms)
    if x == 0:
        return PadicRationalZq(zq, zq.zero, 0, zq.M)
    p, P = group.p, zq.modulus
    order = group.q - 1

    den_s = 0
    den_u = 1
    for a in tops:
        d = group.gauss_gk(a)
        den_s += d.s
        den_u = (den_u * d.unit) % P
    for b in bottoms:
        d = group.gauss_gk(-b)
        den_s += d.s
        den_u = (den_u * d.unit) % P

    slots = [zq.zero] * (p - 1)
    for c in range(order):
        s_c = 0
        u_c = 1
        for a in tops:
            d = group.gauss_gk(a + c)
            s_c += d.s
            u_c = (u_c * d.unit) % P
        for b in bottoms:
            d = group.gauss_gk(-b - c)
            s_c += d.s
            u_c = (u_c * d.unit) % P
        d = group.gauss_gk(-c)
        s_c += d.s
        u_c = (u_c * d.unit) % P
        sign = group.char_sign_at_minus1(c * (n + 1))
        k, slot = divmod(s_c, p - 1)
        coeff = (sign * u_c * (-p) ** k) % P
        slots[slot] = zq.add(slots[slot], zq.scalar(coeff, group.char_val(c, x)))

    t_pow, j0 = divmod(den_s, p - 1)
    for j, val in enumerate(slots):
        if j != j0 and not zq.is_zero_mod(val, zq.M):
            raise AssertionError("F* left Q_q: a pi-slot failed to cancel")
    # overall sign pinned so that {n+1}F_n^*(A; B | t) equals
    # {n+1}G_{n+1}[a_0..a_n; 0, b_1..b_n | 1/t] and -q * {2}F_1 on the
    # order-3 configuration, which is how the sums are consumed downstream
    inv = (-pow(order, -1, P) * pow(den_u, -1, P) * (-1) ** t_pow) % P
    num = zq.scalar(inv, slots[j0])
    return PadicRationalZq(zq, num, shift=t_pow, prec=zq.M - t_pow)


# -- named transformation bridges --------------------------------------------------

def g_shift_3to2(group: CharacterGroup, x: int):
    """Both sides of the 3G3 -> 2G2 reduction: lhs = 3G3[1/4,1/2,3/4; 0,1/2,1/2 | x],
    rhs = 2G2[1/4,3/4; 0,1/2 | x] + phi(x)/q."""
    lhs = gn_eval(group, [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)],
                  [0, Fraction(1, 2), Fraction(1, 2)], x)
    g2 = gn_eval(group, [Fraction(1, 4), Fraction(3, 4)],
                 [0, Fraction(1, 2)], x)
    phi = group.field.phi_idx(x)
    rhs = g2 + PadicRationalZq.from_fraction(group.zq, Fraction(phi, group.q))
    return lhs, rhs


def g2_transforms(group: CharacterGroup, which: int, t: int):
    """Both sides of the three 2G2 transformations (3 requires p > 3)."""
    F = Fraction
    if which == 1:
        if t == 0:
            raise ValueError("transformation 1 needs t != 0")
        lhs = gn_eval(group, [F(1, 4), F(3, 4)], [F(1, 2), F(1, 2)], t)
        rhs = gn_eval(group, [F(1, 2), F(1, 2)], [F(1, 4), F(3, 4)],
                      group.field.inv_idx(t))
        return lhs, rhs
    if which == 2:
        lhs = gn_eval(group, [F(1, 4), F(3, 4)], [F(1, 2), F(1, 2)], t)
        g = gn_eval(group, [F(1, 4), F(3, 4)], [0, 0], t)
        phi = group.field.phi_idx(group.field.neg_idx(t))
        rhs = g.times_fraction(Fraction(phi, group.q))
        return lhs, rhs
    if which == 3:
        if group.p <= 3:
            raise ValueError("transformation 3 needs p > 3")
        if t == 0:
            raise ValueError("transformation 3 needs t != 0")
        lhs = gn_eval(group, [F(1, 3), F(2, 3)], [0, 0], t)
        g = gn_eval(group, [F(1, 2), F(1, 2)], [F(1, 6), F(5, 6)],
                    group.field.inv_idx(t))
        phi = group.field.phi_idx(
            group.field.mul_idx(group.field.from_int(-3), t))
        rhs = g.times_int(phi * group.q)
        return lhs, rhs
    raise ValueError("which must be 1, 2 or 3")


# -- canonical parameter lists from the point-count theorems ------------------------

def surface_params(d: int, k: int) -> GParams:
    """top = h/d (h=1..d-1); bottom = 0, h/k (h<k), h/(d-k) (h<d-k)."""
    top = tuple(Fraction(h, d) for h in range(1, d))
    bottom = (Fraction(0),) + tuple(Fraction(h, k) for h in range(1, k)) \
        + tuple(Fraction(h, d - k) for h in range(1, d - k))
    return GParams(top, bottom)


def odd_shift_params(d: int, k: int) -> GParams:
    """The shifted list of the odd-d,k summation identity: the (d-k)/2 slot of
    the bottom row is replaced by a second 0."""
    if (d - k) % 2:
        raise ValueError("d - k must be even")
    top = tuple(Fraction(h, d) for h in range(1, d))
    half = (d - k) // 2
    bottom = (Fraction(0),) + tuple(Fraction(h, k) for h in range(1, k)) \
        + tuple(Fraction(h, d - k) for h in range(1, d - k) if h != half) \
        + (Fraction(0),)
    return GParams(top, bottom)


def even_drop_params(d: int, k: int) -> GParams:
    """The d-2 list of the even-d summation identity: top drops the d/2 slot,
    bottom is the multiset {h/k} union {h/(d-k)}."""
    if d % 2:
        raise ValueError("d must be even")
    top = tuple(Fraction(h, d) for h in range(1, d) if h != d // 2)
    bottom = tuple(Fraction(h, k) for h in range(1, k)) \
        + tuple(Fraction(h, d - k) for h in range(1, d - k))
    return GParams(top, bottom)
