"""Brute-force point counting: the ground-truth side of every identity.

Diagonal binary hypersurfaces X1^d + X2^d = d*lam*X1^k*X2^{d-k} (projective
and affine counts, plus the two dehomogenized root counts), Weierstrass
cubics y^2 = x^3 + a2 x^2 + a4 x + a6 counted through quadratic-character
solvability, and Hessian cubics x^3 + y^3 + 1 = 3axy by the double loop.

Counting never touches the p-adic layer, so agreement with the G-function
formulas is a genuine two-route check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd, isqrt

from .fields import FieldContext, count_distinct_roots


@dataclass(frozen=True)
class DiagonalSurfaceParams:
    """X1^d + X2^d = d*lam*X1^k X2^{d-k} over a fixed field; lam != 0."""

    d: int
    k: int
    lam: int  # element index

    def check(self, field: FieldContext, need_coprime: bool = False):
        if not (self.d >= 2 and 1 <= self.k <= self.d - 1):
            raise ValueError("need d >= 2 and 1 <= k <= d-1")
        if self.lam == 0:
            raise ValueError("lam = 0 is excluded")
        if (self.d * self.k * (self.d - self.k)) % field.p == 0:
            raise ValueError("p divides d*k*(d-k)")
        if need_coprime and gcd(self.d, self.k) != 1:
            raise ValueError("gcd(d, k) must be 1 here")


def count_projective_D(field: FieldContext, params: DiagonalSurfaceParams) -> int:
    """Points on the surface in P^1(F_q), by enumerating all q+1 points."""
    params.check(field)
    d, k, lam = params.d, params.k, params.lam
    dl = field.mul_idx(field.from_int(d), lam)
    count = 0
    # chart [y : 1], y in F_q
    for y in range(field.q):
        lhs = field.add_idx(field.pow_idx(y, d), 1)
        rhs = field.mul_idx(dl, field.pow_idx(y, k))
        count += (lhs == rhs)
    # the point [1 : 0]: X1^d = d*lam*X1^k*0^{d-k} reads 1 = 0
    lhs = 1
    rhs = field.mul_idx(dl, field.pow_idx(0, d - k))
    count += (lhs == rhs)
    return count


def count_affine_N(field: FieldContext, params: DiagonalSurfaceParams) -> int:
    """Points on the surface equation in A^2(F_q)."""
    params.check(field)
    d, k, lam = params.d, params.k, params.lam
    dl = field.mul_idx(field.from_int(d), lam)
    xd = [field.pow_idx(x, d) for x in range(field.q)]
    xk = [field.pow_idx(x, k) for x in range(field.q)]
    xdk = [field.pow_idx(x, d - k) for x in range(field.q)]
    count = 0
    for x1 in range(field.q):
        for x2 in range(field.q):
            lhs = field.add_idx(xd[x1], xd[x2])
            rhs = field.mul_idx(dl, field.mul_idx(xk[x1], xdk[x2]))
            count += (lhs == rhs)
    return count


def _binom_poly_coeffs(field: FieldContext, params: DiagonalSurfaceParams):
    """Coefficients of f_lam(y) = y^{d-k}(1-y)^k - (d*lam)^{-d}."""
    d, k, lam = params.d, params.k, params.lam
    coeffs = [0] * (d + 1)
    for j in range(k + 1):
        c = ((-1) ** j) * comb(k, j)
        coeffs[d - k + j] = field.from_int(c)
    c0 = field.inv_idx(field.pow_idx(field.mul_idx(field.from_int(d), lam), d))
    coeffs[0] = field.neg_idx(c0)
    return coeffs


def r_q(field: FieldContext, params: DiagonalSurfaceParams) -> int:
    """Distinct roots of f_lam(y) = y^{d-k}(1-y)^k - (d*lam)^{-d}."""
    params.check(field)
    return count_distinct_roots(_binom_poly_coeffs(field, params), field)


def r_q_prime(field: FieldContext, params: DiagonalSurfaceParams) -> int:
    """Distinct roots of g_lam(y) = y^d - d*lam*y^k + 1."""
    params.check(field)
    d, k, lam = params.d, params.k, params.lam
    coeffs = [0] * (d + 1)
    coeffs[0] = 1
    coeffs[d] = 1
    coeffs[k] = field.neg_idx(field.mul_idx(field.from_int(d), lam))
    return count_distinct_roots(coeffs, field)


def h_alpha_roots(field: FieldContext, d: int, k: int, alpha: int) -> int:
    """Distinct roots of h_alpha(y) = y^{d-k}(1-y)^k - (-1)^{d-k} alpha."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    coeffs = [0] * (d + 1)
    for j in range(k + 1):
        coeffs[d - k + j] = field.from_int(((-1) ** j) * comb(k, j))
    c0 = field.mul_idx(field.from_int((-1) ** (d - k)), alpha)
    coeffs[0] = field.neg_idx(c0)
    return count_distinct_roots(coeffs, field)


# -- Weierstrass cubics ---------------------------------------------------------

@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 = x^3 + a2 x^2 + a4 x + a6, coefficients as element indices."""

    a2: int
    a4: int
    a6: int

    def discriminant(self, field: FieldContext) -> int:
        """disc of the cubic x^3 + a2 x^2 + a4 x + a6 (zero iff singular)."""
        b, c, d = self.a2, self.a4, self.a6
        f = field
        t1 = f.mul_idx(f.from_int(18), f.mul_idx(b, f.mul_idx(c, d)))
        t2 = f.mul_idx(f.from_int(-4), f.mul_idx(f.pow_idx(b, 3), d))
        t3 = f.mul_idx(f.pow_idx(b, 2), f.pow_idx(c, 2))
        t4 = f.mul_idx(f.from_int(-4), f.pow_idx(c, 3))
        t5 = f.mul_idx(f.from_int(-27), f.pow_idx(d, 2))
        return f.add_idx(t1, f.add_idx(t2, f.add_idx(t3, f.add_idx(t4, t5))))


def weierstrass_count(field: FieldContext, curve: WeierstrassCurve):
    """(#points incl. infinity, q + 1 - #points, singular?).

    Counts the plane cubic as-is: per x there are 1 + phi(f(x)) points,
    with phi(0) = 0, plus the point at infinity.  For a singular cubic
    this is the naive count (the node contributes its one point).
    """
    f = field
    s = 0
    for x in range(f.q):
        val = f.add_idx(f.pow_idx(x, 3),
                        f.add_idx(f.mul_idx(curve.a2, f.pow_idx(x, 2)),
                                  f.add_idx(f.mul_idx(curve.a4, x), curve.a6)))
        s += f.phi_idx(val)
    npoints = f.q + 1 + s
    aq = -s
    singular = curve.discriminant(field) == 0
    return npoints, aq, singular


def ec_count(field: FieldContext, curve: WeierstrassCurve):
    """(#E(F_q), a_q) for a nonsingular curve; raises on singular input."""
    npoints, aq, singular = weierstrass_count(field, curve)
    if singular:
        raise ValueError("singular cubic is not an elliptic curve")
    if abs(aq) > 2 * isqrt(field.q):
        raise AssertionError("Hasse bound violated: counting bug")
    return npoints, aq


def j_invariant_flags(field: FieldContext, curve: WeierstrassCurve):
    """(j == 0?, j == 1728?) for y^2 = x^3 + a4 x + a6 with a2 = 0."""
    if curve.a2 != 0:
        raise ValueError("short Weierstrass form expected")
    # j = 1728 * 4a^3 / (4a^3 + 27b^2): j=0 iff a=0, j=1728 iff b=0
    return curve.a4 == 0, curve.a6 == 0


# -- Hessian cubics ---------------------------------------------------------------

@dataclass(frozen=True)
class HessianCurve:
    """x^3 + y^3 + 1 = 3axy with a^3 != 1 (element index a)."""

    a: int

    def check(self, field: FieldContext):
        if field.pow_idx(self.a, 3) == 1:
            raise ValueError("a^3 = 1 is excluded")


def hessian_count(field: FieldContext, curve: HessianCurve) -> int:
    """Affine F_q-points on x^3 + y^3 + 1 = 3axy, by double enumeration."""
    curve.check(field)
    f = field
    three_a = f.mul_idx(f.from_int(3), curve.a)
    cubes = [f.pow_idx(x, 3) for x in range(f.q)]
    count = 0
    for x in range(f.q):
        lhs_base = f.add_idx(cubes[x], 1)
        ax = f.mul_idx(three_a, x)
        for y in range(f.q):
            count += (f.add_idx(lhs_base, cubes[y]) == f.mul_idx(ax, y))
    return count


def hessian_points_at_infinity(field: FieldContext) -> int:
    """Points [X:Y:0] on the projectivized Hessian: X^3 + Y^3 = 0."""
    return sum(1 for z in range(1, field.q)
               if field.pow_idx(z, 3) == field.from_int(-1))


# -- vectorized trace-of-Frobenius grid (hot path of the f-family theorem) --------

def aq_grid_for_f(field: FieldContext, f_idx: int):
    """a_q of y^2 = x^3 + f x^2 + g x for every g, as a numpy array over g.

    Entry g = 0 is meaningless (the curve degenerates); the singular g
    (g = f^2/4) carries the naive nodal count.
    """
    import numpy as np
    add, mul, phi, _ = field.np_tables()
    q = field.q
    xs = np.arange(q)
    cube = mul[mul[xs, xs], xs]
    fx2 = mul[f_idx, mul[xs, xs]]
    base = add[cube, fx2]                      # x^3 + f x^2, per x
    gx = mul[:, xs]                            # g*x, rows g
    rhs = add[base[None, :], gx]
    return -phi[rhs].sum(axis=1)
