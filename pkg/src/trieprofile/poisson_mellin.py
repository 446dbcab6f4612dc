"""Poisson transforms of the profile moments and their exact inversions.

Two routes to the same number G_k(n) = sum_m mu[m][k] n^m e^{-n} / m!:
the direct Poisson sum over the exact table, and the residue (kappa) sum
that comes out of Mellin inversion.  Agreement of the two is the main
oracle of this module.  Also here: the depoissonization corrections for the
mean and the variance, and the A_k(s) series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import gmpy2
from gmpy2 import mpfr

from .numerics import Bias, HPReal, binomial, hp, resolve_precision, working_precision
from .profile_exact import ProfileTable, second_moment_profile, mean_profile


class TruncationError(ArithmeticError):
    """A series cutoff was too small to certify the requested value."""


def default_cutoff(n: float) -> int:
    return int(math.ceil(n + 64 * math.sqrt(n) + 64))


@dataclass
class TransformContext:
    bias: Bias
    profile: ProfileTable
    m_cutoff: int

    @property
    def precision(self) -> int:
        return self.profile.precision


def make_context(bias: Bias, z_max: float, k_max: int, second: bool = True,
                 precision: Optional[int] = None) -> TransformContext:
    """Build a profile table wide enough for Poisson sums up to z_max."""
    bias = Bias.of(bias)
    cutoff = default_cutoff(z_max)
    build = second_moment_profile if second else mean_profile
    table = build(cutoff, bias, precision, k_max=k_max)
    return TransformContext(bias, table, cutoff)


def T(s, bias: Bias) -> HPReal:
    """p^{-s} + q^{-s}."""
    bias = Bias.of(bias)
    s = hp(s)
    p, q = bias.p_hp(), bias.q_hp()
    if gmpy2.is_integer(s):
        e = -int(s)
        return p ** e + q ** e
    return gmpy2.exp(-s * gmpy2.log(p)) + gmpy2.exp(-s * gmpy2.log(q))


def _poisson_weights(z: HPReal, M: int) -> List[HPReal]:
    """pi_m = z^m e^{-z} / m! for m = 0..M."""
    w = [gmpy2.exp(-z)]
    for m in range(1, M + 1):
        w.append(w[-1] * z / m)
    return w


def _moment_sums(column, z: HPReal, ctx: TransformContext) -> Tuple[HPReal, HPReal, HPReal]:
    """(S, S', S'') for S(z) = sum_m column[m] pi_m(z), with a tail check.

    pi_m' = pi_{m-1} - pi_m and pi_m'' = pi_{m-2} - 2 pi_{m-1} + pi_m.
    """
    M = ctx.m_cutoff
    if z <= 0:
        raise ValueError("Poisson transforms are evaluated at z > 0")
    w = _poisson_weights(z, M + 2)
    s0 = s1 = s2 = mpfr(0)
    for m in range(1, M + 1):
        c = column[m]
        if c == 0:
            continue
        s0 += c * w[m]
        s1 += c * (w[m - 1] - w[m])
        s2 += c * ((w[m - 2] if m >= 2 else 0) - 2 * w[m - 1] + w[m])
    # column entries are at most m^2 (second moments); tail of sum m^2 pi_m
    if M + 2 <= z:
        raise TruncationError(f"m_cutoff={M} does not cover z={z}")
    tail = mpfr(M + 1) ** 2 * w[M + 1] / (1 - z / (M + 2)) * 4
    scale = max(abs(s0), mpfr(2) ** -64)
    if tail > scale * mpfr(2) ** (-(ctx.precision - 16)):
        raise TruncationError(f"Poisson tail {float(tail):.3g} too large at z={float(z)}; raise m_cutoff")
    return s0, s1, s2


def _column(ctx: TransformContext, k: int, second: bool = False):
    table = ctx.profile
    if k < 0:
        return [mpfr(0)] * (ctx.m_cutoff + 1)
    if k > table.k_max:
        raise IndexError(f"k={k} exceeds table k_max={table.k_max}")
    if ctx.m_cutoff > table.n_max:
        raise TruncationError("profile table shorter than m_cutoff")
    src = table.s if second else table.mu
    if src is None:
        raise ValueError("second-moment layer missing")
    return src[:, k]


def poisson_G(k: int, z, ctx: TransformContext, derivatives: bool = False):
    """G_k(z) = sum_m mu[m][k] z^m e^{-z}/m!; with derivatives=True returns (G, G', G'')."""
    with working_precision(ctx.precision):
        vals = _moment_sums(_column(ctx, k), hp(z), ctx)
    return vals if derivatives else vals[0]


def functional_equation_residual(k: int, z, ctx: TransformContext) -> HPReal:
    """G_k(z) - G_{k-1}(pz) - G_{k-1}(qz) - e^{-pz}(G_k - G_{k-1})(qz) - e^{-qz}(G_k - G_{k-1})(pz)."""
    with working_precision(ctx.precision):
        z = hp(z)
        p, q = ctx.bias.p_hp(), ctx.bias.q_hp()

        def G(kk, x):
            return poisson_G(kk, x, ctx) if kk >= 0 else mpfr(0)

        diff_q = G(k, q * z) - G(k - 1, q * z)
        diff_p = G(k, p * z) - G(k - 1, p * z)
        return (G(k, z) - G(k - 1, p * z) - G(k - 1, q * z)
                - gmpy2.exp(-p * z) * diff_q - gmpy2.exp(-q * z) * diff_p)


def depoisson_mu(n: int, k: int, ctx: TransformContext) -> HPReal:
    """G_k(n) - (n/2) G_k''(n)."""
    with working_precision(ctx.precision):
        g, _, g2 = poisson_G(k, n, ctx, derivatives=True)
        return g - mpfr(n) / 2 * g2


def poisson_variance(k: int, z, ctx: TransformContext, derivatives: bool = False):
    """V_k(z) = sum_m E[B_{m,k}^2] pi_m(z) - G_k(z)^2 (and V', V'' on request)."""
    with working_precision(ctx.precision):
        z = hp(z)
        g, g1, g2 = _moment_sums(_column(ctx, k), z, ctx)
        s, s1, s2 = _moment_sums(_column(ctx, k, second=True), z, ctx)
        v = s - g * g
        if not derivatives:
            return v
        return v, s1 - 2 * g * g1, s2 - 2 * g1 * g1 - 2 * g * g2


def depoisson_var(n: int, k: int, ctx: TransformContext) -> HPReal:
    """V(n) - (n/2) V''(n) - n G'(n)^2 + (n^2/4) G''(n)^2."""
    with working_precision(ctx.precision):
        v, _, v2 = poisson_variance(k, n, ctx, derivatives=True)
        _, g1, g2 = poisson_G(k, n, ctx, derivatives=True)
        n = mpfr(n)
        return v - n / 2 * v2 - n * g1 * g1 + n * n / 4 * g2 * g2


def a_k(s, k: int, ctx: TransformContext, j_cap: Optional[int] = None,
        m_cap: Optional[int] = None, tol: float = 1e-30) -> HPReal:
    """A_k(s) = sum_{j<=k} T(s)^{-j} sum_{m>=j} T(-m) (mu[m][j]-mu[m][j-1]) Gamma(m+s)/(Gamma(s+1) m!).

    The Gamma ratio is the finite product (s+1)(s+2)...(s+m-1)/m!, which is
    also its analytic continuation, so any real s is accepted.  The m = 0
    term vanishes because mu[0][.] = 0.
    """
    table = ctx.profile
    j_cap = k if j_cap is None else min(j_cap, k)
    m_cap = min(ctx.m_cutoff, table.n_max) if m_cap is None else m_cap
    if m_cap > table.n_max:
        raise TruncationError("m_cap beyond the profile table")
    with working_precision(ctx.precision):
        s = hp(s)
        Ts = T(s, ctx.bias)
        ratio = [mpfr(0), mpfr(1)]           # Gamma(m+s)/(Gamma(s+1) m!)
        for m in range(2, m_cap + 1):
            ratio.append(ratio[-1] * (s + m - 1) / m)
        total = mpfr(0)
        eps = mpfr(tol)
        for j in range(0, j_cap + 1):
            inner = mpfr(0)
            edge = mpfr(0)
            for m in range(max(j, 1), m_cap + 1):
                d = table.mean(m, j) - (table.mean(m, j - 1) if j >= 1 else 0)
                term = T(-m, ctx.bias) * d * ratio[m]
                inner += term
                if m > m_cap - 8:
                    edge = max(edge, abs(term))
            if edge > eps * max(abs(inner), eps):
                raise TruncationError(f"A_k series not converged at m_cap={m_cap} (j={j})")
            total += inner / Ts ** j
        return total


def _kappa_start(m: int, rho) -> int:
    return max(-int(math.ceil(m + rho)) + 1, 0)


def kappa(m: int, j: int, n, k: int, rho, ctx_or_bias, precision: Optional[int] = None,
          series: bool = False) -> HPReal:
    """Residue weight kappa_{m,j}(n) for the contour abscissa rho.

    rho > 0 (or any rho whose start index is 0): the binomial/exponential
    closed form.  Otherwise the alternating series from the shifted start.
    ``series=True`` forces the series even when the start index is 0.
    """
    bias = ctx_or_bias.bias if isinstance(ctx_or_bias, TransformContext) else Bias.of(ctx_or_bias)
    bits = ctx_or_bias.precision if isinstance(ctx_or_bias, TransformContext) else resolve_precision(precision)
    rho = float(rho)
    if rho < 0 and float(rho).is_integer():
        raise ValueError("rho must be a non-integer when negative")
    start = _kappa_start(m, rho)
    with working_precision(bits):
        n = hp(n)
        p, q = bias.p_hp(), bias.q_hp()
        lead = T(-m, bias) / gmpy2.factorial(m)
        d = k - j
        if start == 0 and not series:
            acc = mpfr(0)
            for r in range(d + 1):
                a = n * p ** r * q ** (d - r)
                acc += binomial(d, r) * a ** m * gmpy2.exp(-a)
            return lead * acc
        # alternating series sum_{l>=start} (-n)^l/l! T(-m-l)^{k-j}
        eps = mpfr(2) ** (-(bits + 8))
        term_base = (-n) ** start / gmpy2.factorial(start)
        acc = mpfr(0)
        l = start
        while True:
            t = term_base * T(-m - l, bias) ** d
            acc += t
            if l > n and abs(t) < eps * max(abs(acc), eps):
                break
            l += 1
            term_base = term_base * (-n) / l
            if l > 100000:
                raise ArithmeticError("kappa series did not converge")
        return lead * n ** m * acc


def residue_G(k: int, n, rho, ctx: TransformContext, m_cap: Optional[int] = None) -> HPReal:
    """sum_{j<=k} sum_{m>=j} kappa_{m,j} (mu[m][j] - mu[m][j-1]).

    For rho < -1 the j = 0 and j = 1 layers each drop the first terms of
    their kappa series and the omissions cancel against each other; with
    k = 0 there is no j = 1 layer, so that case is rejected.
    """
    if k == 0 and rho < -1:
        raise ValueError("residue form with rho < -1 needs k >= 1")
    table = ctx.profile
    m_cap = min(ctx.m_cutoff, table.n_max) if m_cap is None else m_cap
    with working_precision(ctx.precision):
        total = mpfr(0)
        eps = mpfr(2) ** (-(ctx.precision - 16))
        for j in range(0, k + 1):
            for m in range(max(j, 1), m_cap + 1):
                d = table.mean(m, j) - (table.mean(m, j - 1) if j >= 1 else 0)
                if d != 0:
                    total += kappa(m, j, n, k, rho, ctx) * d
            # |mu differences| <= m, so the last weight bounds the neglected tail
            edge = abs(kappa(m_cap, j, n, k, rho, ctx)) * m_cap
            if edge > eps * max(abs(total), eps):
                raise TruncationError("residue sum not converged; raise m_cap")
        return total
