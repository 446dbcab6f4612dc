"""The near-diagonal limit sequence xi_l and everything built on it.

xi_l describes mu[n][n-l] for fixed l as n grows:

    mu[n][n-l] ~ n! C_*(p) p^{(n-l)(n-l+1)/2} q^{n-l} xi_l.

Its generating function X(z) = sum_L xi_{L+1} z^L is an infinite product,
which gives an independent route to the coefficients and to the vanishing
double series D(p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import gmpy2
from gmpy2 import mpfr

from .numerics import Bias, HPReal, hp, resolve_precision, working_precision


@dataclass(frozen=True)
class XiSequence:
    bias: Bias
    xi: List[HPReal]        # xi[0] is a placeholder; xi[1] = 1
    precision: int

    @property
    def l_max(self) -> int:
        return len(self.xi) - 1

    def __getitem__(self, ell: int) -> HPReal:
        if not 1 <= ell <= self.l_max:
            raise IndexError(f"xi index {ell} outside 1..{self.l_max}")
        return self.xi[ell]

    def decay_constant(self) -> HPReal:
        """Smallest C1 with xi_l <= C1/(l-1)! for all stored l."""
        with working_precision(self.precision):
            return max(self.xi[l] * math.factorial(l - 1) for l in range(1, self.l_max + 1))


def _factorials(n: int) -> List[HPReal]:
    out = [mpfr(1)]
    for i in range(1, n + 1):
        out.append(out[-1] * i)
    return out


def xi_limits(l_max: int, bias: Bias, precision: Optional[int] = None) -> XiSequence:
    """Solve the xi recurrence with the J = 1 self-term moved to the left.

    xi_l (1 - p^{l-1}) = q^{-1} p^l sum_{J=2}^{l} xi_{l+1-J} (q/p)^J / J!
    """
    if l_max < 1:
        raise ValueError("l_max must be at least 1")
    bias = Bias.of(bias)
    bits = resolve_precision(precision)
    with working_precision(bits):
        p, q = bias.p_hp(), bias.q_hp()
        r = q / p
        fac = _factorials(l_max + 1)
        rpow = [mpfr(1)]
        for _ in range(l_max + 1):
            rpow.append(rpow[-1] * r)
        xi = [mpfr(0), mpfr(1)]
        for l in range(2, l_max + 1):
            acc = mpfr(0)
            for J in range(2, l + 1):
                acc += xi[l + 1 - J] * rpow[J] / fac[J]
            xi.append(acc * p ** l / q / (1 - p ** (l - 1)))
    return XiSequence(bias, xi, bits)


def _product_tail_bound(first_t: HPReal, ratio: HPReal) -> HPReal:
    # |log factor| <= |t| for |t| <= 1, t shrinking geometrically by `ratio`
    return gmpy2.exp(abs(first_t) / (1 - ratio)) - 1


def xi_gf(z, bias: Bias, j_max: Optional[int] = None, precision: Optional[int] = None,
          with_error: bool = False):
    """X(z) = prod_{j>=0} (e^{q p^j z} - 1)/(q p^j z), truncated with a tail bound."""
    bias = Bias.of(bias)
    bits = resolve_precision(precision)
    with working_precision(bits):
        p, q = bias.p_hp(), bias.q_hp()
        z = hp(z)
        if z == 0:
            return (mpfr(1), mpfr(0)) if with_error else mpfr(1)
        eps = mpfr(2) ** (-(bits - 8))
        prod = mpfr(1)
        t = q * z
        j = 0
        while True:
            if j_max is not None and j > j_max:
                break
            f = gmpy2.expm1(t) / t
            if abs(f - 1) < eps and abs(t) <= 1 and j_max is None:
                break
            prod *= f
            t *= p
            j += 1
        err = prod * _product_tail_bound(t, p)
        return (prod, err) if with_error else prod


def _series_log(f: Sequence[HPReal], n: int) -> List[HPReal]:
    """log f for f[0] = 1, via f' = f (log f)'."""
    g = [mpfr(0)] * (n + 1)
    for k in range(1, n + 1):
        acc = k * f[k]
        for i in range(1, k):
            acc -= i * g[i] * f[k - i]
        g[k] = acc / k
    return g


def _series_exp(g: Sequence[HPReal], n: int) -> List[HPReal]:
    """exp g for g[0] = 0."""
    f = [mpfr(1)] + [mpfr(0)] * n
    for k in range(1, n + 1):
        acc = mpfr(0)
        for i in range(1, k + 1):
            acc += i * g[i] * f[k - i]
        f[k] = acc / k
    return f


def _scaled_product_series(base: Sequence[HPReal], scales, n: int) -> List[HPReal]:
    """Coefficients of prod_j f(a_j z) with f = sum base[k] z^k, base[0] = 1.

    Uses log prod = sum_k (log f)_k z^k sum_j a_j^k, with the power sums
    supplied in closed form by ``scales(k)``.
    """
    lg = _series_log(base, n)
    return _series_exp([lg[k] * scales(k) if k else mpfr(0) for k in range(n + 1)], n)


def xi_gf_coefficients(n_terms: int, bias: Bias, precision: Optional[int] = None) -> List[HPReal]:
    """[z^L] X(z) for L < n_terms, i.e. xi_1, ..., xi_{n_terms} from the product side."""
    bias = Bias.of(bias)
    bits = resolve_precision(precision)
    with working_precision(bits):
        p, q = bias.p_hp(), bias.q_hp()
        n = n_terms - 1
        fac = _factorials(n + 2)
        base = [1 / fac[k + 1] for k in range(n + 1)]       # (e^z - 1)/z
        # sum_{j>=0} (q p^j)^k = q^k / (1 - p^k)
        return _scaled_product_series(base, lambda k: q ** k / (1 - p ** k), n)


def xi_poisson(z, bias: Bias, precision: Optional[int] = None) -> HPReal:
    """z prod_{j>=0} (1 - e^{-q p^j z})/(q p^j z)."""
    bias = Bias.of(bias)
    bits = resolve_precision(precision)
    with working_precision(bits):
        p, q = bias.p_hp(), bias.q_hp()
        z = hp(z)
        if not z > 0:
            raise ValueError("xi_poisson needs z > 0")
        eps = mpfr(2) ** (-(bits - 8))
        prod = z
        t = q * z
        while True:
            f = -gmpy2.expm1(-t) / t
            if abs(f - 1) < eps and t <= 1:
                break
            prod *= f
            t *= p
        return prod


def xi_asymptotic(ell: int, bias: Bias, precision: Optional[int] = None) -> HPReal:
    """xi_tilde(l) / l!."""
    with working_precision(resolve_precision(precision)):
        return xi_poisson(ell, bias, precision) / gmpy2.factorial(ell)


def knessl_mu(n: int, ell: int, bias: Bias, xi: Optional[XiSequence] = None,
              xi_value: Optional[HPReal] = None, precision: Optional[int] = None) -> HPReal:
    """n! C_*(p) p^{(n-l)(n-l+1)/2} q^{n-l} xi_l."""
    from .profile_exact import cstar

    if not 1 <= ell < n:
        raise ValueError("need 1 <= ell < n")
    bias = Bias.of(bias)
    bits = resolve_precision(precision)
    with working_precision(bits):
        if xi_value is None:
            xi = xi if xi is not None and xi.l_max >= ell else xi_limits(ell, bias, bits)
            xi_value = xi[ell]
        k = n - ell
        p, q = bias.p_hp(), bias.q_hp()
        return (gmpy2.factorial(n) * cstar(bias, precision=bits)[0]
                * p ** (k * (k + 1) // 2) * q ** k * xi_value)


def mu_upper_shape(n: int, k: int, bias: Bias) -> HPReal:
    """n!/(n-k-1)! p^{(k^2+k)/2} q^k, the upper-bound shape without its constant."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    bias = Bias.of(bias)
    p, q = bias.p_hp(), bias.q_hp()
    ratio = mpfr(math.factorial(n) // math.factorial(n - k - 1))
    return ratio * p ** ((k * k + k) // 2) * q ** k


def mu_upper(n: int, k: int, bias: Bias, C) -> HPReal:
    return hp(C) * mu_upper_shape(n, k, bias)


def calibrate_mu_upper(table, n_max: Optional[int] = None) -> HPReal:
    """Smallest C making mu_upper dominate the table for 1 <= k < n <= n_max."""
    n_max = table.n_max if n_max is None else n_max
    with working_precision(table.precision):
        best = mpfr(0)
        for n in range(2, n_max + 1):
            for k in range(1, min(n - 1, table.k_max) + 1):
                best = max(best, table.mean(n, k) / mu_upper_shape(n, k, table.bias))
        return best


def mu_smallj(m: int, j: int, bias: Bias) -> HPReal:
    """m q^j (1 - q^j)^{m-1}."""
    if m < 1 or j < 0:
        raise ValueError("need m >= 1 and j >= 0")
    q = Bias.of(bias).q_hp()
    qj = q ** j
    return m * qj * (1 - qj) ** (m - 1)


def d_of_p(bias: Bias, l_max: int = 80, m_max: int = 80,
           precision: Optional[int] = None) -> HPReal:
    """sum_{L<=l_max, M<=m_max} xi_{L+1} (-1)^M/M! p^{((L+M)^2+L-M)/2} q^{-L-M}."""
    bias = Bias.of(bias)
    if bias.symmetric:
        raise ValueError("D(p) is defined for 1/2 < p < 1")
    bits = resolve_precision(precision)
    xi = xi_limits(l_max + 1, bias, bits)
    with working_precision(bits):
        p, q = bias.p_hp(), bias.q_hp()
        fac = _factorials(m_max)
        total = mpfr(0)
        for L in range(l_max + 1):
            inner = mpfr(0)
            for M in range(m_max + 1):
                e2 = (L + M) ** 2 + L - M           # always even
                term = p ** (e2 // 2) / (q ** (L + M) * fac[M])
                inner += -term if M % 2 else term
            total += xi[L + 1] * inner
        return total


@dataclass(frozen=True)
class WitnessRow:
    N: int
    Q: HPReal              # [z^N] Q(z)
    F: HPReal              # p^N Q_N - Q_{N-1}
    F_from_xi: HPReal      # the same coefficient assembled from xi
    partial: HPReal        # sum_{n<=N} F_n p^{n(n-1)/2}
    closed: HPReal         # Q_N p^{N(N+1)/2}

    @property
    def residual(self) -> HPReal:
        return self.partial - self.closed


def d_identity_witness(bias: Bias, n_max: int, precision: Optional[int] = None) -> List[WitnessRow]:
    """Coefficient trace behind D(p) = 0.

    Q(z) = prod_{j>=0} (1 - e^{-p^j z})/(p^j z) and F(z) = Q(pz) - z Q(z).
    The product starts at j = 0; with j >= 1 the identity F = e^{-z} Q(pz)
    breaks.
    The partial sums of F_n p^{n(n-1)/2} telescope to Q_N p^{N(N+1)/2}.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    bias = Bias.of(bias)
    bits = resolve_precision(precision)
    xi = xi_limits(n_max + 1, bias, bits)
    with working_precision(bits):
        p, q = bias.p_hp(), bias.q_hp()
        fac = _factorials(n_max + 2)
        base = [(-1) ** k / fac[k + 1] for k in range(n_max + 1)]   # (1 - e^{-z})/z
        Q = _scaled_product_series(base, lambda k: 1 / (1 - p ** k), n_max)
        rows = []
        partial = mpfr(0)
        prev = mpfr(0)
        for N in range(n_max + 1):
            F = p ** N * Q[N] - prev
            fx = mpfr(0)
            for L in range(N + 1):
                term = xi[L + 1] * p ** L / fac[N - L]
                fx += -term if (N - L) % 2 else term
            fx /= q ** N
            partial += F * p ** (N * (N - 1) // 2)
            rows.append(WitnessRow(N, Q[N], F, fx, +partial, Q[N] * p ** (N * (N + 1) // 2)))
            prev = Q[N]
        return rows
