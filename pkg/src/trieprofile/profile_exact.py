"""Exact moments of the external profile B_{n,k} of a random PATRICIA trie.

The first split of n >= 2 strings sends j of them to the 1-side with
probability C(n,j) p^j q^(n-j).  Splits with j in {0, n} are unary and are
compressed away, so conditioning on the first nontrivial split gives

    mu[n][k] (1 - p^n - q^n) = sum_j C(n,j) p^j q^(n-j) (mu[j][k-1] + mu[n-j][k-1])

and the analogous relation for s = E[B^2] with the cross term
2 mu[j][k-1] mu[n-j][k-1] (the two subtrees are independent).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import gmpy2
import numpy as np
from gmpy2 import mpfr

from .numerics import Bias, HPReal, binomial, hp, resolve_precision, working_precision


@dataclass
class ProfileTable:
    """mu[n, k] = E[B_{n,k}] and optionally s[n, k] = E[B_{n,k}^2].

    Rows run over 0 <= n <= N_max (row 0 is unused and zero); columns over
    0 <= k <= k_max.  Entries with k >= n are zero for n >= 2.
    """

    bias: Bias
    n_max: int
    k_max: int
    precision: int
    mu: np.ndarray
    s: Optional[np.ndarray] = None
    _cstar: Optional[HPReal] = field(default=None, repr=False)

    def mean(self, n: int, k: int) -> HPReal:
        self._check(n)
        if k < 0 or k > self.k_max:
            if k > self.k_max and k >= n:
                return mpfr(0)
            raise IndexError(f"k={k} outside the table (k_max={self.k_max})")
        return self.mu[n, k]

    def second(self, n: int, k: int) -> HPReal:
        if self.s is None:
            raise ValueError("table was built without the second-moment layer")
        self._check(n)
        if k > self.k_max and k >= n:
            return mpfr(0)
        return self.s[n, k]

    def var(self, n: int, k: int) -> HPReal:
        with working_precision(self.precision):
            m = self.mean(n, k)
            return self.second(n, k) - m * m

    def row(self, n: int) -> List[HPReal]:
        self._check(n)
        top = min(self.k_max, max(n - 1, 0))
        return [self.mu[n, k] for k in range(top + 1)]

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n={n} outside 1..{self.n_max}")

    def to_csv_rows(self, digits: int = 15) -> List[Tuple[int, int, str, str]]:
        """(n, k, mu, var) rows; var is empty without the second layer."""
        from .numerics import to_decimal

        out = []
        for n in range(1, self.n_max + 1):
            for k in range(len(self.row(n))):
                var = to_decimal(self.var(n, k), digits) if self.s is not None else ""
                out.append((n, k, to_decimal(self.mu[n, k], digits), var))
        return out


def _split_weights(n: int, p: HPReal, q: HPReal, ppow, qpow):
    """Return (w, W) for j = 1..n-1: w_j = C(n,j) p^j q^(n-j), W_j = w_j + w_{n-j}.

    Built by the ratio w_j / w_{j-1} = (n-j+1)/j * p/q; the accumulated
    rounding error is O(n) ulps.
    """
    rho = p / q
    ratios = np.empty(n - 1, dtype=object)
    for j in range(1, n):
        ratios[j - 1] = mpfr(n - j + 1) / j * rho
    w = np.multiply.accumulate(ratios) * qpow[n]
    return w, w + w[::-1]


def _build(n_max: int, bias: Bias, precision: Optional[int], k_max: Optional[int],
           second: bool) -> ProfileTable:
    if n_max < 1:
        raise ValueError("N_max must be at least 1 (empty table)")
    bits = resolve_precision(precision)
    K = n_max if k_max is None else max(1, min(int(k_max), n_max))
    with working_precision(bits):
        p, q = bias.p_hp(), bias.q_hp()
        ppow = [mpfr(1)]
        qpow = [mpfr(1)]
        for _ in range(n_max):
            ppow.append(ppow[-1] * p)
            qpow.append(qpow[-1] * q)
        zero = mpfr(0)
        mu = np.full((n_max + 1, K + 1), zero, dtype=object)
        s = np.full((n_max + 1, K + 1), zero, dtype=object) if second else None
        mu[1, 0] = mpfr(1)
        if second:
            s[1, 0] = mpfr(1)
        for n in range(2, n_max + 1):
            w, W = _split_weights(n, p, q, ppow, qpow)
            denom = 1 - ppow[n] - qpow[n]
            top = min(K, n - 1)
            # mu[j][k-1] vanishes for j < k, so the dot for column k starts at j = k
            for k in range(1, top + 1):
                col = mu[k:n, k - 1]
                mu[n, k] = (W[k - 1:] @ col) / denom
                if second:
                    # the cross term needs both j >= k and n - j >= k
                    if n - k >= k:
                        cross = col[:n - 2 * k + 1] * mu[n - k:k - 1:-1, k - 1]
                        cross = w[k - 1:n - k] @ cross
                    else:
                        cross = 0
                    s[n, k] = (W[k - 1:] @ s[k:n, k - 1] + 2 * cross) / denom
    return ProfileTable(bias=bias, n_max=n_max, k_max=K, precision=bits, mu=mu, s=s)


def mean_profile(n_max: int, bias: Bias, precision: Optional[int] = None,
                 k_max: Optional[int] = None) -> ProfileTable:
    """First-moment table for n <= n_max, columns k <= k_max (default: all)."""
    return _build(n_max, Bias.of(bias), precision, k_max, second=False)


def second_moment_profile(n_max: int, bias: Bias, precision: Optional[int] = None,
                          k_max: Optional[int] = None) -> ProfileTable:
    """Table with both mu and s = E[B^2] layers."""
    return _build(n_max, Bias.of(bias), precision, k_max, second=True)


def depth_pmf(table: ProfileTable, n: int) -> List[HPReal]:
    """P[D_n = k] = mu[n][k] / n."""
    with working_precision(table.precision):
        return [m / n for m in table.row(n)]


@dataclass(frozen=True)
class TailBounds:
    height_tail: HPReal          # sum_{j>k} mu[n][j] >= P[H_n > k]
    cheb: Optional[HPReal]       # Var[B_{n,k}] / mu[n][k]^2 >= P[B_{n,k} = 0]
    fillup_lower: HPReal         # mu[n][k] >= P[F_n < k]
    cheb_defined: bool


def tail_bounds(table: ProfileTable, n: int, k: int) -> TailBounds:
    row = table.row(n)
    if k < 0:
        raise IndexError("k must be nonnegative")
    with working_precision(table.precision):
        if n - 1 > table.k_max and k < n - 1:
            raise IndexError("height tail needs the full row; rebuild with larger k_max")
        tail = sum(row[k + 1:], mpfr(0))
        m = row[k] if k < len(row) else mpfr(0)
        cheb = None
        if m > 0 and table.s is not None:
            cheb = table.var(n, k) / (m * m)
        return TailBounds(tail, cheb, m, m > 0)


def cstar(bias: Bias, tol: Optional[float] = None,
          precision: Optional[int] = None) -> Tuple[HPReal, HPReal]:
    """prod_{j>=2} (1 + (q/p)^(j-2)) / (1 - p^j - q^j), with a certified error.

    Returns (value, absolute error bound).  ``tol`` is relative and defaults
    to 2^-(bits-8).  The product diverges at p = 1/2 (every factor tends to
    2), so p > 1/2 is required.
    """
    bias = Bias.of(bias)
    if bias.symmetric:
        raise ValueError("C_*(p) diverges at p = 1/2")
    bits = resolve_precision(precision)
    floor = mpfr(2) ** (-(bits - 8))
    with working_precision(bits + 32):
        tol_hp = floor if tol is None else mpfr(tol)
        if tol_hp < floor / 256:
            raise ArithmeticError(f"C_* tolerance {tol} is below the {bits}-bit noise floor")
        p, q = bias.p_hp(), bias.q_hp()
        r = q / p
        prod = mpfr(1)
        pj, qj, rj = p * p, q * q, mpfr(1)
        j = 2
        while True:
            prod *= (1 + rj) / (1 - pj - qj)
            pj *= p
            qj *= q
            rj *= r
            j += 1
            # log of the remaining factors is at most 2 sum_{i>=j} (r^(i-2) + p^i + q^i)
            tail_log = 2 * (rj / (1 - r) + pj / (1 - p) + qj / (1 - q))
            if tail_log < mpfr(0.5):
                err = prod * (gmpy2.exp(tail_log) - 1)
                if err <= tol_hp * prod:
                    return +prod, err


def xi_of_n(table: ProfileTable, ell: int, n: int) -> HPReal:
    """xi_ell(n) = mu[n][n-ell] / (n! C_* p^{(n-ell)(n-ell+1)/2} q^{n-ell})."""
    if not 1 <= ell < n <= table.n_max:
        raise IndexError("need 1 <= ell < n <= N_max")
    k = n - ell
    with working_precision(table.precision):
        if table._cstar is None:
            table._cstar = cstar(table.bias, precision=table.precision)[0]
        p, q = table.bias.p_hp(), table.bias.q_hp()
        scale = mpfr(math.factorial(n)) * table._cstar * p ** (k * (k + 1) // 2) * q ** k
        return table.mean(n, k) / scale


# --- float64 banded recurrence for large n ----------------------------------------

def banded_mean_profile(n_max: int, bias: Bias, k_max: Optional[int] = None,
                        width: float = 12.0) -> np.ndarray:
    """mu[m][k] for m <= n_max in float64, keeping only the binomial mass
    within ``width`` standard deviations of each split mode.

    The dropped weight is below exp(-width^2/2) per row, so the relative
    error is far under the Monte Carlo noise it is compared against.  Meant
    for n in the tens of thousands, where the exact table is out of reach.
    Raises ArithmeticError if column k_max still carries visible mass.
    """
    bias = Bias.of(bias)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    p, q = float(bias.p), float(bias.q)
    lp, lq = math.log(p), math.log(q)
    if k_max is None:
        k_max = int(min(n_max - 1, 2 * math.log(max(n_max, 2)) / -lp + 40))
    K = max(1, k_max)
    lf = np.array([math.lgamma(i + 1) for i in range(n_max + 1)])
    mu = np.zeros((n_max + 1, K + 1))
    mu[1, 0] = 1.0
    for m in range(2, n_max + 1):
        half = int(math.ceil(width * math.sqrt(m * p * q))) + 10
        c = int(round(m * p))
        lo, hi = max(1, c - half), min(m - 1, c + half)
        j = np.arange(lo, hi + 1)
        w = np.exp(lf[m] - lf[j] - lf[m - j] + j * lp + (m - j) * lq)
        denom = -math.expm1(m * lp) - q ** m
        acc = w @ mu[lo:hi + 1, :K] + w @ mu[m - hi:m - lo + 1, :K][::-1]
        mu[m, 1:] = acc / denom
    top = mu[n_max, K]
    if n_max - 1 > K and top > 1e-30:
        raise ArithmeticError(f"column k_max={K} still holds mass {top:.3g}; raise k_max")
    return mu


# --- exhaustive enumeration (test oracle) -----------------------------------

def profile_distribution(n: int, p: Fraction) -> Dict[Tuple[int, ...], Fraction]:
    """Exact law of the profile vector (B_{n,0}, B_{n,1}, ...) in rationals.

    Enumerates every first split and convolves the laws of the two
    subtrees.  Independent of the floating-point recurrence; meant for n <= 10.
    """
    p = Fraction(p)
    q = 1 - p
    memo: Dict[int, Dict[Tuple[int, ...], Fraction]] = {1: {(1,): Fraction(1)}}

    def law(m: int) -> Dict[Tuple[int, ...], Fraction]:
        if m in memo:
            return memo[m]
        denom = 1 - p**m - q**m
        out: Dict[Tuple[int, ...], Fraction] = {}
        for j in range(1, m):
            pj = math.comb(m, j) * p**j * q**(m - j) / denom
            for a, pa in law(j).items():
                for b, pb in law(m - j).items():
                    width = max(len(a), len(b))
                    prof = (0,) + tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                                        for i in range(width))
                    out[prof] = out.get(prof, Fraction(0)) + pj * pa * pb
        memo[m] = out
        return out

    return law(n)


def enumerated_moments(n: int, p: Fraction) -> Tuple[List[Fraction], List[Fraction]]:
    """(E[B_{n,k}], Var[B_{n,k}]) for k = 0..n-1 by exhaustive enumeration."""
    dist = profile_distribution(n, p)
    width = max(n, max(len(v) for v in dist))
    mean = [Fraction(0)] * width
    sq = [Fraction(0)] * width
    for prof, pr in dist.items():
        for k, b in enumerate(prof):
            mean[k] += pr * b
            sq[k] += pr * b * b
    return mean, [sq[k] - mean[k] ** 2 for k in range(width)]
