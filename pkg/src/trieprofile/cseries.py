"""The constant C(p,u,v) behind the height lower bound, and its p -> 1/2 limit.

Notation shared by all components, with a = log(1/p)/log(p/q), r = q/p:

    pref(J) = p^{J(J+1)/2} q^J u^{J a}
    x = R - v - J a,  y = r^x,  w = u^x y^J
    c_L = xi_{L+1} p^L

C1 sums J > 0, C2/C30/C32 sum J <= 0 (C30 where x <= 0, C32 where x > 0),
and C31,0 / C31,K are the R-geometric pieces.  The combination is

    C = -C1 - C2 - C30 - C32 - C31,0 + sum_{K=1}^{K0} C31,K.

For C31,K the J range is shifted with K: J runs over [-J0-K, -K], i.e. J0
values below the first admissible index -K.  With the unshifted range
[-J0, -K] the large-p reference rows are not reproduced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import gmpy2
from gmpy2 import mpfr

from .numerics import Bias, HPReal, hp, resolve_precision, working_precision
from .xi_engine import xi_limits

CLIP_TOLERANCE = 1e-5


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class CTruncation:
    J0: int = 35
    L0: int = 70
    K0: int = 80
    R0: int = 95

    def __post_init__(self) -> None:
        if min(self.J0, self.L0, self.K0, self.R0) < 1:
            raise ValueError("truncation limits must be positive")

    def raised(self, by: int = 10) -> "CTruncation":
        return CTruncation(self.J0 + by, self.L0 + by, self.K0 + by, self.R0 + by)

    def as_dict(self) -> Dict[str, int]:
        return {"J0": self.J0, "L0": self.L0, "K0": self.K0, "R0": self.R0}


DEFAULT_TRUNCATION = CTruncation()


# --- level geometry -----------------------------------------------------------

@dataclass(frozen=True)
class CSeriesGeometry:
    n: float
    k: float
    psi: float
    j_star: float
    j0: int
    r0_bar: HPReal
    r1_bar: HPReal
    u: HPReal
    v: float
    delta: float
    residual: float


def level_geometry(n, bias: Bias, epsilon: float = 0.5) -> CSeriesGeometry:
    """Solve (q/p)^{j}(k_L - j) = a (j - psi_L) for j* by bisection."""
    bias = Bias.of(bias)
    if bias.symmetric:
        raise GeometryError("level geometry needs p > 1/2")
    if not 0 < epsilon < 1:
        raise GeometryError("epsilon must lie in (0, 1)")
    n = hp(n)
    if n < 16:
        raise GeometryError("level geometry needs n >= 16")
    p, q = bias.p_hp(), bias.q_hp()
    lpq = gmpy2.log(p / q)
    a = -gmpy2.log(p) / lpq
    psi = (1 - mpfr(epsilon)) / 2 * gmpy2.log(gmpy2.log(n)) / lpq
    k = gmpy2.log(n) / -gmpy2.log(p) + psi
    r = q / p

    def f(j):
        return r ** j * (k - j) - a * (j - psi)

    lo, hi = psi, k
    if not (f(lo) > 0 and f(hi) < 0):
        raise GeometryError(f"no sign change on [{float(lo):.6g}, {float(hi):.6g}] "
                            f"(f={float(f(lo)):.3g}, {float(f(hi)):.3g})")
    while hi - lo > mpfr(1e-14):
        mid = (lo + hi) / 2
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    j_star = (lo + hi) / 2
    j0 = int(gmpy2.floor(j_star + mpfr(0.5)))
    r0 = r ** j0 * (k - j0)
    r1 = a * (j0 - psi)
    x = float(mpfr(float(r1 - gmpy2.floor(r1))) * (gmpy2.log(q) / gmpy2.log(p) - 1))
    return CSeriesGeometry(
        n=float(n), k=float(k), psi=float(psi), j_star=float(j_star), j0=j0,
        r0_bar=r0, r1_bar=r1, u=r0 / r1, v=float(r1 - gmpy2.floor(r1)),
        delta=x - math.floor(x), residual=float(abs(f(j_star))))


def f0(geom: CSeriesGeometry, bias: Bias) -> HPReal:
    """p^{j0(j0+1)/2} q^{j0-1} n^{j0} p^{j0(k-j0)} r0^{r1} / Gamma(r1 + 1)."""
    bias = Bias.of(bias)
    p, q = bias.p_hp(), bias.q_hp()
    j0 = geom.j0
    n, k = hp(geom.n), hp(geom.k)
    return (p ** (j0 * (j0 + 1) // 2) * q ** (j0 - 1) * n ** j0
            * gmpy2.exp(j0 * (k - j0) * gmpy2.log(p))
            * gmpy2.exp(geom.r1_bar * gmpy2.log(geom.r0_bar) - gmpy2.lgamma(geom.r1_bar + 1)[0]))


def poisson_bump(geom: CSeriesGeometry) -> HPReal:
    """e^{-r0} r0^{r1} / Gamma(r1 + 1)."""
    r0, r1 = geom.r0_bar, geom.r1_bar
    return gmpy2.exp(-r0 + r1 * gmpy2.log(r0) - gmpy2.lgamma(r1 + 1)[0])


# --- the six components ----------------------------------------------------------

@dataclass
class CResult:
    p: HPReal
    u: HPReal
    v: HPReal
    trunc: CTruncation
    components: Dict[str, HPReal]
    edges: Dict[str, HPReal]
    warnings: List[str] = field(default_factory=list)

    @property
    def value(self) -> HPReal:
        c = self.components
        return -c["C1"] - c["C2"] - c["C30"] - c["C32"] - c["C31_0"] + c["C31_K"]


class _Engine:
    """Shared per-(p, trunc) data: xi, factorials, powers."""

    def __init__(self, bias: Bias, trunc: CTruncation, bits: int):
        self.bias = bias
        self.trunc = trunc
        self.bits = bits
        p, q = bias.p_hp(), bias.q_hp()
        self.p, self.q = p, q
        self.r = q / p
        self.a = -gmpy2.log(p) / gmpy2.log(p / q)
        L_need = max(trunc.L0, trunc.J0) + 2
        self.xi = xi_limits(L_need, bias, bits).xi
        self.c = [self.xi[L + 1] * p ** L for L in range(L_need)]
        self.fac = [mpfr(1)]
        for i in range(1, trunc.J0 + trunc.L0 + 4):
            self.fac.append(self.fac[-1] * i)

    def pref(self, J: int, u: HPReal) -> HPReal:
        p, q = self.p, self.q
        return p ** (J * (J + 1) // 2) * q ** J * gmpy2.exp(J * self.a * gmpy2.log(u))

    def poly(self, lo: int, hi: int, y: HPReal) -> HPReal:
        """sum_{L=lo}^{hi} c_L y^L."""
        s = mpfr(0)
        for L in range(hi, lo - 1, -1):
            s = s * y + self.c[L]
        return s * y ** lo

    def _tails(self, n0: int, y: HPReal) -> List[HPReal]:
        """T_N = sum_{l>N} (-y)^l / l! for N = 0..n0, for 0 < y < 1.

        T_{n0} is summed directly; smaller N by T_N = T_{N+1} + (-y)^{N+1}/(N+1)!.
        Subtracting partial sums from e^{-y} instead loses everything to
        cancellation once the tail is tiny.
        """
        eps = mpfr(2) ** (-(self.bits + 40))
        l = n0 + 1
        term = (-y) ** l / gmpy2.factorial(l)
        t = mpfr(0)
        while term != 0:
            t += term
            l += 1
            term = term * (-y) / l
            if abs(term) <= abs(t) * eps:
                break
        tails = [mpfr(0)] * (n0 + 1)
        tails[n0] = t
        for N in range(n0 - 1, -1, -1):
            t = t + (-y) ** (N + 1) / gmpy2.factorial(N + 1)
            tails[N] = t
        return tails

    def main_block(self, u: HPReal, v: HPReal):
        """C1, C2, C30, C32 and their truncation-edge magnitudes."""
        J0, L0, R0 = self.trunc.J0, self.trunc.L0, self.trunc.R0
        r, a = self.r, self.a
        logu, logr = gmpy2.log(u), gmpy2.log(r)
        sums = {"C1": mpfr(0), "C2": mpfr(0), "C30": mpfr(0), "C32": mpfr(0)}
        edge_J = {k: mpfr(0) for k in sums}
        edge_R = {k: mpfr(0) for k in sums}
        edge_L = {k: mpfr(0) for k in sums}
        for J in range(-J0, J0 + 1):
            PJ = self.pref(J, u)
            acc = {k: mpfr(0) for k in sums}
            for R in range(-R0, R0 + 1):
                x = R - v - J * a
                y = gmpy2.exp(x * logr)
                w = gmpy2.exp(x * logu) * y ** J
                E = gmpy2.exp(-y)
                base = PJ * w
                terms = {}
                if J > 0:
                    terms["C1"] = base * E * self.poly(0, L0, y)
                    edge_L["C1"] = max(edge_L["C1"], abs(base * E * self.c[L0] * y ** L0))
                else:
                    if -J + 1 <= L0:
                        terms["C2"] = base * E * self.poly(-J + 1, L0, y)
                        edge_L["C2"] = max(edge_L["C2"], abs(base * E * self.c[L0] * y ** L0))
                    Lm = min(-J, L0)
                    if x <= 0:
                        terms["C30"] = base * E * self.poly(0, Lm, y)
                    else:
                        tails = self._tails(-J, y)
                        s = mpfr(0)
                        yl = mpfr(1)
                        for L in range(0, Lm + 1):
                            s += self.c[L] * yl * tails[-J - L]
                            yl *= y
                        terms["C32"] = base * s
                for name, t in terms.items():
                    acc[name] += t
                    if R in (-R0, R0):
                        edge_R[name] = max(edge_R[name], abs(t))
            for name in sums:
                sums[name] += acc[name]
                if J in (-J0, J0):
                    edge_J[name] = max(edge_J[name], abs(acc[name]))
        edges = {}
        for name in sums:
            edges[name] = max(edge_J[name], edge_R[name], edge_L[name])
        return sums, edges

    def _inner31(self, J: int, K: int) -> HPReal:
        """sum_L xi_{L+1} (-1)^{-J-L-K}/(-J-L-K)! p^{J(J+1)/2+L+JK} q^J."""
        p, q = self.p, self.q
        top = min(-J - K, self.trunc.L0)
        s = mpfr(0)
        for L in range(0, top + 1):
            m = -J - L - K
            t = self.xi[L + 1] / self.fac[m] * p ** L
            s += -t if m % 2 else t
        return s * p ** (J * (J + 1) // 2 + J * K) * q ** J

    @staticmethod
    def _geometric(b: HPReal, v: HPReal, lo: int, hi: int) -> HPReal:
        """sum_{R=lo}^{hi} b^{R-v}."""
        if hi < lo:
            return mpfr(0)
        t = gmpy2.exp((lo - v) * gmpy2.log(b))
        s = mpfr(0)
        for _ in range(lo, hi + 1):
            s += t
            t *= b
        return s

    def c31_0(self, u: HPReal, v: HPReal):
        J0, R0 = self.trunc.J0, self.trunc.R0
        total = mpfr(0)
        edge = mpfr(0)
        for J in range(-J0, 1):
            lo = max(int(gmpy2.ceil(J * self.a + v)), -R0)
            t = self._inner31(J, 0) * self._geometric(u, v, lo, 0)
            total += t
            if J == -J0:
                edge = abs(t)
        return total, edge

    def c31_k(self, K: int, u: HPReal, v: HPReal):
        J0, R0 = self.trunc.J0, self.trunc.R0
        b = u / self.r ** K
        total = mpfr(0)
        edge = mpfr(0)
        for J in range(-J0 - K, -K + 1):
            hi = int(gmpy2.floor(v + J * self.a))
            t = self._inner31(J, K) * self._geometric(b, v, -R0, hi)
            total += t
            if J == -J0 - K:
                edge = abs(t)
        return total, edge


def _check_args(p, u, v) -> Tuple[Bias, HPReal, HPReal]:
    bias = Bias.of(p)
    if bias.symmetric:
        raise ValueError("C(p,u,v) is defined for 1/2 < p < 1")
    u, v = hp(u), hp(v)
    if not u > 0:
        raise ValueError("u must be positive")
    if not 0 <= v < 1:
        raise ValueError("v must lie in [0, 1)")
    return bias, u, v


def c_components(p, u, v, trunc: CTruncation = DEFAULT_TRUNCATION,
                 precision: Optional[int] = None) -> CResult:
    """All six components in one pass, with truncation diagnostics."""
    bits = resolve_precision(precision)
    with working_precision(bits):
        bias, u, v = _check_args(p, u, v)
        eng = _Engine(bias, trunc, bits)
        sums, edges = eng.main_block(u, v)
        c310, e310 = eng.c31_0(u, v)
        c31k = mpfr(0)
        e31k = mpfr(0)
        for K in range(1, trunc.K0 + 1):
            t, e = eng.c31_k(K, u, v)
            c31k += t
            e31k = max(e31k, e)
            if K == trunc.K0:
                e31k = max(e31k, abs(t))
        comps = dict(sums)
        comps["C31_0"] = c310
        comps["C31_K"] = c31k
        edges = dict(edges)
        edges["C31_0"] = e310
        edges["C31_K"] = e31k
        res = CResult(bias.p_hp(), u, v, trunc, comps, edges)
        ref = abs(res.value)
        for name, e in edges.items():
            if e > CLIP_TOLERANCE * ref:
                res.warnings.append(
                    f"{name}: truncation edge term {float(e):.3g} exceeds "
                    f"{CLIP_TOLERANCE:g} x |C| = {float(CLIP_TOLERANCE * ref):.3g}")
        return res


def _single(name: str, p, u, v, trunc, precision) -> HPReal:
    return c_components(p, u, v, trunc, precision).components[name]


def c1(p, u, v, trunc: CTruncation = DEFAULT_TRUNCATION, precision=None) -> HPReal:
    return _single("C1", p, u, v, trunc, precision)


def c2(p, u, v, trunc: CTruncation = DEFAULT_TRUNCATION, precision=None) -> HPReal:
    return _single("C2", p, u, v, trunc, precision)


def c30(p, u, v, trunc: CTruncation = DEFAULT_TRUNCATION, precision=None) -> HPReal:
    return _single("C30", p, u, v, trunc, precision)


def c32(p, u, v, trunc: CTruncation = DEFAULT_TRUNCATION, precision=None) -> HPReal:
    return _single("C32", p, u, v, trunc, precision)


def c31_0(p, u, v, trunc: CTruncation = DEFAULT_TRUNCATION, precision=None) -> HPReal:
    bits = resolve_precision(precision)
    with working_precision(bits):
        bias, u, v = _check_args(p, u, v)
        return _Engine(bias, trunc, bits).c31_0(u, v)[0]


def c31_k(K: int, p, u, v, trunc: CTruncation = DEFAULT_TRUNCATION, precision=None) -> HPReal:
    if K < 1:
        raise ValueError("K must be at least 1")
    bits = resolve_precision(precision)
    with working_precision(bits):
        bias, u, v = _check_args(p, u, v)
        return _Engine(bias, trunc, bits).c31_k(K, u, v)[0]


def c_total(p, u, v, trunc: CTruncation = DEFAULT_TRUNCATION, precision=None) -> HPReal:
    return c_components(p, u, v, trunc, precision).value


def grad_c(p, u, v, trunc: CTruncation = DEFAULT_TRUNCATION, step: float = 1e-6,
           precision=None) -> Tuple[HPReal, HPReal, HPReal]:
    """Central differences (dC/dp, dC/du, dC/dv)."""
    bits = resolve_precision(precision)
    if step <= 0:
        raise ValueError("step must be positive")
    # C is evaluated to ~bits precision; the difference quotient needs headroom
    if step < 2.0 ** (-(bits // 3)):
        raise ValueError(f"step {step:g} is below the noise floor for {bits}-bit evaluation")
    with working_precision(bits):
        P, U, V = hp(p), hp(u), hp(v)
        h = hp(step)

        def C(pp, uu, vv):
            return c_components(pp, uu, vv, trunc, bits).value

        dp = (C(P + h, U, V) - C(P - h, U, V)) / (2 * h)
        du = (C(P, U + h, V) - C(P, U - h, V)) / (2 * h)
        dv = (C(P, U, V + h) - C(P, U, V - h)) / (2 * h)
        return dp, du, dv


# --- the p -> 1/2 limit --------------------------------------------------------------

def _upper_gamma_1(s: HPReal) -> HPReal:
    """Gamma(s, 1), any real s."""
    return gmpy2.gamma_inc(s, 1)


def h1(u_tilde, trunc: CTruncation = DEFAULT_TRUNCATION, precision: Optional[int] = None) -> HPReal:
    """Scaled limit of C(p, (p/q)^{u~}, v) as p -> 1/2 (independent of v).

    Same six-part structure as C with xi taken at p = 1/2, the R-sums turned
    into Gamma values: Gamma(J+L-u~) for the first two parts, Gamma(.,1) and
    the complementary alternating tail for the J <= 0 split, and closed
    geometric forms for the 31-parts.
    """
    bits = resolve_precision(precision)
    J0, L0 = trunc.J0, trunc.L0
    with working_precision(bits):
        ut = hp(u_tilde)
        if not -0.5 <= ut <= 0.5:
            raise ValueError("h1 is defined for u~ in [-1/2, 1/2]")
        xi = xi_limits(L0 + J0 + 2, Bias.of("1/2"), bits).xi
        two = mpfr(2)
        ln2 = gmpy2.log(two)
        fac = [mpfr(1)]
        for i in range(1, J0 + L0 + 4):
            fac.append(fac[-1] * i)
        eps = two ** (-(bits + 40))

        def pre(J):
            return gmpy2.exp((-mpfr(J * (J + 1)) / 2 - J + J * ut) * ln2)

        def tail(N, s):
            # sum_{l>N} (-1)^l / (l! (l + s))
            t = mpfr(0)
            l = N + 1
            while True:
                term = (-1) ** l / (fac[l] if l < len(fac) else gmpy2.factorial(l)) / (l + s)
                t += term
                if abs(term) < eps:
                    return t
                l += 1

        c1v = mpfr(0)
        for J in range(1, J0 + 1):
            c1v += pre(J) * sum((xi[L + 1] * two ** -L * gmpy2.gamma(J + L - ut)
                                 for L in range(0, L0 + 1)), mpfr(0))
        c2v = c30v = c32v = mpfr(0)
        for J in range(-J0, 1):
            P = pre(J)
            c2v += P * sum((xi[L + 1] * two ** -L * gmpy2.gamma(J + L - ut)
                            for L in range(-J + 1, L0 + 1)), mpfr(0))
            for L in range(0, -J + 1):
                wL = P * xi[L + 1] * two ** -L
                c30v += wL * _upper_gamma_1(J + L - ut)
                c32v += wL * tail(-J - L, J + L - ut)
        c310v = mpfr(0)
        for J in range(-J0, 1):
            g = (1 - gmpy2.exp(J * ut * ln2)) / ut if ut != 0 else -J * ln2
            for L in range(0, -J + 1):
                m = -J - L
                t = xi[L + 1] / fac[m] * two ** (-mpfr(J * (J + 1)) / 2 - J - L) * g
                c310v += -t if m % 2 else t
        c31kv = mpfr(0)
        for J in range(-J0, 0):
            for L in range(0, -J):
                inner = mpfr(0)
                for K in range(1, -J - L + 1):
                    m = -J - L - K
                    t = 1 / (fac[m] * (K + ut))
                    inner += -t if m % 2 else t
                c31kv += xi[L + 1] * two ** (-mpfr(J * (J + 1)) / 2 - J - L + J * ut) * inner
        return -c1v - c2v - c30v - c32v - c310v + c31kv
