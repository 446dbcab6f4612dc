"""Leading-order predictions for height, fillup level and typical depth.

Logs are natural inside; base changes happen once, where a formula names
a base.  Windows follow the point estimate's correction term scaled by
(1 - eps) and (1 + eps).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict
from typing import Optional

import gmpy2

from .numerics import Bias, HPReal, resolve_precision, working_precision


@dataclass(frozen=True)
class Prediction:
    point_estimate: float
    window_low: float       # k_L
    window_high: float      # k_U
    epsilon: float
    branch: str             # "symmetric" or "asymmetric"

    def contains(self, value: float) -> bool:
        return self.window_low <= value <= self.window_high

    def integer_window(self) -> tuple:
        return math.floor(self.window_low), math.ceil(self.window_high)

    def as_dict(self) -> dict:
        return asdict(self)


def entropy(bias: Bias, precision: Optional[int] = None) -> HPReal:
    """-p log p - q log q in nats."""
    bias = Bias.of(bias)
    with working_precision(resolve_precision(precision)):
        p, q = bias.p_hp(), bias.q_hp()
        return -p * gmpy2.log(p) - q * gmpy2.log(q)


def _check_eps(epsilon: float) -> float:
    epsilon = float(epsilon)
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    return epsilon


def predict_height(n: int, bias: Bias, epsilon: float = 0.5) -> Prediction:
    """log_{1/p} n + psi_*(n); psi_* = sqrt(2 log2 n) at p = 1/2 and
    (1/2) log_{p/q} log n otherwise."""
    if n < 3:
        raise ValueError("predict_height needs n >= 3")
    eps = _check_eps(epsilon)
    bias = Bias.of(bias)
    p, q = float(bias.p), float(bias.q)
    ln = math.log(n)
    base = ln / math.log(1 / p)
    if bias.symmetric:
        psi, branch = math.sqrt(2 * ln / math.log(2)), "symmetric"
    else:
        psi, branch = 0.5 * math.log(ln) / math.log(p / q), "asymmetric"
    return Prediction(base + psi, base + (1 - eps) * psi, base + (1 + eps) * psi, eps, branch)


def predict_fillup(n: int, bias: Bias, epsilon: float = 0.5) -> Prediction:
    """log_{1/q} n + phi_*(n); phi_* = -log2 log n at p = 1/2 and
    -log_{1/q} log log n otherwise.  Windows use (1 + eps) phi_* below and
    (1 - eps) phi_* above."""
    if n < 16:
        raise ValueError("predict_fillup needs n >= 16 so that log log n > 0")
    eps = _check_eps(epsilon)
    bias = Bias.of(bias)
    q = float(bias.q)
    ln = math.log(n)
    base = ln / math.log(1 / q)
    if bias.symmetric:
        phi, branch = -math.log(ln) / math.log(2), "symmetric"
    else:
        phi, branch = -math.log(math.log(ln)) / math.log(1 / q), "asymmetric"
    return Prediction(base + phi, base + (1 + eps) * phi, base + (1 - eps) * phi, eps, branch)


@dataclass(frozen=True)
class DepthLimits:
    liminf: float           # 1/log(1/q)
    typical: float          # 1/h(p)
    limsup: float           # 1/log(1/p)
    degenerate: bool        # p = 1/2: all three coincide


def depth_limits(bias: Bias) -> DepthLimits:
    bias = Bias.of(bias)
    if bias.symmetric:
        c = 1 / math.log(2)
        return DepthLimits(c, c, c, True)
    p, q = float(bias.p), float(bias.q)
    return DepthLimits(1 / math.log(1 / q), 1 / float(entropy(bias)), 1 / math.log(1 / p), False)
