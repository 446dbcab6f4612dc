"""Extended-precision scalars and exact combinatorics.

All real arithmetic is done with ``gmpy2.mpfr`` values (MPFR, round to
nearest even).  An mpfr value keeps the precision it was created with; the
precision used for new results comes from the active gmpy2 context, which
``working_precision`` sets for the duration of a computation.
"""

from __future__ import annotations

import contextlib
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

import gmpy2
from gmpy2 import mpfr, mpq

HPReal = type(mpfr(0))

PRECISION_ENV = "TRIEPROFILE_PRECISION"
MIN_PRECISION = 64

Number = Union[int, float, str, Fraction, HPReal]


def default_precision() -> int:
    """Default mantissa bits, overridable through ``TRIEPROFILE_PRECISION``."""
    raw = os.environ.get(PRECISION_ENV)
    if not raw:
        return 256
    bits = int(raw)
    if bits < MIN_PRECISION:
        raise ValueError(f"{PRECISION_ENV}={bits} is below {MIN_PRECISION} bits")
    return bits


# The package computes in the global gmpy2 context unless a caller narrows or
# widens it with working_precision.
gmpy2.get_context().precision = default_precision()
gmpy2.get_context().round = gmpy2.RoundToNearest


def resolve_precision(precision: int | None) -> int:
    bits = default_precision() if precision is None else int(precision)
    if bits < MIN_PRECISION:
        raise ValueError(f"precision must be at least {MIN_PRECISION} bits, got {bits}")
    return bits


@contextlib.contextmanager
def working_precision(precision: int | None = None) -> Iterator[int]:
    """Run the body with new mpfr results rounded to ``precision`` bits."""
    bits = resolve_precision(precision)
    ctx = gmpy2.context(gmpy2.get_context(), precision=bits,
                        round=gmpy2.RoundToNearest)
    with ctx:
        yield bits


def hp(x: Number) -> HPReal:
    """Convert to mpfr at the active precision.

    Strings and Fractions are rounded once, directly from their exact value.
    """
    if isinstance(x, Fraction):
        return mpfr(mpq(x.numerator, x.denominator))
    if isinstance(x, str):
        return mpfr(mpq(Fraction(x).numerator, Fraction(x).denominator))
    return mpfr(x)


def hp_pow(base: Number, exponent: Number) -> HPReal:
    """base**exponent for base > 0, as exp(exponent * log(base))."""
    b = hp(base)
    if not b > 0:
        raise ValueError("hp_pow needs a positive base")
    e = hp(exponent)
    if e == 0:
        return mpfr(1)
    if gmpy2.is_integer(e) and abs(e) < 2**62:
        return b ** int(e)
    return gmpy2.exp(e * gmpy2.log(b))


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("binomial needs nonnegative arguments")
    if k > n:
        return 0
    return math.comb(n, k)


def hp_sum(values: Iterable[HPReal]) -> HPReal:
    """Pairwise summation; keeps the rounding error growth at O(log n)."""
    items = list(values)
    if not items:
        return mpfr(0)
    while len(items) > 1:
        nxt = [items[i] + items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return mpfr(items[0])


def to_decimal(x: HPReal, digits: int = 15) -> str:
    """Decimal string with ``digits`` significant digits."""
    return format(mpfr(x), f".{digits}g")


@dataclass(frozen=True)
class Bias:
    """Source bias: a 1 is emitted with probability p, a 0 with q = 1 - p."""

    p: Fraction

    def __post_init__(self) -> None:
        p = Fraction(self.p)
        object.__setattr__(self, "p", p)
        if not (Fraction(1, 2) <= p < 1):
            raise ValueError(f"bias p must lie in [1/2, 1), got {p}")

    @classmethod
    def of(cls, p: Union[str, float, Fraction, "Bias"]) -> "Bias":
        if isinstance(p, Bias):
            return p
        if isinstance(p, float):
            p = repr(p)
        elif isinstance(p, type(mpfr(0))):
            p = Fraction(*p.as_integer_ratio())     # exact binary value
        return cls(Fraction(p))

    @property
    def q(self) -> Fraction:
        return 1 - self.p

    @property
    def symmetric(self) -> bool:
        return self.p == Fraction(1, 2)

    def p_hp(self) -> HPReal:
        return hp(self.p)

    def q_hp(self) -> HPReal:
        # 1 - p is exact in binary floating point for p in [1/2, 1)
        return mpfr(1) - hp(self.p)

    def label(self) -> str:
        """Short decimal label, e.g. '0.7'."""
        if self.p.denominator & (self.p.denominator - 1) == 0 or 10**12 % self.p.denominator == 0:
            s = f"{float(self.p):.12f}".rstrip("0")
            return s if not s.endswith(".") else s + "0"
        return str(self.p)

    def __float__(self) -> float:
        return float(self.p)
