import math
from fractions import Fraction

import gmpy2
import pytest
from gmpy2 import mpfr

from trieprofile.numerics import Bias
from trieprofile.profile_exact import (banded_mean_profile, cstar, depth_pmf, enumerated_moments,
                                       mean_profile, second_moment_profile, tail_bounds, xi_of_n)
from trieprofile.simulator import run_trials

TINY = mpfr(2) ** -240


@pytest.mark.parametrize("p", ["0.5", "0.7", "0.9"])
def test_small_rows_by_hand(p):
    t = second_moment_profile(3, Bias.of(p))
    assert abs(t.mean(2, 1) - 2) < TINY
    assert abs(t.mean(3, 1) - 1) < TINY and abs(t.mean(3, 2) - 2) < TINY
    assert t.mean(3, 3) == 0 if t.k_max >= 3 else True
    assert abs(t.second(2, 1) - 4) < TINY
    assert abs(t.var(3, 1)) < TINY


def test_table_invariants(table07):
    t = table07
    for n in range(1, t.n_max + 1):
        row = t.row(n)
        assert abs(sum(row, mpfr(0)) - n) <= n * mpfr(2) ** -(t.precision - 12)
        for k in range(t.k_max + 1):
            assert 0 <= t.mu[n, k] <= n
            if n >= 2 and k >= n:
                assert t.mu[n, k] == 0
            assert t.var(n, k) >= -TINY * n * n


def test_empty_table():
    with pytest.raises(ValueError):
        mean_profile(0, Bias.of("0.7"))


def test_symmetric_table_is_swap_invariant():
    t = mean_profile(30, Bias.of("0.5"))
    # at p = 1/2 the weights are symmetric, so the recurrence is its own swap
    assert t.mean(30, 5) > 0
    t2 = mean_profile(30, Bias.of(Fraction(1, 2)))
    assert all(t.mu[30, k] == t2.mu[30, k] for k in range(30))


def test_enumeration_oracle_small():
    t = second_moment_profile(6, Bias.of("0.7"))
    mean, var = enumerated_moments(6, Fraction(7, 10))
    for k in range(6):
        assert abs(t.mean(6, k) - mpfr(mean[k])) < mpfr(10) ** -60
        assert abs(t.var(6, k) - mpfr(var[k])) < mpfr(10) ** -60


def test_depth_pmf():
    t = mean_profile(50, Bias.of("0.7"))
    assert [float(x) for x in depth_pmf(t, 2)] == [0.0, 1.0]
    pmf3 = depth_pmf(t, 3)
    assert abs(pmf3[1] - mpfr(1) / 3) < TINY and abs(pmf3[2] - mpfr(2) / 3) < TINY
    assert abs(sum(depth_pmf(t, 50), mpfr(0)) - 1) < mpfr(2) ** -200
    with pytest.raises(IndexError):
        depth_pmf(t, 51)


def test_depth_pmf_against_simulation():
    b = Bias.of("0.7")
    t = mean_profile(50, b)
    s = run_trials(50, b, 20000, 31)
    pmf = depth_pmf(t, 50)
    total = s.trials
    for k, pk in enumerate(pmf):
        pk = float(pk)
        emp = s.depth_hist.get(k, 0) / total
        se = math.sqrt(max(pk * (1 - pk), 1e-12) / total)
        assert abs(emp - pk) <= 4 * se + 1e-12, k


def test_tail_bounds(table07):
    tb = tail_bounds(table07, 2, 1)
    assert tb.height_tail == 0
    assert tb.cheb == 0
    tb = tail_bounds(table07, 10, 10)
    assert not tb.cheb_defined and tb.cheb is None


def test_cstar():
    val, err = cstar(Bias.of("0.7"))
    assert abs(float(val) - 35.2377168728947) < 1e-12
    assert err < val * mpfr(2) ** -240
    with pytest.raises(ValueError):
        cstar(Bias.of("0.5"))
    with pytest.raises(ArithmeticError):
        cstar(Bias.of("0.7"), tol=1e-200)


def test_cstar_two_depths_agree():
    b = Bias.of("0.6")
    loose, _ = cstar(b, tol=1e-30)
    tight, _ = cstar(b)
    assert abs(loose - tight) <= tight * mpfr("1e-30")


def test_cstar_factor_limits():
    # (1 + r^(j-2)) / (1 - p^j - q^j) as p -> 1: j = 2 gives 1/(2pq) * 2 = 1/(pq); j >= 3 tends to 1
    p = mpfr(1) - mpfr("1e-30")
    q = 1 - p
    f2 = 2 / (1 - p * p - q * q)
    assert abs(f2 * p * q - 1) < mpfr("1e-25")
    f3 = (1 + q / p) / (1 - p ** 3 - q ** 3)
    assert f3 > 1e25


def test_xi_of_n_limits():
    t = mean_profile(60, Bias.of("0.7"))
    assert abs(xi_of_n(t, 1, 60) - 1) < 1e-6
    assert abs(xi_of_n(t, 2, 60) - mpfr(1) / 2) < 1e-6
    with pytest.raises(IndexError):
        xi_of_n(t, 0, 10)


def test_banded_matches_exact():
    b = Bias.of("0.7")
    t = mean_profile(200, b, k_max=45)
    m = banded_mean_profile(200, b, k_max=45)
    for n in (50, 120, 200):
        for k in range(46):
            ex = float(t.mu[n, k])
            if ex > 1e-250:
                assert abs(m[n, k] - ex) <= 1e-11 * ex
