import math

import gmpy2
import pytest
from gmpy2 import mpfr

from trieprofile.numerics import Bias
from trieprofile.profile_exact import mean_profile, xi_of_n
from trieprofile.xi_engine import (calibrate_mu_upper, d_identity_witness, d_of_p, knessl_mu,
                                   mu_smallj, mu_upper, xi_asymptotic, xi_gf,
                                   xi_gf_coefficients, xi_limits, xi_poisson)

P7 = Bias.of("0.7")
EPS = mpfr(2) ** -240


@pytest.fixture(scope="module")
def t80():
    return mean_profile(80, P7)


@pytest.mark.parametrize("p", ["0.55", "0.7", "0.9"])
def test_first_xi_values(p):
    b = Bias.of(p)
    xi = xi_limits(5, b)
    P, Q = b.p_hp(), b.q_hp()
    assert xi[1] == 1
    assert abs(xi[2] - mpfr(1) / 2) < EPS
    assert abs(xi[3] - (P / 4 + Q / 6) / (1 + P)) < EPS
    with pytest.raises(IndexError):
        xi[0]


def test_gf_coefficients_match_recurrence():
    xi = xi_limits(12, P7)
    gf = xi_gf_coefficients(12, P7)
    for l in range(1, 13):
        assert abs(gf[l - 1] - xi[l]) <= abs(xi[l]) * mpfr("1e-25")


def test_gf_value_and_small_z_regime():
    assert xi_gf(0, P7) == 1
    xi = xi_limits(80, P7)
    z = mpfr("0.3")
    series = sum((xi[L + 1] * z ** L for L in range(80)), mpfr(0))
    assert abs(xi_gf("0.3", P7) - series) < mpfr("1e-60")
    q = float(P7.q)
    for zz in ("0.5", "1", "2", "3"):
        zf = float(zz)
        assert abs(float(gmpy2.log(xi_gf(zz, P7))) - zf / 2) <= 0.5 * q * zf * zf


def test_xi_poisson_positive_and_growth_shape():
    p, q = 0.7, 0.3
    ratios = []
    for z in (100, 300, 1000, 3000, 10000):
        x = xi_poisson(z, P7)
        assert x > 0
        shape = z ** (0.5 + math.log(q) / math.log(p)) * math.exp(-math.log(z) ** 2 / (2 * math.log(1 / p)))
        ratios.append(float(x) / shape)
    assert min(ratios) > 0 and max(ratios) / min(ratios) < 1.5
    assert xi_poisson("0.001", P7) > 0


def test_xi_asymptotic_ratio_approaches_one():
    xi = xi_limits(320, P7)
    r = [float(xi_asymptotic(l, P7) / xi[l]) for l in (20, 40, 80, 160, 320)]
    assert all(a > b for a, b in zip(r, r[1:]))
    assert all(abs(b - 1) < abs(a - 1) for a, b in zip(r, r[1:]))


def test_knessl_ratio_to_exact(t80):
    xi = xi_limits(5, P7)
    errs = [abs(float(knessl_mu(n, 1, P7, xi) / t80.mean(n, n - 1)) - 1) for n in (20, 40, 80)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-6


def test_knessl_with_finite_n_xi_is_exact(t80):
    v = knessl_mu(30, 3, P7, xi_value=xi_of_n(t80, 3, 30))
    assert abs(v / t80.mean(30, 27) - 1) < EPS * 1e6


def test_mu_upper_dominates(t80):
    t60 = mean_profile(60, P7)
    C = calibrate_mu_upper(t60)
    assert C > 0
    for n in range(2, 61):
        for k in range(1, n):
            assert mu_upper(n, k, P7, C) >= t60.mean(n, k)


def test_mu_smallj():
    assert mu_smallj(5, 0, P7) == 0
    assert mu_smallj(1, 0, P7) == 1
    t = mean_profile(200, P7, k_max=4)
    r = [abs(float(mu_smallj(m, 1, P7) / t.mean(m, 1)) - 1) for m in (20, 50, 100, 200)]
    assert r == sorted(r, reverse=True) and r[-1] < 1e-20
    for m in (100, 200):
        for j in range(1, 4):
            assert t.mean(m, j) - t.mean(m, j - 1) > 0


@pytest.mark.parametrize("p", ["0.55", "0.65", "0.75", "0.85", "0.95"])
def test_d_of_p_vanishes(p):
    assert abs(d_of_p(Bias.of(p), 80, 80)) < 1e-12


def test_d_of_p_stable_under_truncation():
    a = d_of_p(Bias.of("0.6"), 80, 80)
    b = d_of_p(Bias.of("0.6"), 120, 120)
    assert abs(a - b) < 1e-15


def test_d_of_p_rejects_symmetric():
    with pytest.raises(ValueError):
        d_of_p(Bias.of("0.5"))


def test_identity_witness():
    rows = d_identity_witness(P7, 60)
    assert rows[0].Q == 1
    for w in rows:
        assert abs(w.residual) < EPS
        assert abs(w.F - w.F_from_xi) <= EPS * max(1, abs(w.F))
    tail = [abs(float(w.closed)) for w in rows[20:]]
    assert tail[-1] < 1e-100 and tail == sorted(tail, reverse=True)
