import math

import gmpy2
import pytest
from gmpy2 import mpfr

from trieprofile import golden
from trieprofile.cseries import (DEFAULT_TRUNCATION, CTruncation, GeometryError, c1, c2, c30,
                                 c31_0, c31_k, c32, c_components, c_total, f0, grad_c, h1,
                                 level_geometry, poisson_bump)
from trieprofile.numerics import Bias, working_precision


def rel(a, b):
    return abs(float(mpfr(a) / mpfr(b) - 1))


def test_default_truncation():
    assert DEFAULT_TRUNCATION.as_dict() == {"J0": 35, "L0": 70, "K0": 80, "R0": 95}
    with pytest.raises(ValueError):
        CTruncation(0, 1, 1, 1)


@pytest.mark.parametrize("p", ["0.6", "0.7", "0.8"])
def test_geometry_invariants(p):
    b = Bias.of(p)
    P, Q = float(b.p), float(b.q)
    diffs = []
    for n in (10**3, 10**6, 10**9):
        g = level_geometry(n, b)
        # the (q/p)^{j0 - j*} part of u always lies in [sqrt(q/p), sqrt(p/q)]
        expo = (Q / P) ** (g.j0 - g.j_star)
        assert math.sqrt(Q / P) - 1e-12 <= expo <= math.sqrt(P / Q) + 1e-12
        linear = (g.k - g.j0) * (g.j_star - g.psi) / ((g.k - g.j_star) * (g.j0 - g.psi))
        assert abs(float(g.u) - expo * linear) < 1e-9 * float(g.u)
        assert g.residual < 1e-10
        assert 0 <= g.v < 1 and 0 <= g.delta < 1
        assert g.j0 == math.floor(g.j_star + 0.5)
        ln = math.log(n)
        diffs.append(g.j_star - (math.log(ln) - math.log(math.log(ln))) / math.log(P / Q))
    assert max(diffs) - min(diffs) < 3


@pytest.mark.xfail(strict=True, reason="the u bracket holds only once j* - psi is large; "
                                       "it is violated at desk-scale n (see the decisions ledger)")
def test_geometry_u_bracket_literal():
    for p in ("0.6", "0.7", "0.8"):
        P = float(p)
        for n in (10**3, 10**6, 10**9):
            u = float(level_geometry(n, Bias.of(p)).u)
            assert math.sqrt((1 - P) / P) <= u <= math.sqrt(P / (1 - P))


def test_geometry_errors():
    with pytest.raises(GeometryError):
        level_geometry(1000, Bias.of("0.5"))
    with pytest.raises(GeometryError):
        level_geometry(10, Bias.of("0.7"))


def test_f0_and_bump():
    b = Bias.of("0.7")
    bumps = []
    for n in (10**3, 10**5, 10**7, 10**9):
        g = level_geometry(n, b)
        assert f0(g, b) > 0
        bumps.append(float(gmpy2.log(poisson_bump(g))))
    # e^{-r0} r0^{r1}/Gamma(r1+1) is e^{Omega(log log n)}: its log must not collapse
    assert bumps[-1] > bumps[0] - 1
    g = level_geometry(10**6, b)
    lo = f0(g, b)
    with working_precision(512):
        hi = f0(level_geometry(10**6, b), b)
    assert rel(lo, hi) < 1e-30


def test_component_signs_and_wrappers():
    args = ("0.6", "1.0", "0.6")
    res = c_components(*args)
    assert res.components["C1"] > 0 and res.components["C30"] > 0
    assert c1(*args) == res.components["C1"]
    assert c2(*args) == res.components["C2"]
    assert c30(*args) == res.components["C30"]
    assert c32(*args) == res.components["C32"]
    assert c31_0(*args) == res.components["C31_0"]
    total_k = sum((c31_k(K, *args) for K in range(1, DEFAULT_TRUNCATION.K0 + 1)), mpfr(0))
    assert rel(total_k, res.components["C31_K"]) < 1e-40
    assert c_total(*args) == res.value


def test_components_stable_in_J0():
    a = c_components("0.7", "1.0", "0.6")
    b = c_components("0.7", "1.0", "0.6", CTruncation(45, 70, 80, 95))
    for name, val in a.components.items():
        assert abs(float(val - b.components[name])) < 1e-5


@pytest.mark.parametrize("row", [("0.60", "1.00", "0.60"), ("0.70", "1.00", "0.60"),
                                 ("0.93", "1.00", "0.60")])
def test_truncation_stability(row):
    a = c_total(*row)
    b = c_total(*row, trunc=DEFAULT_TRUNCATION.raised(10))
    assert rel(a, b) < 1e-5


def test_sample_values_good_rows():
    assert rel(c_total("0.60", "1.00", "0.60"), "1.08391297098683") < 1e-6
    assert rel(c_total("0.97", "1.00", "0.60"), "6.05478107453485e72") < 1e-3


@pytest.mark.xfail(strict=True, reason="printed p=0.51 and p=0.80 sample values are not reproduced "
                                       "(see the decisions ledger)")
def test_sample_values_documented_misses():
    assert rel(c_total("0.51", "1.00", "0.20"), "17.6603002053593") < 1e-6
    assert rel(c_total("0.80", "1.00", "0.60"), "0.0287161523336721") < 1e-6


def test_converged_value_near_half_is_v_free():
    t = CTruncation(35, 70, 80, 200)
    a = c_total("0.51", "1.00", "0.20", t)
    b = c_total("0.51", "1.00", "0.80", t)
    assert rel(a, b) < 1e-10


def test_positivity_on_grid_sample():
    for p, u, v, _ in golden.C_GRID[::25]:
        assert c_total(p, u, v) > 0


def test_grad_symmetry_and_richardson():
    d = grad_c("0.60", "1.00", "0.6")
    assert abs(float(d[2])) < 1e-7
    a = grad_c("0.70", "0.9419408", "0.400")
    b = grad_c("0.70", "0.9419408", "0.400", step=5e-7)
    for x, y in zip(a, b):
        assert rel(x, y) < 1e-5
    with pytest.raises(ValueError):
        grad_c("0.7", "1", "0.4", step=1e-40)


@pytest.mark.xfail(strict=True, reason="printed derivative row at p=0.70 differs by about 1%; "
                                       "see the decisions ledger")
def test_grad_against_printed_row():
    d = grad_c("0.70", "0.9419408", "0.400")
    for x, ref in zip(d, ("-4.22295039", "-0.447305509108986", "0.00334798714618501")):
        assert rel(x, ref) < 1e-4


@pytest.mark.parametrize("ut,ref", [("-0.50", "1.37683018271327"), ("0.50", "0.486782979369433"),
                                    ("-0.10", "0.835870082265573")])
def test_h1_values(ut, ref):
    assert rel(h1(ut), ref) < 1e-6


def test_h1_domain():
    with pytest.raises(ValueError):
        h1("0.6")


def test_h1_positive_on_interval():
    # values on a 0.01 grid plus a slope bound from neighbouring differences
    xs = [mpfr(i) / 100 for i in range(-50, 51)]
    vals = [h1(x) for x in xs]
    slope = max(abs(float(b - a)) / 0.01 for a, b in zip(vals, vals[1:]))
    assert min(float(v) for v in vals) - 0.005 * 2 * slope > 0


@pytest.mark.slow
def test_limit_consistency_as_p_to_half():
    # eta C(p, (p/q)^u~, v) -> h1(u~); the R-sums need R0 ~ 1/eta terms near p = 1/2
    target = h1("0.2")
    errs = []
    for p in ("0.505", "0.502"):
        P = mpfr(p)
        eta = gmpy2.log(P / (1 - P))
        trunc = CTruncation(35, 70, 80, math.ceil(10 / float(eta)))
        u = (P / (1 - P)) ** mpfr("0.2")
        a = eta * c_total(p, u, "0.2", trunc)
        b = eta * c_total(p, u, "0.6", trunc)
        assert abs(float(a - b)) < 1e-8
        errs.append(abs(float(a - target)))
    assert errs[1] < errs[0] < 0.05
