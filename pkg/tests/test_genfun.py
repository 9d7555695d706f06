import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grmahler import genfun as gf
from grmahler import groups as gr
from grmahler import ring as rg
from grmahler.errors import DomainError
from grmahler.parsing import parse_poly_over

PSL2_XYY_WALKS = (1, 0, 3, 2, 15, 20, 89, 168, 591, 1346, 4223)
PSL2_2XYY_WALKS = (1, 0, 6, 2, 54, 50, 566, 882, 6486, 13874, 79286)


# ---------------------------------------------------------------------------
# d-regular tree series


def test_tree_series_d2_central_binomials():
    got = gf.tree_walk_series(2).coeffs(12)
    want = [math.comb(n, n // 2) if n % 2 == 0 else 0 for n in range(13)]
    assert got == want


def test_tree_series_d4_prefix():
    assert gf.tree_walk_series(4).coeffs(6) == [1, 0, 4, 0, 28, 0, 232]


def test_tree_series_matches_free_group_powering():
    P = parse_poly_over("x + x^-1 + y + y^-1", gr.Free(2))
    walks = rg.power_constant_coeffs(P, 10).values
    assert tuple(gf.tree_walk_series(4).coeffs(10)) == walks


def test_tree_series_evaluator():
    for d in (2, 3, 4, 6):
        s = gf.tree_walk_series(d)
        assert s.evaluate(0.0) == 1.0
        with pytest.raises(DomainError):
            s.evaluate(1.0 / (2 * math.sqrt(d - 1)) + 1e-6)
    assert abs(gf.tree_walk_series(4).evaluate(0.1) - 3.0 / (1 + 2 * math.sqrt(1 - 0.12))) < 1e-15


@given(st.integers(2, 8))
def test_tree_series_parity_and_positivity(d):
    coeffs = gf.tree_walk_series(d).coeffs(12)
    assert all(coeffs[n] == 0 for n in range(1, 13, 2))
    assert all(isinstance(c, int) and c > 0 for c in coeffs[::2])


def test_tree_series_rejects_small_degree():
    with pytest.raises(ValueError):
        gf.tree_walk_series(1)


# ---------------------------------------------------------------------------
# free-group wrappers


def test_u_free_is_2l_regular():
    assert gf.u_free(2).coeffs(8) == gf.tree_walk_series(4).coeffs(8)
    assert gf.u_free(1).coeffs(8) == gf.tree_walk_series(2).coeffs(8)


def test_u_free_matches_z_walks():
    g = gr.AbelianProduct((0,))
    walks = rg.power_constant_coeffs(parse_poly_over("x + x^-1", g), 10).values
    assert tuple(gf.u_free(1).coeffs(10)) == walks


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_u_free_length_two_circuits(rank):
    assert gf.u_free(rank).coeffs(2) == [1, 0, 2 * rank]


def test_u_free_p2_is_l_regular():
    assert gf.u_free_p2(4).coeffs(10) == gf.tree_walk_series(4).coeffs(10)
    assert gf.u_free_p2(2).coeffs(10) == gf.tree_walk_series(2).coeffs(10)


def test_u_free_p2_matches_powering():
    # (1 + x1 + x2)(1 + x1^-1 + x2^-1) over the free group of rank 2.
    # Each factor contributes two tree steps, so [P^n]_0 sits at index 2n
    # of the 3-regular tree series.
    g = gr.Free(2)
    a = parse_poly_over("1 + x + y", g)
    b = parse_poly_over("1 + x^-1 + y^-1", g)
    P = rg.mul(a, b)
    walks = rg.power_constant_coeffs(P, 6).values
    tree = gf.u_free_p2(3).coeffs(12)
    for n in range(7):
        assert tree[2 * n] == walks[n]


def test_p1_p2_measure_coincidence_via_walks():
    # same tree degree: P_{1,2} over F_2 counts like P_{2,4} over F_3,
    # with the two-steps-per-factor index dilation
    P1 = parse_poly_over("x + x^-1 + y + y^-1", gr.Free(2))
    g3 = gr.Free(3)
    a = parse_poly_over("1 + x1 + x2 + x3", g3)
    b = parse_poly_over("1 + x1^-1 + x2^-1 + x3^-1", g3)
    P2 = rg.mul(a, b)
    w1 = rg.power_constant_coeffs(P1, 8).values
    w2 = rg.power_constant_coeffs(P2, 4).values
    for n in range(5):
        assert w1[2 * n] == w2[n]


# ---------------------------------------------------------------------------
# PSL2(Z)


def test_psl2_against_brute_force():
    g = gr.FreeProductCyclic((2, 3))
    for variant, frozen in (
        ("x+y+y^-1", PSL2_XYY_WALKS),
        ("2x+y+y^-1", PSL2_2XYY_WALKS),
    ):
        series = gf.u_psl2(variant)
        assert tuple(series.coeffs(10)) == frozen
        poly = variant.replace("2x", "2*x")
        P = parse_poly_over(poly, g)
        assert rg.power_constant_coeffs(P, 10).values == frozen


def test_psl2_at_zero():
    assert gf.u_psl2("x+y+y^-1").evaluate(0.0) == 1.0
    assert gf.u_psl2("2x+y+y^-1").evaluate(0.0) == 1.0


def test_psl2_pole_rejected():
    with pytest.raises(DomainError):
        gf.u_psl2("x+y+y^-1").evaluate(1.0 / 3.0)


def test_psl2_unknown_variant():
    with pytest.raises(ValueError):
        gf.u_psl2("x+y")


# ---------------------------------------------------------------------------
# numerical Taylor extraction by Cauchy quadrature


def _cauchy_coeffs(evaluate, n_max, radius=0.15, samples=128):
    # radius must sit well inside the convergence disc but not so deep that
    # c_n * radius^n sinks below double-precision resolution of the samples
    coeffs = []
    vals = [
        evaluate(radius * cmath.exp(2j * cmath.pi * k / samples))
        for k in range(samples)
    ]
    for n in range(n_max + 1):
        total = sum(
            v * cmath.exp(-2j * cmath.pi * k * n / samples)
            for k, v in enumerate(vals)
        )
        coeffs.append((total / samples / radius**n).real)
    return coeffs


@pytest.mark.parametrize(
    "series",
    [
        gf.tree_walk_series(3),
        gf.tree_walk_series(4),
        gf.u_psl2("x+y+y^-1"),
        gf.u_psl2("2x+y+y^-1"),
    ],
)
def test_formal_coeffs_match_cauchy_integral(series):
    exact = series.coeffs(10)
    numeric = _cauchy_coeffs(series.evaluate, 10)
    for e, v in zip(exact, numeric):
        assert abs(float(e) - v) < 1e-8 * max(1.0, abs(float(e)))


# ---------------------------------------------------------------------------
# Z^2 closed form


def test_z2_walk_coeffs():
    got = gf.z2_walk_coeffs(6)
    assert got == [1, 0, 4, 0, 36, 0, 400]
    P = parse_poly_over("x + x^-1 + y + y^-1", gr.AbelianProduct((0, 0)))
    assert tuple(gf.z2_walk_coeffs(12)) == rg.power_constant_coeffs(P, 12).values


# ---------------------------------------------------------------------------
# multinomial sums and the binomial relation


def test_multinomial_p1_small():
    # l=2, n=1: the displayed sum gives 4, the length-2 walk count over Z^2
    assert gf.multinomial_walk_sum(2, "P1", 1) == 4


def test_multinomial_p2_single_variable():
    for n in range(6):
        assert gf.multinomial_walk_sum(1, "P2", n) == 1


def test_multinomial_p2_l3_n2_oracle_value():
    assert gf.multinomial_walk_sum(3, "P2", 2) == 15


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_multinomial_p1_indexes_the_even_powers(l):
    # the displayed P1 sum over a_1+...+a_l = n equals [P1^(2n)]_0, not [P1^n]_0
    walks = rg.power_constant_coeffs(gf.standard_p1(l), 8).values
    for n in range(5):
        assert gf.multinomial_walk_sum(l, "P1", n) == walks[2 * n]
    if l > 1:
        assert gf.multinomial_walk_sum(l, "P1", 1) != walks[1]


@pytest.mark.parametrize("l", [2, 3, 4])
def test_multinomial_p2_matches_powering(l):
    walks = rg.power_constant_coeffs(gf.standard_p2(l), 6).values
    for n in range(7):
        assert gf.multinomial_walk_sum(l, "P2", n) == walks[n]


def test_binomial_relation():
    assert gf.binomial_relation_holds(2, 0)
    for n in range(1, 7):
        assert gf.binomial_relation_holds(2, n)
    for n in range(1, 5):
        assert gf.binomial_relation_holds(3, n)


def test_multinomial_guards():
    with pytest.raises(ValueError):
        gf.multinomial_walk_sum(0, "P1", 1)
    with pytest.raises(ValueError):
        gf.multinomial_walk_sum(2, "P3", 1)
    with pytest.raises(ValueError):
        gf.binomial_relation_holds(1, 2)
