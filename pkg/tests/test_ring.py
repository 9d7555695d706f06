import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grmahler import groups as gr
from grmahler import ring as rg
from grmahler.coeffs import GaussianRational
from grmahler.errors import GroupMismatchError, ResourceLimitError
from grmahler.parsing import parse_poly_over

from conftest import random_reciprocal, random_ring_element

Z32 = gr.AbelianProduct((3, 2))
D3 = gr.Dihedral(3)
Z2 = gr.AbelianProduct((0, 0))


def test_qqstar_example_z3z2():
    Q = parse_poly_over("1+x+y", Z32)
    got = rg.mul(Q, rg.star(Q))
    want = parse_poly_over("3 + x + x^-1 + 2*y + yx + yx^-1", Z32)
    assert got.terms == want.terms


def test_qqstar_example_d3():
    Q = parse_poly_over("x+2*y", D3)
    got = rg.mul(Q, rg.star(Q))
    want = parse_poly_over("5 + 4*yx^-1", D3)
    assert got.terms == want.terms


def test_qqstar_example_z3z2_x_plus_2y():
    Q = parse_poly_over("x+2*y", Z32)
    got = rg.mul(Q, rg.star(Q))
    want = parse_poly_over("5 + 2*yx + 2*yx^-1", Z32)
    assert got.terms == want.terms


def test_add_examples():
    x = parse_poly_over("x", Z2)
    xinv = parse_poly_over("x^-1", Z2)
    assert rg.add(x, xinv).terms == parse_poly_over("x + x^-1", Z2).terms
    P = parse_poly_over("1+x+y", Z2)
    assert rg.add(P, rg.scale(-1, P)).is_zero()
    assert rg.add(parse_poly_over("1+x", Z2), parse_poly_over("1-x", Z2)).terms == (
        ((0, 0), 2),
    )


def test_add_rejects_group_mismatch():
    with pytest.raises(GroupMismatchError):
        rg.add(parse_poly_over("x", Z2), parse_poly_over("x", D3))
    with pytest.raises(GroupMismatchError):
        rg.mul(parse_poly_over("x", Z32), parse_poly_over("x", Z2))


def test_star_fixes_reciprocal_elements():
    P = parse_poly_over("x + x^-1 + y + y^-1", Z2)
    assert rg.star(P).terms == P.terms
    assert rg.is_reciprocal(P)
    P2 = parse_poly_over("3 + i*x - i*x^-1 + y", Z32)
    assert rg.star(P2).terms == P2.terms
    assert rg.is_reciprocal(P2)


def test_is_reciprocal_examples():
    assert not rg.is_reciprocal(parse_poly_over("x+2*y", D3))
    assert rg.is_reciprocal(rg.zero(D3))
    # the same element IS reciprocal over D3 too (x^-1 and y are self-paired)
    assert rg.is_reciprocal(parse_poly_over("3 + i*x - i*x^-1 + y", D3))


def test_star_is_involution(rng):
    for g in (Z32, D3, Z2, gr.Free(2)):
        for _ in range(20):
            Q = random_ring_element(g, rng)
            assert rg.star(rg.star(Q)).terms == Q.terms


def test_star_antihomomorphism(rng):
    for g in (Z32, D3, gr.Dicyclic(2), gr.FreeProductCyclic((2, 3))):
        for _ in range(20):
            a = random_ring_element(g, rng)
            b = random_ring_element(g, rng)
            assert rg.star(rg.mul(a, b)).terms == rg.mul(rg.star(b), rg.star(a)).terms


def test_qqstar_reciprocal_with_l2_constant(rng):
    for g in (Z32, D3, gr.Dicyclic(2)):
        for _ in range(20):
            Q = random_ring_element(g, rng)
            B = rg.mul(Q, rg.star(Q))
            assert rg.is_reciprocal(B)
            l2sq = sum(
                c.re**2 + c.im**2 if isinstance(c, GaussianRational) else c * c
                for _, c in Q.terms
            )
            assert rg.constant_coefficient(B) == l2sq


def test_constant_coefficient_examples():
    assert rg.constant_coefficient(parse_poly_over("3+x+x^-1+2*y", Z32)) == 3
    assert rg.constant_coefficient(parse_poly_over("x", Z2)) == 0
    assert rg.constant_coefficient(parse_poly_over("1", Z2)) == 1


def test_l1_norm_examples():
    assert rg.l1_norm(parse_poly_over("x + x^-1 + y + y^-1", Z2)) == 4.0
    assert rg.l1_norm(rg.zero(Z2)) == 0.0
    assert rg.l1_norm(parse_poly_over("3 + i*x - i*x^-1 + y", Z32)) == 6.0


def test_canonical_order_and_zero_dropping():
    P = rg.ring_element(Z32, {(1, 0): 1, (0, 0): 2, (2, 1): 0})
    assert P.terms == (((0, 0), 2), ((1, 0), 1))
    # float anywhere degrades every coefficient to complex
    Q = rg.ring_element(Z32, {(1, 0): 1, (0, 1): 0.5})
    assert all(isinstance(c, complex) for _, c in Q.terms)
    assert not Q.is_exact()
    assert P.is_exact()


# ---------------------------------------------------------------------------
# power coefficients against frozen and independent oracles

F2_WALKS = (1, 0, 4, 0, 28, 0, 232, 0, 2092, 0, 19864, 0, 195352)


def test_power_coeffs_z2():
    P = parse_poly_over("x + x^-1 + y + y^-1", Z2)
    got = rg.power_constant_coeffs(P, 8).values
    assert got == tuple(
        math.comb(n, n // 2) ** 2 if n % 2 == 0 else 0 for n in range(9)
    )


def test_power_coeffs_z_x_z2():
    g = gr.AbelianProduct((0, 2))
    P = parse_poly_over("x + x^-1 + y + y^-1", g)
    got = rg.power_constant_coeffs(P, 12).values
    want = tuple(math.comb(2 * n, n) if n % 2 == 0 else 0 for n in range(13))
    assert got == want


def test_power_coeffs_free_group():
    P = parse_poly_over("x + x^-1 + y + y^-1", gr.Free(2))
    got = rg.power_constant_coeffs(P, 6).values
    assert got == F2_WALKS[:7]


def test_free_group_walks_match_distance_dp():
    # independent oracle: distance-from-root DP on the 4-regular tree
    f = {0: 1}
    dp = [1]
    for _ in range(10):
        nxt = {}
        for d, c in f.items():
            if d == 0:
                nxt[1] = nxt.get(1, 0) + 4 * c
            else:
                nxt[d - 1] = nxt.get(d - 1, 0) + c
                nxt[d + 1] = nxt.get(d + 1, 0) + 3 * c
        f = nxt
        dp.append(f.get(0, 0))
    P = parse_poly_over("x + x^-1 + y + y^-1", gr.Free(2))
    assert rg.power_constant_coeffs(P, 10).values == tuple(dp)


def test_power_coeffs_free_product():
    g = gr.FreeProductCyclic((2, 3))
    P = parse_poly_over("2*x + y + y^-1", g)
    got = rg.power_constant_coeffs(P, 2).values
    assert got == (1, 0, 6)


def test_series_metadata():
    P = parse_poly_over("x + x^-1 + y + y^-1", Z2)
    s = rg.power_constant_coeffs(P, 6)
    assert s.values[0] == 1
    assert s.n == 6
    assert s.l1_bound == 4.0
    assert all(abs(v) <= s.l1_bound**n for n, v in enumerate(s.values))


def test_support_cap():
    P = parse_poly_over("x + x^-1 + y + y^-1", gr.Free(2))
    with pytest.raises(ResourceLimitError):
        rg.power_constant_coeffs(P, 8, support_cap=50)


def test_reciprocal_powers_are_real(rng):
    for g in (Z32, D3, gr.Dicyclic(2)):
        for _ in range(10):
            P = random_reciprocal(g, rng)
            for v in rg.power_constant_coeffs(P, 6).values:
                if isinstance(v, GaussianRational):
                    assert v.im == 0
                elif isinstance(v, complex):
                    assert abs(v.imag) <= 1e-12
                else:
                    assert isinstance(v, (int, Fraction))


# ---------------------------------------------------------------------------
# independent abelian oracle: Laurent convolution + residue projection


def _laurent_consts(moduli, terms, N):
    """[P^n]_0 via plain multi-exponent convolution over Z^l, projecting
    exponent vectors to their residues only at the very end."""
    cur = {(0,) * len(moduli): 1}
    out = [1]
    for _ in range(N):
        nxt = {}
        for ea, ca in cur.items():
            for eb, cb in terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                nxt[e] = nxt.get(e, 0) + ca * cb
        cur = nxt
        total = 0
        for e, c in cur.items():
            if all(m == 0 and x == 0 or m != 0 and x % m == 0 for x, m in zip(e, moduli)):
                total += c
        out.append(total)
    return out


@pytest.mark.parametrize("moduli", [(4, 3), (0, 2), (0, 0), (5,)])
def test_abelian_powering_matches_laurent_convolution(moduli, rng):
    g = gr.AbelianProduct(moduli)
    for _ in range(5):
        P = random_ring_element(g, rng, n_terms=3, gaussian=False)
        lifted = {}
        for e, c in P.terms:
            w = gr.element_word(g, e)
            vec = [0] * len(moduli)
            for i, exp in w:
                vec[i] += exp
            key = tuple(vec)
            lifted[key] = lifted.get(key, 0) + c
        want = _laurent_consts(moduli, lifted, 6)
        got = rg.power_constant_coeffs(P, 6).values
        assert list(got) == want


# ---------------------------------------------------------------------------
# multinomial walk identities (direct combinatorial oracle)


def _compositions(n, parts):
    if parts == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for rest in _compositions(n - head, parts - 1):
            yield (head,) + rest


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_p1_powers_match_multinomial_sum(l):
    g = gr.AbelianProduct((0,) * l)
    terms = {}
    for i in range(l):
        for s in (1, -1):
            e = tuple(s if j == i else 0 for j in range(l))
            terms[e] = 1
    P = rg.ring_element(g, terms)
    coeffs = rg.power_constant_coeffs(P, 8).values
    for n in range(0, 5):
        want = sum(
            math.factorial(2 * n) // math.prod(math.factorial(a) ** 2 for a in comp)
            for comp in _compositions(n, l)
        )
        assert coeffs[2 * n] == want
    assert all(coeffs[n] == 0 for n in range(1, 9, 2))


@pytest.mark.parametrize("l", [2, 3, 4])
def test_binomial_relation_between_families(l):
    g1 = gr.AbelianProduct((0,) * l)
    terms = {}
    for i in range(l):
        for s in (1, -1):
            e = tuple(s if j == i else 0 for j in range(l))
            terms[e] = 1
    P1 = rg.ring_element(g1, terms)
    a1 = rg.power_constant_coeffs(P1, 12).values

    g2 = gr.AbelianProduct((0,) * (l - 1))
    ident = gr.identity(g2)
    a = {ident: 1}
    b = {ident: 1}
    for i in range(l - 1):
        e = tuple(1 if j == i else 0 for j in range(l - 1))
        a[e] = 1
        b[gr.invert(g2, e)] = 1
    P2 = rg.mul(rg.ring_element(g2, a), rg.ring_element(g2, b))
    a2 = rg.power_constant_coeffs(P2, 6).values
    for n in range(7):
        assert a1[2 * n] == math.comb(2 * n, n) * a2[n]


# ---------------------------------------------------------------------------
# transfer between groups


def test_transfer_words_between_dihedral_and_abelian():
    P = parse_poly_over("x + x^-1 + y", D3)
    Q = rg.transfer(P, Z32)
    assert Q.terms == parse_poly_over("x + x^-1 + y", Z32).terms
    back = rg.transfer(Q, D3)
    assert back.terms == P.terms


def test_transfer_quotient_reduces_exponents():
    P = parse_poly_over("x^5 + x^-5", Z2)
    Q = rg.transfer(P, gr.AbelianProduct((3, 3)))
    assert Q.terms == parse_poly_over("x^2 + x", gr.AbelianProduct((3, 3))).terms


def test_transfer_rejects_missing_generators():
    P = parse_poly_over("x1 + x2 + x3", gr.AbelianProduct((0, 0, 0)))
    with pytest.raises(GroupMismatchError):
        rg.transfer(P, gr.AbelianProduct((2, 2)))


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_dinf_transfer_to_quotient_is_word_faithful(k1, k2):
    g_inf = gr.Dihedral(0)
    g_m = gr.Dihedral(5)
    P = rg.ring_element(g_inf, {(0, k1): 1, (1, k2): 2})
    Q = rg.transfer(P, g_m)
    total = sum(c for _, c in Q.terms)
    assert total == 3  # coefficients survive, exponents fold mod m
