"""Mahler measures of group-ring elements.

Four computation routes share one result type:

* series       -- m(P, lambda) = -sum a_n lambda^n / n with the rigorous
                  geometric tail bound from |a_n| <= k^n, k the l1-norm;
* finite-determinant -- log det(I - lambda A) / |G| over finite groups,
                  exact determinants whenever the inputs are exact;
* quadrature   -- uniform torus grids for free abelian groups (the grid
                  average *is* the finite-group measure at the grid size);
* closed-form  -- the Z x Z/m family for the standard 4-term element.

lambda is kept real for measure routes; only the walk generating function
u accepts complex lambda.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import groups as gr
from . import ring as rg
from . import spectra as sp
from .errors import (
    DomainError,
    InfiniteGroupError,
    ResourceLimitError,
    SingularMatrixError,
)


@dataclass(frozen=True)
class MeasureResult:
    value: float
    method: str  # series | finite-determinant | quadrature | closed-form
    error_bound: float
    lam: float | None
    imaginary_discard: float = 0.0


@dataclass(frozen=True)
class RationalU:
    """u(P, lambda) = (1/|G|) sum_i 1/(1 - lambda s_i) over the spectrum.

    Keeps the adjacency matrix so Taylor coefficients can be produced in
    exact arithmetic (trace powers) when the inputs are exact.
    """

    eigenvalues: sp.Spectrum
    group_order: int
    adjacency: sp.HermitianMatrix

    def evaluate(self, lam) -> complex:
        total = 0 + 0j
        for s in self.eigenvalues.eigenvalues:
            d = 1.0 - lam * s
            if abs(d) < 1e-14:
                raise DomainError(f"lambda = {lam!r} hits eigenvalue 1/{s!r}")
            total += 1.0 / d
        return total / self.group_order

    def taylor_coefficients(self, N: int) -> list:
        """Coefficients of the expansion around 0: (1/|G|) trace(A^n).

        Exact (int/Fraction) when the adjacency is exact; floats otherwise.
        """
        if self.adjacency.is_exact():
            traces = sp.trace_powers_exact(self.adjacency, N)
            out = []
            for t in traces:
                q = Fraction(t, self.group_order)
                out.append(int(q) if q.denominator == 1 else q)
            return out
        return [
            sum(s**n for s in self.eigenvalues.eigenvalues) / self.group_order
            for n in range(N + 1)
        ]


# ---------------------------------------------------------------------------
# series route


def _series_length(klam: float, epsilon: float) -> int:
    """Smallest N with tail bound (k|l|)^(N+1) / ((N+1)(1-k|l|)) <= epsilon."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    N = 1
    while _tail_bound(klam, N) > epsilon:
        N += 1
    return N


def _tail_bound(klam: float, N: int) -> float:
    return klam ** (N + 1) / ((N + 1) * (1.0 - klam))


def mahler_series(
    g: gr.GroupSpec,
    P: rg.RingElement,
    lam: float,
    epsilon: float = 1e-10,
    support_cap: int = rg.DEFAULT_SUPPORT_CAP,
) -> MeasureResult:
    """-sum_{n=1}^N a_n lambda^n / n, truncated so the geometric tail bound
    from |a_n| <= k^n is at most epsilon.  Requires |lambda| < 1/k strictly.
    """
    if P.group != g:
        P = rg.transfer(P, g)
    if not rg.is_reciprocal(P):
        raise ValueError("P must be reciprocal")
    lam = float(lam)
    if lam == 0.0:
        return MeasureResult(0.0, "series", 0.0, 0.0)
    k = rg.l1_norm(P)
    klam = k * abs(lam)
    if klam >= 1.0:
        raise DomainError(f"|lambda|*l1_norm = {klam} >= 1: outside the series disc")
    N = _series_length(klam, epsilon)
    coeffs = rg.power_constant_coeffs(P, N, support_cap=support_cap)
    total = 0 + 0j
    for n in range(1, N + 1):
        total += complex(coeffs.values[n]) * lam**n / n
    value = -total.real
    return MeasureResult(value, "series", _tail_bound(klam, N), lam, abs(total.imag))


def u_series(
    g: gr.GroupSpec,
    P: rg.RingElement,
    lam: complex,
    epsilon: float = 1e-10,
    support_cap: int = rg.DEFAULT_SUPPORT_CAP,
) -> complex:
    """Truncation of u(P, lambda) = sum a_n lambda^n with geometric tail <= epsilon."""
    if P.group != g:
        P = rg.transfer(P, g)
    if lam == 0:
        return 1 + 0j
    k = rg.l1_norm(P)
    klam = k * abs(lam)
    if klam >= 1.0:
        raise DomainError(f"|lambda|*l1_norm = {klam} >= 1: outside the series disc")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    N = 1
    while klam ** (N + 1) / (1.0 - klam) > epsilon:
        N += 1
    coeffs = rg.power_constant_coeffs(P, N, support_cap=support_cap)
    total = 0 + 0j
    for n in range(N, -1, -1):
        total = total * complex(lam) + complex(coeffs.values[n])
    return total


# ---------------------------------------------------------------------------
# finite-group determinant route


def mahler_finite(
    g: gr.GroupSpec,
    P: rg.RingElement,
    lam,
    allow_continuation: bool = False,
) -> MeasureResult:
    """log det(I - lambda A) / |G| for finite G.

    The default domain is |lambda| * spectral_radius(A) < 1, where the
    determinant is positive and the value agrees with the series.  With
    allow_continuation, any lambda with a nonzero determinant is admitted
    and log|det| is used (the analytic continuation across eigenvalues).

    Takes the exact-determinant path when P is exact and lambda rational.
    """
    if not gr.is_finite(g):
        raise InfiniteGroupError("mahler_finite needs a finite group")
    A = sp.cayley_adjacency(g, P)
    n = A.n
    spec = sp.hermitian_eigenvalues(A)
    rho = spec.max_abs()
    lam_f = float(lam)
    if not allow_continuation and abs(lam_f) * rho >= 1.0:
        raise DomainError(
            f"|lambda|*spectral_radius = {abs(lam_f) * rho} >= 1; "
            "pass allow_continuation to evaluate log|det| anyway"
        )
    exact_lam = isinstance(lam, (int, Fraction)) and not isinstance(lam, bool)
    if A.is_exact() and exact_lam:
        det = sp.det_i_minus_lambda_exact(A, lam)
        if det == 0:
            raise SingularMatrixError("1/lambda is an eigenvalue of A")
        if not allow_continuation and det < 0:
            raise DomainError("determinant not positive inside the stated domain")
        value = math.log(abs(float(det))) / n
        return MeasureResult(value, "finite-determinant", 0.0, lam_f)
    det = sp.det_i_minus_lambda(A, lam_f)
    if det == 0.0:
        raise SingularMatrixError("1/lambda is an eigenvalue of A")
    if allow_continuation:
        value = math.log(abs(det)) / n
    else:
        if det <= 0.0:
            raise DomainError("determinant not positive inside the stated domain")
        value = math.log(det) / n
    return MeasureResult(value, "finite-determinant", 0.0, lam_f)


def mahler_general(
    g: gr.GroupSpec,
    Q: rg.RingElement,
    method: str = "auto",
    internal_lambda: float | None = None,
    epsilon: float = 1e-12,
    max_terms: int = 400,
    support_cap: int = rg.DEFAULT_SUPPORT_CAP,
) -> MeasureResult:
    """Measure of an arbitrary Q via QQ*: log det(B) / (2|G|) on finite
    groups (B the adjacency of QQ*), a series fallback otherwise.

    The fallback expands -log(lambda)/2 - sum_n [(1 - lambda QQ*)^n]_0/(2n)
    with internal lambda = 1/(2 l1(QQ*)) by default; the reported error
    bound is a geometric-ratio estimate, not a rigorous tail.
    """
    if Q.group != g:
        Q = rg.transfer(Q, g)
    QQs = rg.mul(Q, rg.star(Q))
    if method == "auto":
        method = "determinant" if gr.is_finite(g) else "series"
    if method == "determinant":
        if not gr.is_finite(g):
            raise InfiniteGroupError("determinant route needs a finite group")
        B = sp.cayley_adjacency(g, QQs)
        det = sp.det_hermitian(B)
        if det == 0:
            raise SingularMatrixError("B is singular: the measure is undefined")
        if det < 0:
            raise SingularMatrixError("adjacency of QQ* must be positive semidefinite")
        value = math.log(float(det)) / (2 * B.n)
        return MeasureResult(value, "finite-determinant", 0.0, None)
    if method != "series":
        raise ValueError(f"unknown method {method!r}")
    k2 = rg.l1_norm(QQs)
    if k2 == 0.0:
        raise SingularMatrixError("QQ* = 0: the measure is undefined")
    lam = internal_lambda if internal_lambda is not None else 1.0 / (2.0 * k2)
    if not 0.0 < lam < 1.0 / k2:
        raise DomainError("internal lambda must lie in (0, 1/l1(QQ*))")
    R = rg.add(rg.one(g), rg.scale(-lam, QQs))
    ident = gr.identity(g)
    cur = {ident: 1}
    total = 0.0
    b_prev = None
    b_n = None
    n = 0
    while n < max_terms:
        nxt = rg._mul_terms(g, cur.items(), R.terms)
        cur = {e: c for e, c in nxt.items() if c != 0}
        if len(cur) > support_cap:
            raise ResourceLimitError(
                f"support of power exceeded cap ({len(cur)} > {support_cap})"
            )
        n += 1
        b_prev = b_n
        b_n = complex(cur.get(ident, 0)).real
        total += b_n / (2 * n)
        if n >= 8 and abs(b_n) / (2 * n) < epsilon:
            break
    if b_prev and b_n and 0 < b_n < b_prev:
        ratio = b_n / b_prev
        err = b_n * ratio / (1.0 - ratio) / (2 * n)
    else:
        err = abs(b_n) if b_n else 0.0
    value = -math.log(lam) / 2.0 - total
    return MeasureResult(value, "series", err, lam)


# ---------------------------------------------------------------------------
# rational form of u on finite groups


def u_rational(g: gr.GroupSpec, P: rg.RingElement) -> RationalU:
    if not gr.is_finite(g):
        raise InfiniteGroupError("u_rational needs a finite group")
    A = sp.cayley_adjacency(g, P)
    return RationalU(sp.hermitian_eigenvalues(A), A.n, A)


# ---------------------------------------------------------------------------
# torus quadrature for free abelian groups


def abelian_measure_via_characters(
    g: gr.AbelianProduct, P: rg.RingElement, lam: float
) -> float:
    """(1/|G|) sum over characters of log|1 - lambda P(chi)| (finite abelian G).

    By the product formula this IS the finite-group Mahler measure, and it is
    the arithmetic path shared with the torus quadrature grid.
    """
    vals = sp.abelian_character_values(g, P)
    integrand = 1.0 - lam * vals
    mags = np.abs(integrand)
    if np.any(mags == 0.0):
        raise SingularMatrixError("1 - lambda*P vanishes at a character")
    return float(np.mean(np.log(mags)))


def mahler_torus(
    P: rg.RingElement,
    lam: float,
    grid: int | None = None,
) -> MeasureResult:
    """Uniform-grid average of log|1 - lambda P| over the torus.

    The G-point grid average equals the Z/G x ... x Z/G measure exactly, so
    refining G converges to the free-abelian measure; the error estimate is
    the difference between the G and G/2 grids.
    """
    g = P.group
    if not isinstance(g, gr.AbelianProduct) or any(m != 0 for m in g.moduli):
        raise ValueError("mahler_torus needs a free abelian group (all factors Z)")
    l = len(g.moduli)
    if l > 3:
        raise ValueError("torus quadrature limited to at most 3 variables")
    lam = float(lam)
    k = rg.l1_norm(P)
    if abs(lam) * k >= 1.0 and lam != 0.0:
        raise DomainError("lambda outside the disc: integrand may vanish on the torus")
    if grid is None:
        grid = 256 if l <= 2 else 64
    if grid < 2:
        raise ValueError("grid must be >= 2")
    if lam == 0.0:
        return MeasureResult(0.0, "quadrature", 0.0, 0.0)

    def grid_value(G: int) -> float:
        gq = gr.AbelianProduct((G,) * l)
        return abelian_measure_via_characters(gq, rg.transfer(P, gq), lam)

    value = grid_value(grid)
    coarse = grid_value(max(grid // 2, 1)) if grid // 2 >= 2 else value
    return MeasureResult(value, "quadrature", abs(value - coarse), lam)


# ---------------------------------------------------------------------------
# closed form for Z x Z/m with the standard 4-term element


def mahler_zxzm(m: int, lam: float) -> float:
    """Closed-form m_{Z x Z/m}(x + x^-1 + y + y^-1, lambda) for 0 < lambda < 1/4.

    Averages, over the m-th roots of unity in the finite factor, the log of
    the larger root of the one-variable quadratic; the '+' branch is the
    correct one for positive lambda.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    lam = float(lam)
    if not 0.0 < lam < 0.25:
        raise DomainError("closed form valid for lambda in (0, 1/4)")
    total = 0.0
    for k in range(m):
        theta = 2.0 * math.pi * k / m
        c = math.cos(theta)
        s2 = math.sin(theta) ** 2
        disc = 1.0 - 4.0 * c * lam - 4.0 * s2 * lam * lam
        disc = max(disc, 0.0)
        total += math.log((1.0 - 2.0 * c * lam + math.sqrt(disc)) / 2.0)
    return total / m
