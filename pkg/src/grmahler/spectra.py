"""Weighted Cayley adjacency matrices and their spectra.

The adjacency matrix of a finite group for a reciprocal ring element P has
entries A[i][j] = coefficient of g_i^-1 g_j in P, with vertices in the
canonical enumeration order; reciprocity of P makes A Hermitian exactly.

Eigenvalues are computed by cyclic complex Jacobi rotations: dimensions stay
in the low hundreds here, and a deterministic, dependency-light solver is
worth more than speed.  numpy is used for floating determinants and matrix
powers; determinants of exact matrices are done in exact Gaussian-rational
arithmetic so that integer constants come out exactly.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import coeffs as cf
from . import groups as gr
from . import ring as rg
from .errors import InfiniteGroupError, NonConvergenceError

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class HermitianMatrix:
    """Dense square matrix with conjugate symmetry enforced at construction."""

    entries: tuple
    n: int

    def __init__(self, entries):
        rows = tuple(tuple(row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i, n):
                if rows[i][j] != cf.conj(rows[j][i]):
                    raise ValueError(
                        f"not Hermitian: entry ({i},{j}) vs conjugate of ({j},{i})"
                    )
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "n", n)

    def is_exact(self) -> bool:
        return all(cf.is_exact(c) for row in self.entries for c in row)

    def to_numpy(self) -> np.ndarray:
        return np.array(
            [[complex(c) for c in row] for row in self.entries], dtype=complex
        )


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted ascending, with multiplicity."""

    eigenvalues: tuple[float, ...]
    n: int

    def max_abs(self) -> float:
        return max((abs(x) for x in self.eigenvalues), default=0.0)


# ---------------------------------------------------------------------------
# adjacency


def cayley_adjacency(g: gr.GroupSpec, P: rg.RingElement) -> HermitianMatrix:
    """Weighted Cayley adjacency matrix of a finite group for reciprocal P."""
    if not gr.is_finite(g):
        raise InfiniteGroupError("Cayley adjacency needs a finite group")
    if P.group != g:
        P = rg.transfer(P, g)
    if not rg.is_reciprocal(P):
        raise ValueError("P must be reciprocal (P == P*)")
    elems = gr.elements(g)
    coeff = dict(P.terms)
    rows = []
    for gi in elems:
        gi_inv = gr.invert(g, gi)
        rows.append(
            tuple(coeff.get(gr.multiply(g, gi_inv, gj), 0) for gj in elems)
        )
    return HermitianMatrix(rows)


# ---------------------------------------------------------------------------
# eigenvalues: cyclic complex Jacobi


def _offdiag_norm(a: np.ndarray) -> float:
    d = a - np.diag(np.diag(a))
    return float(np.linalg.norm(d))


def hermitian_eigenvalues(M: HermitianMatrix) -> Spectrum:
    """All-real spectrum via cyclic complex Jacobi rotations.

    Convergence: off-diagonal Frobenius mass below JACOBI_TOL times the
    Frobenius norm of the input, capped at JACOBI_MAX_SWEEPS sweeps.
    """
    n = M.n
    if n == 0:
        return Spectrum((), 0)
    a = M.to_numpy()
    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        return Spectrum((0.0,) * n, n)
    target = JACOBI_TOL * norm
    for _ in range(JACOBI_MAX_SWEEPS):
        if _offdiag_norm(a) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                w = apq / r
                tau = (a[p, p].real - a[q, q].real) / (2.0 * r)
                t = -math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # A <- U^H A U with U[p,p]=c, U[p,q]=s*w, U[q,p]=-s*conj(w), U[q,q]=c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(w) * col_q
                a[:, q] = s * w * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * w * row_q
                a[q, :] = s * np.conj(w) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    else:
        raise NonConvergenceError(
            f"Jacobi sweeps did not converge in {JACOBI_MAX_SWEEPS} sweeps"
        )
    vals = sorted(float(x) for x in np.diag(a).real)
    return Spectrum(tuple(vals), n)


# ---------------------------------------------------------------------------
# determinants


def _det_exact(rows) -> cf.GaussianRational:
    """Exact determinant by Gaussian elimination over the Gaussian rationals."""
    n = len(rows)
    a = [[cf.as_gaussian(c) for c in row] for row in rows]
    det = cf.GaussianRational(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col]), None)
        if pivot_row is None:
            return cf.GaussianRational(0)
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            det = -det
        pivot = a[col][col]
        det = det * pivot
        for r in range(col + 1, n):
            if a[r][col]:
                factor = a[r][col] / pivot
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def det_hermitian(M: HermitianMatrix):
    """Determinant; exact (int or Fraction) for exact entries, float otherwise."""
    if M.n == 0:
        return 1
    if M.is_exact():
        d = _det_exact(M.entries)
        assert d.im == 0  # Hermitian determinants are real
        re = d.re
        return int(re) if re.denominator == 1 else re
    d = complex(np.linalg.det(M.to_numpy()))
    return d.real


def det_i_minus_lambda(M: HermitianMatrix, lam: float) -> float:
    """det(I - lam*M) by LU with partial pivoting in complex arithmetic."""
    a = np.eye(M.n, dtype=complex) - lam * M.to_numpy()
    d = complex(np.linalg.det(a))
    scale = max(1.0, abs(d))
    if abs(d.imag) > 1e-10 * scale:
        raise ArithmeticError(f"determinant has large imaginary residue: {d!r}")
    return d.real


def det_i_minus_lambda_exact(M: HermitianMatrix, lam):
    """Exact det(I - lam*M); requires exact entries and rational lam."""
    lam = Fraction(lam)
    n = M.n
    rows = [
        [
            (1 if i == j else 0) - lam * cf.as_gaussian(M.entries[i][j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    d = _det_exact(rows)
    assert d.im == 0
    re = d.re
    return int(re) if re.denominator == 1 else re


# ---------------------------------------------------------------------------
# traces


def trace_power(M: HermitianMatrix, n: int) -> float:
    """trace(M^n) by repeated matrix multiplication."""
    if n < 0:
        raise ValueError("n must be non-negative")
    a = M.to_numpy()
    acc = np.eye(M.n, dtype=complex)
    for _ in range(n):
        acc = acc @ a
    return float(np.trace(acc).real)


def trace_powers_exact(M: HermitianMatrix, N: int) -> list:
    """Exact traces of M^0..M^N; requires exact entries.

    Returned values are ints or Fractions (the imaginary parts vanish
    identically for Hermitian matrices).
    """
    n = M.n
    a = [[cf.as_gaussian(c) for c in row] for row in M.entries]
    acc = [
        [cf.GaussianRational(1 if i == j else 0) for j in range(n)] for i in range(n)
    ]
    out = []
    for k in range(N + 1):
        tr = sum((acc[i][i] for i in range(n)), cf.GaussianRational(0))
        assert tr.im == 0
        out.append(int(tr.re) if tr.re.denominator == 1 else tr.re)
        if k == N:
            break
        acc = [
            [
                sum((acc[i][t] * a[t][j] for t in range(n)), cf.GaussianRational(0))
                for j in range(n)
            ]
            for i in range(n)
        ]
    return out


# ---------------------------------------------------------------------------
# character-based spectra


def abelian_character_values(g: gr.AbelianProduct, P: rg.RingElement) -> np.ndarray:
    """P evaluated at every character of a finite abelian group.

    Entry order is lexicographic over the character index tuples
    (j_1, ..., j_l), matching the canonical element order.
    """
    if not isinstance(g, gr.AbelianProduct):
        raise ValueError("character evaluation needs an abelian product group")
    if not gr.is_finite(g):
        raise InfiniteGroupError("character evaluation needs a finite group")
    if P.group != g:
        P = rg.transfer(P, g)
    moduli = g.moduli
    grids = np.meshgrid(*(np.arange(m) for m in moduli), indexing="ij")
    vals = np.zeros(grids[0].shape if grids else (), dtype=complex)
    for e, c in P.terms:
        phase = np.zeros(grids[0].shape, dtype=float)
        for exp, m, j in zip(e, moduli, grids):
            phase += (2.0 * math.pi * exp / m) * j
        vals += complex(c) * np.exp(1j * phase)
    return vals.reshape(-1)


def abelian_spectrum(g: gr.AbelianProduct, P: rg.RingElement) -> Spectrum:
    """Spectrum of the Cayley adjacency by evaluating P at roots of unity.

    For reciprocal P this equals hermitian_eigenvalues(cayley_adjacency)
    as a multiset; the values are then real.
    """
    vals = abelian_character_values(g, P)
    resid = float(np.max(np.abs(vals.imag))) if len(vals) else 0.0
    scale = max(1.0, float(np.max(np.abs(vals)))) if len(vals) else 1.0
    if resid > 1e-9 * scale:
        raise ValueError(
            "character values are not real; spectrum is defined for reciprocal P"
        )
    return Spectrum(tuple(sorted(float(v) for v in vals.real)), len(vals))


def dihedral_trace_via_characters(m: int, P: rg.RingElement, n: int) -> float:
    """trace(A^n) for reciprocal P over D_m from the character identity:
    expand P^n into monomials x^k and y x^k, then substitute x -> each m-th
    root of unity and y -> +/-1, and sum.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    g = gr.Dihedral(m)
    if P.group != g:
        P = rg.transfer(P, g)
    if not rg.is_reciprocal(P):
        raise ValueError("P must be reciprocal in D_m")
    Pn = rg.ring_power(P, n)
    total = 0 + 0j
    for j in range(1, m + 1):
        xi = cmath.exp(2j * math.pi * j / m)
        for sign in (1.0, -1.0):
            for (eps, k), c in Pn.terms:
                total += complex(c) * (sign if eps else 1.0) * xi**k
    return total.real
