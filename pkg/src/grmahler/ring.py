"""Sparse arithmetic in the complex group ring of a catalogue group.

A RingElement is a finite-support map from normal forms to coefficients,
tagged with its group.  Coefficients follow the two-mode convention of
`coeffs`: everything stays exact while the inputs are exact, and degrades
to complex as soon as a floating value enters.

The central quantity everywhere downstream is the sequence of constant
coefficients of powers, a_n = [P^n]_0, which counts weighted closed walks
at the identity of the weighted Cayley graph.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import coeffs as cf
from . import groups as gr
from .errors import GroupMismatchError, ResourceLimitError

DEFAULT_SUPPORT_CAP = 5_000_000


@dataclass(frozen=True)
class RingElement:
    """Element of C[group]; `terms` is sorted in the canonical element order."""

    group: gr.GroupSpec
    terms: tuple

    def coeff(self, elem):
        for e, c in self.terms:
            if e == elem:
                return c
        return 0

    def support(self):
        return [e for e, _ in self.terms]

    def is_exact(self) -> bool:
        return all(cf.is_exact(c) for _, c in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # convenience operator sugar; the module-level functions are the API
    def __add__(self, other):
        return add(self, _coerce(self.group, other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, scale(-1, _coerce(self.group, other)))

    def __rsub__(self, other):
        return add(_coerce(self.group, other), scale(-1, self))

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return mul(self, other)
        return scale(other, self)

    def __rmul__(self, other):
        return scale(other, self)

    def __neg__(self):
        return scale(-1, self)

    def __str__(self):
        if not self.terms:
            return "0"
        names = gr.generator_names(self.group)
        parts = []
        for e, c in self.terms:
            word = gr.element_word(self.group, e)
            mono = "".join(
                names[i] + (f"^{exp}" if exp != 1 else "") for i, exp in word
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)


@dataclass(frozen=True)
class SeriesCoeffs:
    """Constant coefficients a_0..a_N of P^n, with the l1 bound |a_n| <= k^n."""

    values: tuple
    n: int
    l1_bound: float


def _coerce(group, value):
    if isinstance(value, RingElement):
        return value
    # scalars embed as multiples of the identity
    return ring_element(group, {gr.identity(group): value})


def ring_element(group: gr.GroupSpec, mapping) -> RingElement:
    """Canonical RingElement from {element: coefficient}.

    Validates normal forms, drops zero coefficients, and degrades every
    coefficient to complex if any of them is floating.
    """
    items = []
    exact = True
    for e, c in mapping.items():
        gr.validate_element(group, e)
        if c == 0:
            continue
        exact = exact and cf.is_exact(c)
        items.append((e, c))
    if not exact:
        items = [(e, complex(c)) for e, c in items]
        items = [(e, c) for e, c in items if c != 0]
    items.sort(key=lambda ec: gr.element_sort_key(group, ec[0]))
    return RingElement(group, tuple(items))


def monomial(group: gr.GroupSpec, elem, coeff=1) -> RingElement:
    return ring_element(group, {elem: coeff})


def one(group: gr.GroupSpec) -> RingElement:
    return monomial(group, gr.identity(group))


def zero(group: gr.GroupSpec) -> RingElement:
    return RingElement(group, ())


def from_word_terms(group: gr.GroupSpec, terms) -> RingElement:
    """Build from ((coeff, word), ...) where word = ((gen_index, exp), ...)."""
    acc = {}
    for c, word in terms:
        e = gr.evaluate_word(group, word)
        acc[e] = acc.get(e, 0) + c
    return ring_element(group, acc)


def _check_same_group(a: RingElement, b: RingElement):
    if a.group != b.group:
        raise GroupMismatchError(f"group mismatch: {a.group!r} vs {b.group!r}")


def add(a: RingElement, b: RingElement) -> RingElement:
    _check_same_group(a, b)
    acc = dict(a.terms)
    for e, c in b.terms:
        acc[e] = acc.get(e, 0) + c
    return ring_element(a.group, acc)


def scale(c, a: RingElement) -> RingElement:
    return ring_element(a.group, {e: c * ce for e, ce in a.terms})


def _mul_terms(group, ta, tb) -> dict:
    out = {}
    for ea, ca in ta:
        for eb, cb in tb:
            e = gr.multiply(group, ea, eb)
            prev = out.get(e)
            out[e] = ca * cb if prev is None else prev + ca * cb
    return out


def mul(a: RingElement, b: RingElement) -> RingElement:
    """Convolution product over the group."""
    _check_same_group(a, b)
    return ring_element(a.group, _mul_terms(a.group, a.terms, b.terms))


def star(a: RingElement) -> RingElement:
    """The reciprocal involution: conjugate coefficients, invert elements."""
    return ring_element(
        a.group, {gr.invert(a.group, e): cf.conj(c) for e, c in a.terms}
    )


def is_reciprocal(a: RingElement) -> bool:
    """True iff star(a) equals a exactly (canonical forms compared termwise)."""
    return star(a).terms == a.terms


def constant_coefficient(a: RingElement):
    return a.coeff(gr.identity(a.group))


def l1_norm(a: RingElement) -> float:
    return float(sum(abs(c) for _, c in a.terms))


def ring_power(a: RingElement, n: int) -> RingElement:
    """a**n by repeated multiplication (n >= 0)."""
    if n < 0:
        raise ValueError("negative powers are not defined in the group ring")
    acc = one(a.group)
    for _ in range(n):
        acc = mul(acc, a)
    return acc


def power_constant_coeffs(
    P: RingElement, N: int, support_cap: int = DEFAULT_SUPPORT_CAP
) -> SeriesCoeffs:
    """a_n = [P^n]_0 for n = 0..N by iterated multiplication.

    Works over infinite groups because P^n always has finite support; the
    support may grow exponentially (free families), so the iteration aborts
    with ResourceLimitError beyond `support_cap` stored terms.  The a_n stay
    exact whenever P's coefficients are exact.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    group = P.group
    ident = gr.identity(group)
    values = [1]
    cur = {ident: 1}
    for _ in range(N):
        nxt = _mul_terms(group, cur.items(), P.terms)
        nxt = {e: c for e, c in nxt.items() if c != 0}
        if len(nxt) > support_cap:
            raise ResourceLimitError(
                f"support of power exceeded cap ({len(nxt)} > {support_cap})"
            )
        cur = nxt
        values.append(cur.get(ident, 0))
    return SeriesCoeffs(tuple(values), N, l1_norm(P))


def transfer(a: RingElement, target: gr.GroupSpec) -> RingElement:
    """Re-express `a` in another group by reading each support element as a
    word in the generators (x = generator 0, y = generator 1, ...).

    This is how the same polynomial is compared across base groups, e.g.
    D_m versus Z/m x Z/2, or an infinite group versus its finite quotients.
    """
    if a.group == target:
        return a
    n_src = gr.num_generators(a.group)
    n_tgt = gr.num_generators(target)
    if n_src > n_tgt:
        raise GroupMismatchError(
            f"cannot transfer: {a.group!r} uses {n_src} generators, "
            f"{target!r} has {n_tgt}"
        )
    acc = {}
    for e, c in a.terms:
        word = gr.element_word(a.group, e)
        t = gr.evaluate_word(target, word)
        acc[t] = acc.get(t, 0) + c
    return ring_element(target, acc)
