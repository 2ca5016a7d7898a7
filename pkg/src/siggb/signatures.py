"""Signatures, labeled polynomials, critical pairs and sig-safe reduction.

A signature ``t*e_i`` pairs a monomial with a module index.  The order is
position-over-term: a smaller index always loses, equal indices compare the
monomials degrevlex.  Every labeled polynomial carries the signature it was
born with; reductions below never touch the label (they are "sig-safe"): a
reducer is admissible only while its multiplied signature stays strictly
below the signature being reduced.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .ring import (
    Polynomial,
    _merge_sub,
    cmp_degrevlex,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


@dataclass(frozen=True, slots=True)
class Signature:
    """``mono * e_index`` with ``index >= 1``."""

    mono: tuple
    index: int


def sig_cmp(s, t):
    """Compare signatures: index decides first, then degrevlex on the monomial.

    Returns -1, 0 or 1.
    """
    if s.index != t.index:
        return -1 if s.index < t.index else 1
    return cmp_degrevlex(s.mono, t.mono)


def sig_mul(u, s):
    """Multiply a signature by a monomial: ``u * (t e_i) = (u t) e_i``."""
    return Signature(mono_mul(u, s.mono), s.index)


def sig_key(ring, s):
    """Total-order sort key; consistent with ``sig_cmp``."""
    return (s.index, ring.key(s.mono))


@dataclass(frozen=True, slots=True)
class LabeledPoly:
    """A polynomial with the signature it was created under.

    ``poly`` is monic or zero.  ``rule_pos`` points at the element's own entry
    in the current rewrite-rule bucket (None for carried-over basis elements,
    which are never rewrite-checked).
    """

    sig: Signature
    poly: Polynomial
    rule_pos: int | None = None


class SPairDiscard(enum.Enum):
    """Non-pair results of ``make_spair``."""

    TRIVIAL = "trivial"
    EQUAL_SIGNATURE = "equal_signature"


TRIVIAL = SPairDiscard.TRIVIAL
EQUAL_SIGNATURE = SPairDiscard.EQUAL_SIGNATURE


@dataclass(frozen=True, slots=True)
class CriticalPair:
    """A critical pair, stored with its higher-signature generator first:
    ``sig == sig_mul(u_f, sig(f))`` strictly exceeds the g-side."""

    sig: Signature
    f_idx: int
    g_idx: int
    u_f: tuple
    u_g: tuple
    lcm: tuple


def make_spair(f, g, f_idx, g_idx):
    """Build the critical pair of two labeled polynomials.

    Returns ``TRIVIAL`` for a pair of an element with itself and
    ``EQUAL_SIGNATURE`` when both multiplied signatures coincide (such an
    s-polynomial is a syzygy head and is dropped at creation).
    """
    if f_idx == g_idx:
        return TRIVIAL
    if f.poly.is_zero or g.poly.is_zero:
        raise ValueError("critical pair of a zero polynomial")
    lcm = mono_lcm(f.poly.LM, g.poly.LM)
    u_f = mono_div(lcm, f.poly.LM)
    u_g = mono_div(lcm, g.poly.LM)
    sf = sig_mul(u_f, f.sig)
    sg = sig_mul(u_g, g.sig)
    c = sig_cmp(sf, sg)
    if c == 0:
        return EQUAL_SIGNATURE
    if c > 0:
        return CriticalPair(sf, f_idx, g_idx, u_f, u_g, lcm)
    return CriticalPair(sg, g_idx, f_idx, u_g, u_f, lcm)


def spair_poly(pair, G):
    """The s-polynomial of a critical pair over the current basis ``G``."""
    f = G[pair.f_idx].poly
    g = G[pair.g_idx].poly
    p = f.ring.field.p
    scale = (f.LC * pow(g.LC, -1, p)) % p
    s = f.mul_term((pair.u_f, 1)).sub_mul(scale, pair.u_g, g)
    assert s.is_zero or f.ring.key(s.LM) < f.ring.key(pair.lcm)
    return s


def sig_safe_reduce(r, G, stats=None):
    """Top-reduce ``r`` sig-safely against ``G``; the label never changes.

    Among admissible reducers (leading monomial divides, multiplied signature
    strictly below ``r.sig``) the one with the smallest multiplied signature
    is used, ties broken by basis position.  Tails are left alone.  Returns a
    ``LabeledPoly`` under the same signature whose polynomial is monic, or
    zero if the reduction ran out of terms.
    """
    sig = r.sig
    if r.poly.is_zero:
        return LabeledPoly(sig, r.poly)
    ring = r.poly.ring
    key = ring.key
    p = ring.field.p
    sidx = sig.index
    skey = key(sig.mono)

    cand = []
    for pos, g in enumerate(G):
        gp = g.poly
        if not gp.is_zero:
            cand.append((gp.LM, sum(gp.LM), g.sig, pos, gp))

    work = list(r.poly.terms)
    while work:
        lm, lc = work[0]
        deg = sum(lm)
        best = None
        best_key = None
        for glm, gdeg, gsig, pos, gp in cand:
            if gdeg > deg or not mono_divides(glm, lm):
                continue
            t = mono_div(lm, glm)
            if gsig.index > sidx:
                continue
            if gsig.index == sidx:
                mkey = key(mono_mul(t, gsig.mono))
                if not mkey < skey:
                    continue
            else:
                mkey = key(mono_mul(t, gsig.mono))
            ck = (gsig.index, mkey, pos)
            if best_key is None or ck < best_key:
                best_key = ck
                best = (t, gp)
        if best is None:
            return LabeledPoly(sig, Polynomial(ring, tuple(work)).monic())
        if stats is not None:
            stats.reduction_steps += 1
        t, gp = best
        c = (lc * pow(gp.LC, -1, p)) % p
        if c == 1:
            shifted = [(mono_mul(t, m), cf) for m, cf in gp.terms]
        else:
            shifted = [(mono_mul(t, m), (c * cf) % p) for m, cf in gp.terms]
        work = _merge_sub(work, shifted, p, key)
    return LabeledPoly(sig, ring.zero)
