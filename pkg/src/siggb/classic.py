"""Classical Groebner machinery: division, interreduction, Buchberger.

Everything here is signature-free.  ``buchberger`` serves as the reference
implementation the signature-based engine is checked against; it favours
determinism and clarity over raw speed (Gebauer-Moeller pair update, normal
selection strategy, canonical reduced output).
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import Polynomial, _merge_sub, mono_div, mono_divides, mono_lcm, mono_mul


@dataclass(frozen=True)
class PolyBasis:
    """A finite basis; ``reduced`` marks the reduced-Groebner-basis invariants
    (pairwise non-divisible leading monomials, irreducible tails, monic,
    ascending by leading monomial)."""

    elems: tuple
    reduced: bool = False

    def __iter__(self):
        return iter(self.elems)

    def __len__(self):
        return len(self.elems)

    def __getitem__(self, i):
        return self.elems[i]


def _elements(basis):
    if isinstance(basis, PolyBasis):
        return basis.elems
    return tuple(basis)


def spoly(f, g):
    """S-polynomial ``(lcm/lt(f))*f - (lcm/lt(g))*g``; leading terms cancel."""
    if f.is_zero or g.is_zero:
        raise ValueError("s-polynomial of a zero polynomial")
    lcm = mono_lcm(f.LM, g.LM)
    uf = mono_div(lcm, f.LM)
    ug = mono_div(lcm, g.LM)
    p = f.ring.field.p
    scale = (f.LC * pow(g.LC, -1, p)) % p
    return f.mul_term((uf, 1)).sub_mul(scale, ug, g)


def normal_form(f, basis, mode="full"):
    """Remainder of ``f`` on division by ``basis``.

    The reducer for a monomial is always the basis element with the smallest
    leading monomial among the divisors, ties broken by lowest position, so
    the result is independent of basis presentation order up to that rule.
    ``mode`` is ``"full"`` (reduce every term) or ``"top"`` (stop once the
    leading monomial is irreducible).
    """
    if mode not in ("full", "top"):
        raise ValueError(f"unknown mode {mode!r}")
    elems = [g for g in _elements(basis) if not g.is_zero]
    if f.is_zero or not elems:
        return f
    ring = f.ring
    key = ring.key
    p = ring.field.p
    # scan order: ascending leading monomial, stable in position
    order = sorted(range(len(elems)), key=lambda i: key(elems[i].LM))
    red = [(elems[i].LM, sum(elems[i].LM), elems[i]) for i in order]

    out = []
    work = list(f.terms)
    while work:
        # shift the run of irreducible monomials into the result
        pos = None
        for k, (m, _) in enumerate(work):
            deg = sum(m)
            hit = None
            for glm, gdeg, g in red:
                if gdeg <= deg and mono_divides(glm, m):
                    hit = g
                    break
            if hit is not None:
                pos = k
                break
            if mode == "top":
                # leading monomial irreducible: done
                out.extend(work)
                return Polynomial(ring, tuple(out))
        if pos is None:
            out.extend(work)
            break
        out.extend(work[:pos])
        m, c = work[pos]
        t = mono_div(m, hit.LM)
        c = (c * pow(hit.LC, -1, p)) % p
        if c == 1:
            shifted = [(mono_mul(t, gm), gc) for gm, gc in hit.terms]
        else:
            shifted = [(mono_mul(t, gm), (c * gc) % p) for gm, gc in hit.terms]
        work = _merge_sub(work[pos:], shifted, p, key)
    return Polynomial(ring, tuple(out))


def _min_survivors(elems):
    """Indices of elements kept by the leading-monomial divisibility filter
    (strict divisors discard; among equal leading monomials the earliest
    occurrence wins)."""
    keep = []
    for i, f in enumerate(elems):
        drop = False
        for j, g in enumerate(elems):
            if i == j:
                continue
            if mono_divides(g.LM, f.LM):
                if g.LM != f.LM or j < i:
                    drop = True
                    break
        if not drop:
            keep.append(i)
    return keep


def interreduce(polys, validate=False):
    """Reduced basis of the input: minimal leading monomials, fully reduced
    tails, monic, sorted ascending by leading monomial."""
    elems = [f.monic() for f in _elements(polys) if not f.is_zero]
    if not elems:
        return PolyBasis((), reduced=True)
    ring = elems[0].ring
    elems = [elems[i] for i in _min_survivors(elems)]
    # tail reduction to a fixed point; tops never reduce since the surviving
    # leading monomials are pairwise non-divisible
    changed = True
    while changed:
        changed = False
        for i in range(len(elems)):
            others = elems[:i] + elems[i + 1:]
            q = normal_form(elems[i], others, mode="full").monic()
            if q != elems[i]:
                assert not q.is_zero and q.LM == elems[i].LM
                elems[i] = q
                changed = True
    elems.sort(key=lambda f: ring.key(f.LM))
    basis = PolyBasis(tuple(elems), reduced=True)
    if validate:
        ok, why = check_reduced(basis)
        if not ok:
            raise AssertionError(f"interreduce produced a non-reduced basis: {why}")
    return basis


def check_reduced(basis):
    """Verify the reduced-basis invariants; returns ``(ok, reason)``."""
    elems = _elements(basis)
    for f in elems:
        if f.is_zero:
            return False, "zero element"
        if f.LC != 1:
            return False, f"non-monic element {f}"
    for i, f in enumerate(elems):
        for j, g in enumerate(elems):
            if i == j:
                continue
            if mono_divides(g.LM, f.LM):
                return False, f"lm({g}) divides lm({f})"
            for m, _ in f.terms[1:]:
                if mono_divides(g.LM, m):
                    return False, f"tail term of {f} reducible by {g}"
    if elems:
        ring = elems[0].ring
        keys = [ring.key(f.LM) for f in elems]
        if keys != sorted(keys):
            return False, "not ascending by leading monomial"
    return True, ""


def _update(G, P, h):
    """Gebauer-Moeller pair update: add ``h``, prune new and old pairs by the
    product and chain criteria, drop dominated basis elements."""
    lmh = h.LM
    C = list(range(len(G)))
    D = []
    while C:
        i = C.pop(0)
        lcm_i = mono_lcm(lmh, G[i].LM)
        coprime = lcm_i == mono_mul(lmh, G[i].LM)
        if coprime or (
            not any(mono_divides(mono_lcm(lmh, G[j].LM), lcm_i) for j in C)
            and not any(mono_divides(lcm, lcm_i) for _, lcm in D)
        ):
            D.append((i, lcm_i))
    E = [(i, lcm) for i, lcm in D if lcm != mono_mul(lmh, G[i].LM)]

    P_new = []
    for (i, j, lcm_ij) in P:
        if (not mono_divides(lmh, lcm_ij)
                or mono_lcm(G[i].LM, lmh) == lcm_ij
                or mono_lcm(G[j].LM, lmh) == lcm_ij):
            P_new.append((i, j, lcm_ij))
    k = len(G)
    for i, lcm in E:
        P_new.append((i, k, lcm))
    G.append(h)
    return P_new


def buchberger(F):
    """Reduced Groebner basis of ``F`` (normal selection strategy).

    The output is canonical: the reduced basis is unique for the ideal and the
    ordering, so permuting or duplicating input generators cannot change it.
    """
    gens = [f for f in _elements(F) if not f.is_zero]
    if not gens:
        return PolyBasis((), reduced=True)
    ring = gens[0].ring
    key = ring.key

    G = []
    P = []
    for f in gens:
        f = normal_form(f, G, mode="full")
        if not f.is_zero:
            P = _update(G, P, f.monic())

    while P:
        best = min(range(len(P)), key=lambda ix: (key(P[ix][2]), P[ix][0], P[ix][1]))
        i, j, _ = P.pop(best)
        s = normal_form(spoly(G[i], G[j]), G, mode="full")
        if not s.is_zero:
            P = _update(G, P, s.monic())
    return interreduce(G)


def is_groebner(basis):
    """True iff every S-polynomial of the basis reduces to zero."""
    elems = [g for g in _elements(basis) if not g.is_zero]
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            if not normal_form(spoly(elems[i], elems[j]), elems, mode="full").is_zero:
                return False
    return True
