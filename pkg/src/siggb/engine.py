"""Incremental signature-based Groebner basis engine.

One generator is admitted per outer step: the basis computed so far is
interreduced, the new generator is reduced against it and, when nonzero,
labeled with the next module index.  Critical pairs are then processed in
nondecreasing signature order; non-minimal signatures (NM) are filtered when
pairs are created, rewritable ones (RW) when they are popped.

Six variants share this loop and differ only in which witness sets NM
consults and how RW is realized:

==========  ===========================  ==============
variant     NM witnesses                 RW
==========  ===========================  ==============
f5c         principal syzygies           rule list
f5a         + current-step zero sigs     rule list
ggv         + current-step zero sigs     signature dedup
f5c-i       f5c + recorded S-sets        rule list
f5a-i       f5a + recorded S-sets        rule list
ggv-i       ggv + recorded S-sets        signature dedup
==========  ===========================  ==============

The recorded S-sets carry zero-reduction knowledge across interreduction:
after each step the set ``{lcm(lm(b_last), lm(b_k))/lm(b_last)}`` is stored
for the bucket ``len(B)``, where ``b_last`` is the basis element descending
from the step's own generator.  Only generators of module index below the
current one are checked against those buckets.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field

from .classic import PolyBasis, interreduce, normal_form
from .criteria import (
    RuleList,
    SyzygySigSet,
    build_S_from_interreduction,
    corollary_filter,
    psyz_signatures,
    rw_check_f5,
    rw_check_ggv,
)
from .ring import mono_mul
from .signatures import (
    EQUAL_SIGNATURE,
    TRIVIAL,
    LabeledPoly,
    Signature,
    make_spair,
    sig_key,
    sig_safe_reduce,
    spair_poly,
)


@dataclass(frozen=True, slots=True)
class VariantConfig:
    """Criterion selection for one engine variant.

    ``nm_harvest``: signatures of this step's zero reductions join the NM
    witness set.  ``nm_cross_step``: S-sets recorded at interreduction time
    (and lower-index principal syzygies) are consulted for generators of
    earlier module index.  ``rw_mode`` picks the rewritability flavour.
    """

    name: str
    nm_harvest: bool
    nm_cross_step: bool
    rw_mode: str

    def __post_init__(self):
        if self.rw_mode not in ("f5_rules", "ggv_dedup"):
            raise ValueError(f"unknown rw_mode {self.rw_mode!r}")

    @property
    def nm_mode(self):
        if self.nm_cross_step:
            return "psyz_plus_all_S"
        if self.nm_harvest:
            return "psyz_plus_current_zero"
        return "psyz_only"


VARIANTS = {
    "ggv": VariantConfig("ggv", nm_harvest=True, nm_cross_step=False, rw_mode="ggv_dedup"),
    "ggv-i": VariantConfig("ggv-i", nm_harvest=True, nm_cross_step=True, rw_mode="ggv_dedup"),
    "f5c": VariantConfig("f5c", nm_harvest=False, nm_cross_step=False, rw_mode="f5_rules"),
    "f5c-i": VariantConfig("f5c-i", nm_harvest=False, nm_cross_step=True, rw_mode="f5_rules"),
    "f5a": VariantConfig("f5a", nm_harvest=True, nm_cross_step=False, rw_mode="f5_rules"),
    "f5a-i": VariantConfig("f5a-i", nm_harvest=True, nm_cross_step=True, rw_mode="f5_rules"),
}


@dataclass
class Stats:
    """Run counters; relational comparisons between variants are the point,
    absolute numbers depend on implementation choices."""

    reduction_steps: int = 0
    zero_reductions: int = 0
    pairs_generated: int = 0
    rejected_nm: int = 0
    rejected_rw: int = 0
    basis_size_final: int = 0
    elapsed: float = 0.0


def stat_report(stats):
    """Flat dict view of the counters, elapsed in milliseconds."""
    return {
        "reduction_steps": stats.reduction_steps,
        "zero_reductions": stats.zero_reductions,
        "pairs_generated": stats.pairs_generated,
        "rejected_nm": stats.rejected_nm,
        "rejected_rw": stats.rejected_rw,
        "basis_size": stats.basis_size_final,
        "elapsed_ms": round(stats.elapsed * 1000.0, 3),
    }


class PairLimitExceeded(RuntimeError):
    """The configured pair-count ceiling was hit; carries partial stats."""

    def __init__(self, limit, stats):
        super().__init__(f"pair limit {limit} exceeded")
        self.limit = limit
        self.stats = stats


@dataclass
class EngineState:
    """Working state of one incremental step (mainly for introspection)."""

    current_basis: list
    pending: list
    syz_sets: SyzygySigSet
    rules: RuleList
    step_index: int
    stats: Stats


def inc_sig(f_new, B_prev, syz_sets, cfg, stats, *, recorded_sizes=frozenset(),
            pair_limit=None, trace=None, shadow=None):
    """Run one incremental step: extend the reduced basis ``B_prev`` by the
    fully reduced, nonzero generator ``f_new``.

    Returns the step's labeled polynomials.  ``syz_sets`` is the persistent
    cross-step S-set store (only consulted by the ``-i`` variants and only
    for lower-index generators).  ``shadow``, when given, collects for every
    created pair the basic/improved/strengthened NM verdicts evaluated
    against the live witness state.
    """
    assert not f_new.is_zero and f_new.LC == 1
    B = list(B_prev)
    ell = len(B)
    cur = ell + 1
    ring = f_new.ring
    one = ring.zero_mono

    G = [LabeledPoly(Signature(one, j + 1), B[j]) for j in range(ell)]
    G.append(LabeledPoly(Signature(one, cur), f_new, rule_pos=0))

    seed = SyzygySigSet()
    seed.add_many(cur, psyz_signatures(B, cur))
    harvest = SyzygySigSet()

    lower_psyz = None
    lower_psyz_all = None
    if cfg.nm_cross_step or shadow is not None:
        entries = {j: {B[k].LM for k in range(j - 1)} for j in range(2, ell + 1)}
        lower_psyz_all = SyzygySigSet()
        for j, monos in entries.items():
            lower_psyz_all.add_many(j, monos)
        lower_psyz = SyzygySigSet()
        for j, monos in corollary_filter(entries, recorded_sizes).items():
            lower_psyz.add_many(j, monos)

    rules = RuleList()
    rules.add(cur, one)
    seen_sigs = set()
    pending = []
    state = EngineState(G, pending, syz_sets, rules, cur, stats)
    serial = 0
    ggv = cfg.rw_mode == "ggv_dedup"

    def side_reject(idx, ut):
        if idx == cur:
            if seed.covers(cur, ut):
                return True
            return cfg.nm_harvest and harvest.covers(cur, ut)
        if cfg.nm_cross_step:
            if syz_sets.covers(idx, ut):
                return True
            return lower_psyz.covers(idx, ut)
        return False

    def shadow_verdicts(sides):
        basic = improved = strengthened = False
        for idx, ut in sides:
            if idx == cur:
                s = seed.covers(cur, ut)
                h = harvest.covers(cur, ut)
                basic = basic or s
                improved = improved or s or h
                strengthened = strengthened or s or h
            else:
                p = lower_psyz_all.covers(idx, ut)
                basic = basic or p
                improved = improved or p
                strengthened = (strengthened or p or syz_sets.covers(idx, ut)
                                or lower_psyz.covers(idx, ut))
        return basic, improved, strengthened

    def try_pair(a_pos, b_pos):
        nonlocal serial
        made = make_spair(G[a_pos], G[b_pos], a_pos, b_pos)
        if made is TRIVIAL or made is EQUAL_SIGNATURE:
            return
        stats.pairs_generated += 1
        if pair_limit is not None and stats.pairs_generated > pair_limit:
            raise PairLimitExceeded(pair_limit, stats)
        sides = []
        for pos, u in ((made.f_idx, made.u_f), (made.g_idx, made.u_g)):
            lsig = G[pos].sig
            sides.append((lsig.index, mono_mul(u, lsig.mono)))
        if shadow is not None:
            shadow.append((made.sig, *shadow_verdicts(sides)))
        if any(side_reject(idx, ut) for idx, ut in sides):
            stats.rejected_nm += 1
            return
        if ggv:
            if rw_check_ggv(made.sig, seen_sigs):
                stats.rejected_rw += 1
                return
            seen_sigs.add(made.sig)
        heapq.heappush(pending, (sig_key(ring, made.sig), serial, made))
        serial += 1

    for j in range(ell):
        try_pair(ell, j)

    last_key = None
    while pending:
        pkey, _, pair = heapq.heappop(pending)
        assert last_key is None or pkey >= last_key
        last_key = pkey
        own_pos = None
        if not ggv:
            rejected = False
            for pos, u in ((pair.f_idx, pair.u_f), (pair.g_idx, pair.u_g)):
                lp = G[pos]
                if lp.sig.index != cur:
                    continue
                ut = mono_mul(u, lp.sig.mono)
                if rw_check_f5(ut, cur, lp.rule_pos, rules):
                    rejected = True
                    break
            if rejected:
                stats.rejected_rw += 1
                continue
            # only admitted pairs register rewrite rules: the rule promises a
            # handler for its signature area, and this pair — reduced to a new
            # element or to a certified zero — is that handler.  The rule
            # doubles as the resulting element's own entry.
            own_pos = rules.add(cur, pair.sig.mono)
        s = spair_poly(pair, G)
        res = sig_safe_reduce(LabeledPoly(pair.sig, s), G, stats)
        if res.poly.is_zero:
            stats.zero_reductions += 1
            if trace is not None:
                trace.append(("zero_reduction", pair.sig))
            if cfg.nm_harvest:
                harvest.add(cur, pair.sig.mono)
        else:
            G.append(LabeledPoly(res.sig, res.poly, rule_pos=own_pos))
            if trace is not None:
                trace.append(("element_added", res.sig, res.poly.LM))
            new_pos = len(G) - 1
            for j in range(new_pos):
                try_pair(new_pos, j)
    assert state.current_basis is G
    return G


def _designated_order(basis, G, ring):
    """Order a freshly interreduced basis so the element descending from the
    step's generator sits last; everything else stays ascending."""
    elems = list(basis)
    lms = {f.LM for f in elems}
    des_lm = None
    for lp in sorted(G, key=lambda lp: sig_key(ring, lp.sig), reverse=True):
        if not lp.poly.is_zero and lp.poly.LM in lms:
            des_lm = lp.poly.LM
            break
    if des_lm is None:
        return elems
    rest = [f for f in elems if f.LM != des_lm]
    rest.append(next(f for f in elems if f.LM == des_lm))
    return rest


def sig_gb(F, cfg, *, pair_limit=None, trace=None, shadow=None):
    """Groebner basis of ``F`` by the selected signature variant.

    ``cfg`` is a ``VariantConfig`` or a variant name.  Returns the canonical
    reduced basis together with the run's ``Stats``.  Zero generators and
    generators reducing to zero against the basis built so far are skipped.
    """
    if isinstance(cfg, str):
        try:
            cfg = VARIANTS[cfg]
        except KeyError:
            raise ValueError(f"unknown variant {cfg!r}") from None
    gens = list(F)
    if not gens:
        raise ValueError("no generators")
    ring = gens[0].ring
    for f in gens:
        if f.ring != ring:
            raise ValueError("generators from different rings")

    stats = Stats()
    t0 = time.perf_counter()
    B = []
    result = PolyBasis((), reduced=True)
    syz_store = SyzygySigSet()
    # bucket index -> (designated element's terms, terms of the others); an
    # S-set certifies syzygies of the basis it was computed from, so once
    # interreduction changes that prefix the bucket's witnesses are void
    recorded = {}

    def prune_stale():
        for j in list(recorded):
            des_terms, other_terms = recorded[j]
            if (len(B) >= j and B[j - 1].terms == des_terms
                    and frozenset(p.terms for p in B[:j - 1]) == other_terms):
                continue
            syz_store.discard_bucket(j)
            del recorded[j]
            if trace is not None:
                trace.append(("s_discarded", j))

    try:
        for i, f in enumerate(gens):
            fr = normal_form(f, B, mode="full")
            if fr.is_zero:
                if trace is not None:
                    trace.append(("generator_skipped", i))
                continue
            fr = fr.monic()
            if not B:
                result = PolyBasis((fr,), reduced=True)
                B = [fr]
                if trace is not None:
                    trace.append(("interreduced", result.elems))
                continue
            if cfg.nm_cross_step or shadow is not None:
                # shadow evaluation needs the cross-step state maintained even
                # for variants that never consult it
                S = build_S_from_interreduction(B)
                syz_store.add_many(len(B), S)
                recorded[len(B)] = (B[-1].terms,
                                    frozenset(p.terms for p in B[:-1]))
                if trace is not None:
                    trace.append(("s_recorded", len(B), frozenset(S)))
            G = inc_sig(fr, B, syz_store, cfg, stats,
                        recorded_sizes=frozenset(recorded),
                        pair_limit=pair_limit, trace=trace, shadow=shadow)
            result = interreduce([lp.poly for lp in G])
            B = _designated_order(result, G, ring)
            if cfg.nm_cross_step or shadow is not None:
                prune_stale()
            if trace is not None:
                trace.append(("step_done", tuple(G)))
                trace.append(("interreduced", result.elems))
    finally:
        stats.elapsed = time.perf_counter() - t0
        stats.basis_size_final = len(result)
    return result, stats
