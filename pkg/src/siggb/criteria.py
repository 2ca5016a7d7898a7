"""Signature criteria: syzygy-signature stores and rewrite rules.

Two families of checks prune critical pairs:

* NM ("non-minimal"): a pair generator whose multiplied signature is
  divisible by a known syzygy signature of the same module index is
  discarded; its s-polynomial already has a standard representation.
  ``SyzygySigSet`` holds those witness monomials bucketed by index.

* RW ("rewritable"): of several pairs that would rewrite the same module
  area, only one needs processing.  The F5 flavour keeps an append-only
  rule list per index; the GGV flavour simply never enqueues a second
  pair with an already-seen signature.
"""

from __future__ import annotations

from .ring import mono_div, mono_divides, mono_lcm


class SyzygySigSet:
    """Per-index buckets of syzygy-signature monomials.

    Buckets are kept divisor-minimal: inserting a monomial with a divisor
    already present is a no-op, and inserting a new divisor evicts its
    multiples.  Neither changes any divisibility answer.
    """

    __slots__ = ("buckets",)

    def __init__(self):
        self.buckets = {}

    def add(self, index, mono):
        """Insert; returns False when a divisor made the entry redundant."""
        bucket = self.buckets.get(index)
        if bucket is None:
            self.buckets[index] = [mono]
            return True
        for m in bucket:
            if mono_divides(m, mono):
                return False
        bucket[:] = [m for m in bucket if not mono_divides(mono, m)]
        bucket.append(mono)
        return True

    def add_many(self, index, monos):
        for m in monos:
            self.add(index, m)

    def covers(self, index, mono):
        """True iff some stored monomial at ``index`` divides ``mono``."""
        bucket = self.buckets.get(index)
        if not bucket:
            return False
        for m in bucket:
            if mono_divides(m, mono):
                return True
        return False

    def bucket(self, index):
        return frozenset(self.buckets.get(index, ()))

    def discard_bucket(self, index):
        """Forget every monomial stored at ``index``."""
        self.buckets.pop(index, None)

    def indices(self):
        return sorted(self.buckets)

    def __bool__(self):
        return any(self.buckets.values())


def nm_check(s, syz_sets):
    """NM criterion: reject the generator carrying signature ``s`` iff a
    witness monomial in bucket ``s.index`` divides ``s.mono``."""
    return syz_sets.covers(s.index, s.mono)


class RuleList:
    """Append-only rewrite rules per module index, in processing order.

    Within a bucket the signature monomials arrive in the order pairs are
    admitted for reduction, hence nondecreasing in the signature order.
    """

    __slots__ = ("buckets",)

    def __init__(self):
        self.buckets = {}

    def add(self, index, mono):
        """Register a rule; returns its position inside the bucket."""
        bucket = self.buckets.setdefault(index, [])
        bucket.append(mono)
        return len(bucket) - 1

    def bucket(self, index):
        return tuple(self.buckets.get(index, ()))


def rw_check_f5(h_sig_mono, h_index, h_own_rule_position, rules):
    """F5 rewritability: true iff a rule registered *after* the generator's
    own rule divides its multiplied signature monomial.  Newest rules are
    scanned first since they are the most likely witnesses."""
    bucket = rules.buckets.get(h_index, ())
    if h_own_rule_position is None or not 0 <= h_own_rule_position < len(bucket):
        raise ValueError(f"unknown rule position {h_own_rule_position!r} "
                         f"in bucket {h_index}")
    for i in range(len(bucket) - 1, h_own_rule_position, -1):
        if mono_divides(bucket[i], h_sig_mono):
            return True
    return False


def rw_check_ggv(pair_sig, pending):
    """GGV rewritability: a newcomer is dropped iff a pair with exactly this
    signature is pending or was already processed this step."""
    return pair_sig in pending


def psyz_signatures(B, current_index):
    """Principal-syzygy witness monomials for the current index.

    For every basis element ``b``, the syzygy ``b*e_cur - f_cur*e_b`` has
    leading signature ``lm(b)*e_cur`` under the index-dominant order, so the
    bucket for ``current_index`` is just the set of leading monomials of
    ``B``.
    """
    return {b.LM for b in B if not b.is_zero}


def build_S_from_interreduction(B):
    """Syzygy-signature monomials recorded after interreducing a basis.

    ``B`` must be ordered with the designated element last: the one whose
    polynomial descends from the generator the finished step introduced.
    Each older element ``b_k`` yields ``lcm(lm(b_last), lm(b_k)) / lm(b_last)``
    for the bucket ``len(B)``; a singleton basis records nothing.
    """
    elems = list(B)
    if len(elems) <= 1:
        return set()
    last = elems[-1].LM
    out = set()
    for b in elems[:-1]:
        out.add(mono_div(mono_lcm(last, b.LM), last))
    return out


def corollary_filter(entries, recorded_sizes):
    """Drop lower-index principal-syzygy buckets shadowed by recorded S-sets.

    ``entries`` maps a module index to its principal-syzygy witness set;
    every bucket whose index equals a recorded basis size is redundant there
    and is removed.  Everything else passes through unchanged.
    """
    return {j: monos for j, monos in entries.items() if j not in recorded_sizes}
