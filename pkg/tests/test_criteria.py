"""Syzygy-signature stores, rewrite rules and the pruning predicates."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from siggb import (
    RuleList,
    Signature,
    SyzygySigSet,
    build_S_from_interreduction,
    corollary_filter,
    mono_divides,
    nm_check,
    parse_system,
    psyz_signatures,
    rw_check_f5,
    rw_check_ggv,
)

monos = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


# -- syzygy-signature store ---------------------------------------------------------

def test_syzset_basic():
    s = SyzygySigSet()
    assert not s
    assert not s.covers(1, (0, 0, 0))
    assert s.add(1, (1, 1, 0))
    assert s
    assert s.covers(1, (1, 1, 0))
    assert s.covers(1, (2, 1, 1))
    assert not s.covers(1, (1, 0, 1))
    assert not s.covers(2, (1, 1, 0))
    assert s.indices() == [1]


def test_syzset_redundant_add_returns_false():
    s = SyzygySigSet()
    assert s.add(1, (1, 0, 0))
    assert not s.add(1, (1, 2, 0))
    assert not s.add(1, (1, 0, 0))
    assert s.bucket(1) == frozenset({(1, 0, 0)})


def test_syzset_divisor_evicts_multiples():
    s = SyzygySigSet()
    s.add(2, (2, 1, 0))
    s.add(2, (1, 2, 0))
    assert s.add(2, (1, 1, 0))
    assert s.bucket(2) == frozenset({(1, 1, 0)})
    assert s.covers(2, (2, 1, 0))


def test_syzset_discard_bucket():
    s = SyzygySigSet()
    s.add(1, (1, 0, 0))
    s.add(2, (0, 1, 0))
    s.discard_bucket(1)
    s.discard_bucket(9)
    assert not s.covers(1, (1, 0, 0))
    assert s.covers(2, (0, 1, 0))
    assert s.indices() == [2]


@given(st.lists(monos, max_size=12), st.lists(monos, max_size=6))
def test_syzset_minimality_never_changes_answers(stored, probes):
    s = SyzygySigSet()
    s.add_many(1, stored)
    for q in probes + stored:
        assert s.covers(1, q) == any(mono_divides(m, q) for m in stored)
    # the kept witnesses are pairwise non-divisible
    kept = sorted(s.bucket(1))
    for a in kept:
        for b in kept:
            if a != b:
                assert not mono_divides(a, b)


def test_nm_check_contract_example():
    # the first recorded store of the worked three-variable system: bucket 2
    # holds {yz}; a generator with signature yz*e2 is non-minimal, the same
    # monomial on index 1 is not
    s = SyzygySigSet()
    s.add(2, (0, 1, 1))
    assert nm_check(Signature((0, 1, 1), 2), s)
    assert nm_check(Signature((1, 1, 1), 2), s)
    assert not nm_check(Signature((0, 1, 1), 1), s)
    assert not nm_check(Signature((1, 1, 0), 2), s)


# -- rewrite rules ------------------------------------------------------------------

def test_rulelist_positions_and_buckets():
    r = RuleList()
    assert r.add(2, (0, 0, 1)) == 0
    assert r.add(2, (0, 1, 0)) == 1
    assert r.add(3, (1, 0, 0)) == 0
    assert r.bucket(2) == ((0, 0, 1), (0, 1, 0))
    assert r.bucket(3) == ((1, 0, 0),)
    assert r.bucket(7) == ()


def test_rw_check_f5_only_newer_rules_fire():
    r = RuleList()
    p0 = r.add(2, (0, 0, 1))
    p1 = r.add(2, (1, 0, 0))
    # a later rule x*e2 rewrites anything x divides, seen from the older rule
    assert rw_check_f5((1, 0, 1), 2, p0, r)
    # ... but never from itself or from a position after it
    assert not rw_check_f5((1, 0, 1), 2, p1, r)
    assert not rw_check_f5((0, 1, 1), 2, p0, r)


def test_rw_check_f5_rejects_bad_positions():
    r = RuleList()
    r.add(1, (1, 0, 0))
    with pytest.raises(ValueError):
        rw_check_f5((1, 0, 0), 1, None, r)
    with pytest.raises(ValueError):
        rw_check_f5((1, 0, 0), 1, 5, r)
    with pytest.raises(ValueError):
        rw_check_f5((1, 0, 0), 2, 0, r)


def test_rw_check_ggv_membership():
    pending = {Signature((0, 1, 0), 2)}
    assert rw_check_ggv(Signature((0, 1, 0), 2), pending)
    assert not rw_check_ggv(Signature((0, 1, 0), 1), pending)
    assert not rw_check_ggv(Signature((1, 0, 0), 2), pending)


# -- witness construction -----------------------------------------------------------

def wbasis():
    return parse_system(
        "vars: x, y, z\nchar: 32003\n"
        "y*z + 2\nx*y + 10668*x*z - 10667\nx*z^2 - 6*x + 2*z").generators


def test_psyz_signatures_frozen():
    B = wbasis()
    assert psyz_signatures(B[:2], 3) == {(0, 1, 1), (1, 1, 0)}
    assert psyz_signatures([], 1) == set()
    assert psyz_signatures([B[0].ring.zero], 1) == set()


def test_build_S_from_interreduction_walkthrough():
    B = wbasis()
    # designated element x*y + ...: lcm(xy, yz)/xy = z... recorded against
    # the two-element basis of the finished second step
    assert build_S_from_interreduction(B[:2]) == {(0, 0, 1)}
    # the three-element basis, designated element x*z^2 - 6x + 2z
    assert build_S_from_interreduction(B) == {(0, 1, 0)}
    assert build_S_from_interreduction(B[:1]) == set()
    assert build_S_from_interreduction([]) == set()


def test_corollary_filter_drops_recorded_buckets():
    entries = {2: {(1, 0, 0)}, 3: {(0, 1, 0)}, 4: {(0, 0, 1)}}
    out = corollary_filter(entries, frozenset({3}))
    assert out == {2: {(1, 0, 0)}, 4: {(0, 0, 1)}}
    assert corollary_filter(entries, frozenset()) == entries
    assert corollary_filter({}, frozenset({1})) == {}
