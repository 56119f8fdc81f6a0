from __future__ import annotations

import random
from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracle import naive_min_distance, naive_spectrum, self_dual_first_rows
from selfdual.codes import (
    BudgetExceeded,
    ClassificationError,
    EnumeratorClass,
    NotSelfDual,
    analyze,
    build_code,
    classify,
    classify_counts,
    enumeration_cost,
    extremal_bound,
    min_distance,
    needs_a16,
    partial_spectrum,
)
from selfdual.gf2 import BitWord
from selfdual.groups import GroupRingElement, parse_group_id
from tables import TABLE_ROWS

SMALL = ["Cn:4", "Cn:8", "D:8", "CxC:2x4", "Cn_k:4_2", "D:10", "Cn:12", "D:12", "CxC:2x6"]


@lru_cache(maxsize=None)
def pool(gid):
    g = parse_group_id(gid)
    return g, self_dual_first_rows(g.cayley, g.inverse)


def code_of(gid, bits):
    g = parse_group_id(gid)
    return build_code(GroupRingElement(g, BitWord(bits, g.order)))


@st.composite
def small_codes(draw):
    gid = draw(st.sampled_from(SMALL))
    g, rows = pool(gid)
    return code_of(gid, draw(st.sampled_from(rows)))


@given(small_codes())
def test_min_distance_matches_oracle(code):
    res = min_distance(code)
    assert res.exact
    assert res.d == naive_min_distance(list(code.sigma.rows), code.n)
    assert res.witness.weight() == res.d
    # the witness must lie in the code
    msg = res.witness.slice(0, code.n)
    assert code.encode(msg) == res.witness


@given(small_codes(), st.integers(0, 24), st.sampled_from(["left", "right"]))
def test_partial_spectrum_matches_oracle(code, cutoff, first):
    cutoff = min(cutoff, code.length)
    full = naive_spectrum(list(code.sigma.rows), code.n)
    got = partial_spectrum(code, cutoff, first=first)
    want = {w: c for w, c in full.items() if w <= cutoff}
    assert got.counts == want


@given(small_codes())
def test_full_spectrum_sums_to_code_size(code):
    spec = partial_spectrum(code, code.length)
    assert sum(spec.counts.values()) == 2 ** code.n
    assert all(w % 2 == 0 for w in spec.counts)


@given(small_codes(), st.integers(2, 10))
def test_target_stops_early(code, target):
    full = min_distance(code)
    res = min_distance(code, target=target)
    if full.d < target:
        assert res.d < target
        assert res.d >= full.d
    else:
        assert res.d == full.d and res.exact


def test_not_self_dual():
    g = parse_group_id("D:8")
    with pytest.raises(NotSelfDual) as info:
        build_code(GroupRingElement(g, BitWord(0, 8)))
    assert info.value.violations == 8


def test_spectrum_cutoff_guard_and_budget():
    g, rows = pool("D:8")
    code = code_of("D:8", rows[0])
    spec = partial_spectrum(code, 4)
    with pytest.raises(KeyError):
        spec[6]
    assert spec[0] == 1
    with pytest.raises(BudgetExceeded):
        partial_spectrum(code, 16, budget=10)
    with pytest.raises(ValueError):
        partial_spectrum(code, 40)
    assert enumeration_cost(8, 4) == 2 * (1 + 8 + 28)


def test_code_type_detection():
    # D:16 holds doubly-even [32,16,8] codes
    g, rows = pool("D:8")
    types = {code_of("D:8", r).code_type for r in rows}
    assert types <= {"I", "II"}
    for r in rows[:20]:
        code = code_of("D:8", r)
        spec = partial_spectrum(code, code.length)
        doubly = all(w % 4 == 0 for w in spec.counts)
        assert (code.code_type == "II") == doubly


def test_table_row_c1_counts():
    label, gid, blocks, form, gamma, beta, aut = TABLE_ROWS[0]
    g = parse_group_id(gid)
    code = build_code(GroupRingElement(g, BitWord.from_str("".join(blocks))))
    res = analyze(code)
    assert res.distance.d == 12
    assert res.spectrum.counts == {0: 1, 12: 578, 14: 14688}
    assert res.cls == EnumeratorClass("I", form, beta=beta, gamma=gamma, d=12)


@pytest.mark.parametrize("threads", [1, 2, 3])
def test_threads_do_not_change_results(threads):
    label, gid, blocks, *_ = TABLE_ROWS[1]
    g = parse_group_id(gid)
    code = build_code(GroupRingElement(g, BitWord.from_str("".join(blocks))))
    assert partial_spectrum(code, 12, threads=threads).counts == partial_spectrum(code, 12).counts
    assert min_distance(code, threads=threads).d == 12


def test_classify_w68_1():
    beta = 10
    cls = classify_counts(68, "I", {0: 1, 12: 442 + 4 * beta, 14: 10864 - 8 * beta})
    assert cls.form == "W68_1" and cls.beta == beta and cls.gamma is None


def test_classify_needs_a16_when_ambiguous():
    counts = {0: 1, 12: 2 * 300, 14: 7616 - 64 * 2}
    assert needs_a16(72, "I", counts[14])
    with pytest.raises(ClassificationError):
        classify_counts(72, "I", counts)
    counts[16] = 134521 - 24 * 300 + 384 * 2
    cls = classify_counts(72, "I", counts)
    assert (cls.form, cls.gamma, cls.beta) == ("W72_2", 2, 300)
    counts[16] = 124281 - 24 * 300 + 384 * 18
    cls = classify_counts(72, "I", counts)
    assert (cls.form, cls.gamma, cls.beta) == ("W72_1", 18, 300)


def test_classify_rejects_inconsistent():
    with pytest.raises(ClassificationError):
        classify_counts(68, "I", {12: 443, 14: 100})
    with pytest.raises(ClassificationError):
        classify_counts(68, "I", {12: 442, 14: 14960 - 256 * 10})
    with pytest.raises(ClassificationError):
        classify_counts(72, "I", {12: 11, 14: 8640})
    with pytest.raises(ClassificationError):
        classify_counts(72, "II", {12: 100, 16: 5})
    with pytest.raises(ClassificationError):
        classify_counts(68, "I", {12: 442})


def test_classify_type_only_below_twelve():
    assert classify_counts(68, "I", {0: 1, 10: 3}) == EnumeratorClass("I", d=10)
    assert classify_counts(32, "II", {0: 1, 8: 620}) == EnumeratorClass("II", d=8)


def test_classify_uses_cutoff_for_missing_weights():
    counts = {0: 1, 12: 4398 - 2772}
    # A16 not enumerated: accepted without the check
    assert classify_counts(72, "II", counts, cutoff=12).alpha == -2772
    # A16 enumerated and absent means zero, which contradicts the form
    with pytest.raises(ClassificationError):
        classify_counts(72, "II", counts, cutoff=16)
    with pytest.raises(ClassificationError, match="A14"):
        classify_counts(68, "I", counts)
