from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from selfdual.gf2 import BitWord
from selfdual.groups import GroupRingElement, parse_group_id
from selfdual.search import (
    Chromosome,
    GaParams,
    crossover_double,
    crossover_single,
    crossover_uniform,
    ga_run,
    init_population,
    linear_search,
    make_rng,
    mutate,
    objective,
)


@st.composite
def parents(draw, min_n=2):
    n = draw(st.integers(min_n, 40))
    a = draw(st.integers(0, (1 << n) - 1))
    b = draw(st.integers(0, (1 << n) - 1))
    return Chromosome(BitWord(a, n)), Chromosome(BitWord(b, n))


def _columns_preserved(a, b, c, d):
    return (a.genes.bits ^ b.genes.bits) == (c.genes.bits ^ d.genes.bits) and \
        (a.genes.bits & b.genes.bits) == (c.genes.bits & d.genes.bits)


@given(parents(), st.data())
def test_single_point(pair, data):
    a, b = pair
    p = data.draw(st.integers(1, a.n - 1))
    c, d = crossover_single(a, b, p)
    assert c.genes.slice(0, p) == a.genes.slice(0, p)
    assert c.genes.slice(p, a.n) == b.genes.slice(p, a.n)
    assert _columns_preserved(a, b, c, d)


@given(parents(), st.data())
def test_double_point(pair, data):
    a, b = pair
    p1 = data.draw(st.integers(0, a.n - 1))
    p2 = data.draw(st.integers(p1 + 1, a.n))
    c, d = crossover_double(a, b, p1, p2)
    assert c.genes.slice(p1, p2) == b.genes.slice(p1, p2)
    assert d.genes.slice(0, p1) == b.genes.slice(0, p1)
    assert _columns_preserved(a, b, c, d)


@given(parents(), st.data())
def test_uniform(pair, data):
    a, b = pair
    mask = BitWord(data.draw(st.integers(0, (1 << a.n) - 1)), a.n)
    c, d = crossover_uniform(a, b, mask)
    for j in range(a.n):
        want = b if mask[j] else a
        assert c.genes[j] == want.genes[j]
    assert _columns_preserved(a, b, c, d)


def test_crossover_rejects_bad_points():
    a = Chromosome(BitWord(0, 8))
    with pytest.raises(ValueError):
        crossover_single(a, a, 0)
    with pytest.raises(ValueError):
        crossover_double(a, a, 3, 3)
    with pytest.raises(ValueError):
        crossover_single(a, Chromosome(BitWord(0, 9)), 2)


def test_mutation_extremes():
    rng = make_rng(1)
    c = Chromosome(BitWord(0b1011, 4))
    assert mutate(c, 0.0, rng) is c
    changed = [mutate(c, 1.0, rng).genes for _ in range(50)]
    assert any(g != c.genes for g in changed)
    with pytest.raises(ValueError):
        mutate(c, 1.5, rng)


def test_population_prefix_property():
    small = init_population(GaParams(population_size=10, rng_seed=5), 20)
    big = init_population(GaParams(population_size=30, rng_seed=5), 20)
    assert [c.genes for c in big[:10]] == [c.genes for c in small]


@pytest.mark.parametrize("kw", [
    dict(population_size=1), dict(elite_count=100), dict(mutation_p=-0.1),
    dict(crossover_rate=2.0), dict(crossover_kind="two"), dict(stop_after=0),
    dict(rng_seed=-1), dict(max_generations=-1),
])
def test_params_validation(kw):
    with pytest.raises(ValueError):
        GaParams(**kw)


def test_objective_penalty_and_distance():
    g = parse_group_id("D:16")
    zero = GroupRingElement(g, BitWord(0, 16))
    assert objective(zero, 8) == pytest.approx(1 + 16 / (16 * 17 / 2))
    one = GroupRingElement.one(g)
    assert objective(one, 8) == pytest.approx(1 / 2)


@pytest.fixture(scope="module")
def ls_d16():
    return linear_search(parse_group_id("D:16"), target=8, classify=False)


def test_linear_search_counts(ls_d16):
    assert ls_d16.evaluations == 1 << 16
    assert len(ls_d16.found) == 1536
    assert not ls_d16.capped
    assert all(f.d == 8 for f in ls_d16.found)
    ints = [f.genes.to_int() for f in ls_d16.found]
    assert ints == sorted(ints)


def test_linear_search_all_self_dual():
    out = linear_search(parse_group_id("Cn:16"), target=2, classify=False)
    assert len(out.found) == 512


def test_linear_search_range_and_budget(ls_d16):
    g = parse_group_id("D:16")
    start, end = BitWord.from_hex("1000", 16), BitWord.from_hex("3fff", 16)
    part = linear_search(g, start, end, target=8, classify=False)
    want = [f.genes for f in ls_d16.found if 0x1000 <= f.genes.to_int() <= 0x3fff]
    assert [f.genes for f in part.found] == want
    capped = linear_search(g, start, end, target=8, budget=100, classify=False)
    assert capped.capped and capped.evaluations == 100
    with pytest.raises(ValueError):
        linear_search(g, end, start)


def test_ga_reproducible_and_thread_invariant():
    g = parse_group_id("Cn:16")
    p = GaParams(rng_seed=11, stop_after=3, max_generations=200)
    runs = [ga_run(g, p, threads=t) for t in (1, 1, 3)]
    keys = [([f.genes for f in r.found], r.evaluations, r.history) for r in runs]
    assert keys[0] == keys[1] == keys[2]


def test_ga_finds_are_in_ls_set(ls_d16):
    lsset = {f.genes for f in ls_d16.found}
    seen = []
    out = ga_run(parse_group_id("D:16"), GaParams(rng_seed=2, stop_after=5), on_find=seen.append)
    assert len(out.found) == 5
    assert seen == out.found
    assert all(f.genes in lsset for f in out.found)
    assert out.first_find_evaluation == out.found[0].evaluation


def test_ga_history_is_monotone():
    out = ga_run(parse_group_id("D:20"), GaParams(rng_seed=4, target_distance=20, max_generations=15))
    assert not out.found and out.generations_run == 15
    assert all(b <= a for a, b in zip(out.history, out.history[1:]))
    assert out.evaluations <= 100 * 16


def test_ga_small_cyclic_example():
    g = parse_group_id("Cn:4")
    ls = linear_search(g, target=4, classify=False)
    assert [f.genes.to_str() for f in ls.found] == ["0111", "1011", "1101", "1110"]
    out = ga_run(g, GaParams(population_size=8, max_generations=20, target_distance=4, rng_seed=0))
    assert out.found and out.found[0].genes in {f.genes for f in ls.found}
    assert out.found[0].d == 4
