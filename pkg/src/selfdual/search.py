"""Genetic search and exhaustive linear search over first-row vectors v.

Randomness comes from a single ``numpy.random.Generator`` (PCG64) seeded
from ``GaParams.rng_seed``.  Draws happen in a fixed order: the initial
population, then per generation all selection draws, all crossover draws
and all mutation draws.  Fitness evaluation never touches the generator,
so results do not depend on how many threads evaluate.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

import numpy as np

from . import _kernels
from .codes import EnumeratorClass, analyze, build_code, min_distance
from .gf2 import BitWord
from .groups import FiniteGroup, GroupRingElement

log = logging.getLogger(__name__)

CROSSOVER_KINDS = ("single", "double", "uniform")


@dataclass(frozen=True)
class Chromosome:
    genes: BitWord
    fitness: float = float("inf")

    @property
    def n(self) -> int:
        return self.genes.length


@dataclass(frozen=True)
class GaParams:
    population_size: int = 100
    crossover_kind: str = "single"
    crossover_rate: float = 0.9
    mutation_p: float = 0.1
    elite_count: int = 2
    max_generations: int = 1000
    target_distance: int = 8
    rng_seed: int = 0
    # stop once this many distinct codes reach the target; None runs to max_generations
    stop_after: Optional[int] = 1
    tournament_size: int = 2

    def __post_init__(self) -> None:
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if not 0 <= self.elite_count < self.population_size:
            raise ValueError("elite_count must be in [0, population_size)")
        for name in ("crossover_rate", "mutation_p"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")
        if self.crossover_kind not in CROSSOVER_KINDS:
            raise ValueError(f"crossover_kind must be one of {CROSSOVER_KINDS}")
        if self.max_generations < 0:
            raise ValueError("max_generations must be >= 0")
        if self.stop_after is not None and self.stop_after < 1:
            raise ValueError("stop_after must be >= 1 or None")
        if self.tournament_size < 1:
            raise ValueError("tournament_size must be >= 1")
        if not 0 <= self.rng_seed < 2**64:
            raise ValueError("rng_seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class Find:
    genes: BitWord
    d: int
    cls: EnumeratorClass
    evaluation: int


@dataclass
class SearchOutcome:
    method: str
    group_id: str
    found: list[Find]
    evaluations: int
    generations_run: int
    wall_time: float
    seed: Optional[int]
    params: dict
    first_find_evaluation: Optional[int] = None
    history: list[float] = field(default_factory=list)
    capped: bool = False


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _penalty(violations: int, n: int) -> float:
    return 1.0 + violations / (n * (n + 1) / 2)


def objective(v: GroupRingElement, target: int) -> float:
    """1/d for self-dual v (d may stop early below ``target``), otherwise
    1 + violations / (n(n+1)/2).  Lower is better."""
    n = v.group.order
    rows = _kernels.sigma_rows_from_bits(v.group.sigma_index, np.uint64(v.coeffs.bits))
    bad = int(_kernels.violation_count(rows))
    if bad:
        return _penalty(bad, n)
    code = build_code(v)
    return 1.0 / min_distance(code, target=target).d


class _Evaluator:
    """Fitness with a per-run cache; counts each distinct candidate once."""

    def __init__(self, group: FiniteGroup, target: int, threads: int, classify: bool,
                 on_find: Callable[[Find], None] | None = None):
        if group.order > 64:
            raise ValueError("group order above 64 is not supported")
        self.group = group
        self.target = target
        self.threads = max(1, threads)
        self.classify = classify
        self.cache: dict[int, float] = {}
        self.evaluations = 0
        self.found: dict[int, Find] = {}
        self.first_find: Optional[int] = None
        self.on_find = on_find

    def _raw(self, bits: int) -> tuple[float, Optional[int]]:
        g = self.group
        rows = _kernels.sigma_rows_from_bits(g.sigma_index, np.uint64(bits))
        bad = int(_kernels.violation_count(rows))
        if bad:
            return _penalty(bad, g.order), None
        code = build_code(GroupRingElement(g, BitWord(bits, g.order)))
        d = min_distance(code, target=self.target).d
        return 1.0 / d, d

    def evaluate(self, batch: list[int], stop_after: Optional[int]) -> list[Optional[float]]:
        """Fitness for each entry of ``batch``; entries after the stopping
        find are left as None."""
        todo = []
        seen = set()
        for b in batch:
            if b not in self.cache and b not in seen:
                seen.add(b)
                todo.append(b)
        if self.threads > 1 and len(todo) > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                results = list(pool.map(self._raw, todo))
        else:
            results = [self._raw(b) for b in todo]
        fresh = dict(zip(todo, results))
        out: list[Optional[float]] = []
        stopped = False
        for b in batch:
            if stopped:
                out.append(None)
                continue
            if b in fresh and b not in self.cache:
                fit, d = fresh[b]
                self.cache[b] = fit
                self.evaluations += 1
                if d is not None and d >= self.target and b not in self.found:
                    self._record(b, d)
                    if stop_after is not None and len(self.found) >= stop_after:
                        stopped = True
            out.append(self.cache[b])
        return out

    def _record(self, bits: int, d: int) -> None:
        v = GroupRingElement(self.group, BitWord(bits, self.group.order))
        if self.classify:
            cls = analyze(build_code(v), threads=self.threads).cls
        else:
            cls = EnumeratorClass(build_code(v).code_type, d=d)
        find = Find(v.coeffs, d, cls, self.evaluations)
        self.found[bits] = find
        if self.on_find is not None:
            self.on_find(find)
        if self.first_find is None:
            self.first_find = self.evaluations
        log.info("find #%d after %d evaluations: %s d=%d %s",
                 len(self.found), self.evaluations, v.coeffs.to_hex(), d, cls.describe())


def _random_genes(rng: np.random.Generator, n: int) -> BitWord:
    return BitWord.from_bits(int(b) for b in rng.integers(0, 2, size=n))


def init_population(params: GaParams, n: int, rng: np.random.Generator | None = None,
                    fitness: Callable[[BitWord], float] | None = None) -> list[Chromosome]:
    """``population_size`` uniformly random chromosomes drawn one after
    another from the stream, so a larger population extends a smaller one."""
    if rng is None:
        rng = make_rng(params.rng_seed)
    pop = [_random_genes(rng, n) for _ in range(params.population_size)]
    if fitness is None:
        return [Chromosome(g) for g in pop]
    return [Chromosome(g, fitness(g)) for g in pop]


def crossover_single(a: Chromosome, b: Chromosome, point: int) -> tuple[Chromosome, Chromosome]:
    n = a.n
    if b.n != n:
        raise ValueError("parents differ in length")
    if not 1 <= point < n:
        raise ValueError(f"crossover point {point} outside [1, {n})")
    return crossover_double(a, b, point, n)


def crossover_double(a: Chromosome, b: Chromosome, p1: int, p2: int) -> tuple[Chromosome, Chromosome]:
    """Exchange the segment [p1, p2)."""
    n = a.n
    if b.n != n:
        raise ValueError("parents differ in length")
    if not 0 <= p1 < p2 <= n:
        raise ValueError(f"need 0 <= p1 < p2 <= {n}, got ({p1}, {p2})")
    mask = ((1 << (p2 - p1)) - 1) << p1
    return _swap(a, b, mask)


def crossover_uniform(a: Chromosome, b: Chromosome, mask: BitWord) -> tuple[Chromosome, Chromosome]:
    if not a.n == b.n == mask.length:
        raise ValueError("parents and mask must have the same length")
    return _swap(a, b, mask.bits)


def _swap(a: Chromosome, b: Chromosome, mask: int) -> tuple[Chromosome, Chromosome]:
    diff = (a.genes.bits ^ b.genes.bits) & mask
    n = a.n
    return (Chromosome(BitWord(a.genes.bits ^ diff, n)), Chromosome(BitWord(b.genes.bits ^ diff, n)))


def mutate(c: Chromosome, p: float, rng: np.random.Generator) -> Chromosome:
    """With probability p replace every gene by a fresh random bit."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if rng.random() < p:
        return Chromosome(_random_genes(rng, c.n))
    return c


def _tournament(fitness: list[float], draws: np.ndarray) -> int:
    best = int(draws[0])
    for i in draws[1:]:
        i = int(i)
        if fitness[i] < fitness[best]:
            best = i
    return best


def ga_run(group: FiniteGroup, params: GaParams, threads: int = 1,
           classify: bool = True, on_find: Callable[[Find], None] | None = None) -> SearchOutcome:
    """Evolve first rows v over ``group`` looking for self-dual codes with
    minimum distance >= ``params.target_distance``.  ``on_find`` is called
    with each new find as soon as it is recorded."""
    t0 = time.perf_counter()
    n = group.order
    P = params.population_size
    rng = make_rng(params.rng_seed)
    ev = _Evaluator(group, params.target_distance, threads, classify, on_find)
    stop = params.stop_after

    def done() -> bool:
        return stop is not None and len(ev.found) >= stop

    genes = init_population(params, n, rng)
    fits = ev.evaluate([c.genes.bits for c in genes], stop)
    pop = [Chromosome(c.genes, f) for c, f in zip(genes, fits) if f is not None]
    history = [min(c.fitness for c in pop)]
    generation = 0
    while not done() and generation < params.max_generations:
        generation += 1
        npairs = (P + 1) // 2
        fitness = [c.fitness for c in pop]
        sel = rng.integers(0, len(pop), size=(npairs, 2, params.tournament_size))
        parents = [(pop[_tournament(fitness, s[0])], pop[_tournament(fitness, s[1])]) for s in sel]

        children: list[Chromosome] = []
        for a, b in parents:
            if rng.random() < params.crossover_rate:
                a, b = _crossover(a, b, params.crossover_kind, rng)
            children.extend((a, b))
        children = children[:P]
        children = [mutate(c, params.mutation_p, rng) for c in children]

        fits = ev.evaluate([c.genes.bits for c in children], stop)
        children = [Chromosome(c.genes, f) for c, f in zip(children, fits) if f is not None]

        ranked = sorted(pop, key=lambda c: c.fitness)
        elites = ranked[: params.elite_count]
        rest = sorted(ranked[params.elite_count:] + children, key=lambda c: c.fitness)
        pop = elites + rest[: P - len(elites)]
        history.append(min(c.fitness for c in pop))

    return SearchOutcome(
        method="GA",
        group_id=group.id,
        found=list(ev.found.values()),
        evaluations=ev.evaluations,
        generations_run=generation,
        wall_time=time.perf_counter() - t0,
        seed=params.rng_seed,
        params=asdict(params),
        first_find_evaluation=ev.first_find,
        history=history,
    )


def _crossover(a: Chromosome, b: Chromosome, kind: str, rng: np.random.Generator):
    n = a.n
    if n < 2:
        return a, b
    if kind == "single":
        return crossover_single(a, b, int(rng.integers(1, n)))
    if kind == "double":
        if n < 3:
            return crossover_single(a, b, 1)
        p1, p2 = sorted(int(x) for x in rng.choice(np.arange(1, n), size=2, replace=False))
        return crossover_double(a, b, p1, p2)
    return crossover_uniform(a, b, _random_genes(rng, n))


def linear_search(
    group: FiniteGroup,
    start: BitWord | None = None,
    end: BitWord | None = None,
    target: int = 2,
    threads: int = 1,
    budget: int | None = None,
    classify: bool = True,
    chunk: int = 1 << 16,
    on_find: Callable[[Find], None] | None = None,
) -> SearchOutcome:
    """Evaluate every v from ``start`` to ``end`` inclusive, read as n-bit
    integers with a_1 most significant, and keep the self-dual codes with
    d >= ``target``.  ``budget`` caps the number of candidates."""
    t0 = time.perf_counter()
    n = group.order
    if n > 63:
        raise ValueError("linear search supports group orders up to 63")
    lo = 0 if start is None else start.to_int()
    hi = (1 << n) - 1 if end is None else end.to_int()
    if lo > hi:
        raise ValueError("start must not exceed end")
    capped = False
    if budget is not None and hi - lo + 1 > budget:
        hi = lo + budget - 1
        capped = True
    # bit j of the candidate integer is coefficient a_{n-j}
    index = (n - 1 - group.sigma_index).astype(np.int64)
    found: list[Find] = []
    first = None
    x = lo
    buf = np.empty(chunk, np.int64)
    while x <= hi:
        stop = min(hi + 1, x + chunk)
        k = _kernels.scan_self_dual(index, x, stop, buf)
        for value in buf[:k]:
            word = BitWord.from_int(int(value), n)
            code = build_code(GroupRingElement(group, word))
            d = min_distance(code, target=target, threads=threads).d
            if d >= target:
                cls = analyze(code, threads=threads).cls if classify else EnumeratorClass(code.code_type, d=d)
                find = Find(word, d, cls, int(value) - lo + 1)
                found.append(find)
                if on_find is not None:
                    on_find(find)
                if first is None:
                    first = int(value) - lo + 1
        x = stop
    evaluations = hi - lo + 1
    return SearchOutcome(
        method="LS",
        group_id=group.id,
        found=found,
        evaluations=evaluations,
        generations_run=0,
        wall_time=time.perf_counter() - t0,
        seed=None,
        params={"start": lo, "end": hi, "target": target, "budget": budget},
        first_find_evaluation=first,
        capped=capped,
    )
