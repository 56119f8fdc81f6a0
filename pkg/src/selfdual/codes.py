"""Self-dual codes with generator matrix [I | sigma(v)].

Both halves of the coordinates are information sets: the left block is
the identity and the right block sigma(v) is invertible with inverse
sigma(v)^T.  A codeword of weight w is light (weight <= w // 2) on at
least one half, so enumerating low-weight messages on both halves gives
exact minimum distances and exact low-weight counts.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .gf2 import BitMatrix, BitWord, popcount, transpose
from .groups import GroupRingElement, sigma

log = logging.getLogger(__name__)

FORMS = ("W68_1", "W68_2", "W72_1", "W72_2", "TypeII72")

DEFAULT_BUDGET = 2_000_000_000
_PARALLEL_MIN = 200_000


class NotSelfDual(ValueError):
    def __init__(self, violations: int, group_id: str = ""):
        self.violations = violations
        where = f" over {group_id}" if group_id else ""
        super().__init__(f"sigma(v) sigma(v)^T != I{where}: {violations} violating entries")


class BudgetExceeded(RuntimeError):
    pass


class ClassificationError(ValueError):
    def __init__(self, message: str, counts: dict[int, int]):
        self.counts = dict(counts)
        super().__init__(f"{message}; counts={dict(sorted(counts.items()))}")


@dataclass(frozen=True)
class SelfDualCode:
    v: GroupRingElement
    sigma: BitMatrix
    gen: BitMatrix
    _right: np.ndarray = field(repr=False, compare=False)
    _left: np.ndarray = field(repr=False, compare=False)

    @property
    def group_id(self) -> str:
        return self.v.group.id

    @property
    def n(self) -> int:
        return self.sigma.nrows

    @property
    def length(self) -> int:
        return 2 * self.n

    def encode(self, message: BitWord) -> BitWord:
        """Codeword ``(message, message @ sigma)``."""
        acc = 0
        for j in range(self.n):
            if message[j]:
                acc ^= self.sigma.rows[j]
        return message.concat(BitWord(acc, self.n))

    def is_doubly_even(self) -> bool:
        return all(popcount(r) % 4 == 0 for r in self.gen.rows)

    @property
    def code_type(self) -> str:
        return "II" if self.is_doubly_even() else "I"


def self_dual_violations(m: BitMatrix) -> int:
    """Entries on or above the diagonal where m m^T differs from I."""
    if m.nrows != m.ncols:
        raise ValueError(f"matrix must be square, got {m.shape}")
    rows = m.rows
    bad = 0
    for i, a in enumerate(rows):
        if popcount(a) & 1 == 0:
            bad += 1
        for b in rows[i + 1:]:
            bad += popcount(a & b) & 1
    return bad


def build_code(v: GroupRingElement, s: BitMatrix | None = None) -> SelfDualCode:
    """Return the code generated by [I | sigma(v)]; raise NotSelfDual otherwise."""
    if s is None:
        s = sigma(v)
    bad = self_dual_violations(s)
    if bad:
        raise NotSelfDual(bad, v.group.id)
    n = s.nrows
    if n > 64:
        raise ValueError(f"codes with n > 64 are not supported (n={n})")
    gen = BitMatrix.identity(n).hstack(s)
    right = np.array(s.rows, dtype=np.uint64)
    left = np.array(transpose(s).rows, dtype=np.uint64)
    return SelfDualCode(v, s, gen, right, left)


def _tasks(rows: np.ndarray, k: int, threads: int) -> list[tuple[int, int]]:
    n = rows.shape[0]
    if threads <= 1 or math.comb(n, k) < _PARALLEL_MIN or k < 2:
        return [(0, n)]
    return [(f, f + 1) for f in range(n - k + 1)]


def _map(fn, tasks, threads):
    if len(tasks) == 1:
        return [fn(*tasks[0])]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda t: fn(*t), tasks))


def _layer_histogram(rows, k, max_total, min_other, threads) -> np.ndarray:
    if k == 0:
        hist = np.zeros(max_total + 1, np.int64)
        if min_other <= 0:
            hist[0] += 1
        return hist

    def run(lo, hi):
        h = np.zeros(max_total + 1, np.int64)
        _kernels.layer_histogram(rows, k, lo, hi, max_total, min_other, h)
        return h

    parts = _map(run, _tasks(rows, k, threads), threads)
    return np.sum(parts, axis=0)


def _layer_minimum(rows, k, threads) -> tuple[int, int]:
    parts = _map(
        lambda lo, hi: _kernels.layer_minimum(rows, k, lo, hi),
        _tasks(rows, k, threads),
        threads,
    )
    best, mask = parts[0]
    for w, m in parts[1:]:
        if w < best:
            best, mask = w, m
    return int(best), int(mask)


@dataclass(frozen=True)
class MinDistance:
    """Result of :func:`min_distance`.

    When ``exact`` is true ``d`` is the minimum distance and every codeword
    not enumerated has weight >= ``lower_bound`` >= ``d``.  Otherwise the
    search stopped early and ``d`` is only an upper bound below the target.
    """

    d: int
    exact: bool
    lower_bound: int
    witness: BitWord
    layers: int
    enumerated: int


def min_distance(
    code: SelfDualCode,
    target: int | None = None,
    threads: int = 1,
) -> MinDistance:
    """Minimum distance by enumerating messages of increasing weight on both
    information sets.

    After all messages of weight <= m on both halves are done, any missing
    codeword has weight >= 2(m + 1).  With ``target`` the search stops once
    a codeword lighter than ``target`` has been seen (checked per weight
    layer, so the answer does not depend on ``threads``).
    """
    n = code.n
    best = None
    witness = 0
    enumerated = 0
    for m in range(1, n + 1):
        for side, rows in (("left", code._right), ("right", code._left)):
            w, mask = _layer_minimum(rows, m, threads)
            enumerated += math.comb(n, m)
            total = w + m
            if best is None or total < best:
                best = total
                if side == "left":
                    witness = mask | (_xor_rows(code.sigma.rows, mask) << n)
                else:
                    witness = _xor_rows(code.sigma.T.rows, mask) | (mask << n)
        lower = 2 * (m + 1)
        if best <= lower or m == n:
            return MinDistance(best, True, lower, BitWord(witness, 2 * n), m, enumerated)
        if target is not None and best < target:
            return MinDistance(best, False, lower, BitWord(witness, 2 * n), m, enumerated)
    raise AssertionError("unreachable")


def _xor_rows(rows, mask: int) -> int:
    acc = 0
    j = 0
    while mask:
        if mask & 1:
            acc ^= rows[j]
        mask >>= 1
        j += 1
    return acc


@dataclass(frozen=True)
class PartialWeightSpectrum:
    counts: dict[int, int]
    cutoff: int
    length: int
    certified: bool = True

    def __getitem__(self, w: int) -> int:
        if w > self.cutoff:
            raise KeyError(f"weight {w} is above the cutoff {self.cutoff}")
        return self.counts.get(w, 0)

    def min_weight(self) -> Optional[int]:
        """Smallest nonzero weight with a codeword, if any is below the cutoff."""
        ws = [w for w, c in self.counts.items() if w > 0 and c]
        return min(ws) if ws else None


def enumeration_cost(n: int, cutoff: int) -> int:
    m = cutoff // 2
    return 2 * sum(math.comb(n, k) for k in range(min(m, n) + 1))


def partial_spectrum(
    code: SelfDualCode,
    cutoff: int,
    threads: int = 1,
    budget: int | None = DEFAULT_BUDGET,
    first: str = "left",
) -> PartialWeightSpectrum:
    """Exact number of codewords of each weight <= ``cutoff``.

    Pass 1 counts every codeword whose message on the first information
    set has weight <= cutoff // 2; pass 2 does the same on the other set
    but keeps only codewords that are heavy (> cutoff // 2) on the first.
    """
    n = code.n
    if cutoff < 0 or cutoff > 2 * n:
        raise ValueError(f"cutoff {cutoff} out of range for length {2 * n}")
    cost = enumeration_cost(n, cutoff)
    if budget is not None and cost > budget:
        raise BudgetExceeded(
            f"cutoff {cutoff} needs {cost} encodings, budget is {budget}"
        )
    m = min(cutoff // 2, n)
    if first == "left":
        primary, secondary = code._right, code._left
    elif first == "right":
        primary, secondary = code._left, code._right
    else:
        raise ValueError(f"first must be 'left' or 'right', got {first!r}")
    hist = np.zeros(cutoff + 1, np.int64)
    for k in range(m + 1):
        hist += _layer_histogram(primary, k, cutoff, 0, threads)
    for k in range(m + 1):
        hist += _layer_histogram(secondary, k, cutoff, m + 1, threads)
    counts = {w: int(c) for w, c in enumerate(hist) if c}
    return PartialWeightSpectrum(counts, cutoff, 2 * n)


@dataclass(frozen=True)
class EnumeratorClass:
    code_type: str
    form: Optional[str] = None
    beta: Optional[int] = None
    gamma: Optional[int] = None
    alpha: Optional[int] = None
    d: Optional[int] = None

    def param(self) -> Optional[int]:
        """beta for Type I forms, alpha for Type II."""
        return self.alpha if self.form == "TypeII72" else self.beta

    def describe(self) -> str:
        if self.form is None:
            return f"Type {self.code_type}"
        if self.form == "TypeII72":
            return f"{self.form} alpha={self.alpha}"
        g = "" if self.gamma is None else f" gamma={self.gamma}"
        return f"{self.form}{g} beta={self.beta}"


def needs_a16(length: int, code_type: str, a14: int) -> bool:
    """True when both length-72 Type I readings of ``a14`` are admissible."""
    return length == 72 and code_type == "I" and a14 <= 7616 and (7616 - a14) % 64 == 0


def classify_counts(
    length: int,
    code_type: str,
    counts: dict[int, int],
    d: Optional[int] = None,
    cutoff: Optional[int] = None,
) -> EnumeratorClass:
    """Solve the weight-enumerator parameters from low-weight counts.

    Weights missing from ``counts`` are read as zero when they are at or
    below ``cutoff`` and as unknown otherwise.
    """
    if code_type not in ("I", "II"):
        raise ValueError(f"code_type must be 'I' or 'II', got {code_type!r}")
    if d is None:
        nz = [w for w, c in counts.items() if w > 0 and c]
        d = min(nz) if nz else None
    if length not in (68, 72) or d is None or d < 12:
        return EnumeratorClass(code_type, d=d)

    def known(w: int) -> bool:
        return w in counts or (cutoff is not None and w <= cutoff)

    def need(w: int) -> int:
        if not known(w):
            raise ClassificationError(f"A{w} is required", counts)
        return counts.get(w, 0)

    a12 = need(12)
    if length == 68:
        if code_type == "II":
            raise ClassificationError("length 68 cannot be Type II", counts)
        a14 = need(14)
        if (a12 - 442) % 4:
            raise ClassificationError("A12 - 442 is not divisible by 4", counts)
        beta = (a12 - 442) // 4
        if a14 == 10864 - 8 * beta:
            return EnumeratorClass("I", "W68_1", beta=beta, d=d)
        num = 14960 - 8 * beta - a14
        if num % 256 or not 0 <= num // 256 <= 9:
            raise ClassificationError("no W68 form fits", counts)
        return EnumeratorClass("I", "W68_2", beta=beta, gamma=num // 256, d=d)

    if code_type == "II":
        alpha = a12 - 4398
        if known(16):
            if counts.get(16, 0) != 197073 - 12 * alpha:
                raise ClassificationError("A16 does not match the Type II form", counts)
        return EnumeratorClass("II", "TypeII72", alpha=alpha, d=d)

    if a12 % 2:
        raise ClassificationError("A12 is odd", counts)
    beta = a12 // 2
    a14 = need(14)
    cands = []
    for form, base, a16_base in (("W72_1", 8640, 124281), ("W72_2", 7616, 134521)):
        num = base - a14
        if num >= 0 and num % 64 == 0:
            gamma = num // 64
            cands.append((form, gamma, a16_base - 24 * beta + 384 * gamma))
    if not cands:
        raise ClassificationError("no W72 form fits A14", counts)
    have16 = known(16)
    if len(cands) > 1 and not have16:
        raise ClassificationError("A16 is required to separate W72_1 from W72_2", counts)
    if have16:
        cands = [c for c in cands if c[2] == counts.get(16, 0)]
        if not cands:
            raise ClassificationError("A16 matches no W72 form", counts)
    form, gamma, _ = cands[0]
    return EnumeratorClass("I", form, beta=beta, gamma=gamma, d=d)


def classify(code: SelfDualCode, spectrum: PartialWeightSpectrum) -> EnumeratorClass:
    """Type and weight-enumerator form of ``code`` from its partial spectrum."""
    if spectrum.length != code.length:
        raise ValueError("spectrum belongs to a code of another length")
    code_type = code.code_type
    if code_type == "II" and any(c for w, c in spectrum.counts.items() if w % 4):
        raise ClassificationError("doubly-even generators but a weight not divisible by 4", spectrum.counts)
    return classify_counts(
        code.length, code_type, spectrum.counts, d=spectrum.min_weight(), cutoff=spectrum.cutoff
    )


def required_cutoff(code: SelfDualCode) -> int:
    """Spectrum cutoff needed to classify ``code`` (before any A16 check)."""
    if code.length == 72 and code.code_type == "II":
        return 12
    if code.length in (68, 72):
        return 14
    return 0


@dataclass(frozen=True)
class Analysis:
    code: SelfDualCode
    distance: MinDistance
    spectrum: Optional[PartialWeightSpectrum]
    cls: EnumeratorClass


def analyze(code: SelfDualCode, threads: int = 1, budget: int | None = DEFAULT_BUDGET) -> Analysis:
    """Minimum distance, the spectrum needed for classification, and the class.

    A16 is only computed for length-72 Type I codes whose A14 leaves both
    forms possible.
    """
    dist = min_distance(code, threads=threads)
    cutoff = required_cutoff(code)
    spectrum = None
    if cutoff and dist.d >= 12:
        spectrum = partial_spectrum(code, cutoff, threads=threads, budget=budget)
        if cutoff >= 14 and needs_a16(code.length, code.code_type, spectrum[14]):
            log.info("A14=%d is ambiguous, extending spectrum to weight 16", spectrum[14])
            spectrum = partial_spectrum(code, 16, threads=threads, budget=budget)
        cls = classify(code, spectrum)
    else:
        cls = EnumeratorClass(code.code_type, d=dist.d)
    return Analysis(code, dist, spectrum, cls)


def extremal_bound(length: int, code_type: str) -> int:
    """Upper bound on the minimum distance of a self-dual code."""
    if length <= 0 or length % 2:
        raise ValueError(f"length must be positive and even, got {length}")
    if code_type == "II":
        if length % 8:
            raise ValueError(f"Type II codes need length divisible by 8, got {length}")
        return 4 * (length // 24) + 4
    if code_type == "I":
        return 4 * (length // 24) + (6 if length % 24 == 22 else 4)
    raise ValueError(f"code_type must be 'I' or 'II', got {code_type!r}")
