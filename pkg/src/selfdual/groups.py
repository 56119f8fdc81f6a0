"""Finite groups as Cayley tables, binary group rings and the sigma map.

Element index 0 is always the identity.  Coefficient ``a_{k+1}`` of a
group-ring element is attached to element index ``k``; the element
orderings below are fixed so that sigma(v) has the block-circulant shapes
used by the searches.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Sequence

import numpy as np

from .gf2 import BitMatrix, BitWord, block_circ, block_matrix, circ, rcirc


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its multiplication table.

    ``cayley[i][j]`` is the index of ``g_i * g_j``.  ``kind`` and ``shape``
    record which constructor produced the group so the block form of sigma
    can be rebuilt without the table.
    """

    id: str
    elements: tuple[str, ...]
    cayley: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    kind: str = "table"
    shape: tuple[int, ...] = ()
    _sigma_index: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        _validate(self.cayley, self.inverse)
        n = len(self.cayley)
        idx = np.empty((n, n), dtype=np.intp)
        for i in range(n):
            row = self.cayley[self.inverse[i]]
            idx[i, :] = row
        idx.setflags(write=False)
        object.__setattr__(self, "_sigma_index", idx)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.cayley[i][j] == self.cayley[j][i] for i in range(n) for j in range(i))

    @property
    def sigma_index(self) -> np.ndarray:
        """``sigma_index[i, j]`` = index of ``g_i^{-1} g_j``."""
        return self._sigma_index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and self.id == other.id and self.cayley == other.cayley

    def __hash__(self) -> int:
        return hash(self.id)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.id!r}, order={self.order})"


def _validate(cayley: Sequence[Sequence[int]], inverse: Sequence[int]) -> None:
    n = len(cayley)
    if n < 1:
        raise ValueError("group must be non-empty")
    full = set(range(n))
    for i, row in enumerate(cayley):
        if len(row) != n or set(row) != full:
            raise ValueError(f"Cayley table row {i} is not a permutation")
    for j in range(n):
        if {cayley[i][j] for i in range(n)} != full:
            raise ValueError(f"Cayley table column {j} is not a permutation")
    for i in range(n):
        if cayley[0][i] != i or cayley[i][0] != i:
            raise ValueError("element 0 is not the identity")
    if len(inverse) != n:
        raise ValueError("inverse table has wrong length")
    for i in range(n):
        if cayley[inverse[i]][i] != 0 or cayley[i][inverse[i]] != 0:
            raise ValueError(f"inverse[{i}] is wrong")
    if n <= 64:
        for a in range(n):
            ra = cayley[a]
            for b in range(n):
                ab = ra[b]
                rb = cayley[b]
                rab = cayley[ab]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise ValueError(f"not associative at ({a}, {b}, {c})")


def group_from_law(
    id: str,
    elements: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    labels: Sequence[str] | None = None,
    kind: str = "table",
    shape: tuple[int, ...] = (),
) -> FiniteGroup:
    """Tabulate ``mul`` over ``elements`` (first element must be the identity)."""
    index = {e: k for k, e in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("duplicate elements")
    n = len(elements)
    cayley = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    inverse = tuple(row.index(0) for row in cayley)
    if labels is None:
        labels = [str(e) for e in elements]
    return FiniteGroup(id, tuple(labels), cayley, inverse, kind=kind, shape=shape)


def _power(sym: str, e: int) -> str:
    return "1" if e == 0 else (sym if e == 1 else f"{sym}^{e}")


@lru_cache(maxsize=None)
def make_cyclic(n: int) -> FiniteGroup:
    """C_n with g_{i+1} = x^i."""
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    return group_from_law(
        f"Cn:{n}",
        list(range(n)),
        lambda a, b: (a + b) % n,
        labels=[_power("x", i) for i in range(n)],
        kind="cyclic",
        shape=(n,),
    )


@lru_cache(maxsize=None)
def make_dihedral(m: int) -> FiniteGroup:
    """Dihedral group of order 2m, <x, y | x^m = y^2 = 1, y x y = x^-1>.

    Ordering: g_{1+i} = x^i and g_{1+m+i} = y x^i, which gives
    sigma(v) = CIRC(circ(a_1..a_m), rcirc(a_{m+1}..a_{2m})).
    """
    if m < 1:
        raise ValueError(f"dihedral parameter must be >= 1, got {m}")
    elems = [(0, i) for i in range(m)] + [(1, i) for i in range(m)]

    def mul(a, b):
        # (y^j1 x^i1)(y^j2 x^i2) = y^(j1+j2) x^((-1)^j2 i1 + i2)
        j1, i1 = a
        j2, i2 = b
        s = -i1 if j2 else i1
        return ((j1 + j2) % 2, (s + i2) % m)

    labels = [_power("x", i) for i in range(m)] + [
        "y" if i == 0 else f"y{_power('x', i)}" for i in range(m)
    ]
    return group_from_law(f"D:{2 * m}", elems, mul, labels=labels, kind="dihedral", shape=(m,))


@lru_cache(maxsize=None)
def make_direct_product_cyclic(p: int, q: int, ordering: str = "block") -> FiniteGroup:
    """C_p x C_q with x of order q and y of order p.

    With ``ordering="block"`` the element attached to a_{1+i+qj} is
    x^i y^j, so sigma(v) is CIRC of p circulant q x q blocks.
    """
    if p < 1 or q < 1:
        raise ValueError(f"factor orders must be >= 1, got {p}, {q}")
    if ordering != "block":
        raise ValueError(f"unknown ordering {ordering!r}")
    elems = [(i, j) for j in range(p) for i in range(q)]
    labels = [
        "1" if i == 0 and j == 0 else "".join(s for s in (_power("x", i) if i else "", _power("y", j) if j else "") if s)
        for (i, j) in elems
    ]
    return group_from_law(
        f"CxC:{p}x{q}",
        elems,
        lambda a, b: ((a[0] + b[0]) % q, (a[1] + b[1]) % p),
        labels=labels,
        kind="cxc",
        shape=(p, q),
    )


@lru_cache(maxsize=None)
def make_interleaved_cyclic(n: int, k: int) -> FiniteGroup:
    """Cyclic group of order n*k where a_{1+i+nj} is attached to x^(k*i + j)."""
    if n < 1 or k < 1:
        raise ValueError(f"parameters must be >= 1, got {n}, {k}")
    order = n * k
    exps = [k * i + j for j in range(k) for i in range(n)]
    gid = "C18_2" if (n, k) == (18, 2) else f"Cn_k:{n}_{k}"
    return group_from_law(
        gid,
        exps,
        lambda a, b: (a + b) % order,
        labels=[_power("x", e) for e in exps],
        kind="interleaved",
        shape=(n, k),
    )


def make_c18_2() -> FiniteGroup:
    return make_interleaved_cyclic(18, 2)


_GROUP_PATTERNS: list[tuple[re.Pattern[str], Callable[..., FiniteGroup]]] = [
    (re.compile(r"Cn:(\d+)"), lambda n: make_cyclic(int(n))),
    (re.compile(r"C(\d+)"), lambda n: make_cyclic(int(n))),
    (re.compile(r"D:?(\d+)"), lambda n: _dihedral_of_order(int(n))),
    (re.compile(r"CxC:(\d+)x(\d+)"), lambda p, q: make_direct_product_cyclic(int(p), int(q))),
    (re.compile(r"C(\d+)xC(\d+)"), lambda p, q: make_direct_product_cyclic(int(p), int(q))),
    (re.compile(r"Cn_k:(\d+)_(\d+)"), lambda n, k: make_interleaved_cyclic(int(n), int(k))),
    (re.compile(r"C(\d+)_(\d+)"), lambda n, k: make_interleaved_cyclic(int(n), int(k))),
]


def _dihedral_of_order(order: int) -> FiniteGroup:
    if order < 2 or order % 2:
        raise ValueError(f"dihedral group order must be even and >= 2, got {order}")
    return make_dihedral(order // 2)


def parse_group_id(text: str) -> FiniteGroup:
    """Build a group from its id, e.g. ``Cn:16``, ``D:34``, ``CxC:4x9``, ``C18_2``.

    Short aliases such as ``D34``, ``C2xC18`` and ``C3_2`` are accepted too.
    """
    text = text.strip()
    for pattern, build in _GROUP_PATTERNS:
        m = pattern.fullmatch(text)
        if m:
            return build(*m.groups())
    raise ValueError(f"unrecognised group id {text!r}")


@dataclass(frozen=True)
class GroupRingElement:
    """sum_k a_{k+1} g_k in F_2[G]."""

    group: FiniteGroup
    coeffs: BitWord

    def __post_init__(self) -> None:
        if self.coeffs.length != self.group.order:
            raise ValueError(
                f"coefficient length {self.coeffs.length} != group order {self.group.order}"
            )

    @classmethod
    def one(cls, group: FiniteGroup) -> "GroupRingElement":
        return cls(group, BitWord(1, group.order))

    @classmethod
    def zero(cls, group: FiniteGroup) -> "GroupRingElement":
        return cls(group, BitWord(0, group.order))

    @classmethod
    def from_bits(cls, group: FiniteGroup, bits: Sequence[int]) -> "GroupRingElement":
        return cls(group, BitWord.from_bits(bits))

    @classmethod
    def basis(cls, group: FiniteGroup, k: int) -> "GroupRingElement":
        return cls(group, BitWord(1 << k, group.order))

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return gr_add(self, other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        return gr_mul(self, other)


def _same_group(u: GroupRingElement, v: GroupRingElement) -> None:
    if u.group != v.group:
        raise ValueError(f"group mismatch: {u.group.id} vs {v.group.id}")


def gr_add(u: GroupRingElement, v: GroupRingElement) -> GroupRingElement:
    _same_group(u, v)
    return GroupRingElement(u.group, u.coeffs ^ v.coeffs)


def gr_mul(u: GroupRingElement, v: GroupRingElement) -> GroupRingElement:
    _same_group(u, v)
    table = u.group.cayley
    us = [i for i in range(u.group.order) if u.coeffs[i]]
    vs = [j for j in range(v.group.order) if v.coeffs[j]]
    acc = 0
    for i in us:
        row = table[i]
        for j in vs:
            acc ^= 1 << row[j]
    return GroupRingElement(u.group, BitWord(acc, u.group.order))


_POW2 = np.uint64(1) << np.arange(63, dtype=np.uint64)


def sigma_rows(group: FiniteGroup, bits: int) -> list[int]:
    """Packed rows of sigma(v) for the coefficient bits of v."""
    n = group.order
    a = np.array([(bits >> j) & 1 for j in range(n)], dtype=np.uint8)
    m = a[group.sigma_index]
    if n <= 63:
        return [int(r) for r in m.astype(np.uint64) @ _POW2[:n]]
    return [sum(1 << j for j in np.flatnonzero(row)) for row in m]


def sigma(v: GroupRingElement) -> BitMatrix:
    """Entry (i, j) is the coefficient of g_i^{-1} g_j in v."""
    return BitMatrix(tuple(sigma_rows(v.group, v.coeffs.bits)), v.group.order)


def sigma_block_form(v: GroupRingElement) -> BitMatrix:
    """sigma(v) assembled from circulant blocks instead of the Cayley table."""
    g = v.group
    a = v.coeffs
    if g.kind == "cyclic":
        return circ(a)
    if g.kind == "dihedral":
        (m,) = g.shape
        return block_circ([circ(a.slice(0, m)), rcirc(a.slice(m, 2 * m))])
    if g.kind == "cxc":
        p, q = g.shape
        return block_circ([circ(a.slice(q * j, q * (j + 1))) for j in range(p)])
    if g.kind == "interleaved":
        n, k = g.shape
        parts = [a.slice(n * j, n * (j + 1)) for j in range(k)]
        grid = [
            [
                circ(parts[c - r]) if c >= r else circ(parts[k + c - r].rotate_right(1))
                for c in range(k)
            ]
            for r in range(k)
        ]
        return block_matrix(grid)
    raise ValueError(f"no block form known for group kind {g.kind!r}")
