"""Bit-packed GF(2) vectors and matrices.

Bit ``j`` of a packed integer (value ``1 << j``) holds coordinate ``j``
(0-based), so row products reduce to XOR and popcount parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def popcount(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True)
class BitWord:
    """Binary vector of fixed logical length.

    Bits above ``length`` are always zero, so equality and hashing are
    bitwise.
    """

    bits: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"negative length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(
                f"bits {self.bits:#x} do not fit in length {self.length}"
            )

    @classmethod
    def zeros(cls, length: int) -> "BitWord":
        return cls(0, length)

    @classmethod
    def ones(cls, length: int) -> "BitWord":
        return cls((1 << length) - 1, length)

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BitWord":
        """Build from coefficients a1, a2, ... given in order."""
        bits = 0
        n = 0
        for j, b in enumerate(values):
            if b not in (0, 1):
                raise ValueError(f"coefficient {b!r} at position {j} is not a bit")
            if b:
                bits |= 1 << j
            n = j + 1
        return cls(bits, n)

    @classmethod
    def from_str(cls, text: str) -> "BitWord":
        """Parse a 0/1 string; commas, spaces and parentheses are ignored."""
        digits = [c for c in text if c not in " ,()\t"]
        if any(c not in "01" for c in digits):
            raise ValueError(f"not a bit string: {text!r}")
        return cls.from_bits(int(c) for c in digits)

    @classmethod
    def from_hex(cls, text: str, length: int) -> "BitWord":
        """Inverse of :meth:`to_hex`."""
        text = text.strip().lower()
        if text.startswith("0x"):
            text = text[2:]
        width = (length + 3) // 4
        if len(text) != width:
            raise ValueError(
                f"hex {text!r} has {len(text)} digits, expected {width} for length {length}"
            )
        value = int(text, 16) if text else 0
        if value >> length:
            raise ValueError(f"hex {text!r} overflows length {length}")
        bits = 0
        for j in range(length):
            if (value >> (length - 1 - j)) & 1:
                bits |= 1 << j
        return cls(bits, length)

    def to_hex(self) -> str:
        """Lowercase hex with a1 as the most significant bit."""
        value = 0
        for j in range(self.length):
            value = (value << 1) | ((self.bits >> j) & 1)
        width = (self.length + 3) // 4
        return format(value, "x").zfill(width) if width else ""

    def to_int(self) -> int:
        """The word read as an unsigned integer with a1 most significant."""
        return int(self.to_str(), 2) if self.length else 0

    @classmethod
    def from_int(cls, value: int, length: int) -> "BitWord":
        return cls.from_bits((value >> (length - 1 - j)) & 1 for j in range(length))

    def to_str(self) -> str:
        return "".join(str((self.bits >> j) & 1) for j in range(self.length))

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def weight(self) -> int:
        return popcount(self.bits)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __xor__(self, other: "BitWord") -> "BitWord":
        _check_len(self, other)
        return BitWord(self.bits ^ other.bits, self.length)

    def __and__(self, other: "BitWord") -> "BitWord":
        _check_len(self, other)
        return BitWord(self.bits & other.bits, self.length)

    def dot(self, other: "BitWord") -> int:
        _check_len(self, other)
        return popcount(self.bits & other.bits) & 1

    def concat(self, other: "BitWord") -> "BitWord":
        return BitWord(self.bits | (other.bits << self.length), self.length + other.length)

    def slice(self, start: int, stop: int) -> "BitWord":
        if not 0 <= start <= stop <= self.length:
            raise IndexError((start, stop))
        return BitWord((self.bits >> start) & ((1 << (stop - start)) - 1), stop - start)

    def rotate_right(self, k: int) -> "BitWord":
        """Cyclic shift moving coordinate j to j + k."""
        n = self.length
        if n == 0:
            return self
        k %= n
        mask = (1 << n) - 1
        return BitWord(((self.bits << k) | (self.bits >> (n - k))) & mask, n)

    def rotate_left(self, k: int) -> "BitWord":
        return self.rotate_right(-k)

    def __str__(self) -> str:
        return self.to_str()


def _check_len(a: BitWord, b: BitWord) -> None:
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} vs {b.length}")


@dataclass(frozen=True)
class BitMatrix:
    """Binary matrix stored as a tuple of packed row integers."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        for i, r in enumerate(self.rows):
            if r < 0 or r >> self.ncols:
                raise ValueError(f"row {i} does not fit in {self.ncols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @classmethod
    def from_words(cls, words: Sequence[BitWord], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            if not words:
                raise ValueError("ncols required for an empty row list")
            ncols = words[0].length
        for w in words:
            if w.length != ncols:
                raise ValueError(f"row length {w.length} != {ncols}")
        return cls(tuple(w.bits for w in words), ncols)

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]]) -> "BitMatrix":
        words = [BitWord.from_bits(r) for r in data]
        ncols = words[0].length if words else 0
        return cls.from_words(words, ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    def row(self, i: int) -> BitWord:
        return BitWord(self.rows[i], self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not 0 <= j < self.ncols:
            raise IndexError(ij)
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def __xor__(self, other: "BitMatrix") -> "BitMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return BitMatrix(tuple(a ^ b for a, b in zip(self.rows, other.rows)), self.ncols)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return mat_mul(self, other)

    @property
    def T(self) -> "BitMatrix":
        return transpose(self)

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return BitMatrix(
            tuple(a | (b << self.ncols) for a, b in zip(self.rows, other.rows)),
            self.ncols + other.ncols,
        )

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "BitMatrix":
        mask = (1 << (c1 - c0)) - 1
        return BitMatrix(tuple((r >> c0) & mask for r in self.rows[r0:r1]), c1 - c0)

    def __str__(self) -> str:
        return "\n".join(self.row(i).to_str() for i in range(self.nrows))


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """GF(2) product; row i of the result is the XOR of the rows of ``b``
    selected by row i of ``a``."""
    if a.ncols != b.nrows:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    out = []
    brows = b.rows
    for r in a.rows:
        acc = 0
        while r:
            low = r & -r
            acc ^= brows[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return BitMatrix(tuple(out), b.ncols)


def transpose(m: BitMatrix) -> BitMatrix:
    cols = [0] * m.ncols
    for i, r in enumerate(m.rows):
        bit = 1 << i
        while r:
            low = r & -r
            cols[low.bit_length() - 1] |= bit
            r ^= low
    return BitMatrix(tuple(cols), m.nrows)


def gram(m: BitMatrix) -> BitMatrix:
    """``m @ m.T`` computed from row inner products."""
    rows = m.rows
    out = []
    for a in rows:
        acc = 0
        for j, b in enumerate(rows):
            if popcount(a & b) & 1:
                acc |= 1 << j
        out.append(acc)
    return BitMatrix(tuple(out), m.nrows)


def circ(first_row: BitWord) -> BitMatrix:
    """Circulant: row i is ``first_row`` shifted right by i."""
    if first_row.length < 1:
        raise ValueError("circ needs a non-empty row")
    return BitMatrix.from_words([first_row.rotate_right(i) for i in range(first_row.length)])


def rcirc(first_row: BitWord) -> BitMatrix:
    """Reverse circulant: row i is ``first_row`` shifted left by i."""
    if first_row.length < 1:
        raise ValueError("rcirc needs a non-empty row")
    return BitMatrix.from_words([first_row.rotate_left(i) for i in range(first_row.length)])


def block_circ(blocks: Sequence[BitMatrix]) -> BitMatrix:
    """Block circulant: block-row i is ``blocks`` rotated right by i."""
    if not blocks:
        raise ValueError("block_circ needs at least one block")
    k = blocks[0].nrows
    for b in blocks:
        if b.nrows != k or b.ncols != k:
            raise ValueError(f"blocks must all be {k}x{k}, got {b.shape}")
    p = len(blocks)
    rows = []
    for i in range(p):
        order = [blocks[(j - i) % p] for j in range(p)]
        for r in range(k):
            acc = 0
            for j, blk in enumerate(order):
                acc |= blk.rows[r] << (j * k)
            rows.append(acc)
    return BitMatrix(tuple(rows), p * k)


def block_matrix(grid: Sequence[Sequence[BitMatrix]]) -> BitMatrix:
    """Assemble a matrix from a rectangular grid of equally sized blocks."""
    rows = []
    for brow in grid:
        h = brow[0].nrows
        for r in range(h):
            acc = 0
            shift = 0
            for blk in brow:
                if blk.nrows != h:
                    raise ValueError("ragged block row")
                acc |= blk.rows[r] << shift
                shift += blk.ncols
            rows.append(acc)
    ncols = sum(b.ncols for b in grid[0])
    return BitMatrix(tuple(rows), ncols)
