"""Known weight-enumerator parameters and the append-only results log."""

from __future__ import annotations

import enum
import os
import tempfile
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Union

from .codes import EnumeratorClass, NotSelfDual, analyze, build_code
from .gf2 import BitWord
from .groups import GroupRingElement, parse_group_id

_FORM_TYPES = {"W68_1": "I", "W68_2": "I", "W72_1": "I", "W72_2": "I", "TypeII72": "II"}


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class Verdict(str, enum.Enum):
    NEW_PARAMETERS = "new_parameters"
    KNOWN_PARAMETERS = "known_parameters"
    KNOWN_PARAMETERS_NEW_AUT_ORDER = "known_parameters_new_aut_order"


Key = tuple[int, str, Optional[int], int]


@dataclass(frozen=True)
class KnownParamRecord:
    length: int
    code_type: str
    form: str
    gamma: Optional[int]
    value: int  # beta, or alpha for Type II
    aut_orders: frozenset[int] = frozenset()
    source: str = "literature"

    @property
    def key(self) -> Key:
        return (self.length, self.form, self.gamma, self.value)

    def to_line(self) -> str:
        g = "-" if self.gamma is None else str(self.gamma)
        aut = ",".join(str(a) for a in sorted(self.aut_orders)) or "-"
        return f"{self.length} {self.code_type} {self.form} {g} {self.value} {aut} {self.source}"


def _opt_int(tok: str) -> Optional[int]:
    return None if tok == "-" else int(tok)


def _parse_known_line(line: str, lineno: int) -> KnownParamRecord:
    parts = line.split()
    if len(parts) != 7:
        raise ParseError(lineno, f"expected 7 fields, got {len(parts)}")
    length, ctype, form, gamma, value, aut, source = parts
    if ctype not in ("I", "II"):
        raise ParseError(lineno, f"type must be I or II, got {ctype!r}")
    if form not in _FORM_TYPES:
        raise ParseError(lineno, f"unknown form {form!r}")
    if _FORM_TYPES[form] != ctype:
        raise ParseError(lineno, f"form {form} is not Type {ctype}")
    try:
        auts = frozenset() if aut == "-" else frozenset(int(a) for a in aut.split(","))
        return KnownParamRecord(int(length), ctype, form, _opt_int(gamma), int(value), auts, source)
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None


@dataclass
class Registry:
    """Index of known parameter points keyed by (length, form, gamma, beta/alpha)."""

    records: dict[Key, KnownParamRecord] = field(default_factory=dict)

    def add(self, rec: KnownParamRecord) -> None:
        old = self.records.get(rec.key)
        if old is None:
            self.records[rec.key] = rec
            return
        sources = sorted(set(old.source.split("+")) | set(rec.source.split("+")))
        self.records[rec.key] = KnownParamRecord(
            old.length, old.code_type, old.form, old.gamma, old.value,
            old.aut_orders | rec.aut_orders, "+".join(sources),
        )

    def __len__(self) -> int:
        return len(self.records)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Registry) and self.records == other.records

    def bucket_counts(self) -> Counter:
        return Counter((r.length, r.form, r.gamma) for r in self.records.values())

    def serialize(self) -> str:
        lines = ["# <length> <type> <form> <gamma|-> <beta|alpha> <aut_orders|-> <source>"]
        for (length, form, gamma), count in sorted(self.bucket_counts().items(), key=_bucket_order):
            lines.append(f"#! count {length} {form} {'-' if gamma is None else gamma} {count}")
        for key in sorted(self.records, key=_key_order):
            lines.append(self.records[key].to_line())
        return "\n".join(lines) + "\n"

    def lookup(self, length: int, cls: EnumeratorClass) -> Optional[KnownParamRecord]:
        if cls.form is None:
            return None
        return self.records.get((length, cls.form, cls.gamma, cls.param()))

    def is_new(self, cls: EnumeratorClass, length: int, aut_order: Optional[int] = None) -> Verdict:
        """Parameter-level newness; ``aut_order`` only refines a known point."""
        rec = self.lookup(length, cls)
        if rec is None:
            return Verdict.NEW_PARAMETERS
        if aut_order is not None and aut_order not in rec.aut_orders:
            return Verdict.KNOWN_PARAMETERS_NEW_AUT_ORDER
        return Verdict.KNOWN_PARAMETERS

    def without(self, keys: Iterable[Key]) -> "Registry":
        drop = set(keys)
        return Registry({k: r for k, r in self.records.items() if k not in drop})


def _bucket_order(item):
    (length, form, gamma), _ = item
    return (length, form, -1 if gamma is None else gamma)


def _key_order(key: Key):
    length, form, gamma, value = key
    return (length, form, -1 if gamma is None else gamma, value)


def load_known(text: str) -> Registry:
    """Parse the known-parameter dataset.

    ``#! count <length> <form> <gamma|-> <n>`` header lines declare bucket
    sizes and are checked against the parsed records.
    """
    reg = Registry()
    declared: dict[tuple, tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#!"):
            parts = line[2:].split()
            if len(parts) != 5 or parts[0] != "count":
                raise ParseError(lineno, f"bad directive {line!r}")
            try:
                bucket = (int(parts[1]), parts[2], _opt_int(parts[3]))
                declared[bucket] = (int(parts[4]), lineno)
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
            continue
        if not line or line.startswith("#"):
            continue
        reg.add(_parse_known_line(line, lineno))
    actual = reg.bucket_counts()
    for bucket, (count, lineno) in declared.items():
        if actual.get(bucket, 0) != count:
            raise ParseError(
                lineno, f"bucket {bucket} declares {count} records, found {actual.get(bucket, 0)}"
            )
    return reg


def shipped_known() -> Registry:
    text = resources.files("selfdual").joinpath("data/known_params.txt").read_text()
    return load_known(text)


def load_registry(path: Union[str, Path, None]) -> Registry:
    if path is None:
        return shipped_known()
    return load_known(Path(path).read_text())


class RecordRejected(ValueError):
    pass


@dataclass(frozen=True)
class ResultRecord:
    group_id: str
    v: BitWord
    d: int
    cls: EnumeratorClass
    seed: Optional[int] = None
    evaluations: Optional[int] = None
    aut_order: Optional[int] = None
    timestamp: Optional[float] = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.v.length

    @property
    def key(self) -> tuple[str, int, int]:
        return (self.group_id, self.v.length, self.v.bits)

    def to_line(self) -> str:
        cls = self.cls
        form = cls.form or cls.code_type
        gamma = "-" if cls.gamma is None else str(cls.gamma)
        param = cls.param()
        fields = [
            self.group_id, str(self.n), self.v.to_hex(), str(self.d), form, gamma,
            "-" if param is None else str(param),
            "-" if self.seed is None else str(self.seed),
            "-" if self.evaluations is None else str(self.evaluations),
        ]
        if self.aut_order is not None:
            fields.append(str(self.aut_order))
        return " ".join(fields)

    @classmethod
    def from_line(cls, line: str) -> "ResultRecord":
        parts = line.split()
        if len(parts) not in (9, 10):
            raise ValueError(f"results line needs 9 or 10 fields, got {len(parts)}: {line!r}")
        gid, n, hexrow, d, form, gamma, param, seed, evals = parts[:9]
        v = BitWord.from_hex(hexrow, int(n))
        d_int = int(d)
        if form in ("I", "II"):
            ec = EnumeratorClass(form, d=d_int)
        elif form == "TypeII72":
            ec = EnumeratorClass("II", form, alpha=_opt_int(param), d=d_int)
        elif form in _FORM_TYPES:
            ec = EnumeratorClass("I", form, beta=_opt_int(param), gamma=_opt_int(gamma), d=d_int)
        else:
            raise ValueError(f"unknown form {form!r}")
        aut = int(parts[9]) if len(parts) == 10 else None
        return cls(gid, v, d_int, ec, _opt_int(seed), _opt_int(evals), aut)


def verify_record(rec: ResultRecord, threads: int = 1) -> None:
    """Rebuild the code from (group_id, v) and check d and the class."""
    try:
        group = parse_group_id(rec.group_id)
    except ValueError as exc:
        raise RecordRejected(str(exc)) from None
    if group.order != rec.n:
        raise RecordRejected(f"v has length {rec.n}, group {rec.group_id} has order {group.order}")
    try:
        code = build_code(GroupRingElement(group, rec.v))
    except NotSelfDual as exc:
        raise RecordRejected(str(exc)) from None
    found = analyze(code, threads=threads)
    if found.distance.d != rec.d:
        raise RecordRejected(f"recorded d={rec.d}, recomputed d={found.distance.d}")
    got = found.cls
    want = rec.cls
    if (got.form, got.code_type, got.gamma, got.param()) != (want.form, want.code_type, want.gamma, want.param()):
        raise RecordRejected(f"recorded class {want.describe()}, recomputed {got.describe()}")


class ResultsLog:
    """Line-per-record results file; appends are verified and atomic."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def read(self) -> list[ResultRecord]:
        if not self.path.exists():
            return []
        out = []
        for lineno, line in enumerate(self.path.read_text().splitlines(), start=1):
            if line.strip() and not line.startswith("#"):
                try:
                    out.append(ResultRecord.from_line(line))
                except ValueError as exc:
                    raise ParseError(lineno, str(exc)) from None
        return out

    def append_result(self, rec: ResultRecord, threads: int = 1, verify: bool = True) -> bool:
        """Append ``rec`` unless its (group_id, v) is already present.

        Returns True if the file changed.
        """
        if verify:
            verify_record(rec, threads=threads)
        existing = self.path.read_text() if self.path.exists() else ""
        keys = {r.key for r in self.read()}
        if rec.key in keys:
            return False
        if existing and not existing.endswith("\n"):
            existing += "\n"
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=self.path.name + ".")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(existing + rec.to_line() + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return True
