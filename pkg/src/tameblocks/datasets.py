"""Block datasets: one JSON object per line.

Each record has ``group``, ``family``, ``n``, optional ``v2_order``,
``characters`` as ``[["degree", multiplicity], ...]`` with degrees written
as decimal strings (Monster degrees have 27 digits), and optionally
``expected`` class tags, printed ``brauer`` degrees per tag, and a
``provenance`` note. ``dumps_dataset(load_dataset(text))`` reproduces a
canonical document byte for byte.
"""
from __future__ import annotations

import hashlib
import io
import json
from dataclasses import dataclass, field
from importlib import resources
from typing import IO, Iterable

from .blocks import FAMILIES, BlockData
from .catalog import CatalogError, classes, get_class
from .classifier import TemplateSolution, match_templates

__all__ = [
    "DatasetError",
    "BlockRecord",
    "Dataset",
    "BatchResult",
    "BUNDLED",
    "load_blockdata",
    "load_dataset",
    "load_bundled",
    "dumps_dataset",
    "bundled_checksum",
    "run_batch",
]

BUNDLED = ("sporadic-dihedral", "sporadic-semidihedral")

_KEYS = ("group", "family", "n", "v2_order", "characters", "expected", "brauer", "provenance")


class DatasetError(ValueError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line, self.field = line, field
        where = "".join(p for p in (f"line {line}" if line else "", f", field {field!r}" if field else ""))
        super().__init__(f"{where}: {message}" if where else message)

    def to_record(self) -> dict:
        return {"error": str(self), "line": self.line, "field": self.field}


@dataclass(frozen=True)
class BlockRecord:
    block: BlockData
    expected: tuple[str, ...] | None = None
    brauer: dict[str, tuple[int, ...]] = field(default_factory=dict)
    provenance: str | None = None


@dataclass(frozen=True)
class Dataset:
    name: str
    records: tuple[BlockRecord, ...]

    @property
    def blocks(self) -> list[BlockData]:
        return [r.block for r in self.records]


def _degree(text, line: int, name: str) -> int:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise DatasetError(f"degree must be a decimal string, got {text!r}", line, name)
    s = str(text)
    if not s.isdigit() or int(s) < 1:
        raise DatasetError(f"degree {s!r} is not a positive integer", line, name)
    return int(s)


def _int(value, line: int, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise DatasetError(f"expected an integer >= {minimum}, got {value!r}", line, name)
    return value


def _parse_record(obj, line: int) -> BlockRecord:
    if not isinstance(obj, dict):
        raise DatasetError("record must be a JSON object", line)
    unknown = set(obj) - set(_KEYS)
    if unknown:
        raise DatasetError(f"unknown field(s) {sorted(unknown)}", line)
    for key in ("group", "n", "characters"):
        if key not in obj:
            raise DatasetError("missing", line, key)
    group = obj["group"]
    if not isinstance(group, str) or not group:
        raise DatasetError("must be a non-empty string", line, "group")
    family = obj.get("family")
    if family is not None and family not in FAMILIES:
        raise DatasetError(f"unknown family {family!r}", line, "family")
    n = _int(obj["n"], line, "n", 2)
    v2_order = obj.get("v2_order")
    if v2_order is not None:
        v2_order = _int(v2_order, line, "v2_order", 0)
    chars = obj["characters"]
    if not isinstance(chars, list) or not chars:
        raise DatasetError("must be a non-empty list of [degree, multiplicity]", line, "characters")
    parsed = []
    for i, pair in enumerate(chars):
        name = f"characters[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise DatasetError("must be [degree, multiplicity]", line, name)
        parsed.append((_degree(pair[0], line, name), _int(pair[1], line, name, 1)))
    block = BlockData(group, n, tuple(parsed), family, v2_order)

    expected = obj.get("expected")
    if expected is not None:
        if not isinstance(expected, list) or not all(isinstance(t, str) for t in expected):
            raise DatasetError("must be a list of class tags", line, "expected")
        fams = (family,) if family else FAMILIES
        for tag in expected:
            if not any(c.tag == tag for f in fams for c in classes(f)):
                raise DatasetError(f"tag {tag!r} is not in the catalog", line, "expected")
        expected = tuple(expected)
    brauer = {}
    for tag, degs in (obj.get("brauer") or {}).items():
        if not isinstance(degs, list):
            raise DatasetError("must map tags to degree lists", line, "brauer")
        brauer[tag] = tuple(_degree(d, line, f"brauer[{tag}]") for d in degs)
    provenance = obj.get("provenance")
    return BlockRecord(block, expected, brauer, provenance)


def load_dataset(source: IO | str | bytes | Iterable[str], name: str = "dataset") -> Dataset:
    """Parse a dataset from a stream, text, or bytes."""
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    if isinstance(source, str):
        source = io.StringIO(source)
    records = []
    for lineno, raw in enumerate(source, 1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DatasetError(f"invalid JSON at column {exc.colno}: {exc.msg}", lineno) from None
        records.append(_parse_record(obj, lineno))
    return Dataset(name, tuple(records))


def load_blockdata(source) -> list[BlockData]:
    return load_dataset(source).blocks


def _bundled_text(name: str) -> str:
    if name not in BUNDLED:
        raise DatasetError(f"no bundled dataset {name!r}; have {', '.join(BUNDLED)}")
    return resources.files("tameblocks.data").joinpath(f"{name}.jsonl").read_text("utf-8")


def load_bundled(name: str) -> Dataset:
    return load_dataset(_bundled_text(name), name)


def bundled_checksum(name: str) -> str:
    return hashlib.sha256(_bundled_text(name).encode("utf-8")).hexdigest()


def _record_to_obj(r: BlockRecord) -> dict:
    b = r.block
    obj: dict = {"group": b.group, "family": b.family, "n": b.n}
    if b.v2_order is not None:
        obj["v2_order"] = b.v2_order
    obj["characters"] = [[str(d), m] for d, m in b.characters]
    if r.expected is not None:
        obj["expected"] = list(r.expected)
    if r.brauer:
        obj["brauer"] = {tag: [str(d) for d in degs] for tag, degs in r.brauer.items()}
    if r.provenance is not None:
        obj["provenance"] = r.provenance
    return obj


def dumps_dataset(ds: Dataset | Iterable[BlockRecord]) -> str:
    records = ds.records if isinstance(ds, Dataset) else ds
    return "".join(json.dumps(_record_to_obj(r), ensure_ascii=False) + "\n" for r in records)


# -- batch comparison against expected tags --------------------------------


@dataclass(frozen=True)
class BatchResult:
    record: BlockRecord
    solutions: tuple[TemplateSolution, ...]
    ok: bool
    notes: tuple[str, ...]

    @property
    def matched(self) -> tuple[str, ...]:
        return tuple(s.tag for s in self.solutions)


def _check(record: BlockRecord, sols: list[TemplateSolution]) -> tuple[bool, list[str]]:
    notes = []
    matched = {s.tag for s in sols}
    if not sols:
        return False, ["no template fits"]
    if len(sols) == 1 and not sols[0].realizable:
        return False, [f"unique match {sols[0].tag} is eliminated at n={sols[0].n}"]
    if record.expected is None:
        return True, notes
    expected = set(record.expected)
    family = record.block.family or sols[0].family
    allowed = set(expected)
    for tag in expected:
        try:
            twin = get_class(family, tag).matrix_twin
        except CatalogError:
            twin = None
        if twin:
            allowed.add(twin)
    ok = True
    if not expected <= matched:
        ok = False
        notes.append(f"expected {sorted(expected - matched)} not matched")
    if not matched <= allowed:
        ok = False
        notes.append(f"unexpected matches {sorted(matched - allowed)}")
    extra = matched - expected
    if ok and extra:
        notes.append(f"also matches {sorted(extra)} (identical matrix); expected tag recorded from outside the degree data")
    for tag, printed in record.brauer.items():
        got = [s for s in sols if s.tag == tag]
        if not got:
            continue
        if sorted(got[0].brauer) != sorted(printed):
            ok = False
            notes.append(f"{tag}: Brauer degrees {got[0].brauer} differ from printed {printed}")
    return ok, notes


def run_batch(ds: Dataset) -> list[BatchResult]:
    out = []
    for rec in ds.records:
        sols = match_templates(rec.block)
        ok, notes = _check(rec, sols)
        out.append(BatchResult(rec, tuple(sols), ok, tuple(notes)))
    return out
