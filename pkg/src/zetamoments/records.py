"""Sweep rows and their CSV / JSON serialization."""
from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
from pathlib import Path


class EmitError(OSError):
    pass


class ExperimentRecord:
    """One sweep row: an ordered mapping from column name to value."""

    __slots__ = ("columns", "values")

    def __init__(self, columns, values):
        columns, values = tuple(columns), tuple(values)
        if len(columns) != len(values):
            raise ValueError("columns and values differ in length")
        if len(set(columns)) != len(columns):
            raise ValueError("duplicate column names")
        self.columns = columns
        self.values = values

    @classmethod
    def from_mapping(cls, mapping) -> "ExperimentRecord":
        return cls(mapping.keys(), mapping.values())

    @classmethod
    def from_dataclass(cls, obj) -> "ExperimentRecord":
        fields = [f.name for f in dataclasses.fields(obj)]
        return cls(fields, [getattr(obj, f) for f in fields])

    def as_dict(self) -> dict:
        return dict(zip(self.columns, self.values))

    def __getitem__(self, key):
        return self.values[self.columns.index(key)]

    def __eq__(self, other):
        return isinstance(other, ExperimentRecord) and self.as_dict() == other.as_dict()

    def __repr__(self):
        return f"ExperimentRecord({self.as_dict()!r})"


def as_record(obj) -> ExperimentRecord:
    if isinstance(obj, ExperimentRecord):
        return obj
    if dataclasses.is_dataclass(obj):
        return ExperimentRecord.from_dataclass(obj)
    if isinstance(obj, dict):
        return ExperimentRecord.from_mapping(obj)
    raise TypeError(f"cannot turn {type(obj).__name__} into a record")


def format_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float) or hasattr(v, "dtype") and getattr(v, "dtype").kind == "f":
        v = float(v)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return f"{v:.17g}"
    if hasattr(v, "item"):
        return str(v.item())
    return str(v)


def _jsonable(v):
    if hasattr(v, "tolist"):
        return v.tolist()
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return v


def to_csv(records, columns=None) -> str:
    records = [as_record(r) for r in records]
    if columns is None:
        columns = records[0].columns if records else ()
    columns = tuple(columns)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if columns:
        w.writerow(columns)
    for r in records:
        d = r.as_dict()
        missing = [c for c in columns if c not in d]
        if missing:
            raise ValueError(f"record lacks columns {missing}")
        w.writerow([format_value(d[c]) for c in columns])
    return buf.getvalue()


def to_json(records, columns=None) -> str:
    out = []
    for r in records:
        d = as_record(r).as_dict()
        keys = columns if columns is not None else d.keys()
        out.append({k: _jsonable(d[k]) for k in keys})
    return json.dumps(out, indent=1)


def emit(records, fmt: str, path, columns=None) -> None:
    """Write records as CSV (stable header, 17 significant digits) or a JSON array."""
    if fmt == "csv":
        text = to_csv(records, columns)
    elif fmt == "json":
        text = to_json(records, columns)
    else:
        raise ValueError(f"unknown format {fmt!r}; use csv or json")
    try:
        Path(path).write_text(text)
    except OSError as e:
        raise EmitError(f"cannot write {path}: {e.strerror or e}") from e
