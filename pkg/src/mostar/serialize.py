"""JSON/CSV conversion for reports. Rationals become ``"p/q"`` strings."""

from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
from fractions import Fraction
from importlib import resources

from .graph_core import Graph


def frac_str(v: Fraction | int) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def to_jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return frac_str(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, Graph):
        return {"n": obj.n, "edges": [list(e) for e in obj.edges]}
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, range, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    if hasattr(obj, "item"):  # numpy scalar
        return obj.item()
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True)


def csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([frac_str(v) if isinstance(v, Fraction) else v for v in row])
    return buf.getvalue()


def load_schema(name: str) -> dict:
    """Bundled JSON schema, e.g. ``load_schema("certificate")``."""
    text = resources.files("mostar").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)
