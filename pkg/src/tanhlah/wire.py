"""
Exact text serialization: integers as decimal strings, rationals as "p/q"
(q omitted when 1, sign on the numerator), never floats.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from fractions import Fraction
from typing import Any

from .errors import UsageError
from .series import Family, PowerSeries
from .triangles import LAH_CONVENTION

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise UsageError(f"not an exact rational: {text!r} (expected p or p/q)")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise UsageError(f"zero denominator in {text!r}") from None


def fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    raise TypeError(f"cannot format {type(x).__name__} as an exact number")


def to_wire(obj: Any) -> Any:
    """Turn results into a JSON-ready tree of strings, lists, dicts and booleans."""
    from .polynomials import Polynomial

    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (int, Fraction)):
        return fmt(obj)
    if isinstance(obj, float):
        if obj == -math.inf:
            return "-inf"
        raise TypeError("floating-point values have no exact wire form")
    if isinstance(obj, str):
        return obj
    if isinstance(obj, Family):
        return obj.value
    if isinstance(obj, Polynomial):
        return [fmt(c) for c in obj.coeffs]
    if isinstance(obj, PowerSeries):
        return [fmt(c) for c in obj.coeffs]
    if isinstance(obj, dict):
        return {str(k): to_wire(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_wire(v) for v in obj]
    raise TypeError(f"no wire form for {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_wire(obj), indent=2) + "\n"


TRIANGLE_DEFINITIONS = {
    Family.STIRLING_FIRST: "(-2)^(n-m)*[n,m]",
    Family.STIRLING_SECOND: "2^(n-m)*{n,m}",
    Family.ARCTANH: "n!*[u^n] arctanh(u)^m/m!",
    Family.TANH: "n!*[u^n] tanh(u)^m/m!",
    Family.LAH_LOWER: "n!/m!*C(n-1,m-1)",
    Family.LAH_UPPER: "(-1)^(n-m)*n!/m!*C(n-1,m-1)",
}


def csv_header(family: Family) -> str:
    return (
        f"# family={family.value}; entry(n,m)={TRIANGLE_DEFINITIONS[family]}; "
        f"one row per n, columns m=0..n; {LAH_CONVENTION}"
    )


def table_csv(family: Family, rows: list[list[int]]) -> str:
    buf = io.StringIO()
    buf.write(csv_header(family) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    for r in rows:
        writer.writerow(r)
    return buf.getvalue()


def parse_table_csv(text: str) -> tuple[Family, list[list[int]]]:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# family="):
        raise UsageError("triangle CSV must start with a '# family=' header line")
    name = lines[0][len("# family="):].split(";", 1)[0].strip()
    family = Family.parse(name)
    rows = [[int(v) for v in r] for r in csv.reader(lines[1:])]
    return family, rows


def table_json(family: Family, rows: list[list[int]]) -> str:
    return dumps({
        "family": family,
        "definition": TRIANGLE_DEFINITIONS[family],
        "conventions": LAH_CONVENTION,
        "rows": rows,
    })


def parse_table_json(text: str) -> tuple[Family, list[list[int]]]:
    data = json.loads(text)
    return Family.parse(data["family"]), [[int(v) for v in r] for r in data["rows"]]
