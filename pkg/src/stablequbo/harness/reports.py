"""Report emitters for result rows: CSV, JSON and markdown tables."""

import csv
import io
import json
from typing import List, Literal, Sequence, Type, TypeVar

from pydantic import BaseModel, TypeAdapter

from stablequbo.core.errors import ReportFormatError

ReportFormat = Literal["csv", "json", "markdown"]
FORMATS = ("csv", "json", "markdown")

Row = TypeVar("Row", bound=BaseModel)


def _columns(rows: Sequence[BaseModel]) -> List[str]:
    return list(type(rows[0]).model_fields)


def _titles(rows: Sequence[BaseModel]) -> List[str]:
    fields = type(rows[0]).model_fields
    return [field.title or name for name, field in fields.items()]


def _cells(row: BaseModel, columns: Sequence[str]) -> List[str]:
    dumped = row.model_dump(mode="json")
    return ["" if dumped[c] is None else str(dumped[c]) for c in columns]


def emit_report(rows: Sequence[BaseModel], fmt: str) -> bytes:
    """Serialise rows of one model type with a fixed column order.

    Rationals are written as ``p/q`` and densities with two decimals, by the models'
    own serialisers.

    Parameters
    ----------
    rows : Sequence[BaseModel]
        Nonempty list of ``ResultRow`` or ``PartitionCostRow``
    fmt : str
        ``csv``, ``json`` or ``markdown``

    Returns
    -------
    bytes
        UTF-8 encoded report ending in a newline
    """
    if fmt not in FORMATS:
        raise ReportFormatError(f"unknown report format {fmt!r}, expected one of {FORMATS}")
    if not rows:
        raise ValueError("cannot emit a report without rows")
    columns = _columns(rows)

    if fmt == "json":
        payload = [row.model_dump(mode="json") for row in rows]
        return (json.dumps(payload, indent=2) + "\n").encode()

    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(_cells(row, columns) for row in rows)
        return buffer.getvalue().encode()

    lines = ["| " + " | ".join(_titles(rows)) + " |", "|" + "---|" * len(columns)]
    lines += ["| " + " | ".join(_cells(row, columns)) + " |" for row in rows]
    return ("\n".join(lines) + "\n").encode()


def parse_json_report(data: bytes, model: Type[Row]) -> List[Row]:
    """Rows back from a JSON report."""
    return TypeAdapter(List[model]).validate_json(data)  # type: ignore[valid-type]
