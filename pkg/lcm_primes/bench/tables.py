"""
Result Tables - Markdown, CSV and JSON renderings of benchmark records.

Markdown mirrors the comparative timing table: one row per n labeled
P<n>=<p_n>, one column per variant, seconds to two decimals. CSV carries
every record field and parses back losslessly.
"""

import csv
import io
import json
from enum import Enum
from typing import Dict, List, Sequence

from lcm_primes.bench.harness import BenchRecord
from lcm_primes.formula.nth_prime import Variant

CSV_FIELDS = [
    "variant",
    "n",
    "p_n",
    "k_lo",
    "k_hi",
    "terms_evaluated",
    "elapsed_seconds",
    "repetitions",
]


class TableFormat(str, Enum):
    """Output formats for emit_table."""
    MARKDOWN = "md"
    CSV = "csv"
    JSON = "json"


def _markdown(records: Sequence[BenchRecord]) -> str:
    variants = [v for v in Variant if any(r.variant is v for r in records)]
    rows: Dict[int, Dict[Variant, BenchRecord]] = {}
    for record in records:
        rows.setdefault(record.n, {})[record.variant] = record

    lines = [
        "| Prime | " + " | ".join(v.value for v in variants) + " |",
        "|---|" + "---:|" * len(variants),
    ]
    for n in sorted(rows):
        cells = rows[n]
        label = next(iter(cells.values())).label
        values = [f"{cells[v].elapsed_seconds:.2f}" if v in cells else "" for v in variants]
        lines.append(f"| {label} | " + " | ".join(values) + " |")
    return "\n".join(lines) + "\n"


def _csv(records: Sequence[BenchRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for record in records:
        row = record.to_dict()
        # repr keeps every bit of the float
        row["elapsed_seconds"] = repr(record.elapsed_seconds)
        writer.writerow(row)
    return buffer.getvalue()


def emit_table(records: Sequence[BenchRecord], fmt: TableFormat = TableFormat.MARKDOWN) -> str:
    """
    Render benchmark records.

    Args:
        records: Non-empty list of records
        fmt: md, csv or json

    Returns:
        The rendered text, newline-terminated
    """
    if not records:
        raise ValueError("emit_table needs at least one record")
    fmt = TableFormat(fmt)
    if fmt is TableFormat.MARKDOWN:
        return _markdown(records)
    if fmt is TableFormat.CSV:
        return _csv(records)
    return json.dumps([r.to_dict() for r in records], indent=2) + "\n"


def parse_csv(text: str) -> List[BenchRecord]:
    """Read records back from emit_table's CSV output."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_FIELDS:
        raise ValueError(f"unexpected CSV header: {reader.fieldnames}")
    return [BenchRecord.from_dict(row) for row in reader]
