"""Record-file persistence: one JSON document per line, versioned header.

Serialization is canonical (sorted keys, fixed separators, no wall-clock
fields), so identical pipeline runs produce byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from ._version import __version__
from .search import CodeRecord

FORMAT_NAME = "compolift-records"
FORMAT_VERSION = 1


@dataclass
class RecordFile:
    records: list[CodeRecord]
    version: int = FORMAT_VERSION
    meta: dict = field(default_factory=dict)


def dumps(records: Iterable[CodeRecord], meta: dict | None = None) -> str:
    header = {"format": FORMAT_NAME, "version": FORMAT_VERSION, "tool": __version__}
    if meta:
        header.update(meta)
    buf = io.StringIO()
    buf.write(json.dumps(header, sort_keys=True, separators=(",", ":")) + "\n")
    for rec in records:
        buf.write(json.dumps(rec.to_dict(), sort_keys=True, separators=(",", ":")) + "\n")
    return buf.getvalue()


def loads(text: str) -> RecordFile:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        return RecordFile(records=[], meta={})
    head = json.loads(lines[0])
    if not isinstance(head, dict) or head.get("format") != FORMAT_NAME:
        raise ValueError("not a record file (missing header line)")
    version = head.get("version")
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported record-file version: {version}")
    meta = {k: v for k, v in head.items() if k not in ("format", "version")}
    records = [CodeRecord.from_dict(json.loads(ln)) for ln in lines[1:]]
    return RecordFile(records=records, version=version, meta=meta)


def write_records(path: str | Path, records: Iterable[CodeRecord], meta: dict | None = None) -> None:
    Path(path).write_text(dumps(records, meta), encoding="utf-8")


def read_records(path: str | Path) -> RecordFile:
    return loads(Path(path).read_text(encoding="utf-8"))


CSV_HEADER = "id,type,rB,rC,rD,gamma,beta,aut"


def _type_label(rec: CodeRecord) -> str:
    p = rec.params
    if p is None:
        return ""
    if p.family:
        return p.family
    return f"[{p.n},{p.k},{p.d}]"


def to_csv(records: Iterable[CodeRecord]) -> str:
    """Fixed-schema CSV export (row vectors quoted as parenthesized tuples)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for rec in records:
        toks = rec.first_rows().tokens()
        writer.writerow(
            (
                rec.id,
                _type_label(rec),
                f"({toks['rB']})",
                f"({toks['rC']})",
                f"({toks['rD']})" if "rD" in toks else "",
                "" if rec.params is None or rec.params.gamma is None else str(rec.params.gamma),
                "" if rec.params is None or rec.params.beta is None else str(rec.params.beta),
                rec.aut or "",
            )
        )
    return buf.getvalue()


def to_table(records: Iterable[CodeRecord]) -> str:
    """Aligned text rendering in table column order."""
    rows = [("id", "type", "rB", "rC", "rD", "gamma", "beta", "aut")]
    for rec in records:
        toks = rec.first_rows().tokens()
        p = rec.params
        rows.append(
            (
                rec.id,
                _type_label(rec),
                f"({toks['rB']})",
                f"({toks['rC']})",
                f"({toks['rD']})" if "rD" in toks else "-",
                "-" if p is None or p.gamma is None else str(p.gamma),
                "-" if p is None or p.beta is None else str(p.beta),
                rec.aut or "-",
            )
        )
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    out = []
    for r in rows:
        out.append("  ".join(val.ljust(w) for val, w in zip(r, widths)).rstrip())
    return "\n".join(out) + "\n"
