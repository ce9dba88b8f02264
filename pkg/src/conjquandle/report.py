"""Report documents: JSON (primary, schema-checked) and CSV summaries."""

from __future__ import annotations

import csv
import io
import json
from importlib import resources
from pathlib import Path

from . import __version__

SCHEMA_ID = "conjquandle-report/1"

COVERAGE_NOTE = (
    "Groups come from a constructible catalog (cyclic, dihedral, symmetric, alternating "
    "and pairwise direct products of these) plus user files. This is a subset of all "
    "groups of a given order; no small-groups database is consulted."
)

CSV_COLUMNS = [
    "group", "group_order", "class_index", "representative", "class_size", "element_order",
    "h_order", "connected_direct", "connected_criterion", "hayashi", "goodness",
    "method", "audit_issues",
]


def load_schema() -> dict:
    return json.loads(resources.files("conjquandle").joinpath("report.schema.json").read_text())


def document(command: str, config: dict, groups: list[dict], summary: dict, extra: dict | None = None) -> dict:
    doc = {
        "schema": SCHEMA_ID,
        "tool": {"name": "conjquandle", "version": __version__},
        "command": command,
        "config": config,
        "coverage_note": COVERAGE_NOTE,
        "groups": groups,
        "summary": summary,
    }
    if extra:
        doc.update(extra)
    return doc


def validate(doc: dict) -> None:
    import jsonschema

    jsonschema.validate(doc, load_schema())


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


def write_json(doc: dict, path) -> None:
    Path(path).write_text(dumps(doc))


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def csv_rows(groups: list[dict]):
    for g in groups:
        for c in g["classes"]:
            audit = c.get("audit")
            yield [
                g["name"], g["order"], c["index"], c["representative"], c["size"], c["element_order"],
                c["h_order"], c["connected_direct"], c["connected_criterion"], c["hayashi"],
                c["goodness"]["verdict"], c["goodness"]["method"],
                "; ".join(audit["issues"]) if audit else None,
            ]


def to_csv(groups: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in csv_rows(groups):
        w.writerow([_cell(v) for v in row])
    return buf.getvalue()


def write_csv(groups: list[dict], path) -> None:
    Path(path).write_text(to_csv(groups))
