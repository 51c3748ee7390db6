"""BD-JSON v1 documents and criterion reports.

A BD-JSON document looks like::

    {
      "version": 1,
      "n": 2,
      "boundary": [{"type": "puncture", "index": 1}, ...],
      "upper": [[0, 1], [2, 3]],
      "lower": [],
      "labels": [1, 1, 2, 2]
    }

``labels`` is optional and only written when it differs from the default
numbering.  Serialisation is canonical: keys in the order above, chords
sorted, one boundary point per line, so byte equality means structural
equality.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import __version__
from .criterion import CriterionReport
from .diagram import ChordDiagram, DiagramError, validate

KEYS = ("version", "n", "boundary", "upper", "lower", "labels")
REQUIRED = KEYS[:-1]


class SchemaError(ValueError):
    """The document is not BD-JSON v1; ``where`` names the line or field."""

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


def _check_schema(doc):
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    for key in REQUIRED:
        if key not in doc:
            raise SchemaError("missing field", key)
    extra = set(doc) - set(KEYS)
    if extra:
        raise SchemaError(f"unknown field(s) {sorted(extra)}", sorted(extra)[0])
    if doc["version"] != 1:
        raise SchemaError(f"unsupported version {doc['version']!r}", "version")
    if not isinstance(doc["n"], int) or isinstance(doc["n"], bool):
        raise SchemaError("must be an integer", "n")
    if not isinstance(doc["boundary"], list):
        raise SchemaError("must be a list", "boundary")
    for i, p in enumerate(doc["boundary"]):
        where = f"boundary[{i}]"
        if not isinstance(p, dict) or p.get("type") not in ("puncture", "crossing"):
            raise SchemaError('expected {"type": "puncture"|"crossing", ...}', where)
        key = "index" if p["type"] == "puncture" else "id"
        if set(p) != {"type", key} or not isinstance(p[key], int):
            raise SchemaError(f'a {p["type"]} needs exactly an integer "{key}"', where)
    for name in ("upper", "lower"):
        chords = doc[name]
        if not isinstance(chords, list):
            raise SchemaError("must be a list", name)
        for i, c in enumerate(chords):
            if (not isinstance(c, list) or len(c) != 2
                    or not all(isinstance(x, int) and not isinstance(x, bool) for x in c)):
                raise SchemaError("chord must be a pair of integers", f"{name}[{i}]")
    if "labels" in doc:
        labels = doc["labels"]
        if not isinstance(labels, list) or not all(isinstance(x, int) for x in labels):
            raise SchemaError("must be a list of integers", "labels")


def from_dict(doc) -> ChordDiagram:
    _check_schema(doc)
    return validate(doc)


def loads(text: str) -> ChordDiagram:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    return from_dict(doc)


def load(path) -> ChordDiagram:
    return loads(Path(path).read_text())


def dumps(d: ChordDiagram) -> str:
    doc = d.to_dict()
    lines = ["{"]
    lines.append(f'  "version": {doc["version"]},')
    lines.append(f'  "n": {doc["n"]},')
    pts = [json.dumps(p) for p in doc["boundary"]]
    lines.append('  "boundary": [')
    lines += [f"    {p}," for p in pts[:-1]] + [f"    {pts[-1]}"]
    lines.append("  ],")
    tail = [("upper", sorted(doc["upper"])), ("lower", sorted(doc["lower"]))]
    if "labels" in doc:
        tail.append(("labels", doc["labels"]))
    for i, (key, val) in enumerate(tail):
        comma = "," if i < len(tail) - 1 else ""
        lines.append(f'  "{key}": {json.dumps(val)}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def save(d: ChordDiagram, path) -> None:
    Path(path).write_text(dumps(d))


def report_to_dict(report: CriterionReport) -> dict:
    records = []
    for r in report.records:
        wit = None
        if r.witness is not None:
            wit = {"vertex": r.witness.vertex,
                   "components": [list(c) for c in r.witness.components]}
        records.append({
            "i": r.i,
            "j": r.j,
            "hemisphere": r.hemisphere,
            "two_connected": r.two_connected,
            "witness": wit,
            "family_labels": r.family.labels,
            "edges": sorted(sorted(e) for e in r.graph.edges),
        })
    return {
        "verdict": report.verdict,
        "n": report.n,
        "records": records,
        "tool": {"name": "bridgekit", "version": __version__},
    }


def report_dumps(report: CriterionReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


__all__ = ["SchemaError", "DiagramError", "from_dict", "loads", "load", "dumps", "save",
           "report_to_dict", "report_dumps"]
