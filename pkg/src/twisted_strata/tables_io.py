"""Text, canonical-data (JSON) and CSV emitters for tables and label lists.

Text layout of a table row::

    12_4,6''_6,1'_12,9'_6,(E6,1,4) ..... [S4]

ASCII normalisation: primes are apostrophes, epsilon is ``eps``, a symbol
standing for n cuspidal objects is expanded into ``#1`` .. ``#n``.

Canonical data document::

    {"group": "2E6",
     "rows": [{"stratum": "4_13", "box": "C2",
               "entries": [{"kind": "plain", "label": "4_13"},
                           {"kind": "cuspidal", "levi": "E6", "char": "1",
                            "d": 0, "index": 2}, ...]}, ...]}
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import re

from .component_groups import ComponentGroup
from .cuspidal_support import (
    CSLabel, enumerate_cs_prime, find_levi, parse_relative_char, render_relative_char,
)
from .errors import ParseError, UnknownLabel
from .springer_tau import GoldenTable, StratumRow
from .weyl_core import TwistedType, folded_type, parse_label

__all__ = [
    "SEPARATOR", "render_row", "render_table_text", "normalize_tex_row",
    "normalize_tex_table", "entry_to_data", "entry_from_data", "table_to_data",
    "table_from_data", "table_to_json", "table_to_csv", "table_checksum",
    "labels_to_data", "labels_to_csv",
]

SEPARATOR = " ..... "


def render_row(row: StratumRow) -> str:
    return ",".join(map(str, row.entries)) + f"{SEPARATOR}[{row.component_group}]"


def render_table_text(table: GoldenTable) -> str:
    return "".join(render_row(row) + "\n" for row in table.rows)


# TEX NORMALISATION
# -----------------

_TEX_ROW = re.compile(r"^\$(?P<entries>.*)\$\s*\.{3,}\s*\$\\bx\{(?P<box>.*)\}\$\s*$")
_MULT = re.compile(r"^(?P<sym>\(.*\))_\{\\sha=(?P<n>\d+)\}$")


def _split_entries(text: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [e.strip() for e in out]


def _tex_atom(text: str) -> str:
    text = text.replace(r"\e", "eps")
    text = re.sub(r"_\{(\d+)\}", r"_\1", text)
    return text


def _tex_symbol(sym: str) -> str:
    # (E_6,1,0) -> (E6,1,0): drop the subscript underscore of the Levi type
    inner = sym[1:-1].split(",")
    inner[0] = inner[0].replace("_", "")
    return "(" + ",".join(_tex_atom(p.strip()) for p in inner) + ")"


def normalize_tex_row(line: str) -> str:
    m = _TEX_ROW.match(line.strip())
    if not m:
        raise ParseError("not a table row", line, 0)
    entries = []
    for raw in _split_entries(m.group("entries")):
        mult = _MULT.match(raw)
        if mult:
            sym = _tex_symbol(mult.group("sym"))
            entries.extend(f"{sym}#{i}" for i in range(1, int(mult.group("n")) + 1))
        elif raw.startswith("("):
            entries.append(_tex_symbol(raw))
        else:
            entries.append(_tex_atom(raw))
    box = m.group("box").replace(r"\cc_", "C").replace("_", "")
    return ",".join(entries) + f"{SEPARATOR}[{box}]"


def normalize_tex_table(source: str) -> str:
    return "".join(normalize_tex_row(line) + "\n"
                   for line in source.splitlines() if line.strip())


# CANONICAL DATA
# --------------

def entry_to_data(x: CSLabel) -> dict:
    if x.is_plain:
        return {"kind": "plain", "label": str(x.relative_char)}
    return {"kind": "cuspidal", "levi": x.levi.name,
            "char": render_relative_char(x.levi, x.relative_char),
            "d": x.d, "index": x.index}


def entry_from_data(tt: TwistedType, doc: dict, strict: bool = True) -> CSLabel:
    kind = doc.get("kind")
    if kind == "plain":
        levi = find_levi(tt, "")
        x = CSLabel(levi, parse_label(doc["label"], levi.relative_type))
    elif kind == "cuspidal":
        levi = find_levi(tt, doc["levi"])
        x = CSLabel(levi, parse_relative_char(levi, doc["char"]), doc["d"], doc["index"])
    else:
        raise UnknownLabel(f"unknown entry kind {kind!r}")
    if strict and x not in enumerate_cs_prime(tt):
        raise UnknownLabel(f"{doc} is not a character-sheaf label of {tt}")
    return x


def table_to_data(table: GoldenTable) -> dict:
    return {
        "group": str(table.tt),
        "rows": [{"stratum": str(row.stratum), "box": str(row.component_group),
                  "entries": [entry_to_data(x) for x in row.entries]}
                 for row in table.rows],
    }


def table_from_data(doc: dict | str, strict: bool = True) -> GoldenTable:
    if isinstance(doc, str):
        doc = json.loads(doc)
    tt = TwistedType.parse(doc["group"])
    weyl = folded_type(tt)
    return GoldenTable(tt, tuple(
        StratumRow(parse_label(row["stratum"], weyl), ComponentGroup.parse(row["box"]),
                   tuple(entry_from_data(tt, e, strict) for e in row["entries"]))
        for row in doc["rows"]))


def table_to_json(table: GoldenTable) -> str:
    return json.dumps(table_to_data(table), indent=2) + "\n"


def table_checksum(table: GoldenTable) -> str:
    canonical = json.dumps(table_to_data(table), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("ascii")).hexdigest()


def table_to_csv(table: GoldenTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["group", "stratum", "box", "entry_kind", "entry_text"])
    for row in table.rows:
        for x in row.entries:
            writer.writerow([str(table.tt), str(row.stratum), str(row.component_group),
                             "plain" if x.is_plain else "cuspidal", str(x)])
    return buf.getvalue()


def labels_to_data(tt: TwistedType, labels: list[CSLabel]) -> dict:
    return {"group": str(tt), "entries": [entry_to_data(x) for x in labels]}


def labels_to_csv(tt: TwistedType, labels: list[CSLabel]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["group", "levi", "relative_char", "d", "index", "entry_text"])
    for x in labels:
        writer.writerow([str(tt), x.levi.name or "-",
                         render_relative_char(x.levi, x.relative_char),
                         "" if x.d is None else x.d, x.index, str(x)])
    return buf.getvalue()
