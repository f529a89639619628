"""The map tau from character-sheaf labels to strata labels.

For 2E6 and 3D4 the golden tables define tau outright: each row is the
fibre over its first entry.  Two rules hold independently of the tables and
are cross-checked on every evaluation:

* a plain label E' that is itself a stratum label maps to itself;
* the full-group cuspidals with non-unipotent support (d = 0) map to the
  unit representation 1_0.

For 2A and 2D the map is given by symbol combinatorics that this package
does not reproduce; it is supplied through a ``ClassicalTauPlugin``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import golden
from .component_groups import ComponentGroup
from .cuspidal_support import (
    CSLabel, CuspidalLevi, cuspidal_levis, enumerate_cs2, enumerate_cs_prime,
    parse_cs_label,
)
from .errors import (
    MissingPlugin, PluginLawError, TableInconsistency, UnknownLabel,
    UnknownStratum, UnsupportedType,
)
from .reports import Report
from .weyl_core import UNIT, IrrLabel, TwistedType, folded_type, irr_labels, parse_label

__all__ = [
    "StratumRow", "GoldenTable", "ClassicalTauPlugin", "golden_table", "tau",
    "fiber", "cuspidal_stratum_check", "register_plugin", "get_plugin",
    "freeze_plugins",
]


@dataclass(frozen=True)
class StratumRow:
    stratum: IrrLabel
    component_group: ComponentGroup
    entries: tuple[CSLabel, ...]


@dataclass(frozen=True)
class GoldenTable:
    tt: TwistedType
    rows: tuple[StratumRow, ...]

    @property
    def entry_count(self) -> int:
        return sum(len(r.entries) for r in self.rows)

    def row_for(self, stratum: IrrLabel) -> StratumRow:
        for row in self.rows:
            if row.stratum == stratum:
                return row
        raise UnknownStratum(f"{stratum} is not a stratum label of {self.tt}")

    def replace_row(self, i: int, row: StratumRow) -> "GoldenTable":
        rows = list(self.rows)
        rows[i] = row
        return GoldenTable(self.tt, tuple(rows))


def build_table(tt: TwistedType, rows) -> GoldenTable:
    """Build a table from (stratum text, box text, entry texts) triples."""
    weyl = folded_type(tt)
    return GoldenTable(tt, tuple(
        StratumRow(parse_label(head, weyl), ComponentGroup.parse(box),
                   tuple(parse_cs_label(tt, e) for e in entries))
        for head, box, entries in rows))


@lru_cache(maxsize=None)
def golden_table(tt: TwistedType) -> GoldenTable:
    if not tt.is_exceptional:
        raise UnsupportedType(f"no golden table for classical type {tt}")
    return build_table(tt, golden.ROWS[tt.family])


def _exceptional_tau(tt: TwistedType, x: CSLabel, table: GoldenTable) -> IrrLabel:
    hits = [row.stratum for row in table.rows if x in row.entries]
    if len(hits) != 1:
        raise TableInconsistency(f"{x} occurs in {len(hits)} rows of the {tt} table")
    value = hits[0]
    heads = {row.stratum for row in table.rows}
    if x.is_plain and x.relative_char in heads and value != x.relative_char:
        raise TableInconsistency(f"stratum label {x} is not fixed by tau (got {value})")
    if x.levi.kind == "full" and _case(x) == "ii" and value != UNIT:
        raise TableInconsistency(f"{x} has non-unipotent support but maps to {value}")
    return value


def _case(x: CSLabel) -> str:
    for dv in x.levi.d_values:
        if dv.d == x.d:
            return dv.case
    return "i"


def tau(tt: TwistedType, x: CSLabel, plugin: "ClassicalTauPlugin | None" = None,
        table: GoldenTable | None = None) -> IrrLabel:
    """Stratum label of the character sheaf labelled ``x``."""
    if x not in enumerate_cs_prime(tt):
        raise UnknownLabel(f"{x} is not a character-sheaf label of {tt}")
    if tt.is_exceptional:
        return _exceptional_tau(tt, x, table or golden_table(tt))
    plugin = plugin or get_plugin(tt)
    if plugin is None:
        raise MissingPlugin(f"tau for {tt} needs a ClassicalTauPlugin")
    return plugin(x.levi, x.relative_char)


def fiber(tt: TwistedType, stratum: IrrLabel, plugin: "ClassicalTauPlugin | None" = None,
          table: GoldenTable | None = None) -> list[CSLabel]:
    if tt.is_exceptional:
        return list((table or golden_table(tt)).row_for(stratum).entries)
    plugin = plugin or get_plugin(tt)
    if plugin is None:
        raise UnsupportedType(f"strata of {tt} need a ClassicalTauPlugin")
    out = [x for x in enumerate_cs_prime(tt) if plugin(x.levi, x.relative_char) == stratum]
    if not out:
        raise UnknownStratum(f"{stratum} is not a stratum label of {tt}")
    return out


def cuspidal_stratum_check(tt: TwistedType, table: GoldenTable | None = None) -> Report:
    """Each cuspidal-induced label must sit in exactly one row."""
    table = table or golden_table(tt)
    report = Report()
    for x in enumerate_cs_prime(tt):
        if x.is_plain:
            continue
        rows = [str(r.stratum) for r in table.rows if x in r.entries]
        report.add("cuspidal-single-stratum", f"{tt} {x}", len(rows) == 1,
                   "in rows " + ", ".join(rows) if rows else "in no row")
    return report


# CLASSICAL PLUGINS
# -----------------

@dataclass(frozen=True)
class ClassicalTauPlugin:
    """An externally supplied tau for a classical type.

    ``func(levi, relative_char)`` must be total on CS''(tt), land in
    Irr(W^kappa), and fix every label in its own image (so that it is a
    retraction onto the set of strata labels it defines).
    """

    tt: TwistedType
    func: Callable[[CuspidalLevi, IrrLabel], IrrLabel]

    def __call__(self, levi: CuspidalLevi, e: IrrLabel) -> IrrLabel:
        return self.func(levi, e)

    def law_violations(self) -> list[str]:
        if self.tt.is_exceptional:
            return [f"plugins are only accepted for classical types, not {self.tt}"]
        targets = set(irr_labels(folded_type(self.tt)))
        empty = cuspidal_levis(self.tt)[0]
        problems, image = [], set()
        for levi, e in enumerate_cs2(self.tt):
            try:
                value = self.func(levi, e)
            except Exception as exc:  # totality failure
                problems.append(f"undefined at ({levi},{e}): {exc}")
                continue
            if value not in targets:
                problems.append(f"({levi},{e}) -> {value} is not in Irr({folded_type(self.tt)})")
            else:
                image.add(value)
        for value in sorted(image, key=str):
            back = self.func(empty, value)
            if back != value:
                problems.append(f"retraction fails: stratum {value} maps to {back}")
        return problems

    def validate(self) -> None:
        problems = self.law_violations()
        if problems:
            raise PluginLawError("; ".join(problems))

    def strata(self) -> list[IrrLabel]:
        seen: dict = {}
        for levi, e in enumerate_cs2(self.tt):
            seen.setdefault(self.func(levi, e), None)
        return list(seen)


_registry: dict[TwistedType, ClassicalTauPlugin] = {}
_registry_lock = threading.Lock()
_frozen = False


def register_plugin(plugin: ClassicalTauPlugin) -> None:
    """Validate and install ``plugin``; must happen before ``freeze_plugins``."""
    plugin.validate()
    with _registry_lock:
        if _frozen:
            raise RuntimeError("plugin registry is frozen")
        _registry[plugin.tt] = plugin


def freeze_plugins() -> None:
    global _frozen
    with _registry_lock:
        _frozen = True


def get_plugin(tt: TwistedType) -> ClassicalTauPlugin | None:
    return _registry.get(tt)


def _reset_plugins() -> None:
    """Test hook: empty and unfreeze the registry."""
    global _frozen
    with _registry_lock:
        _registry.clear()
        _frozen = False
