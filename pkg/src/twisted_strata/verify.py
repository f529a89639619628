"""The full verification suite behind ``twisted-strata verify``."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping

from . import golden, oracles
from .centralizers import centralizer_rank_check
from .cuspidal_support import (
    cuspidal_levis, enumerate_cs2, enumerate_cs_prime, unipotent_support_case,
)
from .errors import StrataError
from .folding import brute_force_folded_type, fixed_subgroup
from .reports import Report
from .springer_tau import (
    ClassicalTauPlugin, GoldenTable, _registry, cuspidal_stratum_check, golden_table, tau,
)
from .strata_atlas import SPECIAL_UNIT_MODULI, c_star, fiber_bijection, verify_fiber_law
from .tables_io import normalize_tex_table, render_table_text, table_checksum
from .weyl_core import (
    UNIT, NamedLabel, TwistedType, folded_type, irr_labels, parse_label, weyl_order,
)

EXCEPTIONAL = (TwistedType("2E6"), TwistedType("3D4"))
EXPECTED_SHAPE = {"2E6": (17, 30), "3D4": (5, 8)}
F4_DEGREES = {1: 4, 2: 4, 4: 5, 6: 2, 8: 4, 9: 4, 12: 1, 16: 1}
CLASSICAL_A_RANGE = range(2, 13)
CLASSICAL_D_RANGE = range(4, 11)
CENTRALIZER_K_MAX = 40
FOLDING_CASES = ("2A:2", "2A:3", "2A:4", "2D:4", "3D4")


def check_table(tt: TwistedType, table: GoldenTable) -> Report:
    report = Report()
    scope = str(tt)
    fam = tt.family

    digest = table_checksum(table)
    report.add("golden-checksum", scope, digest == golden.CHECKSUMS[fam], digest[:16])

    text = render_table_text(table)
    expected = normalize_tex_table(golden.TEX_SOURCE[fam])
    bad_lines = [i + 1 for i, (a, b) in enumerate(zip(text.splitlines(), expected.splitlines()))
                 if a != b]
    report.add("table-transcription", scope, text == expected,
               f"differs at rows {bad_lines}" if bad_lines else "")

    shape = (len(table.rows), table.entry_count)
    report.add("table-shape", scope, shape == EXPECTED_SHAPE[fam],
               f"{shape[0]} rows / {shape[1]} entries")

    heads_ok = [bool(r.entries) and r.entries[0].is_plain and r.entries[0].relative_char == r.stratum
                for r in table.rows]
    report.add("row-head-first", scope, all(heads_ok),
               ", ".join(str(r.stratum) for r, ok in zip(table.rows, heads_ok) if not ok))

    everything = [x for r in table.rows for x in r.entries]
    counts = Counter(everything)
    dupes = [str(x) for x, c in counts.items() if c > 1]
    universe = set(enumerate_cs_prime(tt))
    missing = [str(x) for x in enumerate_cs_prime(tt) if x not in counts]
    extra = [str(x) for x in counts if x not in universe]
    report.add("fiber-partition", scope, not (dupes or missing or extra),
               f"duplicated {dupes} missing {missing} unknown {extra}"
               if dupes or missing or extra else "")

    plain = Counter(x.relative_char for x in everything if x.is_plain)
    alphabet = irr_labels(folded_type(tt))
    complete = set(plain) == set(alphabet) and all(c == 1 for c in plain.values())
    detail = f"{len(plain)} distinct plain labels, Irr has {len(alphabet)}"
    if fam == "2E6":
        degrees = Counter(lab.degree for lab in plain if isinstance(lab, NamedLabel))
        complete = complete and dict(degrees) == F4_DEGREES
        detail += f", degrees {dict(sorted(degrees.items()))}"
    report.add("plain-completeness", scope, complete, detail)

    try:
        law = verify_fiber_law(tt, table)
        bad = ", ".join(f"{r.stratum} ({r.fiber_size} != {r.c_star_size})" for r in law.failing())
        report.add("fiber-law", scope, law.passed, law.summary() + (f"; {bad}" if bad else ""))
    except StrataError as exc:
        report.add("fiber-law", scope, False, str(exc))

    unit_ok, flags_ok = True, True
    try:
        unit_fiber = table.row_for(UNIT).entries
    except StrataError:
        unit_fiber = ()
    full = cuspidal_levis(tt)[-1]
    for dv in full.d_values:
        flags_ok &= (unipotent_support_case(tt, dv.d) == "ii") == (dv.d == 0)
        if dv.case == "ii":
            unit_ok &= all(x in unit_fiber for x in enumerate_cs_prime(tt)
                           if x.levi == full and x.d == dv.d)
    report.add("unit-rule", scope, unit_ok and flags_ok,
               "" if unit_ok and flags_ok else f"unit fibre ok={unit_ok}, case flags ok={flags_ok}")

    single = cuspidal_stratum_check(tt, table)
    report.add("cuspidal-single-stratum", scope, single.passed,
               "; ".join(f"{c.scope} {c.detail}" for c in single.failures()))

    inconsistent = []
    for x in enumerate_cs_prime(tt):
        try:
            tau(tt, x, table=table)
        except StrataError as exc:
            inconsistent.append(str(exc))
    report.add("tau-rules-agree", scope, not inconsistent, "; ".join(inconsistent))

    try:
        fiber_bijection(tt, table)
        report.add("fiber-bijection", scope, True)
    except (StrataError, ValueError) as exc:
        report.add("fiber-bijection", scope, False, str(exc))
    return report


def check_c_star_sizes() -> Report:
    report = Report()
    for tt in EXCEPTIONAL:
        size = c_star(tt, UNIT).size
        brute = sum(oracles.coprime_count(m) for m in SPECIAL_UNIT_MODULI[tt.family])
        report.add("special-unit-size", str(tt), size == brute, f"{size} vs coprime count {brute}")
    return report


def _levi_core_index(tt: TwistedType, levi) -> int:
    # the empty datum corresponds to the 2-core of size 0 or 1, matching n+1
    if levi.k is not None:
        return levi.k
    return 0 if (tt.n + 1) % 2 == 0 else 1


def check_classical_counts() -> Report:
    report = Report()
    for n in CLASSICAL_A_RANGE:
        tt = TwistedType("2A", n)
        labels = enumerate_cs_prime(tt)
        per_levi = {_levi_core_index(tt, lv): sum(1 for x in labels if x.levi == lv)
                    for lv in cuspidal_levis(tt)}
        profile = dict(oracles.core_profile(n + 1))
        total = oracles.twisted_a_count(n)
        ok = len(labels) == total == oracles.partition_count(n + 1) and per_levi == profile
        report.add("classical-count-2A", str(tt), ok,
                   f"|CS'|={len(labels)} oracle={total} by core {sorted(profile.items())}")
    for n in CLASSICAL_D_RANGE:
        tt = TwistedType("2D", n)
        got, want = len(enumerate_cs_prime(tt)), oracles.twisted_d_count(n)
        report.add("classical-count-2D", str(tt), got == want, f"|CS'|={got} oracle={want}")
    for n in list(CLASSICAL_A_RANGE):
        for tt in (TwistedType("2A", n),) + ((TwistedType("2D", n),) if n in CLASSICAL_D_RANGE else ()):
            projected = [(x.levi, x.relative_char) for x in enumerate_cs_prime(tt)]
            ok = projected == enumerate_cs2(tt) and len(set(projected)) == len(projected)
            if tt.family == "2A":
                ok &= all((lv.levi_type.rank - tt.n) % 2 == 0
                          for lv in cuspidal_levis(tt) if not lv.is_empty)
            report.add("classical-bijection", str(tt), ok)
    return report


def check_centralizers() -> Report:
    report = Report()
    bad = []
    for family, ks in (("2A", range(2, CENTRALIZER_K_MAX + 1)),
                       ("2D", range(3, CENTRALIZER_K_MAX + 1, 2))):
        for k in ks:
            sub = centralizer_rank_check(family, k)
            bad.extend(f"{c.scope}: {c.name}" for c in sub.failures())
    report.add("centralizer-integrality", f"k<={CENTRALIZER_K_MAX}", not bad, "; ".join(bad))
    return report


def check_folding() -> Report:
    report = Report()
    for name in FOLDING_CASES:
        tt = TwistedType.parse(name)
        expected = folded_type(tt)
        found = brute_force_folded_type(tt)
        order = len(fixed_subgroup(tt))
        report.add("folded-type", name, found == expected and order == weyl_order(expected),
                   f"table {expected}, brute force {found}, |W^kappa| = {order}")
    tt = TwistedType("2E6")
    found = brute_force_folded_type(tt)
    report.add("folded-type", "2E6", found == folded_type(tt), f"brute force {found}")
    return report


def check_label_round_trip() -> Report:
    report = Report()
    for t in (folded_type(tt) for tt in EXCEPTIONAL):
        labels = irr_labels(t)
        bad = [str(x) for x in labels if parse_label(str(x), t) != x]
        report.add("label-round-trip", str(t), not bad and len(set(labels)) == len(labels),
                   ", ".join(bad))
    return report


def check_plugins(plugins: Iterable[ClassicalTauPlugin]) -> Report:
    report = Report()
    for plugin in plugins:
        problems = plugin.law_violations()
        report.add("plugin-law", str(plugin.tt), not problems, "; ".join(problems[:5]))
    return report


def verify_all(tables: Mapping[TwistedType, GoldenTable] | None = None,
               plugins: Iterable[ClassicalTauPlugin] = ()) -> Report:
    """Run every check.  ``tables`` overrides the embedded golden tables."""
    tables = dict(tables or {})
    report = Report()
    for tt in EXCEPTIONAL:
        report.extend(check_table(tt, tables.get(tt) or golden_table(tt)))
    report.extend(check_c_star_sizes())
    report.extend(check_classical_counts())
    report.extend(check_centralizers())
    report.extend(check_folding())
    report.extend(check_label_round_trip())
    report.extend(check_plugins(list(_registry.values()) + list(plugins)))
    return report
