import dataclasses
from itertools import permutations

from hypothesis import given, strategies as st
import pytest

from twisted_strata import oracles
from twisted_strata.component_groups import ComponentGroup, CStarDescriptor, euler_phi
from twisted_strata.errors import UnknownStratum, UnsupportedType
from twisted_strata.springer_tau import golden_table
from twisted_strata.strata_atlas import (
    c_star, component_group, fiber_bijection, strata, verify_fiber_law,
)
from twisted_strata.weyl_core import UNIT, TwistedType, parse_label

E6 = TwistedType("2E6")
D4 = TwistedType("3D4")


def class_count(n):
    """Number of conjugacy classes of S_n, by brute force."""
    perms = list(permutations(range(n)))

    def compose(p, q):
        return tuple(p[q[i]] for i in range(n))

    def inverse(p):
        inv = [0] * n
        for i, x in enumerate(p):
            inv[x] = i
        return tuple(inv)

    seen, classes = set(), 0
    for p in perms:
        if p in seen:
            continue
        classes += 1
        seen.update(compose(compose(g, p), inverse(g)) for g in perms)
    return classes


def test_strata_lists():
    assert [str(e) for e in strata(D4)] == ["1_6", "1''_3", "2_2", "2_1", "1_0"]
    e6 = [str(e) for e in strata(E6)]
    assert len(e6) == 17 and e6[0] == "1_24" and e6[-1] == "1_0"
    assert "4_8" not in e6


def test_component_groups():
    assert str(component_group(E6, parse_label("12_4"))) == "S4"
    assert str(component_group(E6, parse_label("4_13"))) == "C2"
    assert str(component_group(D4, parse_label("2_1"))) == "S3"
    assert str(component_group(E6, UNIT)) == "C2"
    assert str(component_group(D4, UNIT)) == "1"
    with pytest.raises(UnknownStratum):
        component_group(E6, parse_label("4_8"))


def test_c_star_examples():
    assert c_star(E6, parse_label("12_4")).size == 5
    assert c_star(D4, parse_label("2_1")).size == 3
    assert c_star(E6, UNIT).size == 4
    assert c_star(D4, UNIT).size == 2
    assert c_star(E6, UNIT).elements() == ["C1:chi0", "C2:chi1", "C3:chi1", "C3:chi2"]


def test_c_star_classical_unsupported():
    with pytest.raises(UnsupportedType):
        c_star(TwistedType("2A", 4), UNIT)


@pytest.mark.parametrize("text, order, irr", [
    ("1", 1, 1), ("C2", 2, 2), ("C5", 5, 5), ("S3", 6, 3), ("S4", 24, 5), ("(C2)^3", 8, 8),
])
def test_component_group_parse(text, order, irr):
    group = ComponentGroup.parse(text)
    assert str(group) == text
    assert group.order == order and len(group.irreducibles()) == irr


def test_symmetric_irreducibles_match_class_count():
    assert len(ComponentGroup.parse("S3").irreducibles()) == class_count(3)
    assert len(ComponentGroup.parse("S4").irreducibles()) == class_count(4)


@given(st.integers(1, 2000))
def test_euler_phi_matches_gcd_count(m):
    assert euler_phi(m) == oracles.coprime_count(m)


@given(st.lists(st.integers(1, 30), min_size=1, max_size=4))
def test_special_unit_size(moduli):
    c = CStarDescriptor.special_unit(moduli)
    assert c.size == len(c.elements()) == sum(oracles.coprime_count(m) for m in moduli)


@pytest.mark.parametrize("tt, total", [(E6, 30), (D4, 8)])
def test_fiber_law(tt, total):
    report = verify_fiber_law(tt)
    assert report.passed, report.to_text()
    assert report.total == report.enumerated == total
    assert report.failing() == []
    assert report.summary().startswith("PASS")


def test_fiber_law_detects_truncated_row():
    table = golden_table(E6)
    i = next(i for i, r in enumerate(table.rows) if str(r.stratum) == "12_4")
    row = table.rows[i]
    bad = table.replace_row(i, dataclasses.replace(row, entries=row.entries[:-1]))
    report = verify_fiber_law(E6, bad)
    assert not report.passed
    assert [(r.stratum, r.fiber_size, r.c_star_size) for r in report.failing()] == [("12_4", 4, 5)]
    assert "FAIL" in report.to_text()


@pytest.mark.parametrize("tt", [E6, D4])
def test_fiber_bijection(tt):
    pairs = fiber_bijection(tt)
    assert len(pairs) == len({x for x, _, _ in pairs}) == len(set(pairs))
    unit = [(str(x), rep) for x, e, rep in pairs if e == UNIT]
    assert len(unit) == c_star(tt, UNIT).size
    assert unit[0] == ("1_0", "C1:chi0")
