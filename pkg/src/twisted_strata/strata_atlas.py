"""Strata labels, component groups c(E), the sets c(E)*, and the fibre law.

The fibre law says the tau-fibre over each stratum E is in bijection with
c(E)*.  At the unit stratum of 2E6 / 3D4 the set c(E)* is not Irr(c(E)) but
a union of faithful characters of small cyclic groups, which is why the
boxed group and the special moduli are stored separately.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .component_groups import ComponentGroup, CStarDescriptor, euler_phi
from .cuspidal_support import CSLabel, enumerate_cs_prime
from .errors import UnsupportedType
from .springer_tau import GoldenTable, fiber, golden_table
from .weyl_core import UNIT, IrrLabel, TwistedType

__all__ = [
    "ComponentGroup", "CStarDescriptor", "euler_phi", "strata",
    "component_group", "c_star", "FiberLawRow", "FiberLawReport",
    "verify_fiber_law", "fiber_bijection",
]

# moduli m whose faithful C_m-characters make up c(1)*
SPECIAL_UNIT_MODULI = {"2E6": (1, 2, 3), "3D4": (1, 2)}


def _table(tt: TwistedType, table: GoldenTable | None) -> GoldenTable:
    if not tt.is_exceptional:
        raise UnsupportedType(f"strata of {tt} need external Springer correspondence data")
    return table or golden_table(tt)


def strata(tt: TwistedType, table: GoldenTable | None = None) -> list[IrrLabel]:
    return [row.stratum for row in _table(tt, table).rows]


def component_group(tt: TwistedType, stratum: IrrLabel,
                    table: GoldenTable | None = None) -> ComponentGroup:
    return _table(tt, table).row_for(stratum).component_group


def c_star(tt: TwistedType, stratum: IrrLabel,
           table: GoldenTable | None = None) -> CStarDescriptor:
    group = component_group(tt, stratum, table)
    if stratum == UNIT:
        return CStarDescriptor.special_unit(SPECIAL_UNIT_MODULI[tt.family])
    return CStarDescriptor.ordinary(group)


@dataclass(frozen=True)
class FiberLawRow:
    stratum: str
    fiber_size: int
    c_star_size: int

    @property
    def passed(self) -> bool:
        return self.fiber_size == self.c_star_size


@dataclass
class FiberLawReport:
    tt: TwistedType
    rows: list[FiberLawRow]
    enumerated: int

    @property
    def total(self) -> int:
        return sum(r.c_star_size for r in self.rows)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows) and self.total == self.enumerated

    def failing(self) -> list[FiberLawRow]:
        return [r for r in self.rows if not r.passed]

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{verdict} {self.tt}: {len(self.rows)} strata, sum |c(E)*| = {self.total}, "
                f"|CS'| = {self.enumerated}")

    def to_records(self) -> list[dict]:
        return [dict(asdict(r), passed=r.passed) for r in self.rows]

    def to_text(self) -> str:
        lines = [f"{r.stratum}\t{r.fiber_size}\t{r.c_star_size}\t{'ok' if r.passed else 'FAIL'}"
                 for r in self.rows]
        return "\n".join(lines + [self.summary()]) + "\n"


def verify_fiber_law(tt: TwistedType, table: GoldenTable | None = None) -> FiberLawReport:
    """Compare each fibre size with |c(E)*| and the totals with |CS'|."""
    table = _table(tt, table)
    rows = [FiberLawRow(str(row.stratum), len(row.entries), c_star(tt, row.stratum, table).size)
            for row in table.rows]
    return FiberLawReport(tt, rows, len(enumerate_cs_prime(tt)))


def fiber_bijection(tt: TwistedType, table: GoldenTable | None = None
                    ) -> list[tuple[CSLabel, IrrLabel, str]]:
    """An explicit (non-canonical) bijection CS' -> union of the c(E)*.

    The i-th fibre entry is paired with the i-th element of c(E)* in the
    declared order of ``CStarDescriptor.elements``.
    """
    out = []
    for stratum in strata(tt, table):
        entries = fiber(tt, stratum, table=table)
        reps = c_star(tt, stratum, table).elements()
        if len(entries) != len(reps):
            raise ValueError(f"fibre over {stratum} has {len(entries)} entries, "
                             f"c(E)* has {len(reps)}")
        out.extend((x, stratum, rep) for x, rep in zip(entries, reps))
    return out
