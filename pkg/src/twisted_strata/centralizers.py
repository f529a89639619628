"""Types of Z^0(s) for the semisimple part s of a cuspidal support.

Classical cases are keyed by the staircase parameter k (2A) or the odd
square root k of the Levi rank (2D); exceptional cases by the d-value.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidParam
from .reports import Report
from .weyl_core import TwistedType, folded_type

__all__ = ["RClass", "RootTypeString", "FULL_GROUP", "centralizer_type",
           "centralizer_rank_check", "classical_ab", "even_sum", "odd_sum"]


class RClass(enum.Enum):
    CHAR2 = "2"
    CHAR3 = "3"
    GENERIC = "generic"

    @classmethod
    def parse(cls, text: str | int) -> "RClass":
        text = str(text).strip().lower()
        if text == "2":
            return cls.CHAR2
        if text == "3":
            return cls.CHAR3
        if text in ("generic", "0") or (text.isdigit() and int(text) > 3):
            return cls.GENERIC
        raise InvalidParam(f"unknown characteristic class {text!r}")


@dataclass(frozen=True)
class RootTypeString:
    factors: tuple[tuple[str, int], ...] = ()
    full_group: bool = False

    def __str__(self) -> str:
        if self.full_group:
            return "FULL"
        # B0 and D0 are the trivial group
        shown = [f"{fam}{rank}" for fam, rank in self.factors
                 if not (rank == 0 and fam in ("B", "D"))]
        return "x".join(shown)

    @property
    def rank(self) -> int:
        return sum(rank for _, rank in self.factors)


FULL_GROUP = RootTypeString(full_group=True)


def _rts(*factors: str) -> RootTypeString:
    return RootTypeString(tuple((f[0], int(f[1:])) for f in factors))


def even_sum(top: int) -> int:
    """2 + 4 + ... + top (empty sum is 0)."""
    return sum(range(2, top + 1, 2))


def odd_sum(top: int) -> int:
    """1 + 3 + ... + top (empty sum is 0)."""
    return sum(range(1, top + 1, 2))


def classical_ab(family: str, k: int) -> tuple[str, int, str, int]:
    """(first family, a, second family, b) for the good-characteristic case."""
    if family == "2D":
        twice = k * k - 1
        if twice % 2:
            raise InvalidParam(f"k^2 - 1 must be even, got k = {k}")
        return "B", twice // 2, "B", twice // 2
    r = k % 4
    if r == 0:
        two_a, two_b, second = even_sum(k), odd_sum(k - 1), "D"
    elif r == 1:
        two_a, two_b, second = even_sum(k - 1), odd_sum(k) - 1, "B"
    elif r == 2:
        two_a, two_b, second = even_sum(k), odd_sum(k - 1) - 1, "B"
    else:
        two_a, two_b, second = even_sum(k - 1), odd_sum(k), "D"
    if two_a % 2 or two_b % 2:
        raise InvalidParam(f"non-integral a or b for k = {k}")
    return "C", two_a // 2, second, two_b // 2


def _family(tt: TwistedType | str) -> str:
    if isinstance(tt, TwistedType):
        return tt.family
    text = str(tt).strip().upper()
    if text in ("2A", "2D", "2E6", "3D4"):
        return text
    return TwistedType.parse(text).family


def _check_classical_k(tt: TwistedType | str, family: str, k: int) -> None:
    if family == "2A":
        ok = k >= 2
    elif family == "2D":
        ok = k >= 3 and k % 2 == 1
    else:
        raise InvalidParam(f"unknown family {family!r}")
    if ok and isinstance(tt, TwistedType):
        size = k * (k + 1) // 2 - 1 if family == "2A" else k * k
        ok = size <= tt.n and (family == "2D" or size % 2 == tt.n % 2)
    if not ok:
        raise InvalidParam(f"k = {k} is not a cuspidal parameter of {tt}")


_EXCEPTIONAL = {
    ("2E6", 4, RClass.GENERIC): _rts("F4"),
    ("2E6", 4, RClass.CHAR3): _rts("F4"),
    ("2E6", 4, RClass.CHAR2): FULL_GROUP,
    ("2E6", 0, RClass.GENERIC): _rts("A2", "A2", "A2"),
    ("2E6", 0, RClass.CHAR2): _rts("A2", "A2", "A2"),
    ("2E6", 0, RClass.CHAR3): _rts("F4"),
    ("3D4", 1, RClass.GENERIC): _rts("G2"),
    ("3D4", 1, RClass.CHAR2): _rts("G2"),
    ("3D4", 1, RClass.CHAR3): FULL_GROUP,
    ("3D4", 0, RClass.GENERIC): _rts("A1", "A1", "A1", "A1"),
    ("3D4", 0, RClass.CHAR3): _rts("A1", "A1", "A1", "A1"),
    ("3D4", 0, RClass.CHAR2): _rts("G2"),
}


def centralizer_type(tt: TwistedType | str, param: int, r: RClass | str = RClass.GENERIC
                     ) -> RootTypeString:
    """Type of Z^0(s).  ``param`` is k for 2A/2D and d for 2E6/3D4.

    ``tt`` may be a TwistedType (k is then checked against its rank) or a
    bare family name ``2A`` / ``2D`` / ``2E6`` / ``3D4``.
    """
    if not isinstance(r, RClass):
        r = RClass.parse(r)
    family = _family(tt)
    if family in ("2E6", "3D4"):
        try:
            return _EXCEPTIONAL[(family, param, r)]
        except KeyError:
            raise InvalidParam(f"d = {param} is not a cuspidal d-value of {family}") from None
    _check_classical_k(tt, family, param)
    if r is RClass.CHAR2:
        return FULL_GROUP
    f1, a, f2, b = classical_ab(family, param)
    return RootTypeString(((f1, a), (f2, b)))


def centralizer_rank_check(tt: TwistedType | str, k: int) -> Report:
    """Recompute a, b for a classical parameter and audit them.

    Checks that a and b are integers and that a + b equals the rank of the
    folded Weyl group of the group on which the cuspidal lives (2A with
    n = k(k+1)/2 - 1, or 2D with n = k^2).
    """
    family = _family(tt)
    report = Report()
    scope = f"{family} k={k}"
    try:
        _check_classical_k(tt, family, k)
    except InvalidParam as exc:
        report.add("centralizer-param", scope, False, str(exc))
        return report
    if family == "2A":
        evens = even_sum(k if k % 2 == 0 else k - 1)
        odds = odd_sum(k if k % 2 == 1 else k - 1)
        two_b = odds if k % 4 in (0, 3) else odds - 1
        integral = evens % 2 == 0 and two_b % 2 == 0
        n = k * (k + 1) // 2 - 1
    else:
        two_a = k * k - 1
        integral = two_a % 2 == 0
        n = k * k
    report.add("centralizer-integrality", scope, integral)
    if integral:
        _, a, _, b = classical_ab(family, k)
        target = folded_type(TwistedType(family, n)).rank
        report.add("centralizer-rank", scope, a + b == target,
                   f"a={a}, b={b}, a+b={a + b}, folded rank {target}")
    return report
