"""Cuspidal supports, relative Weyl groups and the character-sheaf labels.

A unipotent character sheaf on the twisted component is named by a triple
(J, E', A'): a cuspidal subset J (recorded here by the type of its Levi), a
character E' of the relative Weyl group N_W(iota W_J)/W_J, and one of the
cuspidal objects on the Levi, identified by its d-value and an index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import ParseError, UnknownD, UnknownLabel, UnknownLevi, UnsupportedType
from .weyl_core import (
    TRIVIAL, IrrLabel, PartitionLabel, TwistedType, WeylType, folded_type,
    irr_labels, parse_label,
)

__all__ = [
    "TwistedType", "DValue", "CuspidalLevi", "CSLabel", "cuspidal_levis",
    "enumerate_cs2", "enumerate_cs_prime", "cuspidal_count",
    "unipotent_support_case", "find_levi", "render_cs_label", "parse_cs_label",
    "render_relative_char",
]


class DValue(NamedTuple):
    d: int | None  # None: not determined for classical cuspidal objects
    count: int
    case: str  # "i" or "ii"


@dataclass(frozen=True)
class CuspidalLevi:
    kind: str  # "empty", "proper" or "full"
    levi_type: WeylType | None
    relative_type: WeylType
    d_values: tuple[DValue, ...]
    k: int | None = None  # staircase / square parameter for classical types

    @property
    def name(self) -> str:
        return "" if self.levi_type is None else self.levi_type.name

    @property
    def is_empty(self) -> bool:
        return self.kind == "empty"

    def __str__(self) -> str:
        return "(empty)" if self.is_empty else self.name


@dataclass(frozen=True)
class CSLabel:
    levi: CuspidalLevi
    relative_char: IrrLabel
    d: int | None = 0
    index: int = 1

    @property
    def is_plain(self) -> bool:
        return self.levi.is_empty

    @property
    def count(self) -> int:
        for dv in self.levi.d_values:
            if dv.d == self.d:
                return dv.count
        return 0

    def __str__(self) -> str:
        return render_cs_label(self)


_EMPTY_D = (DValue(0, 1, "i"),)


@lru_cache(maxsize=None)
def _levis(tt: TwistedType) -> tuple[CuspidalLevi, ...]:
    out = [CuspidalLevi("empty", None, folded_type(tt), _EMPTY_D)]
    n = tt.n
    if tt.family == "2A":
        k = 2
        while k * (k + 1) // 2 - 1 <= n:
            m = k * (k + 1) // 2 - 1
            if m % 2 == n % 2:
                out.append(CuspidalLevi("proper", WeylType("A", m),
                                        WeylType("B", (n + 1 - k * (k + 1) // 2) // 2),
                                        (DValue(None, 1, "i"),), k))
            k += 1
    elif tt.family == "2D":
        # k = 1 would reproduce the empty datum, so odd k starts at 3
        k = 3
        while k * k <= n:
            out.append(CuspidalLevi("proper", WeylType("D", k * k), WeylType("B", n - k * k),
                                    (DValue(None, 1, "i"),), k))
            k += 2
    elif tt.family == "2E6":
        out.append(CuspidalLevi("proper", WeylType("A", 5), WeylType("A", 1), _EMPTY_D))
        out.append(CuspidalLevi("full", WeylType("E6"), TRIVIAL,
                                (DValue(4, 1, "i"), DValue(0, 2, "ii"))))
    else:
        out.append(CuspidalLevi("full", WeylType("D", 4), TRIVIAL,
                                (DValue(1, 1, "i"), DValue(0, 1, "ii"))))
    return tuple(out)


def cuspidal_levis(tt: TwistedType) -> list[CuspidalLevi]:
    """Cuspidal data of ``tt``: the empty one first, then by Levi rank."""
    return list(_levis(tt))


def find_levi(tt: TwistedType, levi: CuspidalLevi | str) -> CuspidalLevi:
    """Look up a levi of ``tt`` by object or by name (``""`` for the empty one)."""
    for candidate in _levis(tt):
        if candidate == levi or candidate.name == levi:
            return candidate
    raise UnknownLevi(f"{levi} is not a cuspidal datum of {tt}")


def enumerate_cs2(tt: TwistedType) -> list[tuple[CuspidalLevi, IrrLabel]]:
    if tt.is_exceptional:
        raise UnsupportedType(f"CS'' is only defined for classical types, not {tt}")
    return [(levi, e) for levi in _levis(tt) for e in irr_labels(levi.relative_type)]


@lru_cache(maxsize=None)
def _cs_prime(tt: TwistedType) -> tuple[CSLabel, ...]:
    return tuple(CSLabel(levi, e, dv.d, i)
                 for levi in _levis(tt)
                 for e in irr_labels(levi.relative_type)
                 for dv in levi.d_values
                 for i in range(1, dv.count + 1))


def enumerate_cs_prime(tt: TwistedType) -> list[CSLabel]:
    return list(_cs_prime(tt))


def cuspidal_count(tt: TwistedType, levi: CuspidalLevi | str, d: int) -> int:
    """Number of cuspidal objects with the given d-value on ``levi``."""
    levi = find_levi(tt, levi)
    if any(dv.d is None for dv in levi.d_values):
        raise UnknownD(f"d-values of the {levi} cuspidal datum of {tt} are not determined")
    return sum(dv.count for dv in levi.d_values if dv.d == d)


def unipotent_support_case(tt: TwistedType, d: int) -> str:
    """Whether the d-cuspidals of the full group have unipotent support ("i") or not ("ii")."""
    if not tt.is_exceptional:
        raise UnsupportedType("support cases are tabulated for 2E6 and 3D4 only")
    full = _levis(tt)[-1]
    for dv in full.d_values:
        if dv.d == d:
            return dv.case
    raise UnknownD(f"no cuspidal object of {tt} has d = {d}")


# SURFACE SYNTAX
# --------------

def render_relative_char(levi: CuspidalLevi, e: IrrLabel) -> str:
    t = levi.relative_type
    if t.is_trivial:
        return "1"
    if t == WeylType("A", 1):
        return "1" if e == PartitionLabel((2,)) else "eps"
    return str(e)


def parse_relative_char(levi: CuspidalLevi, text: str) -> IrrLabel:
    t = levi.relative_type
    text = text.strip()
    if t.is_trivial and text == "1":
        return irr_labels(t)[0]
    if t == WeylType("A", 1) and text in ("1", "eps", "ε"):
        return PartitionLabel((2,) if text == "1" else (1, 1))
    return parse_label(text, t)


def render_cs_label(x: CSLabel) -> str:
    if x.levi.is_empty:
        return str(x.relative_char)
    body = [x.levi.name, render_relative_char(x.levi, x.relative_char)]
    if x.d is not None:
        body.append(str(x.d))
    suffix = f"#{x.index}" if x.count > 1 else ""
    return "(" + ",".join(body) + ")" + suffix


def _split_top(text: str, start: int, stop: int) -> list[tuple[int, str]]:
    """Split on commas outside square brackets; keeps start offsets."""
    out, depth, begin = [], 0, start
    for pos in range(start, stop):
        ch = text[pos]
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0:
            out.append((begin, text[begin:pos]))
            begin = pos + 1
    out.append((begin, text[begin:stop]))
    return out


def parse_cs_label(tt: TwistedType, text: str) -> CSLabel:
    """Parse ``(A5,eps,0)``, ``(E6,1,0)#2``, ``(A2,[1|])`` or a plain label."""
    text = text.strip()
    levis = _levis(tt)
    if not text.startswith("("):
        return CSLabel(levis[0], parse_label(text, levis[0].relative_type))
    close = text.rfind(")")
    if close < 0:
        raise ParseError("missing ')'", text, len(text))
    index = 1
    explicit_index = False
    tail = text[close + 1:].strip()
    if tail:
        if not tail.startswith("#") or not tail[1:].isdigit():
            raise ParseError("expected '#<index>' after ')'", text, close + 1)
        index, explicit_index = int(tail[1:]), True
    fields = _split_top(text, 1, close)
    if len(fields) not in (2, 3):
        raise ParseError("expected (levi,char) or (levi,char,d)", text, 1)
    (_, levi_name), (char_pos, char_text) = fields[0], fields[1]
    levi = find_levi(tt, levi_name.strip().replace("_", ""))
    if levi.is_empty:
        raise UnknownLevi(f"empty levi must be written as a plain label in {text!r}")
    e = parse_relative_char(levi, char_text)
    d: int | None = None
    if len(fields) == 3:
        d_pos, d_text = fields[2]
        if not d_text.strip().isdigit():
            raise ParseError("expected integer d", text, d_pos)
        d = int(d_text)
    label = CSLabel(levi, e, d, index)
    count = label.count
    if count == 0:
        raise UnknownLabel(f"{levi.name} has no cuspidal object with d = {d} in {tt}")
    if not 1 <= index <= count or (count > 1 and not explicit_index):
        raise UnknownLabel(f"{text!r} needs an index in 1..{count}")
    return label
