"""Weyl group types, labels for their irreducible characters, and folding.

Three kinds of character label are used:

* ``PartitionLabel``  -- a partition of m+1, for type A_m;
* ``BipartitionLabel`` -- an ordered pair of partitions of total size m, for
  type B_m (B_0 is the trivial group, labelled by ``((), ())``);
* ``NamedLabel`` -- ``<degree><primes>_<b>`` for the exceptional groups F4
  and G2, e.g. ``8''_9``.  The primes only tell apart characters with equal
  degree and b-value; they are opaque here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Union

from .errors import ParseError, UnknownLabel, UnsupportedType

__all__ = [
    "TwistedType", "WeylType", "PartitionLabel", "BipartitionLabel",
    "NamedLabel", "IrrLabel", "UNIT", "partitions", "bipartitions",
    "irr_labels", "folded_type", "parse_label", "render_label", "weyl_order",
    "F4_ALPHABET", "G2_ALPHABET",
]

Partition = tuple[int, ...]


# TYPES
# -----

_TWISTED_FAMILIES = {"2A": 2, "2D": 2, "2E6": 2, "3D4": 3}
_TWISTED_RE = re.compile(r"^\s*([23])\s*([ADE])\s*(?::?\s*(\d+))?\s*$", re.I)


@dataclass(frozen=True)
class TwistedType:
    """A quasi-simple group together with a diagram automorphism of order p.

    ``family`` is one of ``2A``, ``2D``, ``2E6``, ``3D4``; ``n`` is the rank
    of the underlying (untwisted) root system.
    """

    family: str
    n: int | None = None

    def __post_init__(self):
        if self.family not in _TWISTED_FAMILIES:
            raise UnsupportedType(f"unknown twisted family {self.family!r}")
        fixed = {"2E6": 6, "3D4": 4}.get(self.family)
        if fixed is not None:
            if self.n not in (None, fixed):
                raise UnsupportedType(f"{self.family} has rank {fixed}, not {self.n}")
            object.__setattr__(self, "n", fixed)
        elif self.n is None:
            raise UnsupportedType(f"{self.family} needs a rank")
        elif self.family == "2A" and self.n < 2:
            raise UnsupportedType(f"2A needs n >= 2, got {self.n}")
        elif self.family == "2D" and self.n < 4:
            raise UnsupportedType(f"2D needs n >= 4, got {self.n}")

    @property
    def p(self) -> int:
        return _TWISTED_FAMILIES[self.family]

    @property
    def is_exceptional(self) -> bool:
        return self.family in ("2E6", "3D4")

    @property
    def is_classical(self) -> bool:
        return not self.is_exceptional

    @classmethod
    def parse(cls, text: str) -> "TwistedType":
        """Parse ``2A:5``, ``2D:9``, ``2E6`` or ``3D4``."""
        m = _TWISTED_RE.match(text)
        if not m:
            raise UnsupportedType(f"cannot parse group {text!r}")
        p, letter, num = m.group(1), m.group(2).upper(), m.group(3)
        if letter == "A" or (letter == "D" and p == "2"):
            if num is None:
                raise UnsupportedType(f"group {text!r} needs a rank, e.g. {p}{letter}:5")
            return cls(p + letter, int(num))
        return cls(p + letter + (num or ""))

    def __str__(self) -> str:
        if self.is_exceptional:
            return self.family
        return f"{self.family}:{self.n}"


_WEYL_FIXED_RANK = {"F4": 4, "G2": 2, "E6": 6, "Trivial": 0}


@dataclass(frozen=True, order=True)
class WeylType:
    family: str
    rank: int = 0

    def __post_init__(self):
        if self.family in _WEYL_FIXED_RANK:
            object.__setattr__(self, "rank", _WEYL_FIXED_RANK[self.family])
        elif self.family not in ("A", "B", "D"):
            raise UnsupportedType(f"unknown Weyl family {self.family!r}")
        elif self.rank < 0 or (self.rank == 0 and self.family != "B"):
            raise UnsupportedType(f"invalid rank {self.rank} for {self.family}")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0

    @property
    def name(self) -> str:
        if self.family in _WEYL_FIXED_RANK:
            return self.family
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.name


TRIVIAL = WeylType("Trivial")


def weyl_order(t: WeylType) -> int:
    """Order of the Weyl group of type ``t``."""
    m = t.rank
    if t.family == "A":
        return factorial(m + 1)
    if t.family == "B":
        return 2**m * factorial(m)
    if t.family == "D":
        return 2 ** (m - 1) * factorial(m)
    return {"F4": 1152, "G2": 12, "E6": 51840, "Trivial": 1}[t.family]


# LABELS
# ------

@dataclass(frozen=True, order=True)
class PartitionLabel:
    parts: Partition

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"


@dataclass(frozen=True, order=True)
class BipartitionLabel:
    left: Partition
    right: Partition

    @property
    def size(self) -> int:
        return sum(self.left) + sum(self.right)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.left)) + "|" + ",".join(map(str, self.right)) + "]"


@dataclass(frozen=True, order=True)
class NamedLabel:
    degree: int
    b: int
    prime: int = 0  # 0, 1 or 2 apostrophes

    def __post_init__(self):
        if self.degree < 1 or self.b < 0 or self.prime not in (0, 1, 2):
            raise ValueError(f"invalid named label {self.degree}/{self.b}/{self.prime}")

    def __str__(self) -> str:
        return f"{self.degree}{chr(39) * self.prime}_{self.b}"


IrrLabel = Union[PartitionLabel, BipartitionLabel, NamedLabel]

#: the unit representation 1_0 of F4 / G2
UNIT = NamedLabel(1, 0)
_B0_UNIT = BipartitionLabel((), ())


def render_label(label: IrrLabel) -> str:
    return str(label)


# the plain characters of the twisted E6 / D4 tables, grouped by degree
_F4_SOURCE = """
    1_0 1'_12 1''_12 1_24
    2'_4 2''_4 2'_16 2''_16
    4_1 4''_7 4'_7 4_8 4_13
    6'_6 6''_6
    8'_3 8''_3 8'_9 8''_9
    9_2 9'_6 9''_6 9_10
    12_4
    16_5
"""
_G2_SOURCE = "1_0 1'_3 1''_3 1_6 2_1 2_2"

_NAMED_RE = re.compile(r"(\d+)('{0,2})_(\d+)$")


def _parse_named_raw(text: str, start: int = 0) -> NamedLabel:
    m = _NAMED_RE.match(text, start)
    if not m:
        # report the first character that breaks the grammar
        pos = start
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected degree digits", text, pos)
        primes = 0
        while pos < len(text) and text[pos] == "'":
            pos += 1
            primes += 1
        if primes > 2:
            raise ParseError("at most two primes allowed", text, pos - 1)
        if pos >= len(text) or text[pos] != "_":
            raise ParseError("expected '_'", text, pos)
        pos += 1
        if pos >= len(text) or not text[pos].isdigit():
            raise ParseError("expected b digits", text, pos)
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        raise ParseError("trailing characters", text, pos)
    degree, primes, b = m.groups()
    if int(degree) < 1:
        raise ParseError("degree must be positive", text, start)
    return NamedLabel(int(degree), int(b), len(primes))


def _alphabet(source: str) -> tuple[NamedLabel, ...]:
    return tuple(sorted(_parse_named_raw(tok) for tok in source.split()))


F4_ALPHABET: tuple[NamedLabel, ...] = _alphabet(_F4_SOURCE)
G2_ALPHABET: tuple[NamedLabel, ...] = _alphabet(_G2_SOURCE)


# ENUMERATION
# -----------

@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> partitions(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n))


def bipartitions(n: int) -> list[tuple[Partition, Partition]]:
    """Ordered pairs of partitions of total size ``n``.

    Ordered by decreasing size of the first component, then by the
    reverse-lexicographic order of each component.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [(a, b) for j in range(n, -1, -1) for a in _partitions(j, j)
            for b in _partitions(n - j, n - j)]


def irr_labels(t: WeylType) -> list[IrrLabel]:
    if t.family == "A":
        return [PartitionLabel(p) for p in partitions(t.rank + 1)]
    if t.family == "B":
        return [BipartitionLabel(a, b) for a, b in bipartitions(t.rank)]
    if t.family == "F4":
        return list(F4_ALPHABET)
    if t.family == "G2":
        return list(G2_ALPHABET)
    if t.family == "Trivial":
        return [_B0_UNIT]
    raise UnsupportedType(f"irreducible characters of {t} are not tabulated")


def folded_type(tt: TwistedType) -> WeylType:
    """Type of the fixed subgroup of W under the diagram automorphism."""
    if tt.family == "2A":
        return WeylType("B", (tt.n + 1) // 2)
    if tt.family == "2D":
        return WeylType("B", tt.n - 1)
    if tt.family == "2E6":
        return WeylType("F4")
    return WeylType("G2")


# PARSING
# -------

_PRIME_FOLD = str.maketrans({"′": "'", "″": "''", "’": "'"})


def _normalize(text: str) -> str:
    return text.translate(_PRIME_FOLD).strip()


def _parse_parts(text: str, start: int, stop: int) -> Partition:
    body = text[start:stop]
    if not body.strip():
        return ()
    parts = []
    pos = start
    for chunk in body.split(","):
        stripped = chunk.strip()
        if not stripped.isdigit() or int(stripped) == 0:
            raise ParseError("expected a positive part", text, pos)
        value = int(stripped)
        if parts and value > parts[-1]:
            raise ParseError("parts must be weakly decreasing", text, pos)
        parts.append(value)
        pos += len(chunk) + 1
    return tuple(parts)


def parse_label(s: str, weyl_type: WeylType | None = None) -> IrrLabel:
    """Parse label text; prime marks may be ASCII or Unicode.

    With ``weyl_type`` given, the label must name a character of that group.
    Without it a named label must belong to the F4 or G2 alphabet.
    """
    text = _normalize(s)
    if not text:
        raise ParseError("empty label", text, 0)
    if text[0] == "[":
        close = text.find("]")
        if close < 0:
            raise ParseError("missing ']'", text, len(text))
        if close != len(text) - 1:
            raise ParseError("trailing characters", text, close + 1)
        bar = text.find("|")
        if bar >= 0:
            if text.find("|", bar + 1) >= 0:
                raise ParseError("more than one '|'", text, text.find("|", bar + 1))
            label: IrrLabel = BipartitionLabel(_parse_parts(text, 1, bar),
                                               _parse_parts(text, bar + 1, close))
        else:
            label = PartitionLabel(_parse_parts(text, 1, close))
    else:
        label = _parse_named_raw(text)
    _check_membership(label, weyl_type)
    return label


def _check_membership(label: IrrLabel, t: WeylType | None) -> None:
    if t is None:
        if isinstance(label, NamedLabel) and label not in F4_ALPHABET and label not in G2_ALPHABET:
            raise UnknownLabel(f"{label} is not an F4 or G2 character")
        return
    if isinstance(label, PartitionLabel):
        ok = t.family == "A" and label.size == t.rank + 1
    elif isinstance(label, BipartitionLabel):
        ok = (t.family == "B" and label.size == t.rank) or (t.is_trivial and label.size == 0)
    else:
        ok = t.family in ("F4", "G2") and label in irr_labels(t)
    if not ok:
        raise UnknownLabel(f"{label} is not an irreducible character of {t}")
