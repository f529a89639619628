"""Symbolic component groups c(E) and the representation sets c(E)*."""

from __future__ import annotations

import re
from math import gcd
from dataclasses import dataclass

__all__ = ["ComponentGroup", "CStarDescriptor", "euler_phi"]

_GROUP_RE = re.compile(r"^(?:1|C(\d+)|S([34])|\(C2\)\^(\d+))$")


@dataclass(frozen=True)
class ComponentGroup:
    kind: str  # trivial | cyclic | sym3 | sym4 | two_torus
    m: int = 1  # order for cyclic, number of factors for two_torus

    def __post_init__(self):
        if self.kind not in ("trivial", "cyclic", "sym3", "sym4", "two_torus"):
            raise ValueError(f"unknown component group kind {self.kind!r}")
        if self.kind == "cyclic" and self.m < 1:
            raise ValueError("cyclic order must be positive")
        if self.kind == "two_torus" and self.m < 0:
            raise ValueError("number of C2 factors must be nonnegative")

    @classmethod
    def trivial(cls) -> "ComponentGroup":
        return cls("trivial")

    @classmethod
    def cyclic(cls, m: int) -> "ComponentGroup":
        return cls("cyclic", m)

    @classmethod
    def parse(cls, text: str) -> "ComponentGroup":
        m = _GROUP_RE.match(text.strip())
        if not m:
            raise ValueError(f"cannot parse component group {text!r}")
        cyc, sym, tor = m.groups()
        if cyc:
            return cls("cyclic", int(cyc))
        if sym:
            return cls("sym" + sym)
        if tor:
            return cls("two_torus", int(tor))
        return cls("trivial")

    @property
    def order(self) -> int:
        return {"trivial": 1, "cyclic": self.m, "sym3": 6, "sym4": 24,
                "two_torus": 2 ** self.m}[self.kind]

    def irreducibles(self) -> list[str]:
        """Names of the irreducible representations over an algebraically closed field."""
        if self.kind == "trivial":
            return ["1"]
        if self.kind == "cyclic":
            return [f"chi{i}" for i in range(self.m)]
        if self.kind == "sym3":
            return ["1", "refl", "sgn"]
        if self.kind == "sym4":
            return ["1", "refl", "2dim", "refl*sgn", "sgn"]
        return ["chi(" + "".join(str((i >> b) & 1) for b in range(self.m)) + ")"
                for i in range(2 ** self.m)]

    def __str__(self) -> str:
        if self.kind == "trivial":
            return "1"
        if self.kind == "cyclic":
            return f"C{self.m}"
        if self.kind == "two_torus":
            return f"(C2)^{self.m}"
        return "S" + self.kind[-1]


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("m must be positive")
    result, n, q = m, m, 2
    while q * q <= n:
        if n % q == 0:
            while n % q == 0:
                n //= q
            result -= result // q
        q += 1
    if n > 1:
        result -= result // n
    return result


@dataclass(frozen=True)
class CStarDescriptor:
    """The set c(E)*: all irreducibles of c(E), or faithful characters of C_m."""

    mode: str  # "ordinary" or "special_unit"
    group: ComponentGroup | None = None
    moduli: tuple[int, ...] = ()

    @classmethod
    def ordinary(cls, group: ComponentGroup) -> "CStarDescriptor":
        return cls("ordinary", group=group)

    @classmethod
    def special_unit(cls, moduli) -> "CStarDescriptor":
        return cls("special_unit", moduli=tuple(moduli))

    @property
    def size(self) -> int:
        if self.mode == "ordinary":
            return len(self.group.irreducibles())
        return sum(euler_phi(m) for m in self.moduli)

    def elements(self) -> list[str]:
        if self.mode == "ordinary":
            return self.group.irreducibles()
        # faithful characters of C_m are chi_j with gcd(j, m) = 1
        return [f"C{m}:chi{j}" for m in self.moduli for j in range(m) if gcd(j, m) == 1]

    def __str__(self) -> str:
        if self.mode == "ordinary":
            return f"Irr({self.group})"
        return "+".join(f"C{m}^!" for m in self.moduli)
