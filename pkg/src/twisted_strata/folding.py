"""Brute-force computation of the fixed subgroup W^kappa.

Weyl group elements are integer matrices acting on the simple-root basis;
column j holds the coordinates of w(alpha_j).  A diagram automorphism
permutes the simple roots, and w is fixed iff its matrix is invariant under
the simultaneous permutation of rows and columns.

This module is an independent check of ``weyl_core.folded_type``: it never
consults the folding table.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import combinations

from .weyl_core import TwistedType, WeylType

Matrix = tuple[tuple[int, ...], ...]


def dynkin(tt: TwistedType) -> tuple[int, list[tuple[int, int]], tuple[int, ...]]:
    """Return (number of nodes, edges, automorphism as a node permutation)."""
    n = tt.n
    if tt.family == "2A":
        edges = [(i, i + 1) for i in range(n - 1)]
        perm = tuple(n - 1 - i for i in range(n))
    elif tt.family == "2D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        perm = tuple(range(n - 2)) + (n - 1, n - 2)
    elif tt.family == "3D4":
        edges = [(0, 1), (1, 2), (1, 3)]
        perm = (2, 1, 3, 0)
    else:
        # Bourbaki numbering 1..6 shifted to 0..5; node 2 hangs off node 4
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        perm = (5, 1, 4, 3, 2, 0)
    return n, edges, perm


def _cartan(n: int, edges) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        c[i][j] = c[j][i] = -1
    return c


def _reflection(i: int, cartan: list[list[int]]) -> Matrix:
    n = len(cartan)
    rows = [[int(r == c) for c in range(n)] for r in range(n)]
    for j in range(n):
        rows[i][j] -= cartan[i][j]
    return tuple(map(tuple, rows))


def _mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def generate(gens: list[Matrix], limit: int = 200_000) -> set[Matrix]:
    """Close ``gens`` under multiplication (BFS on the Cayley graph)."""
    start = _identity(len(gens[0]))
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for g in gens:
            x = _mul(g, w)
            if x not in seen:
                seen.add(x)
                if len(seen) > limit:
                    raise RuntimeError("group larger than limit")
                queue.append(x)
    return seen


def simple_reflections(tt: TwistedType) -> list[Matrix]:
    n, edges, _ = dynkin(tt)
    cartan = _cartan(n, edges)
    return [_reflection(i, cartan) for i in range(n)]


def is_fixed(w: Matrix, perm: tuple[int, ...]) -> bool:
    n = len(perm)
    return all(w[perm[i]][perm[j]] == w[i][j] for i in range(n) for j in range(n))


@lru_cache(maxsize=None)
def fixed_subgroup(tt: TwistedType) -> frozenset[Matrix]:
    """All elements of W commuting with the diagram automorphism.

    Enumerates the whole Weyl group, so only use it on small ranks.
    """
    _, _, perm = dynkin(tt)
    return frozenset(w for w in generate(simple_reflections(tt)) if is_fixed(w, perm))


def orbits(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        orbit, j = [], i
        while j not in seen:
            seen.add(j)
            orbit.append(j)
            j = perm[j]
        out.append(tuple(sorted(orbit)))
    return out


def orbit_longest_elements(tt: TwistedType) -> list[Matrix]:
    """Longest element of the parabolic subgroup of each automorphism orbit."""
    refl = simple_reflections(tt)
    _, _, perm = dynkin(tt)
    out = []
    for orbit in orbits(perm):
        for w in generate([refl[i] for i in orbit]):
            if all(all(w[r][i] <= 0 for r in range(len(w))) for i in orbit):
                out.append(w)
                break
    return out


def element_order(w: Matrix, cap: int = 24) -> int:
    ident = _identity(len(w))
    x, k = w, 1
    while x != ident:
        x = _mul(x, w)
        k += 1
        if k > cap:
            raise RuntimeError("element order exceeds cap")
    return k


def coxeter_matrix(gens: list[Matrix]) -> list[list[int]]:
    r = len(gens)
    m = [[1] * r for _ in range(r)]
    for i, j in combinations(range(r), 2):
        m[i][j] = m[j][i] = element_order(_mul(gens[i], gens[j]))
    return m


def identify(m: list[list[int]]) -> WeylType:
    """Name the finite Coxeter type of a connected linear Coxeter matrix."""
    r = len(m)
    if r == 1:
        return WeylType("B", 1)
    edges = {(i, j): m[i][j] for i, j in combinations(range(r), 2) if m[i][j] > 2}
    degree = [0] * r
    for i, j in edges:
        degree[i] += 1
        degree[j] += 1
    if len(edges) != r - 1 or max(degree) > 2:
        raise ValueError(f"not a linear diagram: {m}")
    labels = sorted(edges.values())
    if labels == [6] and r == 2:
        return WeylType("G2")
    if labels.count(4) == 1 and all(v in (3, 4) for v in labels):
        (i, j), = [e for e, v in edges.items() if v == 4]
        if degree[i] == 1 or degree[j] == 1:
            return WeylType("B", r)
        if r == 4:
            return WeylType("F4")
    if all(v == 3 for v in labels):
        return WeylType("A", r)
    raise ValueError(f"unrecognised Coxeter matrix {m}")


@lru_cache(maxsize=None)
def brute_force_folded_type(tt: TwistedType) -> WeylType:
    """Type of W^kappa read off from the orbit-longest-element generators."""
    return identify(coxeter_matrix(orbit_longest_elements(tt)))
