"""Finite root systems in fundamental-weight coordinates.

Weights are integer tuples in the fundamental-weight basis, so the
coroot pairing ``<mu, alpha_i^vee>`` is the coordinate read ``mu[i-1]``.
The Cartan matrix is stored with columns equal to the simple roots in
fundamental coordinates:

    cartan[i][j] == <alpha_{j+1}, alpha_{i+1}^vee>    (0-based storage)

so ``alpha_j = sum_i cartan[i][j] * omega_i``.  Simple indices in the
public API are 1-based throughout.

Node numbering follows the standard tables: chains for the classical
families, with the short root last in type B and the long root last in
type C; in G2 node 1 is short (so the first fundamental weight carries
the 7-dimensional module); in F4 nodes 1 and 2 are long, 3 and 4 short.

Positive roots are stored in simple-root coordinates.  They are produced
by closing the simple roots under all simple reflections and keeping the
vectors with nonnegative coordinates; the count is checked against the
classical formula for each family at construction time.

>>> a2 = root_system("A2")
>>> a2.cartan
((2, -1), (-1, 2))
>>> a2.positive_roots
((0, 1), (1, 0), (1, 1))
>>> simple_reflection(a2, 1, (1, 0))
(-1, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence

Weight = tuple[int, ...]

__all__ = [
    "Weight",
    "RootSystem",
    "build_root_system",
    "root_system",
    "pairing",
    "simple_reflection",
    "is_dominant",
    "rho",
    "add_weights",
    "sub_weights",
    "scale_weight",
    "positive_roots_fund",
    "symmetrizer",
    "inverse_cartan",
    "root_coordinates",
    "dominant_conjugate",
]

_RANK_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class RootSystem:
    """An irreducible finite root system, fixed at construction.

    ``cartan`` is stored as described in the module docstring and
    ``positive_roots`` holds simple-root coordinate tuples, sorted by
    height and then lexicographically.
    """

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def simple_root(self, i: int) -> Weight:
        """Fundamental coordinates of alpha_i (column i of the Cartan matrix)."""
        _check_index(self, i)
        return tuple(row[i - 1] for row in self.cartan)

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"


def _classical_positive_count(family: str, rank: int) -> int:
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    if family == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    if family == "F":
        return 24
    return 6  # G2


def _cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if family in ("A", "B", "C"):
        for i in range(rank - 1):
            if i == rank - 2 and family == "B":
                bond(i, i + 1, -1, -2)
            elif i == rank - 2 and family == "C":
                bond(i, i + 1, -2, -1)
            else:
                bond(i, i + 1)
    elif family == "D":
        for i in range(rank - 3):
            bond(i, i + 1)
        bond(rank - 3, rank - 2)
        bond(rank - 3, rank - 1)
    elif family == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    else:  # G
        bond(0, 1, -3, -1)
    return tuple(tuple(row) for row in a)


def _close_under_reflections(
    cartan: tuple[tuple[int, ...], ...], rank: int
) -> tuple[tuple[int, ...], ...]:
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(rank):
                p = sum(cartan[i][j] * c[j] for j in range(rank))
                r = list(c)
                r[i] -= p
                t = tuple(r)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    pos = [c for c in seen if all(x >= 0 for x in c)]
    pos.sort(key=lambda c: (sum(c), c))
    return tuple(pos)


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Build (and memoize) the root system of the given family and rank.

    Raises ValueError for families outside A-G or ranks outside the
    valid range of the family (A: n>=1, B: n>=2, C: n>=3, D: n>=4,
    E: 6..8, F: 4, G: 2).
    """
    fam = family.upper()
    if fam not in _RANK_RANGES:
        raise ValueError(f"unknown family {family!r}; expected one of A..G")
    lo, hi = _RANK_RANGES[fam]
    if rank < lo or (hi is not None and rank > hi):
        hi_text = "n" if hi is None else str(hi)
        raise ValueError(f"rank {rank} invalid for type {fam}; allowed {lo}..{hi_text}")
    cartan = _cartan_matrix(fam, rank)
    pos = _close_under_reflections(cartan, rank)
    expected = _classical_positive_count(fam, rank)
    if len(pos) != expected:
        raise RuntimeError(
            f"{fam}{rank}: positive-root closure produced {len(pos)} roots, "
            f"classical count is {expected}"
        )
    return RootSystem(fam, rank, cartan, pos)


def root_system(name: str) -> RootSystem:
    """Parse a compact name like "A2" or "E8" and build the system.

    >>> root_system("G2").positive_roots
    ((0, 1), (1, 0), (1, 1), (2, 1), (3, 1), (3, 2))
    """
    text = name.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise ValueError(f"cannot parse root system name {name!r}; expected e.g. 'B3'")
    return build_root_system(text[0], int(text[1:]))


def _check_index(rs: RootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple index {i} out of range 1..{rs.rank}")


def _check_weight(rs: RootSystem, mu: Sequence[int]) -> Weight:
    t = tuple(mu)
    if len(t) != rs.rank:
        raise ValueError(f"weight {t} has {len(t)} coordinates; {rs.name} has rank {rs.rank}")
    return t


def pairing(rs: RootSystem, mu: Sequence[int], i: int) -> int:
    """<mu, alpha_i^vee>: in fundamental coordinates this is mu[i-1]."""
    _check_index(rs, i)
    return _check_weight(rs, mu)[i - 1]


def simple_reflection(rs: RootSystem, i: int, mu: Sequence[int]) -> Weight:
    """s_i(mu) = mu - <mu, alpha_i^vee> * alpha_i."""
    t = _check_weight(rs, mu)
    _check_index(rs, i)
    m = t[i - 1]
    return tuple(x - m * row[i - 1] for x, row in zip(t, rs.cartan))


def is_dominant(mu: Sequence[int]) -> bool:
    return all(x >= 0 for x in mu)


def rho(rs: RootSystem) -> Weight:
    """Half the sum of positive roots: all fundamental coordinates 1."""
    return (1,) * rs.rank


def add_weights(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub_weights(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def scale_weight(n: int, a: Sequence[int]) -> Weight:
    return tuple(n * x for x in a)


@lru_cache(maxsize=None)
def positive_roots_fund(rs: RootSystem) -> tuple[Weight, ...]:
    """Positive roots in fundamental coordinates (cartan times simple coords)."""
    out = []
    for c in rs.positive_roots:
        out.append(tuple(sum(row[j] * c[j] for j in range(rs.rank)) for row in rs.cartan))
    return tuple(out)


@lru_cache(maxsize=None)
def symmetrizer(rs: RootSystem) -> tuple[int, ...]:
    """Minimal positive integers d with d_i * a_ij == d_j * a_ji.

    d_i is proportional to (alpha_i, alpha_i)/2, so short roots get the
    smallest value.  Computed by propagating along the Dynkin graph.
    """
    a = rs.cartan
    n = rs.rank
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(n):
            if i != j and a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * a[i][j] / a[j][i]
                queue.append(j)
    if any(x is None for x in d):
        raise RuntimeError(f"{rs.name}: Dynkin graph is not connected")
    scale = lcm(*(x.denominator for x in d))
    ints = [int(x * scale) for x in d]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    for i in range(n):
        for j in range(n):
            if ints[i] * a[i][j] != ints[j] * a[j][i]:
                raise RuntimeError(f"{rs.name}: Cartan matrix is not symmetrizable")
    return tuple(ints)


@lru_cache(maxsize=None)
def inverse_cartan(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of the Cartan matrix (maps fundamental to simple-root coords)."""
    n = rs.rank
    aug = [[Fraction(rs.cartan[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def root_coordinates(rs: RootSystem, mu: Sequence[int]) -> tuple[Fraction, ...]:
    """Simple-root coordinates of a weight given in fundamental coordinates."""
    t = _check_weight(rs, mu)
    inv = inverse_cartan(rs)
    return tuple(sum(row[j] * t[j] for j in range(rs.rank)) for row in inv)


@lru_cache(maxsize=None)
def root_pairing_data(rs: RootSystem) -> tuple[tuple[Weight, int], ...]:
    """Per positive root alpha: (dot vector, half-norm).

    The dot vector v has v_j = c_j * d_j so that (mu, alpha) = v . mu for
    mu in fundamental coordinates, and half-norm is (alpha, alpha)/2;
    the coroot pairing <mu, alpha^vee> is their quotient.
    """
    d = symmetrizer(rs)
    a = rs.cartan
    n = rs.rank
    out = []
    for c in rs.positive_roots:
        dots = tuple(cj * dj for cj, dj in zip(c, d))
        s = sum(c[j] * c[k] * d[k] * a[k][j] for j in range(n) for k in range(n))
        if s <= 0 or s % 2:
            raise RuntimeError(f"{rs.name}: bad norm for root {c}")
        out.append((dots, s // 2))
    return tuple(out)


def dominant_conjugate(rs: RootSystem, mu: Sequence[int]) -> Weight:
    """The unique dominant weight in the Weyl orbit of mu."""
    cur = _check_weight(rs, mu)
    while True:
        i = next((k for k, x in enumerate(cur) if x < 0), None)
        if i is None:
            return cur
        cur = simple_reflection(rs, i + 1, cur)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
