"""Weyl group elements in canonical matrix form, and the 0-Hecke product.

An element is stored as the integer matrix of its action on
fundamental-weight coordinates, so equality of group elements is
equality of matrices regardless of which word produced them.  Length is
the number of positive roots sent to negative roots, which agrees with
reduced-word length.  ``reduced_word`` returns the lexicographically
smallest reduced word, obtained by greedily taking the smallest left
descent.

``demazure_product`` is the monoid product generated by
``x * s = x s`` when that increases length and ``x * s = x`` otherwise;
the simple generators are idempotent for it and the longest element is
absorbing.

>>> a2 = root_system("A2")
>>> w0 = longest_element(a2)
>>> (w0.length, reduced_word(w0))
(3, (1, 2, 1))
>>> demazure_product(w0, simple_element(a2, 2)) == w0
True
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from demazure.roots import (
    RootSystem,
    Weight,
    _check_index,
    _check_weight,
    positive_roots_fund,
    root_system,
)

Matrix = tuple[tuple[int, ...], ...]

__all__ = [
    "WeylElement",
    "identity",
    "simple_element",
    "from_word",
    "reduced_word",
    "all_reduced_words",
    "left_descents",
    "right_descents",
    "inverse",
    "longest_element",
    "longest_parabolic",
    "min_coset_rep",
    "demazure_fold",
    "demazure_product",
    "weyl_group",
]


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt) for ra in a
    )


def _mat_vec(m: Matrix, v: Sequence[int]) -> Weight:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


@dataclass(frozen=True)
class WeylElement:
    rs: RootSystem
    matrix: Matrix

    @cached_property
    def length(self) -> int:
        """Number of positive roots mapped to negative roots."""
        neg = _negative_root_set(self.rs)
        m = self.matrix
        return sum(1 for f in positive_roots_fund(self.rs) if _mat_vec(m, f) in neg)

    @property
    def is_identity(self) -> bool:
        return self.matrix == _identity_matrix(self.rs.rank)

    def apply(self, mu: Sequence[int]) -> Weight:
        """Image of a weight (fundamental coordinates) under this element."""
        return _mat_vec(self.matrix, _check_weight(self.rs, mu))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.rs != other.rs:
            raise ValueError("cannot multiply elements of different root systems")
        return WeylElement(self.rs, _mat_mul(self.matrix, other.matrix))

    def __repr__(self) -> str:
        word = ",".join(map(str, reduced_word(self))) or "e"
        return f"WeylElement({self.rs.name}, {word})"


@lru_cache(maxsize=None)
def _identity_matrix(rank: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))


@lru_cache(maxsize=None)
def _negative_root_set(rs: RootSystem) -> frozenset[Weight]:
    return frozenset(tuple(-x for x in f) for f in positive_roots_fund(rs))


@lru_cache(maxsize=None)
def _gen_matrices(rs: RootSystem) -> tuple[Matrix, ...]:
    # s_i is the identity except in column i, which holds e_i - alpha_i.
    gens = []
    for i in range(rs.rank):
        col = tuple(row[i] for row in rs.cartan)
        m = [list(row) for row in _identity_matrix(rs.rank)]
        for k in range(rs.rank):
            m[k][i] -= col[k]
        gens.append(tuple(tuple(row) for row in m))
    return tuple(gens)


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, _identity_matrix(rs.rank))


def simple_element(rs: RootSystem, i: int) -> WeylElement:
    _check_index(rs, i)
    return WeylElement(rs, _gen_matrices(rs)[i - 1])


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """Product s_{i1} s_{i2} ... s_{ik} for word (i1, ..., ik)."""
    m = _identity_matrix(rs.rank)
    gens = _gen_matrices(rs)
    for i in word:
        _check_index(rs, i)
        m = _mat_mul(m, gens[i - 1])
    return WeylElement(rs, m)


def right_descents(w: WeylElement) -> tuple[int, ...]:
    """Indices i with length(w s_i) < length(w), i.e. w(alpha_i) < 0."""
    neg = _negative_root_set(w.rs)
    out = []
    for i in range(1, w.rs.rank + 1):
        if _mat_vec(w.matrix, w.rs.simple_root(i)) in neg:
            out.append(i)
    return tuple(out)


def left_descents(w: WeylElement) -> tuple[int, ...]:
    """Indices i with length(s_i w) < length(w), i.e. alpha_i in w(negatives)."""
    flipped = {tuple(-x for x in _mat_vec(w.matrix, f)) for f in positive_roots_fund(w.rs)}
    out = []
    for i in range(1, w.rs.rank + 1):
        if w.rs.simple_root(i) in flipped:
            out.append(i)
    return tuple(out)


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """Lexicographically smallest reduced word for w.

    Greedy: the valid first letters of reduced words are exactly the left
    descents, so taking the smallest one at every step is optimal.
    """
    word = []
    cur = w
    while True:
        lds = left_descents(cur)
        if not lds:
            break
        i = lds[0]
        word.append(i)
        cur = simple_element(w.rs, i) * cur
    if not cur.is_identity:
        raise RuntimeError("descent recursion did not reach the identity")
    return tuple(word)


def all_reduced_words(w: WeylElement) -> Iterator[tuple[int, ...]]:
    """All reduced words for w, in lexicographic order."""
    if w.is_identity:
        yield ()
        return
    for i in left_descents(w):
        for rest in all_reduced_words(simple_element(w.rs, i) * w):
            yield (i, *rest)


def inverse(w: WeylElement) -> WeylElement:
    return from_word(w.rs, reversed(reduced_word(w)))


@lru_cache(maxsize=None)
def longest_element(rs: RootSystem) -> WeylElement:
    return _longest_parabolic_cached(rs, frozenset(range(1, rs.rank + 1)))


def longest_parabolic(rs: RootSystem, subset: Iterable[int]) -> WeylElement:
    """Longest element of the parabolic subgroup generated by {s_i : i in subset}."""
    s = frozenset(subset)
    for i in s:
        _check_index(rs, i)
    return _longest_parabolic_cached(rs, s)


@lru_cache(maxsize=None)
def _longest_parabolic_cached(rs: RootSystem, subset: frozenset[int]) -> WeylElement:
    # Greedy ascent inside the parabolic: keep appending the smallest
    # generator that still increases length; the unique element with no
    # ascent in the subset is the parabolic longest element.
    w = identity(rs)
    while True:
        rds = set(right_descents(w))
        i = next((i for i in sorted(subset) if i not in rds), None)
        if i is None:
            return w
        w = w * simple_element(rs, i)


def min_coset_rep(rs: RootSystem, subset: Iterable[int]) -> WeylElement:
    """Minimal-length representative w such that w0 = w_P * w with lengths adding.

    w_P is the parabolic longest element for the subset; the result is
    w_P^{-1} w0 (= w_P w0 since parabolic longest elements are involutions).
    """
    w_p = longest_parabolic(rs, subset)
    w0 = longest_element(rs)
    rep = w_p * w0
    if w_p.length + rep.length != w0.length:
        raise RuntimeError("coset representative lengths do not add up")
    return rep


def demazure_fold(w: WeylElement, letters: Iterable[int]) -> WeylElement:
    """Fold letters into w by x*s = xs if that is longer, else x."""
    rs = w.rs
    neg = _negative_root_set(rs)
    x = w
    for i in letters:
        _check_index(rs, i)
        # i is a right descent of x exactly when x(alpha_i) < 0
        if _mat_vec(x.matrix, rs.simple_root(i)) not in neg:
            x = x * simple_element(rs, i)
    return x


def demazure_product(w: WeylElement, v: WeylElement) -> WeylElement:
    """0-Hecke (Demazure) product of two group elements."""
    return demazure_fold(w, reduced_word(v))


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> tuple[WeylElement, ...]:
    """The full Weyl group, sorted by (length, matrix). Small ranks only."""
    gens = [simple_element(rs, i) for i in range(1, rs.rank + 1)]
    start = identity(rs)
    seen = {start.matrix: start}
    queue = [start]
    while queue:
        nxt = []
        for w in queue:
            for g in gens:
                x = w * g
                if x.matrix not in seen:
                    seen[x.matrix] = x
                    nxt.append(x)
        queue = nxt
    return tuple(sorted(seen.values(), key=lambda w: (w.length, w.matrix)))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
