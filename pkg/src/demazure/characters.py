"""Characters on the weight lattice and the Demazure operator calculus.

A character is a plain dict mapping weights (fundamental-coordinate
tuples) to nonzero integer coefficients.  All arithmetic is exact; the
coefficients are ordinary Python integers and may grow without bound.

The single-index operator sends e^mu, with m = <mu, alpha_i^vee>, to

    m >= 0:   e^mu (1 + e^{-alpha_i} + ... + e^{-m alpha_i})
    m == -1:  0
    m <= -2:  -e^mu (e^{alpha_i} + ... + e^{(-1-m) alpha_i})

extended linearly with cancellation.  It is idempotent, and composing
along a reduced word is independent of the choice of word.  A word is
applied with its last letter first, so ``demazure_character`` along a
reduced word of the longest element gives the full irreducible
character; sums of coefficients of intermediate results grow weakly as
letters extend the word.

Intermediate characters may hold negative coefficients; the final
result of ``demazure_character`` on a dominant weight is always
nonnegative and contains e^lambda with coefficient 1.

``weyl_dim`` (dimension product formula) and ``freudenthal_multiplicity``
are independent of the operator path and serve as cross-checks.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from demazure.roots import (
    RootSystem,
    Weight,
    _check_index,
    _check_weight,
    add_weights,
    dominant_conjugate,
    is_dominant,
    positive_roots_fund,
    rho,
    root_coordinates,
    root_pairing_data,
    root_system,
    sub_weights,
)
from demazure.weyl import WeylElement, from_word, longest_element, reduced_word

Character = dict[Weight, int]

__all__ = [
    "Character",
    "demazure_operator",
    "apply_demazure_word",
    "demazure_character",
    "demazure_dim",
    "weyl_character",
    "weight_multiplicity",
    "weyl_dim",
    "dual_weight",
    "freudenthal_multiplicity",
    "character_to_json",
    "character_from_json",
]


def demazure_operator(rs: RootSystem, i: int, char: Character) -> Character:
    """Apply the single-index operator for alpha_i to a character."""
    _check_index(rs, i)
    alpha = rs.simple_root(i)
    k = i - 1
    out: Character = {}
    get = out.get
    for mu, coeff in char.items():
        m = mu[k]
        if m >= 0:
            w = mu
            for _ in range(m + 1):
                out[w] = get(w, 0) + coeff
                w = sub_weights(w, alpha)
        elif m <= -2:
            w = mu
            for _ in range(-1 - m):
                w = add_weights(w, alpha)
                out[w] = get(w, 0) - coeff
    return {w: c for w, c in out.items() if c}


def apply_demazure_word(rs: RootSystem, word: Sequence[int], char: Character) -> Character:
    """Compose operators along a word, last letter applied first."""
    cur = char
    for i in reversed(tuple(word)):
        cur = demazure_operator(rs, i, cur)
    return cur


@lru_cache(maxsize=None)
def _demazure_items(
    rs: RootSystem, word: tuple[int, ...], lam: Weight
) -> tuple[tuple[Weight, int], ...]:
    char = apply_demazure_word(rs, word, {lam: 1})
    return tuple(sorted(char.items()))


def demazure_character(rs: RootSystem, word: Sequence[int], lam: Sequence[int]) -> Character:
    """Character of the Demazure module for a reduced word and dominant weight.

    Rejects non-reduced words (the word must have length equal to the
    length of the group element it spells) and non-dominant weights.
    """
    lam = _check_weight(rs, lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    word = tuple(word)
    if from_word(rs, word).length != len(word):
        raise ValueError(f"word {word} is not reduced")
    return dict(_demazure_items(rs, word, lam))


def demazure_dim(w: WeylElement, lam: Sequence[int]) -> int:
    """Dimension of the Demazure module: coefficient sum of its character."""
    lam = _check_weight(w.rs, lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    items = _demazure_items(w.rs, reduced_word(w), lam)
    return sum(c for _, c in items)


@lru_cache(maxsize=None)
def _w0_word(rs: RootSystem) -> tuple[int, ...]:
    return reduced_word(longest_element(rs))


def weyl_character(rs: RootSystem, lam: Sequence[int]) -> Character:
    """Character of the irreducible module with highest weight lam."""
    lam = _check_weight(rs, lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    return dict(_demazure_items(rs, _w0_word(rs), lam))


def weight_multiplicity(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> int:
    """Multiplicity of the weight mu in the irreducible module of highest weight lam."""
    lam = _check_weight(rs, lam)
    mu = _check_weight(rs, mu)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    return dict(_demazure_items(rs, _w0_word(rs), lam)).get(mu, 0)


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    """Dimension by the product formula over positive roots.

    prod <lam+rho, alpha^vee> / <rho, alpha^vee>; the half-norms cancel
    within each factor, so each factor is a ratio of integer dot
    products.  Raises if the accumulated product is not an integer,
    which would signal a broken root table.
    """
    lam = _check_weight(rs, lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    shifted = add_weights(lam, rho(rs))
    acc = Fraction(1)
    for dots, _halfnorm in root_pairing_data(rs):
        num = sum(d * x for d, x in zip(dots, shifted))
        den = sum(dots)  # dot with rho = all ones
        acc *= Fraction(num, den)
    if acc.denominator != 1:
        raise RuntimeError(f"{rs.name}: non-integral dimension product for {lam}")
    return int(acc)


def dual_weight(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """Highest weight of the dual module: -w0(lam)."""
    lam = _check_weight(rs, lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    image = longest_element(rs).apply(lam)
    out = tuple(-x for x in image)
    if not is_dominant(out):
        raise RuntimeError(f"{rs.name}: dual of {lam} came out non-dominant")
    return out


def _inner(rs: RootSystem, x: Sequence[int], y: Sequence[int]) -> Fraction:
    # (x, y) for fundamental-coordinate vectors, via simple-root coords of y.
    from demazure.roots import symmetrizer

    d = symmetrizer(rs)
    c = root_coordinates(rs, y)
    return sum((cj * dj * xj for cj, dj, xj in zip(c, d, x)), Fraction(0))


def freudenthal_multiplicity(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> int:
    """Weight multiplicity by the Freudenthal recursion.

    Independent of the operator machinery: walks weights from lam
    downward, so it serves as an oracle for ``weight_multiplicity``.
    """
    lam = _check_weight(rs, lam)
    mu = _check_weight(rs, mu)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    r = rho(rs)
    lam_norm = _inner(rs, add_weights(lam, r), add_weights(lam, r))
    pos_fund = positive_roots_fund(rs)
    pairing_data = root_pairing_data(rs)
    memo: dict[Weight, int] = {}

    def in_system(nu_dom: Weight) -> bool:
        coords = root_coordinates(rs, sub_weights(lam, nu_dom))
        return all(c.denominator == 1 and c >= 0 for c in coords)

    def mult(nu: Weight) -> int:
        nu_dom = dominant_conjugate(rs, nu)
        if nu_dom == lam:
            return 1
        cached = memo.get(nu_dom)
        if cached is not None:
            return cached
        if not in_system(nu_dom):
            memo[nu_dom] = 0
            return 0
        total = 0
        for alpha, (dots, _halfnorm) in zip(pos_fund, pairing_data):
            k = 1
            while True:
                target = tuple(x + k * a for x, a in zip(nu_dom, alpha))
                m_t = mult(target)
                if m_t == 0:
                    break
                total += m_t * sum(d * x for d, x in zip(dots, target))
                k += 1
        shifted = add_weights(nu_dom, r)
        denom = lam_norm - _inner(rs, shifted, shifted)
        value = Fraction(2 * total) / denom
        if value.denominator != 1 or value < 0:
            raise RuntimeError(f"{rs.name}: Freudenthal recursion broke at {nu_dom}")
        memo[nu_dom] = int(value)
        return int(value)

    return mult(mu)


def character_to_json(rs: RootSystem, char: Character) -> str:
    """Canonical JSON: terms sorted by weight, coefficients as decimal strings."""
    terms = [
        {"weight": list(w), "coeff": str(c)} for w, c in sorted(char.items())
    ]
    return json.dumps({"root_system": rs.name, "terms": terms}, separators=(",", ":"))


def character_from_json(text: str) -> tuple[RootSystem, Character]:
    obj = json.loads(text)
    rs = root_system(obj["root_system"])
    char: Character = {}
    for term in obj["terms"]:
        w = _check_weight(rs, term["weight"])
        char[w] = int(term["coeff"])
    return rs, char
