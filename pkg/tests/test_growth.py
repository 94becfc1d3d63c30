import pytest

from demazure import (
    DilationSequence,
    dimension_sequence,
    finite_differences,
    from_word,
    growth_degree,
    identity,
    longest_element,
    rho,
    root_system,
    weyl_group,
)

A2 = root_system("A2")


def test_finite_differences():
    assert finite_differences((1, 4, 9, 16)) == (3, 5, 7)
    assert finite_differences((3, 5, 7)) == (2, 2)
    assert finite_differences((5,)) == ()


def test_frozen_quadratic_sequence():
    # dim V_{s1 s2}(n(1,1)) = (n+1)(3n+2)/2
    w = from_word(A2, (1, 2))
    seq = dimension_sequence(w, (1, 1), 6)
    assert seq.values == (1, 5, 12, 22, 35, 51, 70)
    assert all(2 * v == (n + 1) * (3 * n + 2) for n, v in enumerate(seq.values))
    assert growth_degree(seq) == 2 == w.length


def test_cubic_full_flag():
    w0 = longest_element(A2)
    seq = dimension_sequence(w0, (1, 1), 7)
    assert seq.values == tuple((n + 1) ** 3 for n in range(8))
    assert growth_degree(seq) == 3


def test_identity_is_constant():
    seq = dimension_sequence(identity(A2), (2, 3), 5)
    assert set(seq.values) == {1}
    assert growth_degree(seq) == 0


def test_singular_weight_drops_degree():
    # <omega_2, alpha_1^vee> = 0, so s1 contributes nothing at omega_2
    s1 = from_word(A2, (1,))
    seq = dimension_sequence(s1, (0, 1), 5)
    assert set(seq.values) == {1}
    assert growth_degree(seq) == 0 < s1.length
    # at omega_1 the line of weights is genuinely one-dimensional growth
    seq = dimension_sequence(s1, (1, 0), 5)
    assert seq.values == (1, 2, 3, 4, 5, 6)
    assert growth_degree(seq) == 1


def test_degree_equals_length_at_rho_b2():
    rs = root_system("B2")
    for w in weyl_group(rs):
        seq = dimension_sequence(w, rho(rs), w.length + 4)
        assert growth_degree(seq) == w.length


def test_growth_degree_accepts_raw_sequences():
    assert growth_degree((7, 7, 7, 7)) == 0
    assert growth_degree((1, 2, 3, 4, 5)) == 1
    assert growth_degree([1, 8, 27, 64, 125, 216]) == 3


def test_growth_degree_needs_a_vanishing_difference():
    with pytest.raises(RuntimeError):
        growth_degree((1, 2, 4, 8, 16))


def test_dimension_sequence_validation():
    w = from_word(A2, (1, 2))
    with pytest.raises(ValueError):
        dimension_sequence(w, (-1, 1), 6)
    # too short to certify a degree for this length
    with pytest.raises(ValueError):
        dimension_sequence(w, (1, 1), w.length + 1)


def test_default_window():
    w = from_word(A2, (1, 2))
    seq = dimension_sequence(w, (1, 1))
    assert len(seq.values) == w.length + 5  # n = 0 .. length+4


def test_sequence_is_frozen_record():
    w = from_word(A2, (1,))
    seq = dimension_sequence(w, (1, 0), 4)
    assert isinstance(seq, DilationSequence)
    with pytest.raises(AttributeError):
        seq.values = ()
