"""Symmetric-group combinatorics: windows, words, Rothe diagrams."""

import pytest

from ybhecke.errors import IndexOutOfRange, RankMismatch, RankOutOfRange
from ybhecke.permutations import (
    Permutation,
    all_permutations,
    all_reduced_words,
    rothe_diagram,
)

P = Permutation.from_string


def brute_length(mu):
    w = mu.window
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def evaluate_word(n, word):
    mu = Permutation.identity(n)
    for j in word:
        mu = mu.times_simple(j)
    return mu


def test_compose_examples():
    assert P("213") * P("213") == P("123")
    omega = P("321")
    assert omega * omega.inverse() == P("123")
    with pytest.raises(RankMismatch):
        P("213") * P("1234")


def test_right_simple_multiplication_drops_length():
    mu = P("35142")
    nu = mu.times_simple(2)
    assert nu == P("31542")
    # derived by brute-force inversion count
    assert (brute_length(mu), brute_length(nu)) == (6, 5)
    assert mu.length() == 6 and nu.length() == 5


def test_inverse_involution_and_length():
    for mu in all_permutations(4):
        assert mu.inverse().inverse() == mu
        assert mu.length() == mu.inverse().length()


def test_enumerate():
    assert [str(p) for p in all_permutations(1)] == ["1"]
    ps = all_permutations(3)
    assert len(ps) == 6
    assert ps[0] == P("123") and ps[-1] == P("321")
    with pytest.raises(RankOutOfRange):
        all_permutations(9)
    with pytest.raises(RankOutOfRange):
        all_permutations(0)


def test_poincare_polynomial_coefficients():
    # length generating function of S_4 is (1+q)(1+q+q^2)(1+q+q^2+q^3)
    counts = {}
    for mu in all_permutations(4):
        counts[mu.length()] = counts.get(mu.length(), 0) + 1
    assert [counts.get(k, 0) for k in range(7)] == [1, 3, 5, 6, 5, 3, 1]


def test_poincare_product_formula_up_to_5():
    for n in range(1, 6):
        coeffs = [1]
        for k in range(2, n + 1):
            new = [0] * (len(coeffs) + k - 1)
            for i, c in enumerate(coeffs):
                for j in range(k):
                    new[i + j] += c
            coeffs = new
        counts = {}
        for mu in all_permutations(n):
            counts[mu.length()] = counts.get(mu.length(), 0) + 1
        assert [counts.get(k, 0) for k in range(len(coeffs))] == coeffs


def test_reduced_word_identity_and_omega():
    assert Permutation.identity(4).reduced_word() == ()
    assert P("321").reduced_word() == (1, 2, 1)


def test_reduced_words_evaluate_back():
    for mu in all_permutations(4):
        word = mu.reduced_word()
        assert len(word) == mu.length()
        assert evaluate_word(4, word) == mu


def test_all_reduced_words_counts():
    assert len(all_reduced_words(P("321"))) == 2
    assert len(all_reduced_words(P("4321"))) == 16
    for word in all_reduced_words(P("4231")):
        assert evaluate_word(4, word) == P("4231")
        assert len(word) == P("4231").length()


def test_length_changes_by_one():
    for mu in all_permutations(4):
        for j in range(1, 4):
            assert abs(mu.times_simple(j).length() - mu.length()) == 1


def test_generator_index_is_guarded():
    with pytest.raises(IndexOutOfRange):
        P("321").times_simple(3)
    with pytest.raises(IndexOutOfRange):
        P("321").times_simple(0)
    with pytest.raises(IndexOutOfRange):
        Permutation.simple(3, 5)


def test_rothe_identity_empty():
    assert len(rothe_diagram(Permutation.identity(4))) == 0


def test_rothe_35142_reading_order():
    mu = P("35142")
    diagram = rothe_diagram(mu)
    assert len(diagram) == mu.length() == 6
    # reading the boxes yields the factor digits (mu(i), mu(j)) and T-indices
    reading = [(mu(b.i), mu(b.j), b.generator) for b in diagram.boxes]
    assert reading == [
        (5, 4, 4),
        (3, 2, 2),
        (5, 2, 3),
        (4, 2, 4),
        (3, 1, 1),
        (5, 1, 2),
    ]


def test_rothe_box_count_matches_length_s5():
    for mu in all_permutations(5):
        diagram = rothe_diagram(mu)
        assert len(diagram) == mu.length()
        # boxes are exactly the inversion set {(i, mu(j)) : i<j, mu(i)>mu(j)}
        got = {(b.i, b.row) for b in diagram.boxes}
        expect = {
            (i, mu(j))
            for i in range(1, 6)
            for j in range(i + 1, 6)
            if mu(i) > mu(j)
        }
        assert got == expect


def test_rothe_generator_indices_increase_in_columns():
    for mu in all_permutations(5):
        cols = {}
        for b in rothe_diagram(mu).boxes:
            cols.setdefault(b.i, []).append(b)
        for col, boxes in cols.items():
            boxes.sort(key=lambda b: b.row)
            assert [b.generator for b in boxes] == list(
                range(col, col + len(boxes))
            )


def test_string_roundtrip():
    assert str(P("35142")) == "35142"
    assert P("35142") == Permutation((3, 5, 1, 4, 2))
