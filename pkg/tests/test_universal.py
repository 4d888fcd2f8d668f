import random

import pytest

from coxq import universal as U
from coxq.series import Series
from coxq.universal import UniversalError


def S(coeffs, order):
    return Series.from_coeffs(coeffs, order)


def test_standard_automorphism():
    assert U.standard_automorphism(4, 0) == (2, 1, 4, 3)
    assert U.standard_automorphism(3, 1) == (1, 3, 2)
    assert U.standard_automorphism(2, 2) == (1, 2)
    with pytest.raises(UniversalError):
        U.standard_automorphism(3, 0)


def test_words():
    assert U.parse_word(3, "1 2 1") == (1, 2, 1)
    with pytest.raises(UniversalError):
        U.parse_word(3, "1 1")
    with pytest.raises(UniversalError):
        U.parse_word(3, "4")
    assert U.multiply((1, 2, 3), (3, 2, 1)) == ()
    assert U.multiply((1, 2), (2, 3)) == (1, 3)
    assert U.uc_inverse((1, 2, 3)) == (3, 2, 1)


def test_multiply_associative():
    rng = random.Random(5)

    def rand_word():
        w = []
        for _ in range(rng.randint(0, 7)):
            w = list(U.multiply(tuple(w), (rng.randint(1, 3),)))
        return tuple(w)

    for _ in range(300):
        a, b, c = rand_word(), rand_word(), rand_word()
        assert U.multiply(U.multiply(a, b), c) == U.multiply(a, U.multiply(b, c))
        assert U.multiply(a, U.uc_inverse(a)) == ()


def test_P_counts():
    p = U.uc_brute(4, None, "P", 8)
    assert list(p.coeffs) == [1] + [4 * 3 ** (k - 1) for k in range(1, 9)]


def test_closed_examples():
    for n in range(1, 5):
        assert U.uc_closed(n, n, "F", 10) == U.uc_closed(n, 0, "P", 10)
    assert U.uc_closed(2, 2, "L", 10) == S([1, 0, 1], 10) / S([1, 1], 10) ** 2
    for n in range(1, 6):
        for j in range(n + 1):
            assert U.uc_closed(n, j, "TJ", 10).specialize_outer(-1) == 1


def test_absolute_length_classification():
    aut = U.standard_automorphism(3, 3)
    for w in U.twisted_involutions(3, aut, 7):
        # odd palindromes have absolute length 1, even ones (only 1) have 0
        assert U.uc_absolute_length(w, aut, 3) == len(w) % 2
    with pytest.raises(UniversalError):
        U.uc_absolute_length((1, 2), aut, 3)


def test_twisted_involutions_complete():
    for n in range(1, 5):
        for f in range(n % 2, n + 1, 2):
            aut = U.standard_automorphism(n, f)
            direct = {w for w in U.iter_words(range(1, n + 1), 6)
                      if U.uc_inverse(w) == U.apply_aut(aut, w)}
            assert set(U.twisted_involutions(n, aut, 6)) == direct


@pytest.mark.parametrize("n", range(1, 5))
def test_closed_vs_brute(n):
    for f in range(n % 2, n + 1, 2):
        aut = U.standard_automorphism(n, f)
        P = U.uc_brute(n, aut, "P", 12)
        F = U.uc_brute(n, aut, "F", 12)
        L = U.uc_brute(n, aut, "L", 12)
        assert L == P.substitute_power(2) / F
        for kind, got in (("P", P), ("F", F), ("L", L)):
            assert got == U.uc_closed(n, f, kind, 12)
    for j in range(n + 1):
        assert U.uc_brute(n, None, "TJ", 12, j=j) == U.uc_closed(n, j, "TJ", 12)


@pytest.mark.parametrize("n,j", [(3, 1), (3, 2), (4, 1), (4, 3)])
def test_TJ_not_polynomial(n, j):
    for order in (8, 10, 12):
        assert U.uc_brute(n, None, "TJ", order, j=j)[1][order] != 0


def test_bad_kind():
    with pytest.raises(UniversalError):
        U.uc_closed(3, 1, "X", 5)
    with pytest.raises(UniversalError):
        U.uc_brute(3, None, "TJ", 5)
