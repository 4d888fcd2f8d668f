import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxq import affine as A
from coxq import assembly
from coxq.affine import AffinePermutationError
from coxq.assembly import GroupDescriptor


def W(*entries):
    return A.from_window(len(entries), entries)


def inversions(w):
    """Count pairs i < j, j in [n], w(i) > w(j) by scanning far enough left."""
    n = w.n
    spread = max(w.window) - min(w.window)
    lo = -(spread // n + 2) * n
    return sum(1 for j in range(1, n + 1) for i in range(lo, j) if A.apply(w, i) > A.apply(w, j))


def words(n, max_len):
    return st.lists(st.integers(0, n - 1), max_size=max_len)


def product(n, word):
    w = A.identity(n)
    for i in word:
        w = A.compose(w, A.simple_gen(n, i))
    return w


def test_from_window():
    assert W(1, 2, 3) == A.identity(3)
    assert W(2, 1, 3) == A.simple_gen(3, 1)
    with pytest.raises(AffinePermutationError):
        W(1, 2, 4)
    with pytest.raises(AffinePermutationError):
        W(1, 4, 1)


def test_simple_generators():
    assert A.simple_gen(3, 1).window == (2, 1, 3)
    assert A.simple_gen(3, 0).window == (0, 2, 4)
    assert A.simple_gen(2, 0).window == (0, 3)
    for n in range(2, 6):
        for i in range(n):
            s = A.simple_gen(n, i)
            assert A.length(s) == 1
            assert A.compose(s, s) == A.identity(n)


def test_inverse_of_s0():
    s0 = A.simple_gen(3, 0)
    assert A.compose(A.inverse(s0), s0) == A.identity(3)
    assert A.inverse(s0) == s0


def test_lengths_in_rank_two():
    s0, s1 = A.simple_gen(2, 0), A.simple_gen(2, 1)
    # (-1, 4) sits at BFS level 2; the length-3 element s1 s0 s1 is (4, -1)
    assert A.length(W(-1, 4)) == 2
    assert W(-1, 4) in A.ball_by_length(2, 3)[2]
    assert (s1 * s0 * s1).window == (4, -1)
    assert A.length(s1 * s0 * s1) == 3


def test_descents():
    assert not any(A.has_right_descent(A.identity(3), i) for i in range(3))
    assert A.has_right_descent(A.simple_gen(3, 1), 1)


def test_star_swaps_generators():
    for n in range(2, 6):
        for i in range(n):
            assert A.star(A.simple_gen(n, i)) == A.simple_gen(n, A.star_gen_index(n, i))
            assert A.star_gen_index(n, i) == (n - i) % n


def test_absolute_lengths_small():
    assert A.absolute_length_involution(A.identity(3)) == 0
    assert A.absolute_length_involution(A.simple_gen(3, 1)) == 1
    s0 = A.simple_gen(2, 0)
    assert A.is_twisted_involution(s0, "flip")
    assert A.twisted_absolute_length(s0) == A.hultman_absolute_length(s0, "flip")
    assert A.hultman_absolute_length(A.identity(3)) == 0
    s1, s2 = A.simple_gen(3, 1), A.simple_gen(3, 2)
    assert A.hultman_absolute_length(s1, "id") == 1
    assert A.hultman_absolute_length(s1 * s2 * s1, "id") == 1
    with pytest.raises(AffinePermutationError):
        A.hultman_absolute_length(s1 * s2, "id")


def test_ball_sizes():
    assert A.enumerate_upto(3, 0) == {A.identity(3)}
    assert [len(x) for x in A.ball_by_length(2, 3)] == [1, 2, 2, 2]
    # rank 3: all m(s_i, s_j) = 3, so the six words s_i s_j (i != j) are distinct
    assert [len(x) for x in A.ball_by_length(3, 2)] == [1, 3, 6]


@pytest.mark.parametrize("n", range(2, 5))
def test_ball_counts_match_bott(n):
    g = GroupDescriptor("affine_symmetric", n)
    assert assembly.poincare_brute(g, 12) == assembly.poincare_closed(g, 12)


def test_parse_and_json():
    w = A.parse_window("11, 12, -17")
    assert w == W(11, 12, -17)
    assert A.parse_window('{"n": 3, "window": [11, 12, -17]}') == w
    assert str(w) == "11,12,-17"
    assert w.to_json()["window"] == [11, 12, -17]


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), words(n, 12))))
def test_length_properties(case):
    n, word = case
    w = product(n, word)
    ell = A.length(w)
    assert ell == inversions(w)
    assert ell <= len(word) and (len(word) - ell) % 2 == 0
    assert A.length(A.inverse(w)) == ell
    assert A.length(A.star(w)) == ell
    assert A.compose(w, A.inverse(w)) == A.identity(n)
    for i in range(n):
        up = A.length(A.right_mult_gen(w, i)) - ell
        assert up == (-1 if A.has_right_descent(w, i) else 1)
        assert A.left_mult_gen(i, w) == A.compose(A.simple_gen(n, i), w)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), words(n, 6), words(n, 6), words(n, 6))))
def test_associativity(case):
    n, a, b, c = case
    u, v, x = product(n, a), product(n, b), product(n, c)
    assert (u * v) * x == u * (v * x)
    assert A.apply(u * v, 5) == A.apply(u, A.apply(v, 5))


@pytest.mark.parametrize("n", range(1, 5))
def test_absolute_length_formulas_agree_with_recursion(n):
    cache_id, cache_flip = {}, {}
    for w in A.enumerate_upto(n, 10):
        if A.is_involution(w):
            assert A.absolute_length_involution(w) == A.hultman_absolute_length(w, "id", cache_id)
        if A.is_twisted_involution(w, "flip"):
            assert A.twisted_absolute_length(w) == A.hultman_absolute_length(w, "flip", cache_flip)
