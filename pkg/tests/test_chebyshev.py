import math

import pytest

from coxq import assembly, chebyshev
from coxq.series import TrivarPoly


def test_initial_terms():
    assert str(chebyshev.cigler_T(0)) == "1"
    assert str(chebyshev.cigler_T(1)) == "x"
    assert chebyshev.cigler_T(2) == TrivarPoly.from_dict({(2, 0): (1, 1), (0, 1): (0, 1)})
    assert chebyshev.cigler_T(2).at_x_one() == {0: (1, 1), 1: (0, 1)}
    with pytest.raises(ValueError):
        chebyshev.cigler_T(-1)


def test_classical():
    assert chebyshev.classical_T(0) == [1]
    assert chebyshev.classical_T(1) == [0, 1]
    assert chebyshev.classical_T(2) == [-1, 0, 2]
    assert chebyshev.classical_T(4) == [1, 0, -8, 0, 8]


@pytest.mark.parametrize("n", range(13))
def test_classical_is_cosine_multiple(n):
    coeffs = chebyshev.classical_T(n)
    for t in (0.1, 0.7, 1.3, 2.9):
        value = sum(c * math.cos(t) ** k for k, c in enumerate(coeffs))
        assert math.isclose(value, math.cos(n * t), abs_tol=1e-9)


def test_t_at_one_n4():
    assert chebyshev.t_at_one(4) == {0: 8, 1: -8, 2: 1}


@pytest.mark.parametrize("n", range(1, 17))
def test_main2(n):
    assert chebyshev.main2_check(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_cor1_and_rescale(n):
    assert chebyshev.cor1_check(n)
    assert chebyshev.rescale_check(n)


def test_cigler_nonnegative():
    for n in range(12):
        assert chebyshev.cigler_T(n).min_coefficient() >= 0


def test_recurrence_by_T():
    # at x = 1 the recurrence runs directly on the closed T
    for n in range(3, 10):
        lhs = chebyshev.cigler_T(n).at_x_one()
        t = assembly.T_closed(n)
        assert lhs == {k: tuple(c.coeffs[: c.degree() + 1]) for k, c in enumerate(t.coeffs)}
