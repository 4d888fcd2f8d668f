"""Acceptance criteria, one or more tests each, at the stated sizes and orders."""

import random
import time

import pytest

from coxq import affine, assembly, chebyshev, cosets, universal
from coxq.assembly import GroupDescriptor
from coxq.series import BivarSeries, Series

crit = pytest.mark.criterion


def _bivar(rows, order=None):
    """Build an s-polynomial from rows of ascending q coefficients."""
    order = order if order is not None else max(len(r) for r in rows) - 1
    return BivarSeries.build([Series.from_coeffs(r, order) for r in rows], "s")


GOLDEN_T = {
    1: [[1]],
    2: [[1, 1], [0, 1]],
    3: [[1, 1, 1, 1], [0, 1, 1, 1]],
    4: [[1, 1, 1, 2, 1, 1, 1], [0, 1, 1, 2, 2, 1, 1], [0, 0, 0, 0, 1]],
}


@crit(1, "golden polynomials T for n=1..4, < 1 s")
def test_golden_T():
    t0 = time.perf_counter()
    got = {n: assembly.T_closed(n) for n in GOLDEN_T}
    elapsed = time.perf_counter() - t0
    for n, rows in GOLDEN_T.items():
        assert got[n] == _bivar(rows, got[n].order), n
        assert got[n].outer_degree == len(rows) - 1
    assert got[3].polynomial_str() == "(1+q+q^2+q^3) + (q+q^2+q^3)*s"
    assert elapsed < 1.0


@crit(2, "T_closed = T_brute to order 24 for 2 <= n <= 6, < 60 s")
def test_T_closed_vs_brute(record_property):
    t0 = time.perf_counter()
    for n in range(2, 7):
        assert assembly.T_brute(n, 24) == assembly.T_closed(n, 24), n
    elapsed = time.perf_counter() - t0
    record_property("report", f"closed vs brute, n=2..6, order 24: {elapsed:.2f} s")
    assert elapsed < 60.0


@crit(3, "T_closed(n) at s=-1 equals 1 for n <= 12")
@pytest.mark.parametrize("n", range(1, 13))
def test_normalization(n):
    assert assembly.T_closed(n).specialize_outer(-1) == 1


def _lusztig_cases():
    for n in range(1, 6):
        for aut in ("id", "flip"):
            yield GroupDescriptor("symmetric", n), aut, 16
    for n in range(1, 5):
        for aut in ("id", "flip"):
            yield GroupDescriptor("affine_symmetric", n), aut, 14
    for n in range(1, 5):
        for f in range(n % 2, n + 1, 2):
            yield GroupDescriptor("universal", n, f=f), universal.standard_automorphism(n, f), 12


LUSZTIG = list(_lusztig_cases())


def _case_id(case):
    g, aut, order = case
    return f"{g.family}-{g.n}-{aut if isinstance(aut, str) else 'f' + str(g.f)}"


@crit(4, "L_brute = P(q^2)/F on all three families")
@pytest.mark.parametrize("case", LUSZTIG, ids=_case_id)
def test_lusztig_identity(case):
    g, aut, order = case
    L = assembly.L_brute(g, aut, order)
    P = assembly.poincare_brute(g, order)
    F = assembly.F_brute(g, aut, order)
    assert L == P.substitute_power(2) / F


@crit(5, "L_brute equals the product formulas")
@pytest.mark.parametrize("case", [c for c in LUSZTIG if c[1] == "id" or c[0].family == "universal"],
                         ids=_case_id)
def test_L_product_formulas(case):
    g, aut, order = case
    if g.family == "universal":
        closed = universal.uc_closed(g.n, g.f, "L", order)
    else:
        closed = assembly.L_closed(g, order)
    assert assembly.L_brute(g, aut, order) == closed


@crit(6, "T = Cigler T at x=1 (n<=16), Chebyshev at q=1 and rescaling (n<=12)")
def test_cigler_and_chebyshev():
    for n in range(1, 17):
        assert chebyshev.main2_check(n), n
    for n in range(1, 13):
        assert chebyshev.cor1_check(n), n
        assert chebyshev.rescale_check(n), n
    coeffs = [0] * 5
    for k, v in chebyshev.t_at_one(4).items():
        coeffs[4 - 2 * k] += v
    assert coeffs == [1, 0, -8, 0, 8]


@crit(7, "identity ladder: tech, csum, mufixed, sigma sums")
def test_identity_ladder():
    for k in range(9):
        assert assembly.tech_check(k), ("tech", k)
    for k in range(7):
        assert assembly.csum_check(k, 12), ("csum", k)
    for n in range(2, 7):
        for total in range(min(3, n // 2) + 1):
            for c in cosets.compositions(total):
                assert assembly.mufixed_check(n, c, 16), ("mufixed", n, c)
    for n in range(1, 7):
        for k in range(n // 2 + 1):
            assert assembly.sigma_brute(n, k, 16) == assembly.sigma_closed(n, k, 16), ("sigma", n, k)


@crit(8, "structural oracles for the double coset bijection")
def test_lambda_roundtrip_500():
    rng = random.Random(20261016)
    for _ in range(500):
        n = rng.randint(1, 10)
        a = sorted(rng.randint(-8, 8) for _ in range(n - 1))
        a = tuple(sorted(a + [-sum(a)]))
        w = cosets.build_from_lambda(a)
        assert cosets.lambda_of(w).entries == a
        assert cosets.build_from_lambda(cosets.lambda_of(w)) == w
        assert cosets.is_min_rep(w) and affine.is_twisted_involution(w, "flip")
    # antisymmetric sequences land among the ordinary involutions
    for _ in range(500):
        n = rng.randint(1, 10)
        half = sorted(rng.randint(-8, 0) for _ in range(n // 2))
        a = tuple(half + [0] * (n % 2) + [-x for x in reversed(half)])
        w = cosets.build_from_lambda(a)
        assert cosets.lambda_of(w).entries == a
        assert cosets.is_min_rep(w) and affine.is_involution(w)


@crit(8, "structural oracles for the double coset bijection")
@pytest.mark.parametrize("n", range(1, 5))
def test_omega_equals_bfs(n):
    bfs = {w for w in affine.enumerate_upto(n, 12) if affine.is_involution(w) and cosets.is_min_rep(w)}
    assert bfs == {d.w for d in cosets.enumerate_omega(n, 12)}


@crit(8, "structural oracles for the double coset bijection")
@pytest.mark.parametrize("n", range(1, 5))
def test_absolute_length_formulas(n):
    cache_id, cache_flip = {}, {}
    for w in affine.enumerate_upto(n, 10):
        if affine.is_involution(w):
            assert affine.absolute_length_involution(w) == affine.hultman_absolute_length(w, "id", cache_id)
        if affine.is_twisted_involution(w, "flip"):
            assert affine.twisted_absolute_length(w) == affine.hultman_absolute_length(w, "flip", cache_flip)


@crit(8, "structural oracles for the double coset bijection")
@pytest.mark.parametrize("n", range(1, 6))
def test_fixed_series_and_lengths(n):
    for d in cosets.enumerate_omega(n, 10):
        K = cosets.coset_K(d.w)
        assert cosets.fixed_series_brute(d.w, 16, K) == cosets.fixed_series_closed(d.mu, d.stats.z, 16)
        a = cosets.lambda_of(d.w).entries
        assert d.length == cosets.pairwise_length(a) == affine.length(d.w)


@crit(9, "limit: sum = product to order 20; coefficients of T stabilize")
def test_limit(record_property):
    assert assembly.limit_sum_form(20, 4) == assembly.limit_product(20, 4)
    table, stable = assembly.stabilization_table(12, 3)
    assert stable
    per_degree = [max(table[(j, d)] for j in range(4)) for d in range(13)]
    record_property("report", "stabilization n per q-degree 0..12: " + " ".join(map(str, per_degree)))


@crit(10, "universal family: closed forms = brute, n <= 4, order 12")
@pytest.mark.parametrize("n", range(1, 5))
def test_universal_closed_vs_brute(n):
    for f in range(n % 2, n + 1, 2):
        a = universal.standard_automorphism(n, f)
        for kind in ("P", "F", "L"):
            assert universal.uc_brute(n, a, kind, 12) == universal.uc_closed(n, f, kind, 12), (kind, f)
    for j in range(n + 1):
        assert universal.uc_brute(n, None, "TJ", 12, j=j) == universal.uc_closed(n, j, "TJ", 12), j


@crit(10, "universal family: closed forms = brute, n <= 4, order 12")
@pytest.mark.parametrize("n,j", [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3)])
def test_TJ_not_polynomial(n, j):
    t = universal.uc_brute(n, None, "TJ", 12, j=j)
    assert t[1][12] != 0
