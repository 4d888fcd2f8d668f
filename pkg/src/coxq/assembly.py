"""Poincare-type generating functions: closed forms, enumerations, identities.

Every brute-force series here is built by walking group elements (or coset
data) and never consults the matching closed form.  Infinite sums over
coset data are cut at the requested order: a datum of length L only
contributes at q-degree >= L.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from coxq import affine, cosets
from coxq.series import (
    BivarSeries,
    Series,
    q_binomial,
    q_factorial,
    q_int,
    q_pochhammer,
    q_pochhammer_infinity,
)

__all__ = [
    "GroupDescriptor",
    "poincare_closed",
    "poincare_brute",
    "F_brute",
    "L_brute",
    "L_closed",
    "lusztig_identity_check",
    "LJ_finite_example",
    "T_brute",
    "T_closed",
    "T_degree_bound",
    "T_from_sigma",
    "sigma_closed",
    "sigma_brute",
    "mufixed_closed",
    "mufixed_brute",
    "mufixed_check",
    "pi_product",
    "csum_lhs",
    "csum_rhs",
    "csum_check",
    "tech_sum",
    "tech_check",
    "limit_product",
    "limit_sum_form",
    "limit_forms_agree",
    "stabilization_table",
    "poincare_ratio_check",
]

FAMILIES = ("symmetric", "affine_symmetric", "universal")


@dataclass(frozen=True)
class GroupDescriptor:
    """``symmetric`` n is S_n (rank n-1); ``affine_symmetric`` n is its affine
    extension (rank n); ``universal`` n is U_n, with ``f`` fixed generators
    of the automorphism or a parabolic of ``j`` generators."""

    family: str
    n: int
    f: int | None = None
    j: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def degrees(self) -> tuple[int, ...]:
        if self.family == "universal":
            return ()
        return tuple(range(2, self.n + 1))

    def generators(self) -> range:
        if self.family == "symmetric":
            return range(1, self.n)
        return range(self.n)


def _sym(n: int) -> GroupDescriptor:
    return GroupDescriptor("symmetric", n)


def _one_minus_q_pow(d: int, order: int, sign: int = -1) -> Series:
    """1 + sign*q^d."""
    return Series.one(order) + Series.monomial(d, order, sign)


def poincare_closed(g: GroupDescriptor, order: int) -> Series:
    if g.family == "universal":
        from coxq.universal import uc_closed
        return uc_closed(g.n, g.n, "P", order)
    acc = Series.one(order)
    one_minus_q = _one_minus_q_pow(1, order)
    for d in g.degrees:
        acc = acc * _one_minus_q_pow(d, order) * one_minus_q.invert()
        if g.family == "affine_symmetric":
            acc = acc * _one_minus_q_pow(d - 1, order).invert()
    return acc


def _ball(g: GroupDescriptor, order: int):
    if g.family == "symmetric":
        max_len = min(order, comb(g.n, 2))
        return affine.ball_by_length(g.n, max_len, range(1, g.n) if g.n > 1 else ())
    return affine.ball_by_length(g.n, order)


def poincare_brute(g: GroupDescriptor, order: int) -> Series:
    if g.family == "universal":
        from coxq.universal import uc_brute
        return uc_brute(g.n, None, "P", order)
    counts = [len(level) for level in _ball(g, order)]
    return Series.from_coeffs(counts, order)


def _twisted(g: GroupDescriptor, aut: str, w) -> bool:
    return affine.is_twisted_involution(w, aut)


def F_brute(g: GroupDescriptor, aut, order: int) -> Series:
    """Length generating function of the fixed points of ``aut``."""
    if g.family == "universal":
        from coxq.universal import uc_brute
        return uc_brute(g.n, aut, "F", order)
    coeffs = []
    for level in _ball(g, order):
        if aut == "id":
            coeffs.append(len(level))
        else:
            coeffs.append(sum(1 for w in level if affine.star(w) == w))
    return Series.from_coeffs(coeffs, order)


@lru_cache(maxsize=None)
def _ratio_powers(order: int, top: int) -> tuple[Series, ...]:
    """((q - 1)/(q + 1))^k for k = 0..top."""
    r = Series.from_coeffs([-1, 1], order) * Series.from_coeffs([1, 1], order).invert()
    out = [Series.one(order)]
    for _ in range(top):
        out.append(out[-1] * r)
    return tuple(out)


def L_brute(g: GroupDescriptor, aut, order: int) -> Series:
    """Sum of q^len * ((q-1)/(q+1))^abslen over twisted involutions of length <= order."""
    if g.family == "universal":
        from coxq.universal import uc_brute
        return uc_brute(g.n, aut, "L", order)
    counts: dict[tuple[int, int], int] = {}
    if g.n == 1:
        return Series.one(order)
    cache: dict = {}
    gens = tuple(g.generators())
    for ell, level in enumerate(_ball(g, order)):
        for w in level:
            if _twisted(g, aut, w):
                k = affine.hultman_absolute_length(w, aut, cache, gens)
                counts[(ell, k)] = counts.get((ell, k), 0) + 1
    top = max((k for _, k in counts), default=0)
    powers = _ratio_powers(order, top)
    acc = Series.zero(order)
    for (ell, k), c in sorted(counts.items()):
        acc = acc + powers[k].shift(ell) * c
    return acc


def L_closed(g: GroupDescriptor, order: int) -> Series:
    if g.family == "universal":
        from coxq.universal import uc_closed
        return uc_closed(g.n, g.n if g.f is None else g.f, "L", order)
    acc = Series.one(order)
    one_plus_q = _one_minus_q_pow(1, order, +1)
    for d in g.degrees:
        acc = acc * _one_minus_q_pow(d, order, +1) * one_plus_q.invert()
        if g.family == "affine_symmetric":
            acc = acc * _one_minus_q_pow(d - 1, order, +1).invert()
    return acc


def lusztig_identity_check(g: GroupDescriptor, aut, order: int) -> bool:
    """L = P(q^2) / F with every series enumerated."""
    lhs = L_brute(g, aut, order)
    rhs = poincare_brute(g, order).substitute_power(2) * F_brute(g, aut, order).invert()
    return lhs == rhs


def LJ_finite_example(n: int, order: int) -> BivarSeries:
    """L^J for S_{n+1} with J = {s_1..s_{n-1}}: the data are 1 and s_n."""
    if n < 2:
        raise ValueError("the two-term formula needs n >= 2")
    one_plus_q_inv = _one_minus_q_pow(1, order, +1).invert()
    s_coeff = (
        Series.monomial(1, order)
        * _one_minus_q_pow(n, order)
        * _one_minus_q_pow(n, order, +1)
        * one_plus_q_inv
        * one_plus_q_inv
        * L_closed(_sym(n - 1), order)
    )
    return BivarSeries.build([L_closed(_sym(n), order), s_coeff], "s")


# -- T for the affine symmetric group -----------------------------------------


def T_degree_bound(n: int) -> int:
    """Largest q-degree any summand of the closed T formula can reach."""
    best = 0
    for k in range(n // 2 + 1):
        deg = k * k + (n - 1) - (2 * n - 2 * k - 1) + k * (n - 2 * k)
        deg += sum(range(k + 1, n - k + 1))
        best = max(best, deg)
    return best


def _T_term(n: int, k: int, order: int) -> Series:
    """q^(k^2) [n]/[2n-2k] (n-k choose k) (-q^(k+1); q)_(n-2k)."""
    return (
        q_int(n, order)
        * q_int(2 * n - 2 * k, order).invert()
        * q_binomial(n - k, k, order)
        * q_pochhammer(-1, k + 1, n - 2 * k, order)
    ).shift(k * k)


POLY_MARGIN = 4


def T_closed(n: int, order: int | None = None) -> BivarSeries:
    """Closed form of T for the affine symmetric group of rank n.

    With ``order=None`` the result is the exact polynomial: it is computed
    in the truncated ring past its degree bound and the tail is asserted to
    vanish.  With an explicit order the series is returned to that order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    bound = T_degree_bound(n)
    work = bound + POLY_MARGIN if order is None else order
    terms = [_T_term(n, k, work) for k in range(n // 2 + 1)]
    if order is None:
        for t in terms:
            if t.degree() > bound:
                raise ArithmeticError(f"T_closed({n}): nonzero coefficient past degree {bound}")
        terms = [t.truncate(bound) for t in terms]
    return BivarSeries.build(terms, "s")


def _pad(b: BivarSeries, order: int) -> BivarSeries:
    """Extend an exact polynomial to a longer truncation order."""
    return BivarSeries.build([Series.from_coeffs(c.coeffs, order) for c in b.coeffs], b.outer)


def poincare_ratio_check(n: int, order: int) -> bool:
    """P(q)/P(q^2) == (1+q)^n/(1+q^n) for the affine symmetric group."""
    p = poincare_closed(GroupDescriptor("affine_symmetric", n), order)
    lhs = p * p.substitute_power(2).invert()
    rhs = Series.from_coeffs([1, 1], order) ** n * _one_minus_q_pow(n, order, +1).invert()
    return lhs == rhs


def _prefactor(n: int, order: int) -> Series:
    p = poincare_closed(GroupDescriptor("affine_symmetric", n), order)
    return p * p.substitute_power(2).invert()


class _DatumTerms:
    """Per-datum pieces q^len * [n]_{q^2}! / F, with F enumerated and cached
    by the pair (K, action of w on K)."""

    def __init__(self, n: int, order: int):
        self.n = n
        self.order = order
        self.sym_sq = q_factorial(n, order).substitute_power(2)
        self._fcache: dict = {}

    def fixed_inverse(self, w) -> Series:
        K = cosets.coset_K(w)
        key = cosets.coset_action(w, K)
        if key not in self._fcache:
            self._fcache[key] = cosets.fixed_series_brute(w, self.order, K).invert()
        return self._fcache[key]

    def __call__(self, datum: cosets.CosetDatum) -> tuple[int, Series]:
        w = datum.w
        ell = affine.length(w)
        abs_ell = affine.absolute_length_involution(w)
        return abs_ell, (self.sym_sq * self.fixed_inverse(w)).shift(ell)


def _sigma_brute_all(n: int, order: int) -> dict[int, Series]:
    terms = _DatumTerms(n, order)
    out: dict[int, Series] = {}
    for datum in cosets.enumerate_omega(n, order):
        k, term = terms(datum)
        out[k] = out.get(k, Series.zero(order)) + term
    return out


def sigma_brute(n: int, k: int, order: int) -> Series:
    """Sum over coset data with absolute length k of q^len [n]_{q^2}! / F."""
    if 2 * k > n:
        return Series.zero(order)
    if n == 1:
        return Series.one(order)
    return _sigma_brute_all(n, order).get(k, Series.zero(order))


def sigma_closed(n: int, k: int, order: int) -> Series:
    if 2 * k > n:
        return Series.zero(order)
    one_plus_q = Series.from_coeffs([1, 1], order)
    one_minus_q = Series.from_coeffs([1, -1], order)
    return (
        _T_term(n, k, order)
        * (one_plus_q * one_minus_q.invert()) ** k
        * _one_minus_q_pow(n, order, +1)
        * (one_plus_q ** n).invert()
    )


def _s_factor(order: int) -> BivarSeries:
    """s * (1 - q)/(1 + q)."""
    r = Series.from_coeffs([1, -1], order) * Series.from_coeffs([1, 1], order).invert()
    return BivarSeries.build([Series.zero(order), r], "s")


def T_from_sigma(n: int, order: int, sigma=sigma_closed) -> BivarSeries:
    """Assemble P(q)/P(q^2) * sum_k (s(1-q)/(1+q))^k * Sigma(n, k)."""
    fac = _s_factor(order)
    acc = BivarSeries.build([Series.zero(order)], "s")
    power = BivarSeries.build([Series.one(order)], "s")
    for k in range(n // 2 + 1):
        acc = acc + power * sigma(n, k, order)
        power = power * fac
    return acc * _prefactor(n, order)


def T_brute(n: int, order: int) -> BivarSeries:
    """T from its defining sum over involutive minimal coset representatives."""
    if n == 1:
        return BivarSeries.build([Series.one(order)], "s")
    terms = _DatumTerms(n, order)
    fac = _s_factor(order)
    powers = [BivarSeries.build([Series.one(order)], "s")]
    for _ in range(n // 2):
        powers.append(powers[-1] * fac)
    acc = BivarSeries.build([Series.zero(order)], "s")
    for datum in cosets.enumerate_omega(n, order):
        k, term = terms(datum)
        acc = acc + powers[k] * term
    return acc * _prefactor(n, order)


# -- the identity ladder ------------------------------------------------------


def mufixed_brute(n: int, c: Sequence[int], order: int) -> Series:
    terms = _DatumTerms(n, order)
    acc = Series.zero(order)
    for d, _ in cosets.iter_deltas(n, c, order):
        _, term = terms(cosets.datum_from_cd(n, c, d))
        acc = acc + term
    return acc


def mufixed_closed(n: int, c: Sequence[int], order: int) -> Series:
    z = n - 2 * sum(c)
    shift = comb(z, 2) - comb(n, 2)
    acc = q_factorial(n, order).substitute_power(2) * q_factorial(z, order).invert()
    b = 0
    for ci in c:
        b += ci
        e = 2 * b * (n - b)
        shift += e + 2 * comb(ci, 2)
        acc = acc * _one_minus_q_pow(e, order).invert()
        acc = acc * q_factorial(ci, order).substitute_power(2).invert()
    if shift < 0:
        raise ArithmeticError("negative total q-exponent")
    return acc.shift(shift)


def mufixed_check(n: int, c: Sequence[int], order: int) -> bool:
    return mufixed_brute(n, c, order) == mufixed_closed(n, c, order)


def _xy(coeffs_by_y: dict[int, Series], x_order: int, y_order: int) -> BivarSeries:
    top = max(coeffs_by_y, default=0)
    cs = [coeffs_by_y.get(i, Series.zero(x_order, "x")) for i in range(top + 1)]
    return BivarSeries.build(cs, "y", y_order)


def _xy_one(x_order: int, y_order: int) -> BivarSeries:
    return _xy({0: Series.one(x_order, "x")}, x_order, y_order)


def _inv_monomial_minus_one(a: int, b: int, x_order: int, y_order: int) -> BivarSeries:
    """1/(x^a y^b - 1) as a truncated series."""
    den = _xy({0: Series.constant(-1, x_order, "x"), b: Series.monomial(a, x_order, var="x")},
              x_order, y_order) if b > 0 else None
    if den is None:
        raise ValueError("need b > 0")
    return den.invert()


def _x_factorial(k: int, x_order: int) -> Series:
    f = q_factorial(k, x_order)
    return Series(f.order, f.coeffs, "x")


def pi_product(c: Sequence[int], x_order: int, y_order: int) -> BivarSeries:
    acc = _xy_one(x_order, y_order)
    b = 0
    for ci in c:
        b += ci
        acc = acc * _inv_monomial_minus_one(b * b, b, x_order, y_order)
        acc = acc * (_x_factorial(ci, x_order).invert().shift(comb(ci, 2)))
    return acc


def csum_lhs(k: int, x_order: int, y_order: int) -> BivarSeries:
    acc = _xy({0: Series.zero(x_order, "x")}, x_order, y_order)
    for c in cosets.compositions(k):
        acc = acc + pi_product(c, x_order, y_order)
    return acc


def csum_rhs(k: int, x_order: int, y_order: int) -> BivarSeries:
    acc = _xy({0: _x_factorial(k, x_order).invert()}, x_order, y_order)
    for i in range(1, k + 1):
        acc = acc * _inv_monomial_minus_one(i, 1, x_order, y_order)
    return acc


def csum_check(k: int, degree: int = 12) -> bool:
    return csum_lhs(k, degree, degree) == csum_rhs(k, degree, degree)


def tech_sum(k: int) -> BivarSeries:
    """sum_i (k choose i)_x (y; x)_(k-i) y^i as an exact polynomial."""
    order = max(k * k, 1)
    acc = _xy({0: Series.zero(order, "x")}, order, None)
    for i in range(k + 1):
        binom = q_binomial(k, i, order)
        poch = _xy_one(order, None)
        for j in range(k - i):
            poch = poch * _xy({0: Series.one(order, "x"), 1: -Series.monomial(j, order, var="x")},
                              order, None)
        y_i = BivarSeries.outer_monomial(i, order, "y", "x")
        acc = acc + poch * y_i * Series(binom.order, binom.coeffs, "x")
    return acc


def tech_check(k: int) -> bool:
    s = tech_sum(k)
    return s == _xy_one(s.order, None)


# -- the n -> infinity limit --------------------------------------------------


def limit_product(order: int, s_degree: int) -> BivarSeries:
    """prod_{k>=1} (1 + q^k)(1 + s q^(2k-1)), truncated in q and s."""
    acc = BivarSeries.build([Series.one(order)], "s", s_degree)
    for k in range(1, order + 1):
        acc = acc * _one_minus_q_pow(k, order, +1)
        if 2 * k - 1 <= order:
            acc = acc * BivarSeries.build([Series.one(order), Series.monomial(2 * k - 1, order)],
                                          "s", s_degree)
    return acc


def limit_sum_form(order: int, s_degree: int) -> BivarSeries:
    """sum_k s^k q^(k^2) / (q; q)_k * (-q^(k+1); q)_inf."""
    cs = []
    for k in range(s_degree + 1):
        if k * k > order:
            cs.append(Series.zero(order))
            continue
        term = q_pochhammer(1, 1, k, order).invert() * q_pochhammer_infinity(-1, k + 1, order)
        cs.append(term.shift(k * k))
    return BivarSeries.build(cs, "s", s_degree)


def limit_forms_agree(order: int, s_degree: int) -> bool:
    return limit_sum_form(order, s_degree) == limit_product(order, s_degree)


def stabilization_table(max_q_degree: int = 12, max_s_degree: int = 3, n_max: int | None = None):
    """For each (s-degree j, q-degree d): the least n0 such that the (j, d)
    coefficient of T_closed(n) equals the limit for every n0 <= n <= n_max.

    Returns (table, all_stable) where table maps (j, d) -> n0 or None.
    """
    if n_max is None:
        n_max = max_q_degree + 2 * max_s_degree + 8
    limit = limit_product(max_q_degree, max_s_degree)
    values = {n: T_closed(n, max_q_degree) for n in range(1, n_max + 1)}
    table = {}
    for j in range(max_s_degree + 1):
        for d in range(max_q_degree + 1):
            target = limit[j][d]
            n0 = None
            for n in range(n_max, 0, -1):
                if values[n][j][d] != target:
                    break
                n0 = n
            table[(j, d)] = n0
    return table, all(v is not None and v < n_max for v in table.values())
