"""Verification suites: every identity run as an exact closed-vs-enumerated check.

Each check is a module-level function returning a bool (or a
``(bool, detail)`` pair) so that it can be shipped to worker processes.
Results are always reported in the order the checks were generated.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from coxq import affine, assembly, chebyshev, cosets, universal
from coxq.assembly import GroupDescriptor
from coxq.series import Series, q_binomial, q_binomial_pascal

SUITES = ("series", "affine", "cosets", "assembly", "chebyshev", "universal")

# word enumeration grows like (n-1)^order, so the universal suite is capped
UNIVERSAL_MAX_ORDER = 12


@dataclass(frozen=True)
class Check:
    name: str
    params: dict = field(hash=False)
    order: int | None
    func: str

    def run(self) -> dict:
        fn = globals()[self.func]
        try:
            out = fn(**self.params)
        except Exception as exc:  # a crash is a failure, reported not raised
            status, detail = "error", f"{type(exc).__name__}: {exc}"
        else:
            ok, detail = out if isinstance(out, tuple) else (out, None)
            status = "pass" if ok else "fail"
        rec = {"check": self.name, "params": self.params, "status": status, "order": self.order}
        if detail is not None:
            rec["detail"] = detail
        return rec


# -- series -------------------------------------------------------------------


def chk_invert_roundtrip(order: int, trials: int, seed: int):
    rng = random.Random(seed)
    for _ in range(trials):
        cs = [rng.choice((1, -1))] + [rng.randint(-9, 9) for _ in range(order)]
        a = Series.from_coeffs(cs, order)
        one = Series.one(order)
        if a * a.invert() != one or a.invert() * a != one:
            return False
    return True


def chk_ring_axioms(order: int, trials: int, seed: int):
    rng = random.Random(seed)
    for _ in range(trials):
        a, b, c = (Series.from_coeffs([rng.randint(-5, 5) for _ in range(order + 1)], order)
                   for _ in range(3))
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c or a * b != b * a:
            return False
    return True


def chk_qbinomial(n_max: int):
    order = n_max * n_max
    for n in range(n_max + 1):
        for k in range(n + 1):
            x = q_binomial(n, k, order)
            if x != q_binomial_pascal(n, k, order) or x.evaluate_at_one() != comb(n, k):
                return False
    return True


# -- affine -------------------------------------------------------------------


def chk_ball_counts(n: int, max_len: int):
    g = GroupDescriptor("affine_symmetric", n)
    return assembly.poincare_brute(g, max_len) == assembly.poincare_closed(g, max_len)


def chk_length_parity(n: int, max_len: int):
    for w in affine.enumerate_upto(n, max_len):
        ell = affine.length(w)
        for i in range(n):
            ws = affine.compose(w, affine.simple_gen(n, i))
            d = affine.length(ws) - ell
            if abs(d) != 1 or affine.has_right_descent(w, i) != (d == -1):
                return False
        if affine.length(affine.inverse(w)) != ell or affine.length(affine.star(w)) != ell:
            return False
    return True


def chk_abs_length_formulas(n: int, max_len: int):
    cache_id, cache_flip = {}, {}
    seen = 0
    for w in affine.enumerate_upto(n, max_len):
        if affine.is_involution(w):
            seen += 1
            if affine.absolute_length_involution(w) != affine.hultman_absolute_length(w, "id", cache_id):
                return False, {"window": list(w.window), "aut": "id"}
        if affine.is_twisted_involution(w, "flip"):
            seen += 1
            if affine.twisted_absolute_length(w) != affine.hultman_absolute_length(w, "flip", cache_flip):
                return False, {"window": list(w.window), "aut": "flip"}
    return True, {"twisted_involutions": seen}


# -- cosets -------------------------------------------------------------------


def chk_omega_vs_bfs(n: int, max_len: int):
    bfs = {w for w in affine.enumerate_upto(n, max_len)
           if affine.is_involution(w) and cosets.is_min_rep(w)}
    gen = {d.w for d in cosets.enumerate_omega(n, max_len)}
    return bfs == gen, {"size": len(bfs)}


def chk_lambda_roundtrip(trials: int, seed: int):
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(2, 9)
        a = sorted(rng.randint(-6, 6) for _ in range(n - 1))
        a.append(-sum(a))
        a.sort()
        a = tuple(a)
        w = cosets.build_from_lambda(a)
        if cosets.lambda_of(w).entries != a:
            return False
        if cosets.build_from_lambda(cosets.lambda_of(w)) != w:
            return False
        if not cosets.is_min_rep(w) or affine.star(w) != affine.inverse(w):
            return False
    return True


def chk_cd_roundtrip(trials: int, seed: int):
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(2, 12)
        c = []
        while sum(c) < n // 2 and rng.random() < 0.7:
            c.append(rng.randint(1, n // 2 - sum(c)))
        d = [rng.randint(1, 5) for _ in c]
        st = cosets.block_stats(cosets.build_from_mu_delta(n, c, d))
        if st.mu_minus != tuple(c) or st.delta_minus != tuple(d):
            return False
    return True


def chk_omega_lengths(n: int, max_len: int):
    for d in cosets.enumerate_omega(n, max_len):
        a = cosets.lambda_of(d.w).entries
        three = (d.length, cosets.pairwise_length(a), affine.length(d.w))
        if len(set(three)) != 1:
            return False, {"window": list(d.w.window), "lengths": list(three)}
        if affine.absolute_length_involution(d.w) != sum(d.mu) or d.abs_length != sum(d.mu):
            return False
        perm = cosets.finite_part(d.w)
        if any(perm[perm[i] - 1] != i + 1 for i in range(n)):
            return False
    return True


def chk_fixed_series(n: int, max_len: int, order: int):
    for d in cosets.enumerate_omega(n, max_len):
        K = cosets.coset_K(d.w)
        if K != cosets.coset_K_blocks(n, d.mu):
            return False, {"window": list(d.w.window), "K": sorted(K)}
        brute = cosets.fixed_series_brute(d.w, order, K)
        if brute != cosets.fixed_series_closed(d.mu, d.stats.z, order):
            return False, {"window": list(d.w.window)}
    return True


def chk_coset_K(n: int, max_len: int):
    for d in cosets.enumerate_omega(n, max_len):
        if cosets.coset_K(d.w) != cosets.coset_K_blocks(n, d.mu):
            return False
    return True


# -- assembly -----------------------------------------------------------------


def chk_T_golden():
    expected = {
        1: [[1]],
        2: [[1, 1], [0, 1]],
        3: [[1, 1, 1, 1], [0, 1, 1, 1]],
        4: [[1, 1, 1, 2, 1, 1, 1], [0, 1, 1, 2, 2, 1, 1], [0, 0, 0, 0, 1]],
    }
    for n, rows in expected.items():
        t = assembly.T_closed(n)
        if len(t.coeffs) != len(rows):
            return False
        for c, row in zip(t.coeffs, rows):
            if list(c.coeffs) + [0] * (len(row) - len(c.coeffs)) != row + [0] * (len(c.coeffs) - len(row)):
                return False
    return True


def chk_T_closed_brute(n: int, order: int):
    return assembly.T_brute(n, order) == assembly.T_closed(n, order)


def chk_T_normalization(n: int):
    return assembly.T_closed(n).specialize_outer(-1) == 1


def chk_lusztig(family: str, n: int, aut, order: int):
    if family == "universal":
        g = GroupDescriptor(family, n, f=aut)
        return assembly.lusztig_identity_check(g, universal.standard_automorphism(n, aut), order)
    return assembly.lusztig_identity_check(GroupDescriptor(family, n), aut, order)


def chk_L_closed(family: str, n: int, f, order: int):
    if family == "universal":
        a = universal.standard_automorphism(n, f)
        return universal.uc_brute(n, a, "L", order) == universal.uc_closed(n, f, "L", order)
    g = GroupDescriptor(family, n)
    return assembly.L_brute(g, "id", order) == assembly.L_closed(g, order)


def chk_LJ_example(n: int, order: int):
    lj = assembly.LJ_finite_example(n, order)
    return lj.outer_degree == 1 and lj.specialize_outer(-1) == assembly.L_closed(
        GroupDescriptor("symmetric", n + 1), order)


def chk_sigma(n: int, order: int):
    for k in range(n // 2 + 1):
        if assembly.sigma_brute(n, k, order) != assembly.sigma_closed(n, k, order):
            return False, {"k": k}
    return assembly.T_from_sigma(n, order) == assembly.T_closed(n, order)


def chk_mufixed(n: int, max_sum: int, order: int):
    for k in range(min(max_sum, n // 2) + 1):
        for c in cosets.compositions(k):
            if not assembly.mufixed_check(n, c, order):
                return False, {"c": list(c)}
    return True


def chk_tech(k: int):
    return assembly.tech_check(k)


def chk_csum(k: int, degree: int):
    return assembly.csum_check(k, degree)


def chk_limit_forms(order: int, s_degree: int):
    return assembly.limit_forms_agree(order, s_degree)


def chk_stabilization(max_q_degree: int, max_s_degree: int):
    table, ok = assembly.stabilization_table(max_q_degree, max_s_degree)
    per_degree = {str(d): max(table[(j, d)] or -1 for j in range(max_s_degree + 1))
                  for d in range(max_q_degree + 1)}
    return ok, {"stabilization_n": per_degree}


def chk_poincare_ratio(n: int, order: int):
    return assembly.poincare_ratio_check(n, order)


def chk_T_nonnegative(n: int):
    t = assembly.T_closed(n)
    return all(x >= 0 for c in t.coeffs for x in c.coeffs) and t.outer_degree == n // 2


# -- chebyshev ----------------------------------------------------------------


def chk_main2(n: int):
    return chebyshev.main2_check(n)


def chk_cor1(n: int):
    return chebyshev.cor1_check(n)


def chk_rescale(n: int):
    return chebyshev.rescale_check(n)


# -- universal ----------------------------------------------------------------


def chk_uc_series(n: int, f: int, order: int):
    a = universal.standard_automorphism(n, f)
    return all(
        universal.uc_brute(n, a, kind, order) == universal.uc_closed(n, f, kind, order)
        for kind in ("P", "F", "L")
    )


def chk_uc_TJ(n: int, j: int, order: int):
    b = universal.uc_brute(n, None, "TJ", order, j=j)
    return b == universal.uc_closed(n, j, "TJ", order) and b.specialize_outer(-1) == 1


def chk_uc_nonpolynomial(n: int, j: int, order: int):
    t = universal.uc_closed(n, j, "TJ", order)
    return t[1][order] != 0, {"s1_coefficient_at_order": t[1][order]}


# -- suite construction -------------------------------------------------------


def _valid_f(n: int):
    return [f for f in range(n + 1) if (n - f) % 2 == 0]


def build_checks(suite: str, n_max: int = 4, order: int = 24) -> list[Check]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    wanted = SUITES if suite == "all" else (suite,)
    out: list[Check] = []

    def add(name, func, order_=None, **params):
        out.append(Check(name, params, order_, func))

    if "series" in wanted:
        add("invert_roundtrip", "chk_invert_roundtrip", order, order=order, trials=200, seed=1)
        add("ring_axioms", "chk_ring_axioms", order, order=order, trials=50, seed=2)
        add("q_binomial", "chk_qbinomial", None, n_max=12)
    if "affine" in wanted:
        for n in range(2, n_max + 1):
            L = min(order, 12)
            add("ball_counts_bott", "chk_ball_counts", L, n=n, max_len=L)
            add("length_parity", "chk_length_parity", None, n=n, max_len=min(order, 8))
            add("abs_length_formulas", "chk_abs_length_formulas", None, n=n, max_len=min(order, 10))
    if "cosets" in wanted:
        add("lambda_roundtrip", "chk_lambda_roundtrip", None, trials=500, seed=3)
        add("mu_delta_roundtrip", "chk_cd_roundtrip", None, trials=500, seed=4)
        for n in range(2, n_max + 1):
            add("omega_vs_bfs", "chk_omega_vs_bfs", None, n=n, max_len=min(order, 12))
        for n in range(2, max(n_max, 5) + 1):
            add("omega_lengths", "chk_omega_lengths", None, n=n, max_len=min(order, 12))
            add("fixed_series", "chk_fixed_series", order, n=n, max_len=min(order, 10), order=order)
        for n in range(2, max(n_max, 6) + 1):
            add("coset_K_blocks", "chk_coset_K", None, n=n, max_len=min(order, 10))
    if "assembly" in wanted:
        add("T_golden", "chk_T_golden")
        for n in range(2, max(n_max, 6) + 1):
            add("T_closed_vs_brute", "chk_T_closed_brute", order, n=n, order=order)
        for n in range(1, 13):
            add("T_normalization", "chk_T_normalization", None, n=n)
        for n in range(1, 17):
            add("T_nonnegative", "chk_T_nonnegative", None, n=n)
        for n in range(1, max(n_max, 5) + 1):
            for aut in ("id", "flip"):
                add("lusztig", "chk_lusztig", min(order, 16), family="symmetric", n=n, aut=aut,
                    order=min(order, 16))
            add("L_product", "chk_L_closed", min(order, 16), family="symmetric", n=n, f=None,
                order=min(order, 16))
        for n in range(1, n_max + 1):
            for aut in ("id", "flip"):
                add("lusztig", "chk_lusztig", min(order, 14), family="affine_symmetric", n=n, aut=aut,
                    order=min(order, 14))
            add("L_product", "chk_L_closed", min(order, 14), family="affine_symmetric", n=n, f=None,
                order=min(order, 14))
        for n in range(2, 7):
            add("LJ_finite_example", "chk_LJ_example", order, n=n, order=order)
        for n in range(1, max(n_max, 6) + 1):
            add("poincare_ratio", "chk_poincare_ratio", order, n=n, order=order)
            add("sigma", "chk_sigma", min(order, 16), n=n, order=min(order, 16))
        for n in range(2, max(n_max, 6) + 1):
            add("mufixed", "chk_mufixed", min(order, 16), n=n, max_sum=3, order=min(order, 16))
        for k in range(9):
            add("tech_identity", "chk_tech", None, k=k)
        for k in range(7):
            add("csum", "chk_csum", 12, k=k, degree=12)
        add("limit_forms", "chk_limit_forms", 20, order=20, s_degree=4)
        add("limit_stabilization", "chk_stabilization", 12, max_q_degree=12, max_s_degree=3)
    if "chebyshev" in wanted:
        for n in range(1, 17):
            add("main2", "chk_main2", None, n=n)
        for n in range(1, 13):
            add("cor1", "chk_cor1", None, n=n)
            add("rescale", "chk_rescale", None, n=n)
    if "universal" in wanted:
        uo = min(order, UNIVERSAL_MAX_ORDER)
        for n in range(1, n_max + 1):
            for f in _valid_f(n):
                add("uc_series", "chk_uc_series", uo, n=n, f=f, order=uo)
                add("lusztig", "chk_lusztig", uo, family="universal", n=n, aut=f, order=uo)
            for j in range(n + 1):
                add("uc_TJ", "chk_uc_TJ", uo, n=n, j=j, order=uo)
                if n >= 3 and n > j >= 1:
                    add("uc_TJ_nonpolynomial", "chk_uc_nonpolynomial", uo, n=n, j=j, order=uo)
    return out


def _run(check: Check) -> dict:
    return check.run()


def run_checks(checks: list[Check], jobs: int = 1) -> list[dict]:
    if jobs <= 1:
        return [c.run() for c in checks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run, checks))
