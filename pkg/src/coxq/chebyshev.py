"""Cigler's q-Chebyshev polynomials of the first kind and their link to T."""

from __future__ import annotations

from functools import lru_cache

from coxq.assembly import T_closed
from coxq.series import TrivarPoly

__all__ = [
    "cigler_T",
    "classical_T",
    "t_at_one",
    "main2_check",
    "cor1_check",
    "rescale_check",
]


@lru_cache(maxsize=None)
def cigler_T(n: int) -> TrivarPoly:
    """T_n = (1 + q^(n-1)) x T_(n-1) + q^(n-1) s T_(n-2), T_0 = 1, T_1 = x."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return TrivarPoly.from_dict({(0, 0): (1,)})
    if n == 1:
        return TrivarPoly.from_dict({(1, 0): (1,)})
    one_plus = [1] + [0] * (n - 2) + [1]
    first = cigler_T(n - 1).times_monomial(x=1).times_q_poly(one_plus)
    second = cigler_T(n - 2).times_monomial(s=1, q=n - 1)
    return first + second


def classical_T(n: int) -> list[int]:
    """Coefficients (ascending in x) of the Chebyshev polynomial T_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = [1], [0, 1]
    if n == 0:
        return prev
    for _ in range(n - 1):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


def _T_poly(n: int) -> dict[int, tuple[int, ...]]:
    t = T_closed(n)
    out = {}
    for k, c in enumerate(t.coeffs):
        qs = list(c.coeffs)
        while qs and qs[-1] == 0:
            qs.pop()
        if qs:
            out[k] = tuple(qs)
    return out


def t_at_one(n: int) -> dict[int, int]:
    """t_{n,k}(1) where T = sum_k t_{n,k}(q) (-s)^k."""
    return {k: (-1) ** k * sum(qs) for k, qs in _T_poly(n).items()}


def main2_check(n: int) -> bool:
    return _T_poly(n) == cigler_T(n).at_x_one()


def cor1_check(n: int) -> bool:
    coeffs = [0] * (n + 1)
    for k, v in t_at_one(n).items():
        coeffs[n - 2 * k] += v
    return coeffs == classical_T(n)


def rescale_check(n: int) -> bool:
    """Cigler's T_n(x, s, q) equals x^n T(s/x^2, q)."""
    rescaled = TrivarPoly.from_dict({(n - 2 * k, k): qs for k, qs in _T_poly(n).items()})
    return rescaled == cigler_T(n)
