"""Universal Coxeter groups U_n: generators 1..n, no braid relations.

Every word without equal adjacent letters is the unique reduced word of its
element, so group elements are stored as such words (tuples).
"""

from __future__ import annotations

from typing import Iterator, Sequence

from coxq.coxeter import recursive_absolute_length
from coxq.series import BivarSeries, Series

__all__ = [
    "UniversalError",
    "UCWord",
    "standard_automorphism",
    "parse_word",
    "multiply",
    "uc_inverse",
    "apply_aut",
    "iter_words",
    "twisted_involutions",
    "uc_absolute_length",
    "uc_closed",
    "uc_brute",
]

KINDS = ("P", "F", "L", "TJ")


class UniversalError(ValueError):
    """Bad word, automorphism or parameter for a universal Coxeter group."""


UCWord = tuple[int, ...]


def _check_word(n: int, w: Sequence[int]) -> UCWord:
    w = tuple(int(x) for x in w)
    if any(not 1 <= x <= n for x in w):
        raise UniversalError(f"letters must lie in 1..{n}")
    if any(a == b for a, b in zip(w, w[1:])):
        raise UniversalError("adjacent letters must differ")
    return w


def parse_word(n: int, text: str) -> UCWord:
    """Space-separated generator indices, e.g. ``"1 2 1"``."""
    return _check_word(n, text.split())


def standard_automorphism(n: int, f: int) -> tuple[int, ...]:
    """Involution fixing generators 1..f and swapping (f+1, f+2), (f+3, f+4), ..."""
    if not 0 <= f <= n or (n - f) % 2:
        raise UniversalError(f"need 0 <= f <= n with n - f even (n={n}, f={f})")
    aut = list(range(1, n + 1))
    for i in range(f, n, 2):
        aut[i], aut[i + 1] = i + 2, i + 1
    return tuple(aut)


def _check_aut(n: int, aut: Sequence[int] | None) -> tuple[int, ...]:
    if aut is None:
        return tuple(range(1, n + 1))
    aut = tuple(int(a) for a in aut)
    if sorted(aut) != list(range(1, n + 1)):
        raise UniversalError("automorphism must be a permutation of 1..n")
    if any(aut[aut[i] - 1] != i + 1 for i in range(n)):
        raise UniversalError("automorphism must be an involution")
    return aut


def multiply(u: UCWord, v: UCWord) -> UCWord:
    """Concatenate, cancelling equal letters across the boundary."""
    i = 0
    while i < len(u) and i < len(v) and u[len(u) - 1 - i] == v[i]:
        i += 1
    return u[: len(u) - i] + v[i:]


def uc_inverse(w: UCWord) -> UCWord:
    return tuple(reversed(w))


def apply_aut(aut: Sequence[int], w: UCWord) -> UCWord:
    return tuple(aut[x - 1] for x in w)


def iter_words(alphabet: Sequence[int], max_len: int) -> Iterator[UCWord]:
    """All reduced words over ``alphabet`` of length <= max_len (depth first)."""
    stack: list[UCWord] = [()]
    while stack:
        w = stack.pop()
        yield w
        if len(w) < max_len:
            last = w[-1] if w else None
            for a in alphabet:
                if a != last:
                    stack.append(w + (a,))


def _word_counts(alphabet: Sequence[int], max_len: int) -> list[int]:
    counts = [0] * (max_len + 1)
    for w in iter_words(alphabet, max_len):
        counts[len(w)] += 1
    return counts


def twisted_involutions(n: int, aut: Sequence[int] | None, max_len: int) -> Iterator[UCWord]:
    """Words w with w^-1 = aut(w), i.e. reversed(w) == aut(w) letterwise.

    Such a word is fixed by its first half (and, for odd length, a middle
    letter); each candidate is checked against the defining equation.
    """
    aut = _check_aut(n, aut)
    letters = range(1, n + 1)
    for half in iter_words(letters, max_len // 2):
        tail = tuple(aut[x - 1] for x in reversed(half))
        cands = []
        if 2 * len(half) <= max_len:
            cands.append(half + tail)
        if 2 * len(half) + 1 <= max_len:
            cands.extend(half + (r,) + tail for r in letters)
        for w in cands:
            if all(a != b for a, b in zip(w, w[1:])) and uc_inverse(w) == apply_aut(aut, w):
                yield w


def uc_absolute_length(w: UCWord, aut: Sequence[int] | None, n: int, cache: dict | None = None) -> int:
    """Twisted absolute length by the defining recursion."""
    aut = _check_aut(n, aut)
    if uc_inverse(w) != apply_aut(aut, w):
        raise UniversalError("word is not a twisted involution")
    return recursive_absolute_length(
        w,
        is_identity=lambda x: not x,
        find_descent=lambda x: x[-1] if x else None,
        left_mult=lambda s, x: multiply((s,), x),
        right_mult=lambda x, s: multiply(x, (s,)),
        star_gen=lambda s: aut[s - 1],
        cache=cache,
    )


def _geom(a: int, d: int, order: int) -> Series:
    """1 / (1 - a q^d)."""
    return (Series.one(order) - Series.monomial(d, order, a)).invert()


def uc_closed(n: int, param: int, kind: str, order: int):
    """Closed forms: ``param`` is f (fixed generators) for P/F/L, j = |J| for TJ."""
    if kind not in KINDS:
        raise UniversalError(f"unknown kind {kind!r}")
    one_plus_q = Series.from_coeffs([1, 1], order)
    if kind == "P":
        return one_plus_q * _geom(n - 1, 1, order)
    if kind == "TJ":
        j = param
        if not 0 <= j <= n:
            raise UniversalError("need 0 <= j <= n")
        frac = (
            Series.monomial(1, order, n - j)
            * Series.from_coeffs([1, -1], order)
            * _geom(j - 1, 2, order)
            * _geom(n - 1, 1, order)
        )
        return BivarSeries.build([Series.one(order) + frac, frac], "s")
    f = param
    standard_automorphism(n, f)
    if kind == "F":
        return one_plus_q * _geom(f - 1, 1, order)
    return (
        Series.from_coeffs([1, 0, 1], order)
        * one_plus_q.invert()
        * (Series.one(order) - Series.monomial(1, order, f - 1))
        * _geom(n - 1, 2, order)
    )


def _L_from_words(n: int, aut: Sequence[int] | None, order: int) -> Series:
    aut = _check_aut(n, aut)
    r = Series.from_coeffs([-1, 1], order) * Series.from_coeffs([1, 1], order).invert()
    powers = [Series.one(order)]
    cache: dict = {}
    acc = Series.zero(order)
    for w in twisted_involutions(n, aut, order):
        k = uc_absolute_length(w, aut, n, cache)
        while len(powers) <= k:
            powers.append(powers[-1] * r)
        acc = acc + powers[k].shift(len(w))
    return acc


def _relabel(K: Sequence[int], perm: dict[int, int]) -> tuple[int, ...]:
    index = {k: i + 1 for i, k in enumerate(K)}
    return tuple(index[perm[k]] for k in K)


def _TJ_brute(n: int, j: int, order: int) -> BivarSeries:
    if not 0 <= j <= n:
        raise UniversalError("need 0 <= j <= n")
    J = tuple(range(1, j + 1))
    P_J_sq = Series.from_coeffs(_word_counts(J, order), order).substitute_power(2)
    L_W = _L_from_words(n, None, order)
    r = Series.from_coeffs([1, -1], order) * Series.from_coeffs([1, 1], order).invert()
    s_fac = BivarSeries.build([Series.zero(order), r], "s")
    cache: dict = {}
    acc = BivarSeries.build([Series.zero(order)], "s")
    for w in twisted_involutions(n, None, order):
        # minimal (W_J, W_J) double coset representative: no descent in J on either side
        if w and (w[0] in J or w[-1] in J):
            continue
        image = {}
        for s in J:
            x = multiply(multiply(w, (s,)), w)
            if len(x) == 1 and x[0] in J:
                image[x[0]] = s
        K = tuple(sorted(image))
        # diamond is an involution on K: x -> w x w
        perm = {t: image[t] for t in K}
        P_K_sq = Series.from_coeffs(_word_counts(K, order), order).substitute_power(2)
        L_K = _L_from_words(len(K), _relabel(K, perm) if K else None, order)
        k = uc_absolute_length(w, None, n, cache)
        term = (P_J_sq * P_K_sq.invert() * L_K).shift(len(w))
        acc = acc + (s_fac ** k) * term
    return acc * L_W.invert()


def uc_brute(n: int, aut: Sequence[int] | None, kind: str, order: int, j: int | None = None):
    """Enumerate words up to length ``order``; ``aut`` None is the identity."""
    if kind not in KINDS:
        raise UniversalError(f"unknown kind {kind!r}")
    if kind == "P":
        return Series.from_coeffs(_word_counts(range(1, n + 1), order), order)
    if kind == "TJ":
        if j is None:
            raise UniversalError("TJ needs j")
        return _TJ_brute(n, j, order)
    aut = _check_aut(n, aut)
    if kind == "F":
        fixed = [a for a in range(1, n + 1) if aut[a - 1] == a]
        counts = [0] * (order + 1)
        for w in iter_words(fixed, order):
            if apply_aut(aut, w) == w:
                counts[len(w)] += 1
        return Series.from_coeffs(counts, order)
    return _L_from_words(n, aut, order)
