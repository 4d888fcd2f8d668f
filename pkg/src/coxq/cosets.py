"""Minimal (S_n, S_n)-double coset involutions in the affine symmetric group.

Involutions that are minimal double coset representatives correspond to
weakly increasing antisymmetric integer sequences ``a`` via ``w -> lambda(w)``
and ``a -> w_a``.  Such a sequence is in turn encoded by two positive
sequences: the multiplicities ``c`` of its negative values and the gaps
``d`` between them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import comb
from typing import Iterator, Sequence

from coxq import affine
from coxq.affine import AffinePermutation, compose, inverse, simple_gen
from coxq.series import Series, q_factorial

__all__ = [
    "CosetError",
    "LambdaSeq",
    "BlockStats",
    "CosetDatum",
    "block_ends",
    "lambda_of",
    "block_stats",
    "build_from_lambda",
    "is_min_rep",
    "build_from_mu_delta",
    "omega_length",
    "pairwise_length",
    "coset_K",
    "coset_K_blocks",
    "fixed_series_closed",
    "fixed_series_brute",
    "compositions",
    "enumerate_omega",
    "finite_part",
]


class CosetError(ValueError):
    """Input outside the domain of a coset construction."""


@dataclass(frozen=True)
class LambdaSeq:
    entries: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def weakly_increasing(self) -> bool:
        return all(x <= y for x, y in zip(self.entries, self.entries[1:]))

    @property
    def antisymmetric(self) -> bool:
        a = self.entries
        return all(a[i] + a[-1 - i] == 0 for i in range(len(a)))

    @property
    def zero_sum(self) -> bool:
        return sum(self.entries) == 0

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class BlockStats:
    beta: tuple[int, ...]
    beta_minus: tuple[int, ...]
    mu_minus: tuple[int, ...]
    delta_minus: tuple[int, ...]
    z: int
    values: tuple[int, ...] = field(default=(), repr=False)


def block_ends(a: Sequence[int]) -> tuple[int, ...]:
    """1-based final positions of the maximal runs of equal entries."""
    n = len(a)
    return tuple(k for k in range(1, n + 1) if k == n or a[k - 1] != a[k])


def lambda_of(w: AffinePermutation) -> LambdaSeq:
    n = w.n
    return LambdaSeq(tuple((x - 1) // n for x in w.window))


def block_stats(a: LambdaSeq | Sequence[int]) -> BlockStats:
    a = a if isinstance(a, LambdaSeq) else LambdaSeq(tuple(a))
    if not a.weakly_increasing:
        raise CosetError("block statistics need a weakly increasing sequence")
    beta = block_ends(a.entries)
    values = tuple(a[b - 1] for b in beta)
    # negative blocks, selected by their common value
    m0 = sum(1 for v in values if v < 0)
    beta_minus = beta[:m0]
    mu_minus = tuple(b - p for b, p in zip(beta_minus, (0,) + beta_minus))
    neg = values[:m0]
    delta_minus = tuple(y - x for x, y in zip(neg, neg[1:] + (0,)))
    z = sum(1 for x in a if x == 0)
    return BlockStats(beta, beta_minus, mu_minus, delta_minus, z, values)


def build_from_lambda(a: LambdaSeq | Sequence[int]) -> AffinePermutation:
    """The permutation w_a mapping n*k + I_i onto n*(k + v_i) + J_i in order,
    where I_i are the runs of ``a``, v_i their values and J_i = n + 1 - I_i."""
    a = tuple(a)
    n = len(a)
    if sum(a) != 0:
        raise CosetError("w_a lies in the affine symmetric group only when sum(a) == 0")
    window = []
    start = 1
    for end in block_ends(a):
        v = a[end - 1]
        j_lo = n + 1 - end
        for r in range(end - start + 1):
            window.append(n * v + j_lo + r)
        start = end + 1
    return affine.from_window(n, window)


def is_min_rep(w: AffinePermutation) -> bool:
    """Minimal length in its (S_n, S_n)-double coset."""
    def increasing(t):
        return all(x < y for x, y in zip(t, t[1:]))
    return increasing(w.window) and increasing(inverse(w).window)


def _check_cd(n: int, c: Sequence[int], d: Sequence[int]) -> None:
    if len(c) != len(d):
        raise CosetError("c and d must have the same length")
    if any(x <= 0 for x in c) or any(x <= 0 for x in d):
        raise CosetError("c and d must be positive")
    if sum(c) > n // 2:
        raise CosetError(f"sum(c) = {sum(c)} exceeds floor(n/2) = {n // 2}")


def build_from_mu_delta(n: int, c: Sequence[int], d: Sequence[int]) -> LambdaSeq:
    _check_cd(n, c, d)
    m = len(c)
    e = [sum(d[k:]) for k in range(m)]
    z = n - 2 * sum(c)
    left = [-e[k] for k in range(m) for _ in range(c[k])]
    right = [e[k] for k in reversed(range(m)) for _ in range(c[k])]
    return LambdaSeq(tuple(left + [0] * z + right))


def omega_length(n: int, c: Sequence[int], d: Sequence[int]) -> tuple[int, int]:
    """(length, absolute length) of the involution with statistics (c, d)."""
    _check_cd(n, c, d)
    z = n - 2 * sum(c)
    total = comb(z, 2) - comb(n, 2)
    b = 0
    for ci, di in zip(c, d):
        b += ci
        total += 2 * (b * (n - b) * di + comb(ci, 2))
    return total, sum(c)


def pairwise_length(a: Sequence[int]) -> int:
    """sum_{i<j} max(a_j - a_i - 1, 0), valid for lambda of a twisted-involution
    minimal representative."""
    a = tuple(a)
    n = len(a)
    return sum(max(a[j] - a[i] - 1, 0) for i in range(n) for j in range(i + 1, n))


def _conjugate_gen_index(w: AffinePermutation, i: int) -> int | None:
    x = compose(compose(w, simple_gen(w.n, i)), w)
    for j in range(1, w.n):
        if x == simple_gen(w.n, j):
            return j
    return None


def coset_K(w: AffinePermutation) -> frozenset[int]:
    """Indices i in [n-1] with w s_i w equal to some s_j, j in [n-1]."""
    if not (affine.is_involution(w) and is_min_rep(w)):
        raise CosetError("coset_K needs an involution that is a minimal double coset representative")
    return frozenset(i for i in range(1, w.n) if _conjugate_gen_index(w, i) is not None)


def coset_K_blocks(n: int, c: Sequence[int]) -> frozenset[int]:
    """K read off from the block ends b_i of c: everything except the ends."""
    cut = set()
    b = 0
    for ci in c:
        b += ci
        cut.add(b)
        cut.add(n - b)
    return frozenset(k for k in range(1, n) if k not in cut)


def coset_action(w: AffinePermutation, K: frozenset[int]) -> tuple[tuple[int, int], ...]:
    """The permutation of K induced by x -> w x w."""
    return tuple(sorted((i, _conjugate_gen_index(w, i)) for i in K))


def fixed_series_closed(c: Sequence[int], z: int, order: int) -> Series:
    acc = q_factorial(z, order)
    for ci in c:
        acc = acc * q_factorial(ci, order).substitute_power(2)
    return acc


def _parabolic_elements(n: int, K: frozenset[int]) -> Iterator[tuple[int, tuple[int, ...]]]:
    """(length, window) for every element of the parabolic subgroup <s_i : i in K>.

    The subgroup is the product of symmetric groups on the runs of positions
    linked by K, so each factor is enumerated by its permutations.
    """
    blocks = []
    start = 1
    for k in range(1, n + 1):
        if k == n or k not in K:
            blocks.append(list(range(start, k + 1)))
            start = k + 1
    choices = [list(permutations(b)) for b in blocks]

    def rec(idx, prefix, ell):
        if idx == len(blocks):
            yield ell, tuple(prefix)
            return
        for p in choices[idx]:
            inv = sum(1 for x in range(len(p)) for y in range(x + 1, len(p)) if p[x] > p[y])
            yield from rec(idx + 1, prefix + list(p), ell + inv)

    yield from rec(0, [], 0)


def fixed_series_brute(w: AffinePermutation, order: int, K: frozenset[int] | None = None) -> Series:
    """Length generating function of {x in W_K : w x w = x} by enumeration."""
    if K is None:
        K = coset_K(w)
    terms: dict[int, int] = {}
    n = w.n
    for ell, win in _parabolic_elements(n, K):
        x = affine.from_window(n, win)
        if compose(compose(w, x), w) == x:
            terms[ell] = terms.get(ell, 0) + 1
    return Series.from_dict(terms, order)


@dataclass(frozen=True)
class CosetDatum:
    w: AffinePermutation
    K: frozenset[int]
    stats: BlockStats
    length: int
    abs_length: int
    mu: tuple[int, ...]
    delta: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.w.n

    def to_json(self) -> dict:
        return {
            "n": self.w.n,
            "window": list(self.w.window),
            "K": sorted(self.K),
            "mu": list(self.mu),
            "delta": list(self.delta),
            "z": self.stats.z,
            "length": self.length,
            "abs_length": self.abs_length,
        }


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into positive parts, in lexicographic order."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def iter_deltas(n: int, c: Sequence[int], max_len: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """All d (lexicographic) with omega_length(n, c, d) <= max_len, with the length.

    Length is affine in each d_i with positive slope 2*b_i*(n - b_i).
    """
    m = len(c)
    if m == 0:
        yield (), 0
        return
    slopes = []
    b = 0
    for ci in c:
        b += ci
        slopes.append(2 * b * (n - b))
    base, _ = omega_length(n, c, (1,) * m)
    if base > max_len:
        return

    def rec(i, prefix, cur):
        if i == m:
            yield tuple(prefix), cur
            return
        d = 1
        while cur + slopes[i] * (d - 1) <= max_len:
            yield from rec(i + 1, prefix + [d], cur + slopes[i] * (d - 1))
            d += 1

    yield from rec(0, [], base)


def datum_from_cd(n: int, c: Sequence[int], d: Sequence[int]) -> CosetDatum:
    a = build_from_mu_delta(n, c, d)
    w = build_from_lambda(a)
    ell, abs_ell = omega_length(n, c, d)
    return CosetDatum(
        w=w,
        K=coset_K_blocks(n, c),
        stats=block_stats(a),
        length=ell,
        abs_length=abs_ell,
        mu=tuple(c),
        delta=tuple(d),
    )


def enumerate_omega(n: int, max_len: int) -> list[CosetDatum]:
    """Every w in Omega_n with length <= max_len, ordered by (sum c, c, d)."""
    if n < 1:
        raise CosetError("n must be positive")
    out = []
    for k in range(n // 2 + 1):
        for c in compositions(k):
            for d, _ in iter_deltas(n, c, max_len):
                out.append(datum_from_cd(n, c, d))
    return out


def finite_part(w: AffinePermutation) -> tuple[int, ...]:
    """Image in S_n: i -> w(i) - n * lambda_i(w)."""
    n = w.n
    return tuple(x - n * ((x - 1) // n) for x in w.window)
