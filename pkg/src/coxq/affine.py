"""The affine symmetric group as periodic permutations of Z.

An element is stored by its window ``(w(1), ..., w(n))``.  Simple generators
are ``s_0, ..., s_{n-1}``; ``s_1..s_{n-1}`` generate the finite symmetric
group S_n, embedded as the windows that permute ``1..n``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from coxq import _kernels
from coxq._kernels import EnumerationLimitError
from coxq.coxeter import recursive_absolute_length

__all__ = [
    "AffinePermutationError",
    "EnumerationLimitError",
    "AffinePermutation",
    "from_window",
    "identity",
    "simple_gen",
    "compose",
    "inverse",
    "apply",
    "length",
    "has_right_descent",
    "star",
    "is_involution",
    "is_twisted_involution",
    "absolute_length_involution",
    "twisted_absolute_length",
    "hultman_absolute_length",
    "enumerate_upto",
    "ball_by_length",
    "parse_window",
]

AUTOMORPHISMS = ("id", "flip")


class AffinePermutationError(ValueError):
    """Invalid window, rank mismatch or an element outside the required set."""


@dataclass(frozen=True, order=True)
class AffinePermutation:
    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise AffinePermutationError("rank must be positive")
        if len(self.window) != n:
            raise AffinePermutationError(f"window must have {n} entries")
        if len({v % n for v in self.window}) != n:
            raise AffinePermutationError("window entries must be distinct modulo n")
        if sum(self.window) != n * (n + 1) // 2:
            raise AffinePermutationError(
                f"window sum {sum(self.window)} != {n * (n + 1) // 2}"
            )

    def __call__(self, i: int) -> int:
        return apply(self, i)

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        return compose(self, other)

    def __str__(self):
        return ",".join(str(v) for v in self.window)

    def to_json(self) -> dict:
        return {"n": self.n, "window": list(self.window)}


def _trusted(n: int, window: tuple[int, ...]) -> AffinePermutation:
    # skip validation for windows produced by group operations
    obj = object.__new__(AffinePermutation)
    object.__setattr__(obj, "n", n)
    object.__setattr__(obj, "window", window)
    return obj


def from_window(n: int, entries: Iterable[int]) -> AffinePermutation:
    return AffinePermutation(n, tuple(int(e) for e in entries))


def parse_window(text: str) -> AffinePermutation:
    """Parse ``"2,1,3"`` or the JSON object ``{"n": 3, "window": [2, 1, 3]}``."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return from_window(int(data["n"]), data["window"])
    entries = [int(t) for t in text.split(",") if t.strip()]
    return from_window(len(entries), entries)


def identity(n: int) -> AffinePermutation:
    return _trusted(n, tuple(range(1, n + 1)))


def simple_gen(n: int, i: int) -> AffinePermutation:
    if n < 2:
        raise AffinePermutationError("simple generators need n >= 2")
    if not 0 <= i < n:
        raise AffinePermutationError(f"generator index {i} out of range for n={n}")
    out = []
    for j in range(1, n + 1):
        if j % n == i:
            out.append(j + 1)
        elif j % n == (i + 1) % n:
            out.append(j - 1)
        else:
            out.append(j)
    return _trusted(n, tuple(out))


def apply(w: AffinePermutation, i: int) -> int:
    k, r = divmod(i - 1, w.n)
    return w.window[r] + k * w.n


def _check_rank(u: AffinePermutation, v: AffinePermutation) -> None:
    if u.n != v.n:
        raise AffinePermutationError(f"rank mismatch: {u.n} vs {v.n}")


def compose(u: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    """The product u*v, acting as i -> u(v(i))."""
    _check_rank(u, v)
    n = u.n
    uw = u.window
    out = []
    for x in v.window:
        k, r = divmod(x - 1, n)
        out.append(uw[r] + k * n)
    return _trusted(n, tuple(out))


def inverse(w: AffinePermutation) -> AffinePermutation:
    n = w.n
    out = [0] * n
    for i, x in enumerate(w.window, start=1):
        k, r = divmod(x - 1, n)
        out[r] = i - k * n
    return _trusted(n, tuple(out))


def length(w: AffinePermutation) -> int:
    return _kernels.window_length(w.window, w.n)


def has_right_descent(w: AffinePermutation, i: int) -> bool:
    if not 0 <= i < w.n:
        raise AffinePermutationError(f"generator index {i} out of range")
    return bool(_kernels.has_descent(w.window, i, w.n))


def right_mult_gen(w: AffinePermutation, i: int) -> AffinePermutation:
    return _trusted(w.n, _kernels.right_mult(w.window, i, w.n))


def left_mult_gen(i: int, w: AffinePermutation) -> AffinePermutation:
    return compose(simple_gen(w.n, i), w)


def star(w: AffinePermutation) -> AffinePermutation:
    """Conjugation by tau(i) = n + 1 - i."""
    n = w.n
    return _trusted(n, tuple(n + 1 - apply(w, n + 1 - i) for i in range(1, n + 1)))


def star_gen_index(n: int, i: int) -> int:
    """Index j with star(s_i) = s_j, found by conjugating the generator."""
    target = star(simple_gen(n, i))
    for j in range(n):
        if simple_gen(n, j) == target:
            return j
    raise AffinePermutationError("conjugate of a generator is not simple")


def is_involution(w: AffinePermutation) -> bool:
    return compose(w, w).window == tuple(range(1, w.n + 1))


def is_twisted_involution(w: AffinePermutation, aut: str = "flip") -> bool:
    if aut == "id":
        return is_involution(w)
    return star(w) == inverse(w)


def absolute_length_involution(w: AffinePermutation) -> int:
    """Absolute length of an involution: (n - #fixed window points) / 2."""
    if not is_involution(w):
        raise AffinePermutationError("absolute length needs an involution")
    fixed = sum(1 for i, x in enumerate(w.window, start=1) if x == i)
    return (w.n - fixed) // 2


def twisted_absolute_length(w: AffinePermutation) -> int:
    """Absolute length twisted by conjugation with tau, for star(w) = w^-1."""
    if star(w) != inverse(w):
        raise AffinePermutationError("input is not a star-twisted involution")
    n = w.n
    hits = sum(1 for i, x in enumerate(w.window, start=1) if (x - (1 - i)) % n == 0)
    return hits // 2


def _first_descent(w: AffinePermutation, gens: Sequence[int]):
    for i in gens:
        if _kernels.has_descent(w.window, i, w.n):
            return i
    return None


def hultman_absolute_length(w: AffinePermutation, aut: str = "id", cache: dict | None = None,
                            gens: Sequence[int] | None = None) -> int:
    """Absolute length from the defining recursion, for ``aut`` in {id, flip}.

    ``gens`` restricts descents to a parabolic subgroup (e.g. S_n); it must
    contain every generator the element's reduced words use.
    """
    if aut not in AUTOMORPHISMS:
        raise AffinePermutationError(f"unknown automorphism {aut!r}")
    if not is_twisted_involution(w, aut):
        raise AffinePermutationError(f"input is not a twisted involution for {aut}")
    n = w.n
    if n == 1:
        return 0
    if gens is None:
        gens = range(n)
    gens = tuple(gens)
    if aut == "id":
        gen_map = {i: i for i in range(n)}
    else:
        gen_map = {i: star_gen_index(n, i) for i in range(n)}
    gen_cache = {i: simple_gen(n, i) for i in range(n)}
    ident = tuple(range(1, n + 1))
    return recursive_absolute_length(
        w,
        is_identity=lambda x: x.window == ident,
        find_descent=lambda x: _first_descent(x, gens),
        left_mult=lambda i, x: compose(gen_cache[i], x),
        right_mult=right_mult_gen,
        star_gen=gen_map.__getitem__,
        cache=cache,
    )


def ball_by_length(n: int, max_len: int, gens: Sequence[int] | None = None) -> list[list[AffinePermutation]]:
    """All elements of length <= max_len, grouped by length.

    ``gens`` defaults to every simple generator; ``range(1, n)`` gives S_n.
    """
    if n == 1:
        return [[identity(1)]]
    if n < 1 or max_len < 0:
        raise AffinePermutationError("need n >= 1 and max_len >= 0")
    if gens is None:
        gens = range(n)
    levels = _kernels.ball_levels(n, max_len, tuple(gens), _kernels.max_ball())
    return [[_trusted(n, w) for w in level] for level in levels]


def enumerate_upto(n: int, max_len: int, gens: Sequence[int] | None = None) -> set[AffinePermutation]:
    return {w for level in ball_by_length(n, max_len, gens) for w in level}


def iter_ball(n: int, max_len: int, gens: Sequence[int] | None = None) -> Iterator[tuple[int, AffinePermutation]]:
    for ell, level in enumerate(ball_by_length(n, max_len, gens)):
        for w in level:
            yield ell, w
