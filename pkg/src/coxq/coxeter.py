"""Group-agnostic twisted absolute length by the defining recursion."""

from __future__ import annotations

from typing import Callable, Hashable, Optional, TypeVar

E = TypeVar("E", bound=Hashable)


def recursive_absolute_length(
    w: E,
    *,
    is_identity: Callable[[E], bool],
    find_descent: Callable[[E], Optional[int]],
    left_mult: Callable[[int, E], E],
    right_mult: Callable[[E, int], E],
    star_gen: Callable[[int], int],
    cache: Optional[dict] = None,
) -> int:
    """Evaluate the twisted absolute length of a twisted involution ``w``.

    Uses: value 0 at the identity; invariance under twisted conjugation
    w -> s* w s; and a drop by one along w -> w s when s* w = w s.  For a right
    descent s of a twisted involution, either s* w s == w or it is two
    shorter, so the recursion terminates.
    """
    if cache is None:
        cache = {}
    path = []
    extra = 0
    cur = w
    while True:
        if cur in cache:
            base = cache[cur]
            break
        if is_identity(cur):
            base = 0
            break
        s = find_descent(cur)
        if s is None:
            raise ValueError("non-identity element without a right descent")
        ws = right_mult(cur, s)
        conj = left_mult(star_gen(s), ws)
        path.append((cur, extra))
        if conj == cur:
            extra += 1
            cur = ws
        else:
            cur = conj
    for elem, before in path:
        cache[elem] = base + extra - before
    return base + extra
