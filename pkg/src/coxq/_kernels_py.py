"""Pure-Python enumeration kernels for windows of affine permutations.

A window is a tuple ``(w(1), ..., w(n))``; ``w(i + n) = w(i) + n``.
"""


class EnumerationLimitError(RuntimeError):
    """The requested enumeration would exceed the configured size cap."""


def window_length(window, n):
    """Coxeter length: #{(i, j) in Z x [n] : i < j, w(i) > w(j)}.

    For a pair of positions p, j in [n] the shifts p - t*n (t >= 1) all lie
    left of j, and w(p - t*n) > w(j) iff t*n < w(p) - w(j).
    """
    total = 0
    for j in range(n):
        wj = window[j]
        for p in range(n):
            d = window[p] - wj
            if d > 0:
                if p < j:
                    total += 1
                total += (d - 1) // n
    return total


def has_descent(window, i, n):
    """Right descent at s_i: w(i) > w(i+1), with w(0) = w(n) - n."""
    if i == 0:
        return window[n - 1] - n > window[0]
    return window[i - 1] > window[i]


def right_mult(window, i, n):
    """Window of w * s_i."""
    w = list(window)
    if i == 0:
        first = w[n - 1] - n
        last = w[0] + n
        w[0] = first
        w[n - 1] = last
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def ball_levels(n, max_len, gens, cap):
    """Elements generated by ``gens`` with length <= max_len, grouped by length.

    Level k+1 is obtained from level k by right-multiplying along ascents,
    so each element appears exactly once, at its length.
    """
    identity = tuple(range(1, n + 1))
    levels = [[identity]]
    count = 1
    for _ in range(max_len):
        nxt = set()
        for w in levels[-1]:
            for i in gens:
                if not has_descent(w, i, n):
                    nxt.add(right_mult(w, i, n))
        if not nxt:
            break
        count += len(nxt)
        if count > cap:
            raise EnumerationLimitError(
                f"ball enumeration exceeded cap of {cap} elements (set COXQ_MAX_BALL)"
            )
        levels.append(sorted(nxt))
    return levels
