"""Truncated formal power series with exact integer coefficients.

A :class:`Series` is an element of Z[[q]] modulo q^(order+1).  A
:class:`BivarSeries` is a polynomial (optionally truncated) in an outer
variable whose coefficients are ``Series`` in an inner variable; it is used
both for Z[[s, q]] (outer ``s``) and Z[[x, y]] (outer ``y``).

All values are immutable.  Arithmetic between operands of different
truncation orders is allowed and truncates to the smaller order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

log = logging.getLogger(__name__)

DEFAULT_ORDER = 24

__all__ = [
    "DEFAULT_ORDER",
    "SeriesError",
    "Series",
    "BivarSeries",
    "TrivarPoly",
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_binomial_pascal",
    "q_pochhammer",
    "q_pochhammer_infinity",
    "q_number",
    "poly_str",
]


class SeriesError(ValueError):
    """Raised for incompatible operands or non-invertible series."""


def _term(c: int, var: str, d: int, first: bool, spaced: bool) -> str:
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if d == 0:
        body = str(a)
    else:
        mono = var if d == 1 else f"{var}^{d}"
        body = mono if a == 1 else f"{a}*{mono}"
    if first:
        return ("-" if c < 0 else "") + body
    return f" {sign} {body}" if spaced else f"{sign}{body}"


def poly_str(coeffs: Sequence[int], var: str = "q", spaced: bool = True) -> str:
    """Render ascending coefficients as a polynomial, e.g. ``1 + 2*q^3 - q^5``."""
    parts = []
    for d, c in enumerate(coeffs):
        if c:
            parts.append(_term(c, var, d, not parts, spaced))
    return "".join(parts) if parts else "0"


@dataclass(frozen=True)
class Series:
    """An element of Z[[var]] known up to and including ``var**order``."""

    order: int
    coeffs: tuple[int, ...]
    var: str = "q"

    def __post_init__(self):
        if self.order < 0:
            raise SeriesError("truncation order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise SeriesError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    # -- construction -----------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int, var: str = "q") -> "Series":
        """Build from a (possibly shorter or longer) coefficient list."""
        cs = [int(c) for c in coeffs][: order + 1]
        cs.extend([0] * (order + 1 - len(cs)))
        return cls(order, tuple(cs), var)

    @classmethod
    def from_dict(cls, terms: dict[int, int], order: int, var: str = "q") -> "Series":
        cs = [0] * (order + 1)
        for d, c in terms.items():
            if d < 0:
                raise SeriesError("negative exponent")
            if d <= order:
                cs[d] += c
        return cls(order, tuple(cs), var)

    @classmethod
    def zero(cls, order: int, var: str = "q") -> "Series":
        return cls(order, (0,) * (order + 1), var)

    @classmethod
    def one(cls, order: int, var: str = "q") -> "Series":
        return cls.constant(1, order, var)

    @classmethod
    def constant(cls, c: int, order: int, var: str = "q") -> "Series":
        return cls(order, (c,) + (0,) * order, var)

    @classmethod
    def monomial(cls, d: int, order: int, c: int = 1, var: str = "q") -> "Series":
        return cls.from_dict({d: c}, order, var)

    # -- helpers ----------------------------------------------------------

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            if other.var != self.var:
                raise SeriesError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return Series.constant(other, self.order, self.var)
        return NotImplemented

    def _common(self, other: "Series") -> int:
        if other.order != self.order:
            log.debug("mixing truncation orders %d and %d", self.order, other.order)
        return min(self.order, other.order)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise SeriesError("cannot raise the truncation order of a series")
        return Series(order, self.coeffs[: order + 1], self.var)

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d]

    def __len__(self):
        return len(self.coeffs)

    def degree(self) -> int:
        """Largest index with a nonzero coefficient (-1 for the zero series)."""
        for d in range(self.order, -1, -1):
            if self.coeffs[d]:
                return d
        return -1

    def valuation(self) -> int:
        for d, c in enumerate(self.coeffs):
            if c:
                return d
        return self.order + 1

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self._common(other)
        return Series(n, tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)), self.var)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.order, tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, BivarSeries):
            return NotImplemented
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return Series(n, tuple(out), self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return self.invert() ** (-k)
        result = Series.one(self.order, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def invert(self) -> "Series":
        """Multiplicative inverse; the constant term must be +1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise SeriesError(f"constant term {c0} is not a unit in Z")
        n = self.order
        a = self.coeffs
        inv = [0] * (n + 1)
        inv[0] = c0
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, k + 1):
                if a[i]:
                    acc += a[i] * inv[k - i]
            inv[k] = -c0 * acc
        return Series(n, tuple(inv), self.var)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Series.constant(other, self.order, self.var)
        return self * other.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def substitute_power(self, k: int) -> "Series":
        """Return the series in var**k, keeping the same truncation order."""
        if k <= 0:
            raise SeriesError("substitution exponent must be positive")
        out = [0] * (self.order + 1)
        for d, c in enumerate(self.coeffs):
            if d * k > self.order:
                break
            out[d * k] = c
        return Series(self.order, tuple(out), self.var)

    def shift(self, d: int) -> "Series":
        """Multiply by var**d (d >= 0)."""
        if d < 0:
            raise SeriesError("negative shift")
        out = ((0,) * d + self.coeffs)[: self.order + 1]
        return Series(self.order, out, self.var)

    def evaluate_at_one(self) -> int:
        """Sum of the (truncated) coefficients; meaningful for polynomials."""
        return sum(self.coeffs)

    # -- comparisons & output ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Series.constant(other, self.order, self.var)
        if not isinstance(other, Series):
            return NotImplemented
        if other.var != self.var:
            return False
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self):
        return hash((self.var, self.order, self.coeffs))

    def is_polynomial(self, margin: int = 0) -> bool:
        """True if the top ``margin`` coefficients vanish (no visible tail)."""
        return self.degree() <= self.order - margin

    def __str__(self):
        return f"{poly_str(self.coeffs, self.var)} + O({self.var}^{self.order + 1})"

    def __repr__(self):
        return f"Series({self})"

    def to_json(self) -> dict:
        return {"var": self.var, "order": self.order, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "Series":
        return cls(int(data["order"]), tuple(int(c) for c in data["coeffs"]), data.get("var", "q"))


@dataclass(frozen=True)
class BivarSeries:
    """Polynomial in ``outer`` with :class:`Series` coefficients in ``inner``.

    ``outer_order`` of ``None`` means the outer variable is exact (a genuine
    polynomial); otherwise outer degrees above ``outer_order`` are dropped,
    which is what the expansion of ``1/(x^a y^b - 1)`` needs.
    """

    coeffs: tuple[Series, ...]
    outer: str = "s"
    outer_order: int | None = None

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("a bivariate series needs at least one coefficient")
        orders = {c.order for c in self.coeffs}
        if len(orders) != 1:
            raise SeriesError("all inner series must share one truncation order")
        if len({c.var for c in self.coeffs}) != 1:
            raise SeriesError("all inner series must use the same variable")
        if self.outer_order is not None and len(self.coeffs) > self.outer_order + 1:
            raise SeriesError("outer degree exceeds outer truncation order")

    @property
    def order(self) -> int:
        return self.coeffs[0].order

    @property
    def inner(self) -> str:
        return self.coeffs[0].var

    @property
    def outer_degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def build(cls, coeffs: Sequence[Series], outer: str = "s", outer_order: int | None = None) -> "BivarSeries":
        """Normalize: common inner order, trailing zero entries stripped."""
        cs = list(coeffs)
        n = min(c.order for c in cs)
        cs = [c.truncate(n) for c in cs]
        if outer_order is not None:
            cs = cs[: outer_order + 1]
        while len(cs) > 1 and not any(cs[-1].coeffs):
            cs.pop()
        return cls(tuple(cs), outer, outer_order)

    @classmethod
    def from_series(cls, a: Series, outer: str = "s", outer_order: int | None = None) -> "BivarSeries":
        return cls.build([a], outer, outer_order)

    @classmethod
    def outer_monomial(cls, k: int, order: int, outer: str = "s", inner: str = "q",
                       outer_order: int | None = None) -> "BivarSeries":
        z = Series.zero(order, inner)
        cs = [z] * k + [Series.one(order, inner)]
        return cls.build(cs, outer, outer_order)

    def __getitem__(self, k: int) -> Series:
        if k < len(self.coeffs):
            return self.coeffs[k]
        return Series.zero(self.order, self.inner)

    def _outer_cap(self, other: "BivarSeries") -> int | None:
        caps = [c for c in (self.outer_order, other.outer_order) if c is not None]
        return min(caps) if caps else None

    def _coerce(self, other) -> "BivarSeries":
        if isinstance(other, BivarSeries):
            if other.outer != self.outer or other.inner != self.inner:
                raise SeriesError(
                    f"variable mismatch: ({self.outer},{self.inner}) vs ({other.outer},{other.inner})"
                )
            return other
        if isinstance(other, Series):
            if other.var != self.inner:
                raise SeriesError(f"variable mismatch: {self.inner} vs {other.var}")
            return BivarSeries.build([other], self.outer, self.outer_order)
        if isinstance(other, int):
            return BivarSeries.build([Series.constant(other, self.order, self.inner)],
                                     self.outer, self.outer_order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        k = max(len(self.coeffs), len(other.coeffs))
        return BivarSeries.build([self[i] + other[i] for i in range(k)], self.outer,
                                 self._outer_cap(other))

    __radd__ = __add__

    def __neg__(self):
        return BivarSeries(tuple(-c for c in self.coeffs), self.outer, self.outer_order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        cap = self._outer_cap(other)
        top = len(self.coeffs) + len(other.coeffs) - 2
        if cap is not None:
            top = min(top, cap)
        n = min(self.order, other.order)
        out = [Series.zero(n, self.inner) for _ in range(top + 1)]
        for i, a in enumerate(self.coeffs):
            if i > top or not any(a.coeffs):
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > top:
                    break
                if any(b.coeffs):
                    out[i + j] = out[i + j] + a * b
        return BivarSeries.build(out, self.outer, cap)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BivarSeries":
        if k < 0:
            raise SeriesError("negative powers need invert()")
        result = BivarSeries.build([Series.one(self.order, self.inner)], self.outer, self.outer_order)
        for _ in range(k):
            result = result * self
        return result

    def invert(self) -> "BivarSeries":
        """Inverse when the constant term is +-1; needs a finite outer order
        unless the series is constant in the outer variable."""
        if len(self.coeffs) == 1:
            return BivarSeries.build([self.coeffs[0].invert()], self.outer, self.outer_order)
        if self.outer_order is None:
            raise SeriesError("inverting a non-constant outer polynomial needs outer_order")
        a0inv = self.coeffs[0].invert()
        inv = [a0inv]
        for j in range(1, self.outer_order + 1):
            acc = Series.zero(self.order, self.inner)
            for i in range(1, min(j, len(self.coeffs) - 1) + 1):
                acc = acc + self.coeffs[i] * inv[j - i]
            inv.append(-(a0inv * acc))
        return BivarSeries.build(inv, self.outer, self.outer_order)

    def specialize_outer(self, value: int) -> Series:
        """Evaluate the outer variable at an integer (typically -1 or +1)."""
        acc = Series.zero(self.order, self.inner)
        p = 1
        for c in self.coeffs:
            acc = acc + c * p
            p *= value
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Series)):
            other = self._coerce(other)
        if not isinstance(other, BivarSeries):
            return NotImplemented
        if (other.outer, other.inner) != (self.outer, self.inner):
            return False
        k = max(len(self.coeffs), len(other.coeffs))
        cap = self._outer_cap(other)
        if cap is not None:
            k = min(k, cap + 1)
        return all(self[i] == other[i] for i in range(k))

    def __hash__(self):
        return hash((self.outer, self.outer_order, self.coeffs))

    def coefficient(self, outer_deg: int, inner_deg: int) -> int:
        return self[outer_deg][inner_deg]

    def polynomial_str(self) -> str:
        """Compact grouped form such as ``(1+q+q^2+q^3) + (q+q^2+q^3)*s``."""
        groups = []
        for k, c in enumerate(self.coeffs):
            if not any(c.coeffs):
                continue
            body = poly_str(c.coeffs, c.var, spaced=False)
            nterms = sum(1 for x in c.coeffs if x)
            if k == 0:
                groups.append(f"({body})" if nterms > 1 else body)
                continue
            mono = self.outer if k == 1 else f"{self.outer}^{k}"
            if body == "1":
                groups.append(mono)
            elif body == "-1":
                groups.append(f"-{mono}")
            elif nterms == 1:
                groups.append(f"{body}*{mono}")
            else:
                groups.append(f"({body})*{mono}")
        return " + ".join(groups) if groups else "0"

    def __str__(self):
        tail = f" + O({self.inner}^{self.order + 1})"
        if self.outer_order is not None:
            tail += f" + O({self.outer}^{self.outer_order + 1})"
        return self.polynomial_str() + tail

    def to_json(self) -> dict:
        return {
            "outer": self.outer,
            "inner": self.inner,
            "order": self.order,
            "outer_order": self.outer_order,
            "coeffs": [list(c.coeffs) for c in self.coeffs],
        }


@dataclass(frozen=True)
class TrivarPoly:
    """Integer polynomial in x, s, q stored as {(x_deg, s_deg): q-coefficients}."""

    terms: tuple[tuple[tuple[int, int], tuple[int, ...]], ...]

    @classmethod
    def from_dict(cls, terms: dict[tuple[int, int], Sequence[int]]) -> "TrivarPoly":
        clean = {}
        for key, qs in terms.items():
            qs = list(qs)
            while qs and qs[-1] == 0:
                qs.pop()
            if qs:
                clean[key] = tuple(qs)
        return cls(tuple(sorted(clean.items())))

    def as_dict(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return dict(self.terms)

    def __add__(self, other: "TrivarPoly") -> "TrivarPoly":
        out = {k: list(v) for k, v in self.terms}
        for k, v in other.terms:
            cur = out.setdefault(k, [])
            cur.extend([0] * (len(v) - len(cur)))
            for i, c in enumerate(v):
                cur[i] += c
        return TrivarPoly.from_dict(out)

    def times_monomial(self, x: int = 0, s: int = 0, q: int = 0, c: int = 1) -> "TrivarPoly":
        return TrivarPoly.from_dict(
            {(a + x, b + s): (0,) * q + tuple(c * v for v in qs) for (a, b), qs in self.terms}
        )

    def times_q_poly(self, poly: Sequence[int]) -> "TrivarPoly":
        out = {}
        for key, qs in self.terms:
            prod = [0] * (len(qs) + len(poly) - 1)
            for i, a in enumerate(qs):
                for j, b in enumerate(poly):
                    prod[i + j] += a * b
            out[key] = prod
        return TrivarPoly.from_dict(out)

    def at_x_one(self) -> dict[int, tuple[int, ...]]:
        """Collapse x -> 1; returns {s_deg: q-coefficients}."""
        out: dict[int, list[int]] = {}
        for (_, b), qs in self.terms:
            cur = out.setdefault(b, [])
            cur.extend([0] * (len(qs) - len(cur)))
            for i, c in enumerate(qs):
                cur[i] += c
        return {b: tuple(v) for b, v in out.items()}

    def min_coefficient(self) -> int:
        return min((c for _, qs in self.terms for c in qs), default=0)

    def __str__(self):
        monos = []
        for (a, b), qs in self.terms:
            for d, c in enumerate(qs):
                if c:
                    monos.append((b, d, a, c))
        monos.sort()
        parts = []
        for b, d, a, c in monos:
            factors = []
            if d:
                factors.append("q" if d == 1 else f"q^{d}")
            if a:
                factors.append("x" if a == 1 else f"x^{a}")
            if b:
                factors.append("s" if b == 1 else f"s^{b}")
            mono = "*".join(factors)
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) if parts else "0"

    def to_json(self) -> dict[str, list[int]]:
        return {f"x^{a}*s^{b}": list(qs) for (a, b), qs in self.terms}


# -- q-numbers ----------------------------------------------------------------


def q_int(n: int, order: int) -> Series:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise SeriesError("q-integer needs n >= 0")
    return Series.from_coeffs([1] * n, order)


def q_factorial(n: int, order: int) -> Series:
    """[n]_q! as a truncated series."""
    acc = Series.one(order)
    for k in range(2, n + 1):
        acc = acc * q_int(k, order)
    return acc


def q_binomial(n: int, k: int, order: int) -> Series:
    """Gaussian coefficient via the factorial quotient (exact: unit denominators)."""
    if not 0 <= k <= n:
        raise SeriesError(f"q-binomial index out of range: ({n} choose {k})")
    return q_factorial(n, order) * (q_factorial(k, order) * q_factorial(n - k, order)).invert()


def q_binomial_pascal(n: int, k: int, order: int) -> Series:
    """Gaussian coefficient via (n choose k) = (n-1 choose k-1) + q^k (n-1 choose k)."""
    if not 0 <= k <= n:
        raise SeriesError(f"q-binomial index out of range: ({n} choose {k})")
    row = [Series.one(order)]
    for m in range(1, n + 1):
        new = []
        for j in range(m + 1):
            left = row[j - 1] if j >= 1 else Series.zero(order)
            right = row[j].shift(j) if j < m else Series.zero(order)
            new.append(left + right)
        row = new
    return row[k]


def q_pochhammer(sign: int, j: int, m: int, order: int) -> Series:
    """(a; q)_m with a = sign * q^j, i.e. prod_{i<m} (1 - a q^i)."""
    if sign not in (1, -1):
        raise SeriesError("pochhammer base must be +-q^j")
    acc = Series.one(order)
    for i in range(m):
        acc = acc * (Series.one(order) - Series.monomial(j + i, order, sign))
    return acc


def q_pochhammer_infinity(sign: int, j: int, order: int) -> Series:
    """(sign*q^j; q)_inf truncated; needs j >= 1."""
    if j < 1:
        raise SeriesError("infinite pochhammer needs j >= 1 to converge")
    return q_pochhammer(sign, j, max(order - j + 1, 0), order)


def q_number(kind: str, *params: int, order: int = DEFAULT_ORDER) -> Series:
    """Dispatch on ``kind`` in {int, factorial, binomial, pochhammer, pochhammer_infinity}.

    ``pochhammer`` takes (sign, j, m) for (sign*q^j; q)_m and
    ``pochhammer_infinity`` takes (sign, j).
    """
    table = {
        "int": q_int,
        "factorial": q_factorial,
        "binomial": q_binomial,
        "pochhammer": q_pochhammer,
        "pochhammer_infinity": q_pochhammer_infinity,
    }
    try:
        fn = table[kind]
    except KeyError:
        raise SeriesError(f"unknown q-number kind {kind!r}") from None
    return fn(*params, order)
