"""Exact-integer truncated power series and the counting identities.

Everything here is big-integer arithmetic on truncated formal power series:
no floating point, no rounding.  Operations that could produce fractions
(halving, square roots, reciprocals, functional inversion) assert exactness
instead of rounding, so a misuse surfaces as an error rather than a wrong
coefficient.

The named series tie the package's counting problems together:

* ``series_F`` - factorials: permutations by degree.
* ``series_G`` - the functional inverse of F.
* ``simple_pairs_A`` - mirror pairs {p, reverse(p)} of simple permutations.
* ``series_A`` - decompositions of the full type-A positive system into
  irreducible inversion sets, by degree.
* ``series_SB`` / ``series_B`` - the analogous simple counts and
  decomposition counts for the type-B/C positive systems.
* ``series_CatB`` / ``catalan`` - maximal decompositions (one simple root
  per part) for types B/C and A respectively.

All series keep index = exponent; ``IntSeries(order, coeffs)`` stores
coefficients 0..order inclusive.  Binary operations truncate to the smaller
operand order rather than ever padding with fabricated zeros.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "IntSeries",
    "add",
    "sub",
    "mul",
    "scale",
    "divide_exact",
    "truncate",
    "reciprocal",
    "compose",
    "functional_inverse",
    "sqrt",
    "series_F",
    "series_G",
    "simple_pairs_A",
    "series_A",
    "series_SB",
    "series_B",
    "series_CatB",
    "catalan",
]


@dataclass(frozen=True)
class IntSeries:
    """A truncated power series with exact integer coefficients.

    ``coeffs[n]`` is the coefficient of the n-th power; ``len(coeffs)`` is
    always ``order + 1``.
    """

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"order {self.order} needs {self.order + 1} coefficients,"
                f" got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"non-integer coefficient {c!r}")

    @classmethod
    def from_coeffs(cls, order: int, leading: Iterable[int]) -> IntSeries:
        """Build a series from its lowest coefficients, zero-padded to ``order``."""
        coeffs = list(leading)
        if len(coeffs) > order + 1:
            raise ValueError(f"{len(coeffs)} coefficients exceed order {order}")
        coeffs.extend(0 for _ in range(order + 1 - len(coeffs)))
        return cls(order, tuple(coeffs))

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]


def truncate(f: IntSeries, order: int) -> IntSeries:
    """Drop coefficients above ``order`` (which must not exceed f's order)."""
    if order > f.order:
        raise ValueError(f"cannot extend order {f.order} to {order}")
    return IntSeries(order, f.coeffs[: order + 1])


def _aligned(f: IntSeries, g: IntSeries) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    order = min(f.order, g.order)
    return order, f.coeffs[: order + 1], g.coeffs[: order + 1]


def add(f: IntSeries, g: IntSeries) -> IntSeries:
    order, fc, gc = _aligned(f, g)
    return IntSeries(order, tuple(a + b for a, b in zip(fc, gc)))


def sub(f: IntSeries, g: IntSeries) -> IntSeries:
    order, fc, gc = _aligned(f, g)
    return IntSeries(order, tuple(a - b for a, b in zip(fc, gc)))


def mul(f: IntSeries, g: IntSeries) -> IntSeries:
    order, fc, gc = _aligned(f, g)
    out = [0] * (order + 1)
    for i, a in enumerate(fc):
        if a:
            for j in range(order - i + 1):
                b = gc[j]
                if b:
                    out[i + j] += a * b
    return IntSeries(order, tuple(out))


def scale(f: IntSeries, factor: int) -> IntSeries:
    return IntSeries(f.order, tuple(factor * c for c in f.coeffs))


def divide_exact(f: IntSeries, divisor: int) -> IntSeries:
    """Divide every coefficient, asserting exactness (never rounding)."""
    out = []
    for n, c in enumerate(f.coeffs):
        q, r = divmod(c, divisor)
        assert r == 0, f"coefficient {c} at index {n} is not divisible by {divisor}"
        out.append(q)
    return IntSeries(f.order, tuple(out))


def reciprocal(f: IntSeries) -> IntSeries:
    """The series r with f * r = 1; needs constant term 1 or -1 to stay integral.

    >>> r = reciprocal(IntSeries.from_coeffs(4, [1, -1]))
    >>> r.coeffs
    (1, 1, 1, 1, 1)
    """
    c0 = f.coeffs[0]
    if c0 not in (1, -1):
        raise ValueError(f"reciprocal needs constant term 1 or -1, got {c0}")
    out = [c0] + [0] * f.order
    for n in range(1, f.order + 1):
        acc = sum(f.coeffs[k] * out[n - k] for k in range(1, n + 1) if f.coeffs[k])
        out[n] = -c0 * acc
    return IntSeries(f.order, tuple(out))


def compose(f: IntSeries, g: IntSeries) -> IntSeries:
    """Substitute ``g`` into ``f``; ``g`` must have zero constant term.

    >>> f = IntSeries.from_coeffs(3, [7, 1])
    >>> compose(f, IntSeries.from_coeffs(3, [0])).coeffs
    (7, 0, 0, 0)
    """
    if g.coeffs[0] != 0:
        raise ValueError(f"composition needs g(0) = 0, got {g.coeffs[0]}")
    order = min(f.order, g.order)
    g = truncate(g, order)
    acc = IntSeries.from_coeffs(order, [f.coeffs[order]])
    for k in range(order - 1, -1, -1):
        acc = mul(acc, g)
        acc = IntSeries(order, (acc.coeffs[0] + f.coeffs[k],) + acc.coeffs[1:])
    return acc


def functional_inverse(f: IntSeries) -> IntSeries:
    """The series g with f(g(x)) = x, for f(0) = 0 and f'(0) = +/-1.

    Solved coefficient by coefficient: with g known below index n, the n-th
    coefficient of f(g) is f'(0) * g_n plus already-known terms, so each g_n
    is forced (and integral because f'(0) is a unit).

    >>> functional_inverse(IntSeries.from_coeffs(4, [0, 1, 1])).coeffs
    (0, 1, -1, 2, -5)
    """
    if f.coeffs[0] != 0:
        raise ValueError("functional inverse needs f(0) = 0")
    if f.order < 1 or f.coeffs[1] not in (1, -1):
        raise ValueError("functional inverse needs f'(0) = 1 or -1")
    unit = f.coeffs[1]
    n_max = f.order
    g = [0] * (n_max + 1)
    g[1] = unit
    for n in range(2, n_max + 1):
        h = compose(truncate(f, n), IntSeries(n, tuple(g[: n + 1])))
        g[n] = -unit * h.coeffs[n]
    result = IntSeries(n_max, tuple(g))
    assert compose(f, result).coeffs == IntSeries.from_coeffs(n_max, [0, 1]).coeffs
    return result


def sqrt(f: IntSeries) -> IntSeries:
    """The series y with y * y = f and y(0) = 1; needs f(0) = 1.

    Each coefficient is forced by 2 * y_n = f_n - (cross terms); the halving
    is asserted exact.

    >>> sqrt(IntSeries.from_coeffs(4, [1, -4])).coeffs
    (1, -2, -2, -4, -10)
    """
    if f.coeffs[0] != 1:
        raise ValueError(f"sqrt needs constant term 1, got {f.coeffs[0]}")
    y = [1] + [0] * f.order
    for n in range(1, f.order + 1):
        cross = sum(y[i] * y[n - i] for i in range(1, n))
        num = f.coeffs[n] - cross
        assert num % 2 == 0, f"sqrt parity failure at index {n}"
        y[n] = num // 2
    return IntSeries(f.order, tuple(y))


# ---------------------------------------------------------------------------
# named series


def series_F(n_max: int) -> IntSeries:
    """Factorials: the number of permutations of each degree (constant term 0)."""
    if n_max < 2:
        raise ValueError(f"order must be at least 2, got {n_max}")
    return IntSeries(n_max, tuple(0 if n == 0 else math.factorial(n) for n in range(n_max + 1)))


def series_G(n_max: int) -> IntSeries:
    """The functional inverse of :func:`series_F`."""
    return functional_inverse(series_F(n_max))


def simple_pairs_A(n_max: int) -> IntSeries:
    """Mirror pairs of simple permutations, by degree.

    A pair is {p, reverse-order of p} with p simple; the two members are
    distinct for every degree >= 2.  Low terms: one pair at degree 2, none
    at degree 3, one at degree 4, three at degree 5.  For degree >= 3 the
    count is -g_n / 2 - (-1)^n in terms of the inverse-factorial series,
    whose coefficients are always even there.

    >>> simple_pairs_A(6).coeffs
    (0, 0, 1, 0, 1, 3, 23)
    """
    g = series_G(n_max)
    s = [0] * (n_max + 1)
    if n_max >= 2:
        s[2] = 1
    for n in range(3, n_max + 1):
        assert g.coeffs[n] % 2 == 0, f"odd inverse coefficient at index {n}"
        s[n] = -g.coeffs[n] // 2 - (-1) ** n
    return IntSeries(n_max, tuple(s))


def series_A(n_max: int) -> IntSeries:
    """Decompositions of the degree-n type-A positive system into irreducibles.

    The count a_n of ways to write the full positive system on n letters as
    a disjoint union of irreducible nonempty inversion sets (unordered, any
    number of parts; degree 1 carries the single empty decomposition).  The
    series is the unique solution of A = x + S(A) with A(0) = 0, where S is
    :func:`simple_pairs_A`; since S has no terms below index 2, each
    coefficient is forced by the earlier ones.

    >>> series_A(6).coeffs
    (0, 1, 1, 2, 6, 23, 114)
    """
    if n_max < 1:
        raise ValueError(f"order must be at least 1, got {n_max}")
    s = simple_pairs_A(max(n_max, 2))
    a = [0] * (n_max + 1)
    a[1] = 1
    for n in range(2, n_max + 1):
        h = compose(truncate(s, n), IntSeries(n, tuple(a[: n + 1])))
        a[n] = h.coeffs[n]
    return IntSeries(n_max, tuple(a))


def series_SB(n_max: int) -> IntSeries:
    """Symmetric simple signed-permutation embeddings, by rank.

    Counts the *elements* (both members of each mirror pair) among symmetric
    permutations whose embedding is simple.  Defined through its composition
    with the factorial series:

        (this series)(F(x)) = 1 - 1/(1 + F(2x)) - 2 F(x)/(1 + F(x))

    and recovered by substituting the inverse series G.

    >>> series_SB(4).coeffs
    (0, 0, 2, 10, 90)
    """
    if n_max < 2:
        raise ValueError(f"order must be at least 2, got {n_max}")
    f = series_F(n_max)
    g = series_G(n_max)
    f_doubled = IntSeries(
        n_max, tuple(c * (1 << n) for n, c in enumerate(f.coeffs))
    )
    one = IntSeries.from_coeffs(n_max, [1])
    rhs_of_x = sub(
        sub(one, reciprocal(add(one, f_doubled))),
        mul(scale(f, 2), reciprocal(add(one, f))),
    )
    return compose(rhs_of_x, g)


def series_B(n_max: int) -> IntSeries:
    """Decompositions of the rank-n type-B/C positive system into irreducibles.

    With A the type-A decomposition series and S the symmetric-simple series
    (which counts both members of each mirror pair, hence the exact halving),
    the count is X/(1 - X) for X = A + S(A)/2.

    >>> series_B(5).coeffs
    (0, 1, 3, 14, 100, 973)
    """
    if n_max < 2:
        raise ValueError(f"order must be at least 2, got {n_max}")
    a = series_A(n_max)
    sb = series_SB(n_max)
    x = add(a, divide_exact(compose(sb, a), 2))
    one = IntSeries.from_coeffs(n_max, [1])
    return mul(x, reciprocal(sub(one, x)))


def series_CatB(n_max: int) -> IntSeries:
    """Maximal decompositions of the type-B/C positive system, by rank.

    Equals 1/(sqrt(1 - 4x) + x), constant term 1 included.

    >>> series_CatB(3).coeffs
    (1, 1, 3, 9)
    """
    if n_max < 1:
        raise ValueError(f"order must be at least 1, got {n_max}")
    radical = sqrt(IntSeries.from_coeffs(n_max, [1, -4]))
    shifted = IntSeries(
        n_max, (radical.coeffs[0],) + tuple(
            c + (1 if n == 1 else 0) for n, c in enumerate(radical.coeffs) if n >= 1
        )
    )
    return reciprocal(shifted)


def catalan(n: int) -> int:
    """The n-th Catalan number (2n choose n)/(n + 1).

    Counts the maximal decompositions of the type-A positive system on n + 1
    letters, among much else.

    >>> [catalan(n) for n in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    numerator = math.comb(2 * n, n)
    assert numerator % (n + 1) == 0
    return numerator // (n + 1)
