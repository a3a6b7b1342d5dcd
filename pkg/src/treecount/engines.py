"""Exact determinants via five interchangeable engines.

Every engine takes an ``ExactMatrix`` and returns the same exact value; they
differ only in strategy and cost:

- ``cofactor``: Laplace expansion with memoised minors, division-free. The
  independent reference the others are tested against. Exponential cost.
- ``bareiss``: fraction-free elimination. Integer input stays integer at
  every intermediate step. The general-purpose default.
- ``chio``: condensation to the matrix of leading 2x2 minors, repeated until
  order 2, with exact division by the previous stage's leading entry.
- ``dodgson``: condensation by contiguous 2x2 minors with division by the
  interior of the layer before last; delegates to ``bareiss`` when a needed
  interior divisor is zero.
- ``salihu``: reduction to one 2x2 determinant of corner minors divided by
  the interior minor; delegates to ``bareiss`` when the interior minor is 0.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Callable, NamedTuple

from .matrix import ExactMatrix, Scalar


class EngineKind(enum.Enum):
    """Names one of the determinant algorithms."""

    COFACTOR = "cofactor"
    BAREISS = "bareiss"
    CHIO = "chio"
    DODGSON = "dodgson"
    SALIHU = "salihu"


def _exact_div(num: Scalar, den: Scalar) -> Scalar:
    """Exact division that keeps whole quotients as int."""
    if isinstance(num, int) and isinstance(den, int):
        q, r = divmod(num, den)
        if not r:
            return q
        return Fraction(num, den)
    return num / den


def _det2(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Scalar:
    return a * d - b * c


def det_cofactor(m: ExactMatrix) -> Scalar:
    """Laplace expansion along the first row, minors memoised by column set.

    Division-free, so it is independent of every divide-and-cancel engine.
    The cache turns n! work into O(n * 2^n); still for small orders only.
    """
    rows = m.rows
    n = m.order

    cache: dict[int, Scalar] = {}

    def expand(cols: int) -> Scalar:
        # cols: bitmask of columns not yet consumed; row index follows from its size
        if cols == 0:
            return 1
        cached = cache.get(cols)
        if cached is not None:
            return cached
        i = n - cols.bit_count()
        row = rows[i]
        total: Scalar = 0
        sign = 1
        rest = cols
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            a = row[j]
            if a:
                total += sign * a * expand(cols ^ low)
            sign = -sign
            rest ^= low
        cache[cols] = total
        return total

    return expand((1 << n) - 1)


def det_bareiss(m: ExactMatrix) -> Scalar:
    """Fraction-free elimination with exact division by the previous pivot.

    A zero pivot is repaired by swapping in a lower row (flipping the sign);
    if no lower row helps, the determinant is zero.
    """
    n = m.order
    a = [list(row) for row in m.rows]
    integral = m.is_integer()
    sign = 1
    prev: Scalar = 1
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                val = _exact_div(pivot * row_i[j] - lead * row_k[j], prev)
                # every intermediate is itself a minor of m, hence an int for int input
                assert not integral or isinstance(val, int)
                row_i[j] = val
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_chio(m: ExactMatrix) -> Scalar:
    """Repeated condensation into the matrix of leading 2x2 minors.

    Each stage divides by the previous stage's leading entry, which is exact;
    the division keeps entries polynomial in size instead of letting them
    square at every stage. If a stage's leading entry is zero, the first row
    below with a nonzero lead is swapped in (sign flips); if the whole first
    column is zero the determinant is zero.
    """
    n = m.order
    if n == 1:
        return m[0][0]
    cur = [list(row) for row in m.rows]
    sign = 1
    prev: Scalar = 1
    while len(cur) > 2:
        size = len(cur)
        if not cur[0][0]:
            for i in range(1, size):
                if cur[i][0]:
                    cur[0], cur[i] = cur[i], cur[0]
                    sign = -sign
                    break
            else:
                return 0
        top = cur[0]
        lead = top[0]
        nxt = []
        for i in range(1, size):
            row = cur[i]
            left = row[0]
            nxt.append(
                [_exact_div(lead * row[j] - top[j] * left, prev) for j in range(1, size)]
            )
        prev, cur = lead, nxt
    raw = _det2(cur[0][0], cur[0][1], cur[1][0], cur[1][1])
    return sign * _exact_div(raw, prev)


def det_dodgson(m: ExactMatrix) -> Scalar:
    """Condensation by contiguous 2x2 minors, dividing by the interior of the
    layer before last.

    The moment a required interior divisor is zero, condensation is abandoned
    and the whole matrix is delegated to ``det_bareiss``.
    """
    n = m.order
    if n == 1:
        return m[0][0]
    cur: list[list[Scalar]] = [list(row) for row in m.rows]
    prev: list[list[Scalar]] | None = None
    while len(cur) > 1:
        size = len(cur) - 1
        nxt: list[list[Scalar]] = []
        for i in range(size):
            row: list[Scalar] = []
            for j in range(size):
                minor = _det2(cur[i][j], cur[i][j + 1], cur[i + 1][j], cur[i + 1][j + 1])
                if prev is None:
                    row.append(minor)
                else:
                    divisor = prev[i + 1][j + 1]
                    if divisor == 0:
                        return det_bareiss(m)
                    row.append(_exact_div(minor, divisor))
            nxt.append(row)
        prev, cur = cur, nxt
    return cur[0][0]


class CornerMinors(NamedTuple):
    """Determinants of the five corner submatrices used by ``det_salihu``."""

    interior: Scalar      # first and last row and column removed
    top_left: Scalar      # last row and last column removed
    top_right: Scalar     # last row and first column removed
    bottom_left: Scalar   # first row and last column removed
    bottom_right: Scalar  # first row and first column removed


def salihu_minors(m: ExactMatrix, sub_det: Callable[[ExactMatrix], Scalar] | None = None) -> CornerMinors:
    """The five corner-minor determinants of ``m`` (order 3 or more)."""
    n = m.order
    if n < 3:
        raise ValueError(f"corner minors need order 3 or more, got {n}")
    if sub_det is None:
        sub_det = det_bareiss
    first, last, both = {0}, {n - 1}, {0, n - 1}
    return CornerMinors(
        interior=sub_det(m.submatrix(both, both)),
        top_left=sub_det(m.submatrix(last, last)),
        top_right=sub_det(m.submatrix(last, first)),
        bottom_left=sub_det(m.submatrix(first, last)),
        bottom_right=sub_det(m.submatrix(first, first)),
    )


_FULL_RECURSION_LIMIT = 10


def det_salihu(m: ExactMatrix, full_recursion: bool = False) -> Scalar:
    """One reduction step: det = (tl * br - tr * bl) / interior over the five
    corner minors.

    The corner minors are evaluated with ``det_bareiss``; pass
    ``full_recursion=True`` to evaluate them by the same reduction instead
    (orders above 10 are refused, the recursion tree grows 5-fold per level).
    When the interior minor is zero the identity cannot divide, and the whole
    matrix is delegated to ``det_bareiss``.
    """
    if full_recursion and m.order > _FULL_RECURSION_LIMIT:
        raise ValueError(
            f"full recursion is limited to order {_FULL_RECURSION_LIMIT}, got {m.order}"
        )
    return _salihu_step(m, full_recursion)


def _salihu_step(m: ExactMatrix, deep: bool) -> Scalar:
    n = m.order
    if n == 1:
        return m[0][0]
    if n == 2:
        return _det2(m[0][0], m[0][1], m[1][0], m[1][1])
    sub_det: Callable[[ExactMatrix], Scalar]
    if deep:
        sub_det = lambda s: _salihu_step(s, True)  # noqa: E731
    else:
        sub_det = det_bareiss
    corners = salihu_minors(m, sub_det)
    if corners.interior == 0:
        return det_bareiss(m)
    raw = _det2(corners.top_left, corners.top_right, corners.bottom_left, corners.bottom_right)
    return _exact_div(raw, corners.interior)


ENGINES: dict[EngineKind, Callable[[ExactMatrix], Scalar]] = {
    EngineKind.COFACTOR: det_cofactor,
    EngineKind.BAREISS: det_bareiss,
    EngineKind.CHIO: det_chio,
    EngineKind.DODGSON: det_dodgson,
    EngineKind.SALIHU: det_salihu,
}


def det(m: ExactMatrix, engine: EngineKind | str = EngineKind.BAREISS) -> Scalar:
    """Determinant of ``m`` via the selected engine.

    Every engine returns the same exact value; ``engine`` only selects the
    algorithm. Accepts an ``EngineKind`` or its string value.
    """
    return ENGINES[EngineKind(engine)](m)
