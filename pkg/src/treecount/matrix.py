"""Dense square matrices over exact rationals.

Entries are plain Python ints or ``fractions.Fraction`` values. Integral
fractions are normalised to int on construction so integer matrices stay on
the integer fast path inside the determinant engines.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/[+-]?\d+)?")


class MatrixFormatError(ValueError):
    """Malformed matrix text. ``line`` is the 1-based offending line."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def as_scalar(value: object) -> Scalar:
    """Coerce ``value`` to an exact scalar; floats and other inexact types are rejected."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    raise TypeError(f"matrix entries must be int or Fraction, not {type(value).__name__}")


def parse_scalar(token: str) -> Scalar:
    """Parse ``<int>`` or ``<int>/<int>`` into an exact scalar."""
    if not _RATIONAL_RE.fullmatch(token):
        raise ValueError(f"not a rational literal: {token!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {token!r}")
        return as_scalar(Fraction(int(num), int(den)))
    return int(token)


def format_scalar(value: Scalar) -> str:
    """Render a scalar as ``<int>`` or ``<num>/<den>`` in lowest terms."""
    return str(as_scalar(value))


class ExactMatrix:
    """Immutable n-by-n matrix of exact scalars."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]]) -> None:
        table = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if not table:
            raise ValueError("matrix order must be at least 1")
        n = len(table)
        for row in table:
            if len(row) != n:
                raise ValueError(
                    f"matrix is not square: {n} rows but a row of length {len(row)}"
                )
        self._rows = table

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._rows

    def __getitem__(self, i: int) -> tuple[Scalar, ...]:
        return self._rows[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(x) for x in row) for row in self._rows)
        return f"ExactMatrix({body})"

    def is_integer(self) -> bool:
        """True when every entry is an int."""
        return all(isinstance(x, int) for row in self._rows for x in row)

    def transpose(self) -> "ExactMatrix":
        n = self.order
        return ExactMatrix([[self._rows[i][j] for i in range(n)] for j in range(n)])

    def submatrix(
        self, drop_rows: Iterable[int] = (), drop_cols: Iterable[int] = ()
    ) -> "ExactMatrix":
        """Copy with the given row and column indices removed."""
        rset, cset = set(drop_rows), set(drop_cols)
        kept = [
            [x for j, x in enumerate(row) if j not in cset]
            for i, row in enumerate(self._rows)
            if i not in rset
        ]
        return ExactMatrix(kept)


def parse_matrix(text: str) -> ExactMatrix:
    """Parse matrix text: the order on the first line, then one line per row.

    Entries are ``<int>`` or ``<int>/<int>`` separated by whitespace. Blank
    lines and ``#`` comments are skipped. Errors carry the offending line
    number.
    """
    significant: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        significant.append((lineno, line))
    if not significant:
        raise MatrixFormatError(1, "no matrix header found")
    header_line, header = significant[0]
    try:
        n = int(header)
    except ValueError:
        raise MatrixFormatError(
            header_line, f"expected the matrix order, got {header!r}"
        ) from None
    if n < 1:
        raise MatrixFormatError(header_line, f"matrix order must be positive, got {n}")
    body = significant[1:]
    if len(body) != n:
        where = body[-1][0] if body else header_line
        raise MatrixFormatError(where, f"expected {n} rows, found {len(body)}")
    rows: list[list[Scalar]] = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixFormatError(lineno, f"expected {n} entries, found {len(tokens)}")
        try:
            rows.append([parse_scalar(t) for t in tokens])
        except ValueError as exc:
            raise MatrixFormatError(lineno, str(exc)) from None
    return ExactMatrix(rows)


def serialize_matrix(m: ExactMatrix) -> str:
    lines = [str(m.order)]
    lines.extend(" ".join(format_scalar(x) for x in row) for row in m.rows)
    return "\n".join(lines) + "\n"
