"""Quadratic forms over Q: Gram matrices, diagonalization by congruence,
and the classical invariants (discriminant, Hasse invariant).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .cohomology import hilbert_symbol
from .rationals import Place, Rational, as_rational, format_rational, squarefree_part

Matrix = tuple[tuple[Fraction, ...], ...]


class DegenerateFormError(ValueError):
    """The Gram matrix is singular: no nondegenerate diagonalization exists."""


@dataclass(frozen=True)
class DiagonalForm:
    """A nondegenerate diagonal quadratic form <a_1, ..., a_n>."""

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("a form needs at least one entry")
        if not all(isinstance(a, Fraction) for a in self.entries):
            raise TypeError("entries must be Fractions; use DiagonalForm.of")
        if any(a == 0 for a in self.entries):
            raise DegenerateFormError("zero diagonal entry")

    @classmethod
    def of(cls, *entries: Rational | int | str) -> "DiagonalForm":
        return cls(tuple(as_rational(a) for a in entries))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def concat(self, other: "DiagonalForm") -> "DiagonalForm":
        """Orthogonal sum: just concatenation of diagonals."""
        return DiagonalForm(self.entries + other.entries)

    def __str__(self) -> str:
        return "<" + ", ".join(format_rational(a) for a in self.entries) + ">"


@dataclass(frozen=True)
class SymmetricForm:
    """A quadratic form given by its symmetric Gram matrix."""

    gram: Matrix

    def __post_init__(self) -> None:
        n = len(self.gram)
        if n == 0:
            raise ValueError("empty matrix")
        if any(len(row) != n for row in self.gram):
            raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError(f"not symmetric at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows) -> "SymmetricForm":
        return cls(tuple(tuple(as_rational(x) for x in row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.gram)


def _identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _swap_symmetric(m: list[list[Fraction]], a: list[list[Fraction]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]
    for row in m:
        row[i], row[j] = row[j], row[i]
    a[i], a[j] = a[j], a[i]


def _add_row_col(m: list[list[Fraction]], a: list[list[Fraction]], i: int, j: int, f: Fraction) -> None:
    # row_i += f * row_j and col_i += f * col_j, mirrored into the transform
    n = len(m)
    for c in range(n):
        m[i][c] += f * m[j][c]
    for r in range(n):
        m[r][i] += f * m[r][j]
    for c in range(n):
        a[i][c] += f * a[j][c]


def diagonalize(form: SymmetricForm) -> tuple[Matrix, DiagonalForm]:
    """Symmetric row/column reduction: returns (A, D) with A B A^T = diag(D).

    Pivot choice when the current diagonal entry vanishes: swap in a later
    nonzero diagonal entry if one exists, else add a row (and matching column)
    that meets a nonzero off-diagonal entry. Singular input raises
    DegenerateFormError.
    """
    n = form.size
    m = [list(row) for row in form.gram]
    a = _identity(n)
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][i] != 0:
                    _swap_symmetric(m, a, k, i)
                    break
            else:
                hit = next(
                    (
                        (i, j)
                        for i in range(k, n)
                        for j in range(k, n)
                        if j > i and m[i][j] != 0
                    ),
                    None,
                )
                if hit is None:
                    raise DegenerateFormError("singular Gram matrix")
                i, j = hit
                _add_row_col(m, a, i, j, Fraction(1))  # m[i][i] becomes 2 m[i][j]
                if i != k:
                    _swap_symmetric(m, a, k, i)
        pivot = m[k][k]
        for i in range(k + 1, n):
            if m[i][k] != 0:
                _add_row_col(m, a, i, k, -m[i][k] / pivot)
    diag = tuple(m[i][i] for i in range(n))
    if any(d == 0 for d in diag):
        raise DegenerateFormError("singular Gram matrix")
    return tuple(tuple(row) for row in a), DiagonalForm(diag)


def discriminant(form: DiagonalForm) -> int:
    """Square-free representative of the product of the diagonal entries."""
    return squarefree_part(prod(form.entries, start=Fraction(1)))


def hasse_invariant(form: DiagonalForm, v: Place) -> int:
    """Product of (a_i, a_j)_v over i < j; the empty product for rank 1."""
    eps = 1
    entries = form.entries
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            eps *= hilbert_symbol(entries[i], entries[j], v)
    return eps


def form_to_json(form: DiagonalForm) -> list[str]:
    return [format_rational(a) for a in form.entries]


def form_from_json(doc) -> DiagonalForm:
    """Parse a JSON array of rationals ('p/q' strings or integers; floats refused)."""
    if not isinstance(doc, list):
        raise ValueError("diagonal form must be a JSON array")
    return DiagonalForm.of(*doc)


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m]


def matrix_from_json(doc) -> SymmetricForm:
    """Parse a JSON array of rows into a symmetric form."""
    if not isinstance(doc, list) or not all(isinstance(r, list) for r in doc):
        raise ValueError("matrix must be a JSON array of arrays")
    return SymmetricForm.from_rows(doc)
