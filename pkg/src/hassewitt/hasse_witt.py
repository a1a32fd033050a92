"""Hasse-Witt vectors of diagonal forms and the top cup-product obstruction.

The i-th entry of the vector is the i-th elementary symmetric polynomial in
the degree-1 classes of the diagonal entries, expanded literally over index
subsets. That is slower than recursions but matches the definition term for
term, which is the point: the identities tested downstream (Whitney sum,
stabilization) then say something.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cohomology import BaseField, CohClass, add, cup, h1, zero_class
from .forms import DiagonalForm

MAX_RANK = 12


@dataclass(frozen=True)
class FormalSymmetricPolynomial:
    """sigma_index in nvars formal variables, stored as its set of index subsets."""

    nvars: int
    index: int
    terms: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        if self.index < 0 or self.nvars < 0:
            raise ValueError("nvars and index must be nonnegative")
        for t in self.terms:
            if len(t) != self.index or not all(0 <= v < self.nvars for v in t):
                raise ValueError("terms must be index-sized subsets of the variables")

    @classmethod
    def elementary(cls, index: int, nvars: int) -> "FormalSymmetricPolynomial":
        if not 1 <= index <= nvars:
            raise ValueError("need 1 <= index <= nvars")
        subsets = frozenset(
            frozenset(c) for c in combinations(range(nvars), index)
        )
        return cls(nvars, index, subsets)

    @property
    def is_zero_polynomial(self) -> bool:
        return not self.terms


def stabilization_pullback(index: int, nvars: int, mvars: int) -> FormalSymmetricPolynomial:
    """Restrict sigma_index(nvars) to the first mvars variables by killing the rest.

    Terms touching a killed variable drop; what survives is sigma_index(mvars)
    when index <= mvars and the zero polynomial otherwise.
    """
    if not 1 <= index <= nvars:
        raise ValueError("need 1 <= index <= nvars")
    if not 1 <= mvars <= nvars:
        raise ValueError("need 1 <= mvars <= nvars")
    sigma = FormalSymmetricPolynomial.elementary(index, nvars)
    kept = frozenset(t for t in sigma.terms if all(v < mvars for v in t))
    return FormalSymmetricPolynomial(mvars, index, kept)


@dataclass(frozen=True)
class HasseWittVector:
    """Classes (HW_1, ..., HW_n) of a rank-n diagonal form over one base field."""

    field: BaseField
    classes: tuple[CohClass, ...]

    def __getitem__(self, index: int) -> CohClass:
        """1-based: entry i has degree i."""
        if not 1 <= index <= len(self.classes):
            raise IndexError(f"no degree-{index} entry in a rank-{len(self.classes)} vector")
        return self.classes[index - 1]

    def __len__(self) -> int:
        return len(self.classes)


def _cup_fold(classes) -> CohClass:
    it = iter(classes)
    out = next(it)
    for c in it:
        out = cup(out, c)
    return out


def hasse_witt_vector(form: DiagonalForm, field: BaseField) -> HasseWittVector:
    """All elementary symmetric classes of the degree-1 entry classes."""
    n = form.rank
    if n > MAX_RANK:
        raise ValueError(
            f"rank {n} exceeds the cap of {MAX_RANK}: the literal subset expansion "
            f"has 2^rank terms and is not meant for that"
        )
    ones = [h1(a, field) for a in form.entries]
    out = []
    for i in range(1, n + 1):
        total = zero_class(field, i)
        for subset in combinations(range(n), i):
            total = add(total, _cup_fold(ones[j] for j in subset))
        out.append(total)
    return HasseWittVector(field, tuple(out))


def top_obstruction(form: DiagonalForm, field: BaseField) -> CohClass:
    """The full cup product of all entry classes: degree = rank."""
    if form.rank > MAX_RANK:
        raise ValueError(f"rank {form.rank} exceeds the cap of {MAX_RANK}")
    return _cup_fold(h1(a, field) for a in form.entries)


def obstruction_dim0(a, field: BaseField) -> CohClass:
    """Base case: the obstruction for a single coefficient is its square class."""
    return h1(a, field)


def whitney_sum_check(d1: DiagonalForm, d2: DiagonalForm, field: BaseField) -> bool:
    """Whitney formula: HW_i of the orthogonal sum equals
    sum_{j+l=i} HW_j(d1) cup HW_l(d2), with HW_0 read as the unit.

    Computed both ways from scratch; True iff every degree agrees.
    """
    n1, n2 = d1.rank, d2.rank
    if n1 + n2 > MAX_RANK:
        raise ValueError(f"combined rank {n1 + n2} exceeds the cap of {MAX_RANK}")
    left = hasse_witt_vector(d1.concat(d2), field)
    v1 = hasse_witt_vector(d1, field)
    v2 = hasse_witt_vector(d2, field)
    for i in range(1, n1 + n2 + 1):
        total = zero_class(field, i)
        if i <= n1:
            total = add(total, v1[i])  # j = i, l = 0
        if i <= n2:
            total = add(total, v2[i])  # j = 0, l = i
        for j in range(max(1, i - n2), min(n1, i - 1) + 1):
            total = add(total, cup(v1[j], v2[i - j]))
        if total != left[i]:
            return False
    return True
