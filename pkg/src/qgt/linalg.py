"""Exact sparse linear algebra over the rationals.

Rows are ``dict[int, Fraction]`` keyed by column.  Elimination is delegated to
sympy's sparse ``DomainMatrix`` over ``QQ`` (gmpy2-backed when available);
everything entering or leaving this module is a ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

SparseRow = Mapping[int, Fraction]


def _to_qq(x) -> object:
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _domain_matrix(rows: Sequence[SparseRow], ncols: int) -> DomainMatrix:
    data = {}
    for i, row in enumerate(rows):
        entries = {j: _to_qq(v) for j, v in row.items() if v}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (len(rows), ncols), QQ)


def rref(rows: Sequence[SparseRow], ncols: int) -> list[tuple[int, dict[int, Fraction]]]:
    """Reduced row echelon form as a list of ``(pivot_column, row)``; pivots ascend."""
    if not rows:
        return []
    reduced, pivots = _domain_matrix(rows, ncols).rref()
    sdm = reduced.to_sparse().rep
    out = []
    for r, col in enumerate(pivots):
        row = sdm.get(r, {})
        out.append((col, {j: _from_qq(v) for j, v in row.items()}))
    return out


def rank(rows: Sequence[SparseRow], ncols: int) -> int:
    return len(rref(rows, ncols))


class Echelon:
    """A subspace held as a reduced echelon basis; ``reduce`` gives the normal form mod it.

    Because the basis is fully reduced, the normal form is obtained in a single
    pass over the pivot columns present in the vector.
    """

    def __init__(self, rows: Sequence[SparseRow], ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, Fraction]] = dict(rref(rows, ncols))

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: SparseRow) -> dict[int, Fraction]:
        out = {j: Fraction(v) for j, v in vec.items() if v}
        for col in [c for c in out if c in self.pivots]:
            coef = out.get(col)
            if not coef:
                continue
            for j, v in self.pivots[col].items():
                nv = out.get(j, 0) - coef * v
                if nv:
                    out[j] = nv
                else:
                    out.pop(j, None)
        return out

    def contains(self, vec: SparseRow) -> bool:
        return not self.reduce(vec)


def solve_affine(
    rows: Sequence[SparseRow], rhs: Sequence[Fraction], ncols: int
) -> tuple[list[Fraction] | None, list[list[Fraction]]]:
    """Solve ``A x = b``.

    Returns ``(particular, kernel_basis)``; ``particular`` is ``None`` when the
    system is inconsistent.  The particular solution sets every free variable to
    zero, and kernel vectors are the standard basis over the free columns, so the
    answer is deterministic.
    """
    aug = []
    for row, b in zip(rows, rhs):
        r = {j: Fraction(v) for j, v in row.items() if v}
        if b:
            r[ncols] = Fraction(b)
        aug.append(r)
    echelon = rref(aug, ncols + 1)
    pivots = [c for c, _ in echelon]
    if ncols in pivots:
        particular = None
    else:
        particular = [Fraction(0)] * ncols
        for col, row in echelon:
            particular[col] = row.get(ncols, Fraction(0))
    pivot_set = set(pivots)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for col, row in echelon:
            if free in row:
                vec[col] = -row[free]
        kernel.append(vec)
    return particular, kernel


def dense_rows(matrix: Iterable[Sequence[Fraction]]) -> list[dict[int, Fraction]]:
    return [{j: Fraction(v) for j, v in enumerate(row) if v} for row in matrix]


def inverse(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]] | None:
    """Inverse of a square matrix, or ``None`` if singular."""
    n = len(matrix)
    rows = []
    for i, row in enumerate(matrix):
        r = {j: Fraction(v) for j, v in enumerate(row) if v}
        r[n + i] = Fraction(1)
        rows.append(r)
    echelon = rref(rows, 2 * n)
    if len(echelon) < n or any(col != i for i, (col, _) in enumerate(echelon[:n])):
        return None
    return [[row.get(n + j, Fraction(0)) for j in range(n)] for _, row in echelon[:n]]


def determinant_nonzero(matrix: Sequence[Sequence[Fraction]]) -> bool:
    return len(rref(dense_rows(matrix), len(matrix))) == len(matrix)
