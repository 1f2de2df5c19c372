"""Dense exact linear algebra: echelon forms, kernels, preimages, subspaces.

Everything is canonical: a subspace is stored as the reduced row echelon
basis of its span, so span-equal subspaces compare equal as objects.
Performance is irrelevant at desk scale; clarity and exactness win.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .errors import DimensionMismatch


@dataclass
class Mat:
    """Dense matrix over an exact field, with optional basis labels."""

    field: object
    rows: list
    row_labels: Optional[list] = None
    col_labels: Optional[list] = None

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def apply(self, vec: Sequence) -> list:
        if len(vec) != self.ncols:
            raise DimensionMismatch(f"matrix has {self.ncols} columns, vector has {len(vec)}")
        zero = self.field.zero
        return [sum((r[j] * vec[j] for j in range(len(vec)) if vec[j]), zero) for r in self.rows]


def zeros(field, n: int) -> list:
    return [field.zero] * n


def identity_mat(field, n: int) -> Mat:
    rows = []
    for i in range(n):
        r = zeros(field, n)
        r[i] = field.one
        rows.append(r)
    return Mat(field, rows)


def rref(field, rows, col_order=None):
    """Reduced row echelon form; returns (new_rows, pivot_columns).

    col_order optionally permutes the pivot search order (used by the
    localization engine to steer which generators survive).
    """
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    order = list(col_order) if col_order is not None else list(range(ncols))
    pivots = []
    rank = 0
    for col in order:
        src = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                src = i
                break
        if src is None:
            continue
        rows[rank], rows[src] = rows[src], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [inv * x for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


@dataclass(frozen=True)
class Subspace:
    """Canonically stored subspace of a labelled ambient space."""

    field: object
    ambient: int
    basis: tuple
    labels: Optional[tuple] = dc_field(default=None, compare=False)

    @classmethod
    def from_rows(cls, field, ambient: int, rows, labels=None) -> "Subspace":
        for r in rows:
            if len(r) != ambient:
                raise DimensionMismatch(f"row of length {len(r)} in ambient {ambient}")
        red, _ = rref(field, rows)
        return cls(field, ambient, tuple(tuple(r) for r in red),
                   tuple(labels) if labels else None)

    @classmethod
    def zero(cls, field, ambient: int) -> "Subspace":
        return cls(field, ambient, ())

    @classmethod
    def full(cls, field, ambient: int) -> "Subspace":
        return cls.from_rows(field, ambient, identity_mat(field, ambient).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec) -> bool:
        return self.reduce(vec) is not None

    def reduce(self, vec):
        """Coordinates of vec in the stored basis, or None if outside."""
        v = list(vec)
        coords = []
        pivots = [next(j for j, x in enumerate(row) if x) for row in self.basis]
        for row, p in zip(self.basis, pivots):
            c = v[p]
            coords.append(c)
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        if any(v):
            return None
        return coords

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis)


def kernel(M: Mat) -> Subspace:
    """Canonical basis of the right null space {v : Mv = 0}."""
    field = M.field
    n = M.ncols
    red, pivots = rref(field, M.rows)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = []
    for f in free:
        v = zeros(field, n)
        v[f] = field.one
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return Subspace.from_rows(field, n, basis, labels=M.col_labels)


def image(M: Mat) -> Subspace:
    """Column space of M inside the codomain."""
    field = M.field
    cols = [[M.rows[i][j] for i in range(M.nrows)] for j in range(M.ncols)]
    return Subspace.from_rows(field, M.nrows, cols, labels=M.row_labels)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    if s1.ambient != s2.ambient:
        raise DimensionMismatch("sum of subspaces of different ambient spaces")
    return Subspace.from_rows(s1.field, s1.ambient, list(s1.basis) + list(s2.basis),
                              labels=s1.labels)


def subspace_intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked coefficient matrix."""
    if s1.ambient != s2.ambient:
        raise DimensionMismatch("intersection of subspaces of different ambient spaces")
    field = s1.field
    if not s1.basis or not s2.basis:
        return Subspace.zero(field, s1.ambient)
    r1, r2 = len(s1.basis), len(s2.basis)
    rows = []
    for i in range(s1.ambient):
        rows.append([s1.basis[k][i] for k in range(r1)] + [-s2.basis[k][i] for k in range(r2)])
    ker = kernel(Mat(field, rows))
    vecs = []
    for coef in ker.basis:
        v = zeros(field, s1.ambient)
        for k in range(r1):
            if coef[k]:
                v = [a + coef[k] * b for a, b in zip(v, s1.basis[k])]
        vecs.append(v)
    return Subspace.from_rows(field, s1.ambient, vecs, labels=s1.labels)


def annihilator_matrix(field, S: Subspace) -> Mat:
    """Rows span the functionals vanishing on S; kernel of the result is S."""
    if not S.basis:
        return identity_mat(field, S.ambient)
    ker = kernel(Mat(field, [list(r) for r in S.basis]))
    return Mat(field, [list(r) for r in ker.basis])


def preimage(M: Mat, S: Subspace) -> Subspace:
    """{v : Mv in S}, computed as ker(q o M) for the quotient projection q."""
    if S.ambient != M.nrows:
        raise DimensionMismatch(
            f"subspace lives in dimension {S.ambient}, matrix codomain is {M.nrows}")
    field = M.field
    Q = annihilator_matrix(field, S)
    if not Q.rows:
        return Subspace.full(field, M.ncols)
    comp_rows = [Q_row_times(M, row) for row in Q.rows]
    return kernel(Mat(field, comp_rows, col_labels=M.col_labels))


def Q_row_times(M: Mat, row) -> list:
    field = M.field
    return [sum((row[i] * M.rows[i][j] for i in range(M.nrows) if row[i]), field.zero)
            for j in range(M.ncols)]
