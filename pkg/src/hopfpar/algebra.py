"""Structure-constant algebras and sparse vector helpers.

Vectors over an ordered basis are dicts {basis_index: scalar} with zero
entries elided, so dict equality is exact equality of elements.
"""

from __future__ import annotations

from typing import Optional

from .errors import AxiomFailure
from .linalg import Subspace


def vclean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def vadd(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, x in v.items():
        s = out.get(k)
        s = x if s is None else s + x
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def vsub(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, x in v.items():
        s = out.get(k)
        s = -x if s is None else s - x
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def vscale(c, u: dict) -> dict:
    if not c:
        return {}
    return {k: c * v for k, v in u.items()}


def vdense(field, u: dict, dim: int) -> list:
    out = [field.zero] * dim
    for k, v in u.items():
        out[k] = v
    return out


def vsparse(vec) -> dict:
    return {i: v for i, v in enumerate(vec) if v}


class FinAlgebra:
    """Finite-dimensional unital algebra, optionally graded and truncated.

    mul_table[(i, j)] is the sparse product of basis elements i and j;
    missing keys mean zero.  When `truncation` is set the basis is that of
    a quotient by the span of monomials above the cutoff degree, and the
    stored structure constants are those of the quotient.
    """

    def __init__(self, field, labels, mul_table, unit, degrees=None,
                 truncation: Optional[int] = None):
        self.field = field
        self.labels = list(labels)
        self.mul_table = {k: vclean(dict(v)) for k, v in mul_table.items() if vclean(dict(v))}
        self.unit = vclean(dict(unit))
        self.degrees = list(degrees) if degrees is not None else None
        self.truncation = truncation

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def truncated(self) -> bool:
        return self.truncation is not None

    def basis_vec(self, i: int) -> dict:
        return {i: self.field.one}

    def unit_vec(self) -> dict:
        return dict(self.unit)

    def mul(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                cell = self.mul_table.get((i, j))
                if not cell:
                    continue
                c = a * b
                for k, s in cell.items():
                    t = out.get(k)
                    t = c * s if t is None else t + c * s
                    if t:
                        out[k] = t
                    elif k in out:
                        del out[k]
        return out

    def product_many(self, vecs) -> dict:
        out = self.unit_vec()
        for v in vecs:
            out = self.mul(out, v)
        return out

    def power(self, u: dict, k: int) -> dict:
        out = self.unit_vec()
        for _ in range(k):
            out = self.mul(out, u)
        return out

    def check_unital(self):
        for i in range(self.dim):
            b = self.basis_vec(i)
            if self.mul(self.unit_vec(), b) != b or self.mul(b, self.unit_vec()) != b:
                return {"axiom": "unit", "basis": self.labels[i]}
        return None

    def check_associative(self, triples=None):
        idx = range(self.dim)
        if triples is None:
            triples = ((i, j, k) for i in idx for j in idx for k in idx)
        basis = [self.basis_vec(i) for i in idx]
        table = self.mul_table
        for i, j, k in triples:
            left = self.mul(table.get((i, j), {}), basis[k])
            right = self.mul(basis[i], table.get((j, k), {}))
            if left != right:
                return {"axiom": "associativity",
                        "triple": [self.labels[i], self.labels[j], self.labels[k]]}
        return None

    def require_valid(self, triples=None):
        w = self.check_unital() or self.check_associative(triples)
        if w:
            raise AxiomFailure("algebra axioms failed", witness=w)

    def is_idempotent(self, u: dict) -> bool:
        return self.mul(u, u) == vclean(u)

    def commutes_with_all(self, u: dict):
        for i in range(self.dim):
            b = self.basis_vec(i)
            if self.mul(u, b) != self.mul(b, u):
                return self.labels[i]
        return None

    def ideal_subspace(self, gen: dict, two_sided: bool = False) -> Subspace:
        """Span of the principal ideal generated by gen.

        One-sided span A*gen is enough for a central generator, which is the
        only case the decomposition theorems need.
        """
        rows = []
        for i in range(self.dim):
            left = self.mul(self.basis_vec(i), gen)
            rows.append(vdense(self.field, left, self.dim))
            if two_sided:
                for j in range(self.dim):
                    rows.append(vdense(self.field,
                                       self.mul(left, self.basis_vec(j)), self.dim))
        return Subspace.from_rows(self.field, self.dim, rows, labels=self.labels)

    def format_vec(self, u: dict) -> str:
        if not u:
            return "0"
        parts = []
        for k in sorted(u):
            c = self.field.format(u[k])
            parts.append(f"({c})*{self.labels[k]}" if c not in ("1",) else self.labels[k])
        return " + ".join(parts)

    def vec_to_json(self, u: dict) -> list:
        return [[k, self.field.to_json(u[k])] for k in sorted(u)]

    def structure_to_json(self) -> dict:
        mul = []
        for (i, j) in sorted(self.mul_table):
            mul.append([i, j, [[k, self.field.to_json(v)]
                               for k, v in sorted(self.mul_table[(i, j)].items())]])
        out = {"dim": self.dim, "labels": self.labels, "unit": self.vec_to_json(self.unit),
               "mul": mul}
        if self.truncation is not None:
            out["truncation"] = self.truncation
        if self.degrees is not None:
            out["degrees"] = self.degrees
        return out


def scalar_algebra(field) -> FinAlgebra:
    """The base field as a one-dimensional algebra."""
    one = field.one
    return FinAlgebra(field, ["1"], {(0, 0): {0: one}}, {0: one})


def dual_numbers(field, square=None) -> FinAlgebra:
    """K[t]/(t^2 - square); square=None gives t^2 = 0."""
    one = field.one
    table = {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}}
    if square is not None and square:
        table[(1, 1)] = {0: square}
    return FinAlgebra(field, ["1", "t"], table, {0: one}, degrees=[0, 1])


def truncated_polynomials(field, n: int) -> FinAlgebra:
    """K[t] cut at degree n: basis 1, t, ..., t^n with overflow dropped."""
    one = field.one
    table = {}
    for i in range(n + 1):
        for j in range(n + 1):
            if i + j <= n:
                table[(i, j)] = {i + j: one}
    labels = ["1"] + [f"t^{k}" if k > 1 else "t" for k in range(1, n + 1)]
    return FinAlgebra(field, labels, table, {0: one}, degrees=list(range(n + 1)),
                      truncation=n)
