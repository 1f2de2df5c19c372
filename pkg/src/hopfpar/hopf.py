"""Hopf algebras by structure constants: group algebras and rank-one types.

The coproduct of basis element k is stored as a list of (i, j, scalar)
triples; the antipode as a matrix of image vectors.  Every constructor
runs the full executable axiom battery before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import FinAlgebra, vclean, vdense, vscale
from .errors import (AxiomFailure, DimensionMismatch, InputError,
                     InvalidGroupDatum, NotPointed)
from .groups import FiniteGroup
from .linalg import Mat, Subspace, preimage, rref, subspace_sum

_ORDER_SEARCH_CAP = 1024


class HopfAlgebraData:
    """A finite-dimensional Hopf algebra over an exact field."""

    def __init__(self, field, labels, mul_table, unit, coproduct, counit,
                 antipode, name: str = "H", check: bool = True):
        self.field = field
        self.alg = FinAlgebra(field, labels, mul_table, unit)
        self.coproduct = [list(t) for t in coproduct]
        self.counit = list(counit)
        self.antipode = [vclean(dict(v)) for v in antipode]
        self.name = name
        self._antipode_inverse = None
        if check:
            self.require_axioms()

    # -- basic accessors -------------------------------------------------

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def labels(self) -> list:
        return self.alg.labels

    def basis_vec(self, i: int) -> dict:
        return {i: self.field.one}

    def unit_vec(self) -> dict:
        return self.alg.unit_vec()

    def mul(self, u: dict, v: dict) -> dict:
        return self.alg.mul(u, v)

    def eps(self, u: dict):
        total = self.field.zero
        for i, c in u.items():
            total = total + c * self.counit[i]
        return total

    def S(self, u: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            for k, s in self.antipode[i].items():
                t = out.get(k)
                t = c * s if t is None else t + c * s
                if t:
                    out[k] = t
                elif k in out:
                    del out[k]
        return out

    def delta(self, u: dict) -> dict:
        """Coproduct of a vector as {(i, j): scalar}."""
        out: dict = {}
        for k, c in u.items():
            for (i, j, s) in self.coproduct[k]:
                key = (i, j)
                t = out.get(key)
                t = c * s if t is None else t + c * s
                if t:
                    out[key] = t
                elif key in out:
                    del out[key]
        return out

    def delta_iter(self, u: dict, m: int) -> dict:
        """m-fold coproduct: {(i_1, ..., i_{m+1}): scalar}."""
        cur = {(k,): c for k, c in u.items()}
        for _ in range(m):
            nxt: dict = {}
            for key, c in cur.items():
                last = key[-1]
                for (i, j, s) in self.coproduct[last]:
                    nk = key[:-1] + (i, j)
                    t = nxt.get(nk)
                    t = c * s if t is None else t + c * s
                    if t:
                        nxt[nk] = t
                    elif nk in nxt:
                        del nxt[nk]
            cur = nxt
        return cur

    def mul2(self, uu: dict, vv: dict) -> dict:
        """Product in H (x) H of {(i,j): c} tensors."""
        out: dict = {}
        for (i1, j1), a in uu.items():
            for (i2, j2), b in vv.items():
                left = self.alg.mul_table.get((i1, i2))
                right = self.alg.mul_table.get((j1, j2))
                if not left or not right:
                    continue
                c = a * b
                for k1, s1 in left.items():
                    for k2, s2 in right.items():
                        key = (k1, k2)
                        t = out.get(key)
                        add = c * s1 * s2
                        t = add if t is None else t + add
                        if t:
                            out[key] = t
                        elif key in out:
                            del out[key]
        return out

    # -- executable axioms ----------------------------------------------

    def check_axioms(self) -> list:
        """Run every Hopf axiom family; returns a list of failure witnesses."""
        failures = []
        w = self.alg.check_unital() or self.alg.check_associative()
        if w:
            failures.append(w)
        one = self.field.one
        d = self.dim
        unit2 = self.delta(self.unit_vec())
        tensor_unit = {}
        for (i, ci) in self.unit_vec().items():
            for (j, cj) in self.unit_vec().items():
                tensor_unit[(i, j)] = ci * cj
        if unit2 != vclean(tensor_unit):
            failures.append({"axiom": "coproduct-of-unit"})
        if self.eps(self.unit_vec()) != one:
            failures.append({"axiom": "counit-of-unit"})
        for k in range(d):
            b = self.basis_vec(k)
            dd = self.delta(b)
            left = {}
            right = {}
            for (i, j), c in dd.items():
                for (a, b2, s) in self.coproduct[i]:
                    key = (a, b2, j)
                    left[key] = left.get(key, self.field.zero) + c * s
                for (a, b2, s) in self.coproduct[j]:
                    key = (i, a, b2)
                    right[key] = right.get(key, self.field.zero) + c * s
            if vclean(left) != vclean(right):
                failures.append({"axiom": "coassociativity", "basis": self.labels[k]})
            lcounit: dict = {}
            rcounit: dict = {}
            for (i, j), c in dd.items():
                lcounit[j] = lcounit.get(j, self.field.zero) + c * self.counit[i]
                rcounit[i] = rcounit.get(i, self.field.zero) + c * self.counit[j]
            if vclean(lcounit) != b or vclean(rcounit) != b:
                failures.append({"axiom": "counit", "basis": self.labels[k]})
            lant: dict = {}
            rant: dict = {}
            for (i, j), c in dd.items():
                for k2, s in self.S(self.basis_vec(i)).items():
                    cell = self.alg.mul_table.get((k2, j), {})
                    for k3, s3 in cell.items():
                        lant[k3] = lant.get(k3, self.field.zero) + c * s * s3
                for k2, s in self.S(self.basis_vec(j)).items():
                    cell = self.alg.mul_table.get((i, k2), {})
                    for k3, s3 in cell.items():
                        rant[k3] = rant.get(k3, self.field.zero) + c * s * s3
            target = vscale(self.counit[k], self.unit_vec())
            if vclean(lant) != target or vclean(rant) != target:
                failures.append({"axiom": "antipode", "basis": self.labels[k]})
        for i in range(d):
            for j in range(d):
                prod = self.alg.mul_table.get((i, j), {})
                if self.delta(prod) != self.mul2(self.delta(self.basis_vec(i)),
                                                 self.delta(self.basis_vec(j))):
                    failures.append({"axiom": "coproduct-multiplicative",
                                     "pair": [self.labels[i], self.labels[j]]})
                want = self.counit[i] * self.counit[j]
                if self.eps(prod) != want:
                    failures.append({"axiom": "counit-multiplicative",
                                     "pair": [self.labels[i], self.labels[j]]})
        return failures

    def require_axioms(self):
        failures = self.check_axioms()
        if failures:
            raise AxiomFailure(f"Hopf axioms failed for {self.name}",
                               witness=failures[:5])

    def antipode_inverse(self) -> Optional[list]:
        """Inverse antipode matrix, or None when S is singular."""
        if self._antipode_inverse is not None:
            return self._antipode_inverse
        d = self.dim
        field = self.field
        rows = []
        for i in range(d):
            rows.append(vdense(field, self.antipode[i], d) + vdense(field, {i: field.one}, d))
        red, pivots = rref(field, rows, col_order=list(range(d)) + list(range(d, 2 * d)))
        if pivots[:d] != list(range(d)):
            return None
        inv = [vclean({j: red[i][d + j] for j in range(d)}) for i in range(d)]
        # rows of `inv` express e_i as combinations S(v); transpose convention:
        # inv[i] is the image of basis i under S^{-1}
        out = [dict() for _ in range(d)]
        for i in range(d):
            for j, c in inv[i].items():
                out[i][j] = c
        self._antipode_inverse = out
        return out

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        cop = []
        for triples in self.coproduct:
            cop.append([[i, j, self.field.to_json(c)] for (i, j, c) in triples])
        return {
            "name": self.name,
            "dim": self.dim,
            "labels": self.labels,
            "algebra": self.alg.structure_to_json(),
            "coproduct": cop,
            "counit": [self.field.to_json(c) for c in self.counit],
            "antipode": [self.alg.vec_to_json(v) for v in self.antipode],
        }

    @classmethod
    def from_structure_json(cls, obj: dict, field=None, check: bool = False):
        """Rebuild from a full structure-constant export. No axioms assumed."""
        from .fields import field_for

        if field is None:
            orders = [c.get("n", 1) for c in obj.get("counit", [])]
            field = field_for(max(orders) if orders else 1)
        alg = obj["algebra"]
        labels = alg["labels"]
        mul_table = {}
        for i, j, cells in alg["mul"]:
            mul_table[(i, j)] = {k: field.from_json(v) for k, v in cells}
        unit = {k: field.from_json(v) for k, v in alg["unit"]}
        coproduct = [[(i, j, field.from_json(c)) for i, j, c in triples]
                     for triples in obj["coproduct"]]
        counit = [field.from_json(c) for c in obj["counit"]]
        antipode = [{k: field.from_json(v) for k, v in vec}
                    for vec in obj["antipode"]]
        return cls(field, labels, mul_table, unit, coproduct, counit, antipode,
                   name=obj.get("name", "H"), check=check)


# ---------------------------------------------------------------------------
# constructors


def group_algebra(group: FiniteGroup, field, check: bool = True) -> HopfAlgebraData:
    """K G with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}."""
    one = field.one
    labels = ["1" if i == 0 else group.label(i) for i in group.elements()]
    table = {(i, j): {group.mul(i, j): one} for i in group.elements() for j in group.elements()}
    coproduct = [[(i, i, one)] for i in group.elements()]
    counit = [one] * group.order
    antipode = [{group.inv(i): one} for i in group.elements()]
    return HopfAlgebraData(field, labels, table, {0: one}, coproduct, counit,
                           antipode, name=f"K[{group.name}]", check=check)


@dataclass
class GroupDatum:
    """Defining data (G, chi, a, kappa) of a rank-one pointed Hopf algebra."""

    group: FiniteGroup
    chi: list                 # character value per group element
    a: int                    # central group element label index
    kappa: object             # scalar
    field: object

    def validate(self) -> int:
        """Checks the datum; returns n = multiplicative order of chi(a)."""
        G, chi = self.group, self.chi
        if len(chi) != G.order:
            raise InvalidGroupDatum("character must assign a value to every element")
        one = self.field.one
        if chi[0] != one:
            raise InvalidGroupDatum("character must send the identity to 1")
        for g in G.elements():
            if not chi[g]:
                raise InvalidGroupDatum("character values must be invertible",
                                        witness={"element": G.label(g)})
            for h in G.elements():
                if chi[G.mul(g, h)] != chi[g] * chi[h]:
                    raise InvalidGroupDatum(
                        "chi is not multiplicative",
                        witness={"pair": [G.label(g), G.label(h)]})
        if not G.is_central(self.a):
            raise InvalidGroupDatum(f"element {G.label(self.a)} is not central")
        n = 1
        power = chi[self.a]
        while power != one:
            power = power * chi[self.a]
            n += 1
            if n > _ORDER_SEARCH_CAP:
                raise InvalidGroupDatum("chi(a) is not a root of unity")
        chi_n_trivial = all(chi[g] ** n == one for g in G.elements())
        a_n = 0
        for _ in range(n):
            a_n = G.mul(a_n, self.a)
        kappa_cond = (not self.kappa) or a_n == 0
        if not (chi_n_trivial or kappa_cond):
            raise InvalidGroupDatum(
                "need chi^n = 1 or kappa*(a^n - 1) = 0",
                witness={"n": n})
        return n

    def nilpotent_type(self) -> bool:
        n = self.validate()
        a_n = 0
        for _ in range(n):
            a_n = self.group.mul(a_n, self.a)
        return (not self.kappa) or a_n == 0

    def to_json(self) -> dict:
        return {
            "type": "rank_one",
            "group": self.group.to_json(),
            "chi": [self.field.to_json(c) for c in self.chi],
            "a": self.group.label(self.a),
            "kappa": self.field.to_json(self.field.coerce(self.kappa)),
        }


def monomial_label(group: FiniteGroup, g: int, m: int) -> str:
    gpart = "" if g == 0 else group.label(g)
    if m == 0:
        return gpart or "1"
    xpart = "x" if m == 1 else f"x{m}"
    return gpart + xpart


def rank_one(datum: GroupDatum, check: bool = True) -> HopfAlgebraData:
    """The pointed Hopf algebra of a group datum, on the basis {g x^m}."""
    n = datum.validate()
    G, chi, field = datum.group, datum.chi, datum.field
    kappa = field.coerce(datum.kappa)
    N = G.order
    dim = N * n

    def idx(g: int, m: int) -> int:
        return m * N + g

    labels = [monomial_label(G, g, m) for m in range(n) for g in range(N)]

    a_n = 0
    for _ in range(n):
        a_n = G.mul(a_n, datum.a)

    table: dict = {}
    one = field.one
    for m1 in range(n):
        for g1 in range(N):
            for m2 in range(n):
                for g2 in range(N):
                    # (g1 x^m1)(g2 x^m2) = chi(g2)^m1 * g1 g2 x^(m1+m2)
                    coeff = chi[g2] ** m1
                    gp = G.mul(g1, g2)
                    m = m1 + m2
                    if m < n:
                        cell = {idx(gp, m): coeff}
                    else:
                        # x^n = kappa (a^n - 1); x commutes with a^n
                        r = m - n
                        cell = {}
                        if kappa:
                            cell[idx(G.mul(gp, a_n), r)] = coeff * kappa
                            prev = cell.get(idx(gp, r), field.zero)
                            cell[idx(gp, r)] = prev - coeff * kappa
                    cell = vclean(cell)
                    if cell:
                        table[(idx(g1, m1), idx(g2, m2))] = cell

    alg = FinAlgebra(field, labels, table, {0: one})

    # coproducts: Delta(g x^m) = (g (x) g) * (x (x) a + 1 (x) x)^m in H (x) H
    def mul2(uu, vv):
        out: dict = {}
        for (i1, j1), c1 in uu.items():
            for (i2, j2), c2 in vv.items():
                left = alg.mul_table.get((i1, i2))
                right = alg.mul_table.get((j1, j2))
                if not left or not right:
                    continue
                c = c1 * c2
                for k1, s1 in left.items():
                    for k2, s2 in right.items():
                        key = (k1, k2)
                        t = out.get(key, None)
                        add = c * s1 * s2
                        t = add if t is None else t + add
                        if t:
                            out[key] = t
                        elif key in out:
                            del out[key]
        return out

    delta_x = {(idx(0, 1), idx(datum.a, 0)): one, (idx(0, 0), idx(0, 1)): one}
    delta_x_pow = [{(idx(0, 0), idx(0, 0)): one}]
    for _ in range(n - 1):
        delta_x_pow.append(mul2(delta_x_pow[-1], delta_x))

    coproduct = []
    for m in range(n):
        for g in range(N):
            gg = {(idx(g, 0), idx(g, 0)): one}
            dd = mul2(gg, delta_x_pow[m])
            coproduct.append([(i, j, c) for (i, j), c in sorted(dd.items())])

    counit = [one if m == 0 else field.zero for m in range(n) for _ in range(N)]

    # S(x) = -x a^{-1}; the antipode axiom forces this value
    a_inv = G.inv(datum.a)
    s_x = vscale(-one, alg.mul({idx(0, 1): one}, {idx(a_inv, 0): one}))
    s_x_pow = [alg.unit_vec()]
    for _ in range(n - 1):
        s_x_pow.append(alg.mul(s_x_pow[-1], s_x))
    antipode = []
    for m in range(n):
        for g in range(N):
            antipode.append(alg.mul(s_x_pow[m], {idx(G.inv(g), 0): one}))

    name = f"H({G.name},chi,{G.label(datum.a)},kappa)"
    return HopfAlgebraData(field, labels, table, {0: one}, coproduct, counit,
                           antipode, name=name, check=check)


def rank_one_nilpotent8(field) -> HopfAlgebraData:
    """Dimension-8 rank-one algebra with x^2 = 0 over Z4."""
    from .groups import cyclic_group
    G = cyclic_group(4)
    chi = [field.one, -field.one, field.one, -field.one]
    return rank_one(GroupDatum(G, chi, 1, field.zero, field))


def rank_one_nonnilpotent8(field) -> HopfAlgebraData:
    """Dimension-8 rank-one algebra with x^2 = g^2 - 1 over Z4."""
    from .groups import cyclic_group
    G = cyclic_group(4)
    chi = [field.one, -field.one, field.one, -field.one]
    return rank_one(GroupDatum(G, chi, 1, field.one, field))


# ---------------------------------------------------------------------------
# grouplikes, wedges, the coradical filtration


def grouplikes(H: HopfAlgebraData) -> list:
    """Nonzero h with Delta(h) = h (x) h and eps(h) = 1.

    The scan covers scalar multiples of basis monomials, which is where the
    two constructors place every grouplike; completeness is certified later
    by the filtration reaching all of H.
    """
    out = []
    one = H.field.one
    for i in range(H.dim):
        triples = [(a, b, c) for (a, b, c) in H.coproduct[i] if c]
        if len(triples) != 1:
            continue
        a, b, c = triples[0]
        if a != i or b != i:
            continue
        # Delta(lam*b_i) = (lam*b_i)x(lam*b_i)  <=>  lam = c; then eps must be 1
        lam = c
        if lam * H.counit[i] != one:
            continue
        out.append({i: lam})
    return out


def grouplike_group(H: HopfAlgebraData):
    """The grouplikes as a validated FiniteGroup plus their vectors."""
    gl = grouplikes(H)
    unit = H.unit_vec()
    if unit not in gl:
        raise NotPointed("unit is not among the detected grouplikes")
    ordered = [unit] + [v for v in gl if v != unit]
    index = {}
    for pos, v in enumerate(ordered):
        index[tuple(sorted((k, repr(c)) for k, c in v.items()))] = pos

    def find(v):
        key = tuple(sorted((k, repr(c)) for k, c in v.items()))
        if key not in index:
            raise NotPointed("grouplikes are not closed under multiplication")
        return index[key]

    table = [[find(H.mul(a, b)) for b in ordered] for a in ordered]
    labels = []
    for v in ordered:
        (i, c), = v.items()
        labels.append(H.labels[i] if c == H.field.one else f"({H.field.format(c)})*{H.labels[i]}")
    return FiniteGroup(table, labels=labels, name=f"G({H.name})"), ordered


def delta_matrix(H: HopfAlgebraData) -> Mat:
    """Delta as a d^2 x d matrix over the flattened tensor-square basis."""
    d = H.dim
    field = H.field
    rows = [[field.zero] * d for _ in range(d * d)]
    for k in range(d):
        for (i, j, c) in H.coproduct[k]:
            rows[i * d + j][k] = rows[i * d + j][k] + c
    return Mat(field, rows)


def tensor_flank_subspace(H: HopfAlgebraData, V: Subspace, side: str) -> Subspace:
    """V (x) H (side='left') or H (x) V (side='right') in the flat basis."""
    d = H.dim
    field = H.field
    rows = []
    for v in V.basis:
        for j in range(d):
            row = [field.zero] * (d * d)
            for i, c in enumerate(v):
                if c:
                    if side == "left":
                        row[i * d + j] = c
                    else:
                        row[j * d + i] = c
            rows.append(row)
    return Subspace.from_rows(field, d * d, rows)


def wedge(V: Subspace, W: Subspace, H: HopfAlgebraData) -> Subspace:
    """V wedge W = Delta^{-1}(V (x) H  +  H (x) W)."""
    if V.ambient != H.dim or W.ambient != H.dim:
        raise DimensionMismatch("wedge factors must live inside H")
    big = subspace_sum(tensor_flank_subspace(H, V, "left"),
                       tensor_flank_subspace(H, W, "right"))
    return preimage(delta_matrix(H), big)


@dataclass
class Filtration:
    """Increasing chain C_0 <= C_1 <= ... ending at the whole coalgebra."""

    terms: list

    @property
    def dims(self) -> list:
        return [t.dim for t in self.terms]

    def __len__(self):
        return len(self.terms)


def coradical(H: HopfAlgebraData) -> Subspace:
    field = H.field
    rows = [vdense(field, v, H.dim) for v in grouplikes(H)]
    return Subspace.from_rows(field, H.dim, rows, labels=H.labels)


def coradical_filtration(H: HopfAlgebraData) -> Filtration:
    """C_0 = span(grouplikes); C_n = C_{n-1} wedge C_0 until it exhausts H."""
    c0 = coradical(H)
    terms = [c0]
    while terms[-1].dim < H.dim:
        nxt = wedge(terms[-1], c0, H)
        if not nxt.contains_subspace(terms[-1]):
            raise AxiomFailure("filtration failed to be increasing")
        if nxt.dim == terms[-1].dim:
            raise NotPointed(
                "filtration stabilized strictly below H; input is not pointed "
                "with basis-supported grouplikes",
                witness={"dims": [t.dim for t in terms]})
        terms.append(nxt)
    return Filtration(terms)


def hopf_from_spec(spec: dict, field) -> HopfAlgebraData:
    """Build from the JSON description {type, group, chi, a, kappa}."""
    kind = spec.get("type")
    group = FiniteGroup.from_json(spec["group"]) if isinstance(spec.get("group"), dict) \
        else spec.get("group")
    if kind == "group_algebra":
        return group_algebra(group, field)
    if kind == "rank_one":
        chi = [field.from_json(c) if isinstance(c, dict) else field.parse(str(c))
               for c in spec["chi"]]
        a = group.element_by_label(str(spec["a"]))
        kap = spec["kappa"]
        kappa = field.from_json(kap) if isinstance(kap, dict) else field.parse(str(kap))
        return rank_one(GroupDatum(group, chi, a, kappa, field))
    raise InputError(f"unknown Hopf spec type {kind!r}")
