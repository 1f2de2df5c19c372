"""The groupoid of a finite group, its algebra, and the matrix-block form.

Arrows are pairs (X, g) with X in P1(G) and g^{-1} in X; the arrow runs
from X to gX.  The algebra has the arrows as basis, with composite-or-zero
multiplication, and splits into one matrix block per connected component.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .algebra import FinAlgebra
from .errors import AxiomFailure, DimensionMismatch
from .groups import (FiniteGroup, OrbitDecomposition, act_partial,
                     orbit_decomposition, p1_subsets, subset_label,
                     subset_members)


@dataclass
class GroupoidOfGroup:
    group: FiniteGroup
    objects: list                 # masks, ascending
    arrows: list                  # (mask, g) pairs, object-major
    arrow_index: dict

    def source(self, a) -> int:
        return a[0]

    def target(self, a) -> int:
        return act_partial(self.group, a[1], a[0])

    def identity(self, mask: int):
        return (mask, 0)

    def inverse(self, a):
        return (self.target(a), self.group.inv(a[1]))

    def compose(self, left, right):
        """left o right, defined when source(left) = target(right)."""
        if left[0] != self.target(right):
            return None
        return (right[0], self.group.mul(left[1], right[1]))

    def arrow_label(self, a) -> str:
        return f"({subset_label(self.group, a[0])},{self.group.label(a[1]) if a[1] else '1'})"


def build_groupoid(group: FiniteGroup, max_order: Optional[int] = None) -> GroupoidOfGroup:
    objects = p1_subsets(group, max_order)
    arrows = []
    for mask in objects:
        for g in group.elements():
            if (mask >> group.inv(g)) & 1:
                arrows.append((mask, g))
    gd = GroupoidOfGroup(group, objects, arrows,
                         {a: i for i, a in enumerate(arrows)})
    expected = sum(bin(m).count("1") for m in objects)
    if len(arrows) != expected:
        raise AxiomFailure("arrow count mismatch",
                           witness={"got": len(arrows), "expected": expected})
    _check_groupoid_axioms(gd)
    return gd


def _check_groupoid_axioms(gd: GroupoidOfGroup):
    for a in gd.arrows:
        if gd.compose(a, gd.identity(gd.source(a))) != a:
            raise AxiomFailure("right identity fails", witness={"arrow": list(a)})
        if gd.compose(gd.identity(gd.target(a)), a) != a:
            raise AxiomFailure("left identity fails", witness={"arrow": list(a)})
        inv = gd.inverse(a)
        if inv not in gd.arrow_index:
            raise AxiomFailure("inverse is not an arrow", witness={"arrow": list(a)})
        if gd.compose(inv, a) != gd.identity(gd.source(a)):
            raise AxiomFailure("inverse law fails", witness={"arrow": list(a)})
    # associativity of the partial composition wherever both sides parse
    for a in gd.arrows:
        for b in gd.arrows:
            if gd.source(a) != gd.target(b):
                continue
            ab = gd.compose(a, b)
            for c in gd.arrows:
                if gd.source(b) != gd.target(c):
                    continue
                if gd.compose(ab, c) != gd.compose(a, gd.compose(b, c)):
                    raise AxiomFailure("composition not associative",
                                       witness={"arrows": [list(a), list(b), list(c)]})


def groupoid_algebra(gd: GroupoidOfGroup, field) -> FinAlgebra:
    """Basis = arrows; non-composable products are literal zeros."""
    one = field.one
    table = {}
    for i, a in enumerate(gd.arrows):
        for j, b in enumerate(gd.arrows):
            c = gd.compose(a, b)
            if c is not None:
                table[(i, j)] = {gd.arrow_index[c]: one}
    unit = {gd.arrow_index[(m, 0)]: one for m in gd.objects}
    labels = [gd.arrow_label(a) for a in gd.arrows]
    return FinAlgebra(field, labels, table, unit)


def components(gd: GroupoidOfGroup) -> OrbitDecomposition:
    """Connected components of the object set; equals the orbit classes."""
    dec = orbit_decomposition(gd.group)
    reach = {m: {m} for m in gd.objects}
    for a in gd.arrows:
        reach[gd.source(a)].add(gd.target(a))
    for cls in dec.classes:
        for m in cls:
            if not reach[m] <= set(cls):
                raise AxiomFailure("component leaks outside its orbit class",
                                   witness={"object": m})
    return dec


@dataclass
class MatrixBlock:
    class_index: int
    representative: int
    objects: list
    m: int
    stabilizer: list       # group elements of G_X
    connecting: dict       # object -> g with (X_rep, g) an arrow onto the object

    def block_label(self, group: FiniteGroup) -> str:
        if len(self.stabilizer) == 1:
            return f"Mat_{self.m}(K)"
        return f"Mat_{self.m}(K[{stab_name(group, self.stabilizer)}])"


def stab_name(group: FiniteGroup, members) -> str:
    return "{" + ",".join("1" if s == 0 else group.label(s) for s in members) + "}"


def matrix_blocks(gd: GroupoidOfGroup) -> list:
    dec = components(gd)
    blocks = []
    for k, (cls, rep, stab_mask) in enumerate(
            zip(dec.classes, dec.representatives, dec.stabilizers)):
        stab = subset_members(stab_mask, gd.group.order)
        connecting = {}
        for obj in cls:
            g = next(g for g in gd.group.elements()
                     if (rep >> gd.group.inv(g)) & 1
                     and act_partial(gd.group, g, rep) == obj)
            connecting[obj] = g
        blocks.append(MatrixBlock(k, rep, list(cls), len(cls), stab, connecting))
    return blocks


def block_matrix_algebra(field, block: MatrixBlock, group: FiniteGroup) -> FinAlgebra:
    """Mat_m(K G_X) with basis (row, col, s) for s in the stabilizer."""
    one = field.one
    m, stab = block.m, block.stabilizer
    pos = {s: i for i, s in enumerate(stab)}
    basis = list(itertools.product(range(m), range(m), stab))
    index = {b: i for i, b in enumerate(basis)}
    table = {}
    for i, (r1, c1, s1) in enumerate(basis):
        for j, (r2, c2, s2) in enumerate(basis):
            if c1 == r2:
                table[(i, j)] = {index[(r1, c2, group.mul(s1, s2))]: one}
    unit = {index[(r, r, 0)]: one for r in range(m)}
    labels = [f"E[{r},{c}]*{group.label(s) if s else '1'}" for r, c, s in basis]
    alg = FinAlgebra(field, labels, table, unit)
    alg._basis_triples = basis
    alg._triple_index = index
    alg._pos = pos
    return alg


def decompose_matrix_form(gd: GroupoidOfGroup, field) -> dict:
    """Explicit isomorphism arrow-algebra -> direct sum of matrix blocks.

    Returns the blocks, the per-arrow images, and the verification summary;
    multiplicativity is checked on every basis pair of the groupoid algebra.
    """
    group = gd.group
    blocks = matrix_blocks(gd)
    block_algebras = [block_matrix_algebra(field, b, group) for b in blocks]
    class_of = {}
    for b in blocks:
        for obj in b.objects:
            class_of[obj] = b.class_index

    offsets = []
    total = 0
    for alg in block_algebras:
        offsets.append(total)
        total += alg.dim
    dim_groupoid = len(gd.arrows)
    if total != dim_groupoid:
        raise DimensionMismatch(
            f"sum of block dimensions {total} != groupoid dimension {dim_groupoid}")

    def image_of_arrow(a):
        src, g = a
        tgt = act_partial(group, g, src)
        b = blocks[class_of[src]]
        alg = block_algebras[b.class_index]
        g_src, g_tgt = b.connecting[src], b.connecting[tgt]
        s = group.mul(group.inv(g_tgt), group.mul(g, g_src))
        row, col = b.objects.index(tgt), b.objects.index(src)
        return offsets[b.class_index] + alg._triple_index[(row, col, s)]

    images = [image_of_arrow(a) for a in gd.arrows]
    if len(set(images)) != dim_groupoid:
        raise AxiomFailure("matrix-form map is not injective on the basis")

    # multiplicativity on all basis pairs, across the whole direct sum
    def block_mul(i: int, j: int):
        ki = next(k for k in range(len(blocks) + 1)
                  if k == len(blocks) or i < offsets[k] + block_algebras[k].dim)
        kj = next(k for k in range(len(blocks) + 1)
                  if k == len(blocks) or j < offsets[k] + block_algebras[k].dim)
        if ki != kj:
            return None
        alg = block_algebras[ki]
        cell = alg.mul_table.get((i - offsets[ki], j - offsets[ki]))
        if not cell:
            return None
        (k_idx, coeff), = cell.items()
        assert coeff == field.one
        return offsets[ki] + k_idx

    for i, a in enumerate(gd.arrows):
        for j, b in enumerate(gd.arrows):
            comp = gd.compose(a, b)
            lhs = images[gd.arrow_index[comp]] if comp is not None else None
            rhs = block_mul(images[i], images[j])
            if lhs != rhs:
                raise AxiomFailure("matrix-form map is not multiplicative",
                                   witness={"arrows": [list(a), list(b)]})

    return {
        "blocks": blocks,
        "block_algebras": block_algebras,
        "images": images,
        "dim": dim_groupoid,
        "summands": [(b.m, len(b.stabilizer)) for b in blocks],
    }


def groupoid_report(gd: GroupoidOfGroup, field) -> dict:
    dec = decompose_matrix_form(gd, field)
    group = gd.group
    comps = []
    for b in dec["blocks"]:
        comps.append({
            "objects": [subset_label(group, m) for m in b.objects],
            "m": b.m,
            "stabilizer_order": len(b.stabilizer),
            "block": b.block_label(group),
        })
    return {"components": comps, "dim": dec["dim"]}
