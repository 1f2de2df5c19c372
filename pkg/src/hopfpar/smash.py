"""The partial smash product A # H as a concrete unital algebra.

The carrier is the image of the projection a (x) h  |->  a (h_1 . 1_A) (x) h_2
inside A (x) H, stored as an echelon basis of the flattened tensor square.
Tensor coordinates use the flat key a_index * dim(H) + h_index.
"""

from __future__ import annotations

from .algebra import FinAlgebra, vclean, vdense
from .errors import AxiomFailure
from .linalg import rref
from .partial_action import PartialAction


class SmashProduct:
    def __init__(self, pa: PartialAction, carrier: FinAlgebra, embed, pivots):
        self.pa = pa
        self.carrier = carrier
        self.embed = embed                      # carrier index -> sparse tensor
        self.pivots = pivots                    # carrier index -> flat pivot
        self._pivot_row = {p: i for i, p in enumerate(pivots)}

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def tensor_label(self, flat: int) -> str:
        a, h = divmod(flat, self.pa.H.dim)
        return f"{self.pa.A.labels[a]}#{self.pa.H.labels[h]}"

    def coords(self, tensor: dict) -> dict:
        """Carrier coordinates of a tensor; raises if outside the carrier."""
        v = dict(tensor)
        out: dict = {}
        while v:
            p = min(v)
            row_idx = self._pivot_row.get(p)
            if row_idx is None:
                raise AxiomFailure("tensor lies outside the smash carrier",
                                   witness={"pivot": self.tensor_label(p)})
            c = v[p]
            out[row_idx] = c
            for k, s in self.embed[row_idx].items():
                t = v.get(k)
                t = -c * s if t is None else t - c * s
                if t:
                    v[k] = t
                elif k in v:
                    del v[k]
        return out

    def include(self, u: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            for k, s in self.embed[i].items():
                t = out.get(k)
                t = c * s if t is None else t + c * s
                if t:
                    out[k] = t
                elif k in out:
                    del out[k]
        return out

    def project0(self, tensor: dict) -> dict:
        """The defining projection, extended linearly to the tensor square."""
        pa = self.pa
        A, H = pa.A, pa.H
        out: dict = {}
        for flat, c in tensor.items():
            a_idx, h_idx = divmod(flat, H.dim)
            for (i, j, s) in H.coproduct[h_idx]:
                left = A.mul(A.basis_vec(a_idx), pa.act_basis(i, A.unit_vec()))
                for m, cm in left.items():
                    key = m * H.dim + j
                    t = out.get(key)
                    add = c * s * cm
                    t = add if t is None else t + add
                    if t:
                        out[key] = t
                    elif key in out:
                        del out[key]
        return out

    def smash_tensor_mul(self, uu: dict, vv: dict) -> dict:
        """(a # h)(b # k) = a (h_1 . b) # h_2 k on flat tensors."""
        pa = self.pa
        A, H = pa.A, pa.H
        out: dict = {}
        for fa, c1 in uu.items():
            a_idx, h_idx = divmod(fa, H.dim)
            avec = A.basis_vec(a_idx)
            for fb, c2 in vv.items():
                b_idx, k_idx = divmod(fb, H.dim)
                c12 = c1 * c2
                for (i, j, s) in H.coproduct[h_idx]:
                    acted = pa.act_basis(i, A.basis_vec(b_idx))
                    if not acted:
                        continue
                    left = A.mul(avec, acted)
                    if not left:
                        continue
                    right = H.alg.mul_table.get((j, k_idx))
                    if not right:
                        continue
                    for m, cm in left.items():
                        for t_idx, ct in right.items():
                            key = m * H.dim + t_idx
                            t = out.get(key)
                            add = c12 * s * cm * ct
                            t = add if t is None else t + add
                            if t:
                                out[key] = t
                            elif key in out:
                                del out[key]
        return out

    def bracket(self, hvec: dict) -> dict:
        """Image of h under h |-> 1_A # h, in carrier coordinates."""
        pa = self.pa
        tensor: dict = {}
        for h_idx, c in hvec.items():
            for a_idx, ca in pa.A.unit_vec().items():
                key = a_idx * pa.H.dim + h_idx
                tensor[key] = tensor.get(key, pa.H.field.zero) + c * ca
        return self.coords(self.project0(vclean(tensor)))

    # the canonical partial representation eta(h) = 1_A # h
    eta = bracket

    def element_a_sharp_h(self, avec: dict, hvec: dict) -> dict:
        """Carrier coordinates of a # h for A- and H-vectors a, h."""
        pa = self.pa
        tensor: dict = {}
        for a_idx, ca in avec.items():
            for h_idx, ch in hvec.items():
                key = a_idx * pa.H.dim + h_idx
                tensor[key] = tensor.get(key, pa.H.field.zero) + ca * ch
        return self.coords(self.project0(vclean(tensor)))


def build_smash(pa: PartialAction, verify: bool = True,
                assoc_triples=None) -> SmashProduct:
    """Carrier, structure constants, and the smash axioms for a partial action."""
    A, H = pa.A, pa.H
    field = A.field
    dim_flat = A.dim * H.dim

    sp = SmashProduct.__new__(SmashProduct)
    sp.pa = pa

    rows = []
    for a_idx in range(A.dim):
        for h_idx in range(H.dim):
            t = sp.project0({a_idx * H.dim + h_idx: field.one})
            rows.append(vdense(field, t, dim_flat))
    red, pivots = rref(field, rows)
    embed = [vclean({k: c for k, c in enumerate(r)}) for r in red]
    sp.embed = embed
    sp.pivots = pivots
    sp._pivot_row = {p: i for i, p in enumerate(pivots)}

    labels = []
    for p in pivots:
        a, h = divmod(p, H.dim)
        labels.append(f"{A.labels[a]}#{H.labels[h]}")

    table = {}
    for i in range(len(pivots)):
        for j in range(len(pivots)):
            prod = sp.smash_tensor_mul(embed[i], embed[j])
            cell = sp.coords(prod)
            if cell:
                table[(i, j)] = cell

    unit_tensor = {}
    for a_idx, ca in A.unit_vec().items():
        for h_idx, ch in H.unit_vec().items():
            unit_tensor[a_idx * H.dim + h_idx] = ca * ch
    unit = sp.coords(vclean(unit_tensor))

    degrees = None
    if A.degrees is not None:
        degrees = []
        for row_vec in embed:
            supp = [A.degrees[k // H.dim] for k in row_vec]
            degrees.append(max(supp) if supp else 0)

    carrier = FinAlgebra(field, labels, table, unit, degrees=degrees,
                         truncation=A.truncation)
    sp.carrier = carrier

    if verify:
        w = carrier.check_unital()
        if w:
            raise AxiomFailure("smash unit law failed", witness=w)
        # the projection is idempotent on every pure tensor
        for a_idx in range(A.dim):
            for h_idx in range(H.dim):
                once = sp.project0({a_idx * H.dim + h_idx: field.one})
                if sp.project0(once) != once:
                    raise AxiomFailure(
                        "carrier projection is not idempotent",
                        witness={"tensor": sp.tensor_label(a_idx * H.dim + h_idx)})
        w = carrier.check_associative(assoc_triples)
        if w:
            raise AxiomFailure("smash product is not associative", witness=w)
    return sp
