"""Symmetric partial module-algebra actions and their idempotent systems.

The central objects: the canonical idempotents P_X for X in P1(G(H)), their
orbit sums Gamma_X, the two direct-sum decompositions of the module algebra,
and induced actions on unital ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import FinAlgebra, vadd, vclean, vdense, vscale, vsub
from .convolution import convolve, is_convolution_idempotent, linmaps_equal
from .errors import (AxiomFailure, NotCentral, NotIdempotent,
                     PreconditionViolated)
from .groups import (FiniteGroup, OrbitDecomposition, act_partial,
                     orbit_decomposition, p1_subsets, subset_label)
from .hopf import HopfAlgebraData, grouplike_group


class PartialAction:
    """A linear map H (x) A -> A given by per-basis action matrices."""

    def __init__(self, H: HopfAlgebraData, A: FinAlgebra, mats, name: str = "action"):
        self.H = H
        self.A = A
        self.mats = [[vclean(dict(col)) for col in row] for row in mats]
        self.name = name

    def act_basis(self, h_idx: int, avec: dict) -> dict:
        out: dict = {}
        row = self.mats[h_idx]
        for a_idx, c in avec.items():
            for k, s in row[a_idx].items():
                t = out.get(k)
                t = c * s if t is None else t + c * s
                if t:
                    out[k] = t
                elif k in out:
                    del out[k]
        return out

    def act(self, hvec: dict, avec: dict) -> dict:
        out: dict = {}
        for h_idx, c in hvec.items():
            part = self.act_basis(h_idx, avec)
            for k, s in part.items():
                t = out.get(k)
                t = c * s if t is None else t + c * s
                if t:
                    out[k] = t
                elif k in out:
                    del out[k]
        return out

    def unit_image(self, hvec: dict) -> dict:
        return self.act(hvec, self.A.unit_vec())


def trivial_action(H: HopfAlgebraData, A: FinAlgebra, name: Optional[str] = None) -> PartialAction:
    """h . a = eps(h) a; global actions are in particular partial."""
    mats = []
    for h in range(H.dim):
        c = H.counit[h]
        mats.append([vscale(c, {a: H.field.one}) for a in range(A.dim)])
    return PartialAction(H, A, mats, name or f"trivial({H.name})")


def subgroup_indicator_action(H: HopfAlgebraData, group: FiniteGroup,
                              subgroup_mask: int, A: FinAlgebra) -> PartialAction:
    """For H = K[group]: g . a = a when g lies in the subgroup, else 0.

    Genuinely partial whenever the subgroup is proper; the subgroup law is
    exactly what makes PA3/PA4 hold.
    """
    mats = []
    for g in group.elements():
        keep = (subgroup_mask >> g) & 1
        mats.append([{a: H.field.one} if keep else {} for a in range(A.dim)])
    return PartialAction(H, A, mats, name=f"indicator({subset_label(group, subgroup_mask)})")


# ---------------------------------------------------------------------------
# axiom battery


def check_partial_action(pa: PartialAction) -> dict:
    """Exhaustive PA1-PA4 over basis tuples; witnesses name the first failure."""
    H, A = pa.H, pa.A
    report = {}

    witness = None
    unit_h = H.unit_vec()
    for a in range(A.dim):
        if pa.act(unit_h, A.basis_vec(a)) != A.basis_vec(a):
            witness = {"a": A.labels[a]}
            break
    report["PA1"] = {"passed": witness is None, **({"witness": witness} if witness else {})}

    witness = None
    for h in range(H.dim):
        if witness:
            break
        dd = H.coproduct[h]
        for a in range(A.dim):
            if witness:
                break
            for b in range(A.dim):
                lhs = pa.act_basis(h, A.mul_table.get((a, b), {}))
                rhs: dict = {}
                for (i, j, c) in dd:
                    term = A.mul(pa.act_basis(i, A.basis_vec(a)),
                                 pa.act_basis(j, A.basis_vec(b)))
                    for k, s in term.items():
                        t = rhs.get(k)
                        t = c * s if t is None else t + c * s
                        if t:
                            rhs[k] = t
                        elif k in rhs:
                            del rhs[k]
                if lhs != rhs:
                    witness = {"h": H.labels[h], "a": A.labels[a], "b": A.labels[b]}
                    break
    report["PA2"] = {"passed": witness is None, **({"witness": witness} if witness else {})}

    unit_a = A.unit_vec()
    for axiom, left_unit in (("PA3", True), ("PA4", False)):
        witness = None
        for h in range(H.dim):
            if witness:
                break
            dd = H.coproduct[h]
            for k in range(H.dim):
                if witness:
                    break
                for a in range(A.dim):
                    inner = pa.act_basis(k, A.basis_vec(a))
                    lhs = pa.act_basis(h, inner)
                    rhs: dict = {}
                    for (i, j, c) in dd:
                        if left_unit:
                            term = A.mul(pa.act_basis(i, unit_a),
                                         pa.act(H.mul(H.basis_vec(j), H.basis_vec(k)),
                                                A.basis_vec(a)))
                        else:
                            term = A.mul(pa.act(H.mul(H.basis_vec(i), H.basis_vec(k)),
                                                A.basis_vec(a)),
                                         pa.act_basis(j, unit_a))
                        for m, s in term.items():
                            t = rhs.get(m)
                            t = c * s if t is None else t + c * s
                            if t:
                                rhs[m] = t
                            elif m in rhs:
                                del rhs[m]
                    if lhs != rhs:
                        witness = {"h": H.labels[h], "k": H.labels[k], "a": A.labels[a]}
                        break
        report[axiom] = {"passed": witness is None, **({"witness": witness} if witness else {})}

    report["passed"] = all(report[x]["passed"] for x in ("PA1", "PA2", "PA3", "PA4"))
    return report


def require_partial_action(pa: PartialAction):
    rep = check_partial_action(pa)
    if not rep["passed"]:
        raise AxiomFailure(f"partial action axioms failed for {pa.name}", witness=rep)


def check_base_relations(f: list, H: HopfAlgebraData, A: FinAlgebra,
                         unit: Optional[dict] = None):
    """The three defining relations of the base algebra for a map H -> A.

    (i) f(1) = unit of the target, (ii) f = f * f,
    (iii) f(h1 k) f(h2) = f(h1) f(h2 k); returns None when all hold, else a
    witness.  These are exactly the hypotheses of the universal property
    used to extend generator maps.  `unit` overrides the target unit when
    the map lands in a unital ideal of A.
    """
    target_unit = A.unit_vec() if unit is None else vclean(dict(unit))
    one_img = {}
    for i, c in H.unit_vec().items():
        for k, s in f[i].items():
            one_img[k] = one_img.get(k, H.field.zero) + c * s
    if vclean(one_img) != target_unit:
        return {"relation": "unit"}
    if not linmaps_equal(convolve(f, f, H, A), f):
        return {"relation": "idempotent"}
    for h in range(H.dim):
        dd = H.coproduct[h]
        for k in range(H.dim):
            lhs: dict = {}
            rhs: dict = {}
            for (i, j, c) in dd:
                hk1 = H.mul(H.basis_vec(i), H.basis_vec(k))
                hk2 = H.mul(H.basis_vec(j), H.basis_vec(k))
                from .convolution import apply_linmap
                t1 = A.mul(apply_linmap(f, hk1), f[j])
                t2 = A.mul(f[i], apply_linmap(f, hk2))
                for m, s in t1.items():
                    lhs[m] = lhs.get(m, H.field.zero) + c * s
                for m, s in t2.items():
                    rhs[m] = rhs.get(m, H.field.zero) + c * s
            if vclean(lhs) != vclean(rhs):
                return {"relation": "exchange", "pair": [H.labels[h], H.labels[k]]}
    return None


def unit_map(pa: PartialAction) -> list:
    """e_A(h) = h . 1_A, certified to satisfy the base-algebra relations."""
    e = [pa.act_basis(h, pa.A.unit_vec()) for h in range(pa.H.dim)]
    w = check_base_relations(e, pa.H, pa.A)
    if w is not None:
        raise AxiomFailure(f"unit map of {pa.name} violates the base relations",
                           witness=w)
    if not is_convolution_idempotent(e, pa.H, pa.A):
        raise AxiomFailure("unit map is not a convolution idempotent")
    return e


# ---------------------------------------------------------------------------
# the idempotent system P_X / Gamma_X


@dataclass
class IdempotentSystem:
    pa: PartialAction
    group: FiniteGroup              # grouplike group of H
    grouplike_vecs: list            # H-vectors, identity first
    P: dict                         # subset mask -> A-vector
    decomposition: OrbitDecomposition
    Gamma: dict                     # representative mask -> A-vector

    def subset_name(self, mask: int) -> str:
        return subset_label(self.group, mask)


def compute_PX(pa: PartialAction, verify: bool = True) -> IdempotentSystem:
    """All P_X for X in P1(G); verifies the orthogonal-idempotent laws."""
    H, A = pa.H, pa.A
    group, gvecs = grouplike_group(H)
    one = A.unit_vec()
    eps_g = [pa.act(gv, one) for gv in gvecs]
    P = {}
    for mask in p1_subsets(group):
        prod = A.unit_vec()
        for g in group.elements():
            factor = eps_g[g] if (mask >> g) & 1 else vsub(one, eps_g[g])
            prod = A.mul(prod, factor)
        P[mask] = prod
    if verify:
        total: dict = {}
        for mask, p in P.items():
            total = vadd(total, p)
            if not A.is_idempotent(p):
                raise NotIdempotent(f"P_{subset_label(group, mask)} is not idempotent")
            bad = A.commutes_with_all(p)
            if bad is not None:
                raise NotCentral(f"P_{subset_label(group, mask)} fails centrality at {bad}")
        if total != one:
            raise AxiomFailure("sum of the P_X is not the unit")
        masks = sorted(P)
        for i, m1 in enumerate(masks):
            for m2 in masks[i + 1:]:
                if A.mul(P[m1], P[m2]):
                    raise AxiomFailure("P_X are not orthogonal",
                                       witness={"pair": [subset_label(group, m1),
                                                         subset_label(group, m2)]})
        for g in group.elements():
            for mask in masks:
                got = pa.act(gvecs[g], P[mask])
                moved = act_partial(group, g, mask)
                want = P[moved] if moved is not None else {}
                if got != want:
                    raise AxiomFailure(
                        "g . P_X law fails",
                        witness={"g": group.label(g), "X": subset_label(group, mask)})
    dec = orbit_decomposition(group)
    Gamma = {}
    for cls, rep in zip(dec.classes, dec.representatives):
        acc: dict = {}
        for m in cls:
            for k, v in P[m].items():
                acc[k] = acc.get(k, A.field.zero) + v
        Gamma[rep] = vclean(acc)
    return IdempotentSystem(pa, group, gvecs, P, dec, Gamma)


def verify_gamma_laws(sys: IdempotentSystem) -> dict:
    """Gamma_X: both defining formulas, centrality, completeness, h.Gamma law."""
    pa, A, H = sys.pa, sys.pa.A, sys.pa.H
    field = A.field
    group = sys.group
    report = {"classes": []}
    total: dict = {}
    for rep, stab_mask in zip(sys.decomposition.representatives,
                              sys.decomposition.stabilizers):
        gamma = sys.Gamma[rep]
        # averaged form (1/|G_X|) sum_g g . P_X
        avg: dict = {}
        for g in group.elements():
            part = pa.act(sys.grouplike_vecs[g], sys.P[rep])
            for k, v in part.items():
                avg[k] = avg.get(k, field.zero) + v
        scale = field.inv(field.from_int(bin(stab_mask).count("1")))
        if vclean(vscale(scale, avg)) != gamma:
            raise AxiomFailure("averaged and orbit-sum forms of Gamma disagree",
                               witness={"X": sys.subset_name(rep)})
        if not A.is_idempotent(gamma):
            raise NotIdempotent(f"Gamma_{sys.subset_name(rep)} is not idempotent")
        if A.commutes_with_all(gamma) is not None:
            raise NotCentral(f"Gamma_{sys.subset_name(rep)} is not central")
        for h in range(H.dim):
            lhs = pa.act_basis(h, gamma)
            rhs = A.mul(pa.act_basis(h, A.unit_vec()), gamma)
            if lhs != rhs:
                raise AxiomFailure("h . Gamma != (h . 1) Gamma",
                                   witness={"h": H.labels[h], "X": sys.subset_name(rep)})
        for k, v in gamma.items():
            total[k] = total.get(k, field.zero) + v
        report["classes"].append({"representative": sys.subset_name(rep)})
    if vclean(total) != A.unit_vec():
        raise AxiomFailure("sum of the Gamma_X is not the unit")
    reps = sys.decomposition.representatives
    for i, r1 in enumerate(reps):
        for r2 in reps[i + 1:]:
            if A.mul(sys.Gamma[r1], sys.Gamma[r2]):
                raise AxiomFailure("Gamma idempotents are not orthogonal")
    report["passed"] = True
    return report


def decompose(pa: PartialAction, sys: IdempotentSystem) -> list:
    """The ideals A Gamma_X: bases, dimension bookkeeping, H-stability."""
    A, H = pa.A, pa.H
    out = []
    dim_total = 0
    for rep, cls, stab in zip(sys.decomposition.representatives,
                              sys.decomposition.classes,
                              sys.decomposition.stabilizers):
        gamma = sys.Gamma[rep]
        ideal = A.ideal_subspace(gamma)
        for h in range(H.dim):
            for a in range(A.dim):
                lhs = pa.act_basis(h, A.mul(A.basis_vec(a), gamma))
                rhs = A.mul(pa.act_basis(h, A.basis_vec(a)), gamma)
                if lhs != rhs:
                    raise AxiomFailure(
                        "ideal is not stable under the partial action",
                        witness={"h": H.labels[h], "a": A.labels[a],
                                 "X": sys.subset_name(rep)})
        dim_total += ideal.dim
        entry = {
            "representative": sys.subset_name(rep),
            "orbit": [sys.subset_name(m) for m in cls],
            "stabilizer_order": bin(stab).count("1"),
            "component_dim": ideal.dim,
            "stability": "pass",
            "subspace": ideal,
        }
        if A.truncated:
            entry["truncated_at"] = A.truncation
        out.append(entry)
    if dim_total != A.dim:
        raise AxiomFailure(f"block dimensions {dim_total} do not add to dim A = {A.dim}")
    return out


def induce_on_ideal(pa: PartialAction, E: dict, verify: bool = True) -> tuple:
    """The action h |> b = (h . b) E on the unital ideal generated by E.

    Returns (new_action, ideal_subspace); the ideal's basis supplies the
    labels of the induced algebra.
    """
    A, H = pa.A, pa.H
    field = A.field
    E = vclean(E)
    if not A.is_idempotent(E):
        raise NotIdempotent("induced actions need an idempotent generator")
    if A.commutes_with_all(E) is not None:
        raise NotCentral("induced actions need a central generator")
    ideal = A.ideal_subspace(E)
    basis_vecs = [{i: c for i, c in enumerate(row) if c} for row in ideal.basis]

    def coords(vec: dict) -> dict:
        dense = vdense(field, vec, A.dim)
        red = ideal.reduce(dense)
        if red is None:
            raise AxiomFailure("product left the ideal; E is not central-idempotent")
        return vclean({i: c for i, c in enumerate(red)})

    dim = len(basis_vecs)
    labels = []
    for row in ideal.basis:
        pivot = next(i for i, c in enumerate(row) if c)
        labels.append(f"{A.labels[pivot]}|E")
    table = {}
    for i in range(dim):
        for j in range(dim):
            prod = coords(A.mul(basis_vecs[i], basis_vecs[j]))
            if prod:
                table[(i, j)] = prod
    degrees = None
    if A.degrees is not None:
        degrees = []
        for row in ideal.basis:
            supp = [A.degrees[i] for i, c in enumerate(row) if c]
            degrees.append(max(supp) if supp else 0)
    sub = FinAlgebra(field, labels, table, coords(E), degrees=degrees,
                     truncation=A.truncation)
    mats = []
    for h in range(H.dim):
        row = []
        for b in basis_vecs:
            row.append(coords(A.mul(pa.act_basis(h, b), E)))
        mats.append(row)
    new_pa = PartialAction(H, sub, mats, name=f"{pa.name}|ideal")
    if verify:
        require_partial_action(new_pa)
    return new_pa, ideal


# ---------------------------------------------------------------------------
# auxiliary laws used by the verification suites


def word_action_identity_check(pa: PartialAction, length: int = 2) -> bool:
    """h . (e(k1)...e(kn)) = sum e(h1 k1)...e(hn kn) e(h_{n+1}) for n <= length."""
    H, A = pa.H, pa.A
    e = [pa.act_basis(h, A.unit_vec()) for h in range(H.dim)]
    for h in range(H.dim):
        for k1 in range(H.dim):
            b1 = e[k1]
            lhs = pa.act_basis(h, b1)
            rhs: dict = {}
            for key, c in H.delta_iter(H.basis_vec(h), 1).items():
                i, j = key
                term = A.mul(pa.act(H.mul(H.basis_vec(i), H.basis_vec(k1)),
                                    A.unit_vec()), e[j])
                for m, s in term.items():
                    rhs[m] = rhs.get(m, H.field.zero) + c * s
            if lhs != vclean(rhs):
                return False
            if length < 2:
                continue
            for k2 in range(H.dim):
                b = A.mul(b1, e[k2])
                lhs = pa.act_basis(h, b)
                rhs = {}
                for key, c in H.delta_iter(H.basis_vec(h), 2).items():
                    i, j, l = key
                    term = A.mul(
                        A.mul(pa.act(H.mul(H.basis_vec(i), H.basis_vec(k1)), A.unit_vec()),
                              pa.act(H.mul(H.basis_vec(j), H.basis_vec(k2)), A.unit_vec())),
                        e[l])
                    for m, s in term.items():
                        rhs[m] = rhs.get(m, H.field.zero) + c * s
                if lhs != vclean(rhs):
                    return False
    return True


def gamma_G_global_restriction_check(pa: PartialAction, sys: IdempotentSystem) -> bool:
    """On A Gamma_G the action is global: h.(k.(a Gamma_G)) = (hk.a) Gamma_G."""
    full_mask = (1 << sys.group.order) - 1
    rep = sys.decomposition.representatives[-1]
    if rep != full_mask:
        rep = next(r for r in sys.decomposition.representatives if r == full_mask)
    gamma = sys.Gamma[rep]
    H, A = pa.H, pa.A
    for h in range(H.dim):
        for k in range(H.dim):
            for a in range(A.dim):
                ag = A.mul(A.basis_vec(a), gamma)
                lhs = pa.act_basis(h, pa.act_basis(k, ag))
                rhs = A.mul(pa.act(H.mul(H.basis_vec(h), H.basis_vec(k)),
                                   A.basis_vec(a)), gamma)
                if lhs != rhs:
                    return False
    return True


def lemma_fE_check(pa: PartialAction, E: dict, f: list) -> dict:
    """The comparison lemma for a central idempotent E and a map f: H -> A.

    Hypotheses: f convolution idempotent, f(h1)(h2.E) = (h1.E)f(h2) = h.E,
    and x.E = f(x)E on the span of grouplikes.  Conclusion: h.E = f(h)E.
    """
    H, A = pa.H, pa.A
    field = A.field
    if not A.is_idempotent(vclean(E)) or A.commutes_with_all(E) is not None:
        raise PreconditionViolated("E must be a central idempotent")
    if not is_convolution_idempotent(f, H, A):
        return {"hypotheses": False, "which": "f not idempotent"}
    alpha = [pa.act_basis(h, vclean(E)) for h in range(H.dim)]
    lhs = convolve(f, alpha, H, A)
    rhs = convolve(alpha, f, H, A)
    if not (linmaps_equal(lhs, alpha) and linmaps_equal(rhs, alpha)):
        return {"hypotheses": False, "which": "f * alpha_E != alpha_E"}
    from .hopf import coradical
    for row in coradical(H).basis:
        u = {i: c for i, c in enumerate(row) if c}
        from .convolution import apply_linmap
        if pa.act(u, vclean(E)) != A.mul(apply_linmap(f, u), vclean(E)):
            return {"hypotheses": False, "which": "coradical disagreement"}
    for h in range(H.dim):
        if alpha[h] != A.mul(f[h], vclean(E)):
            raise AxiomFailure("lemma conclusion failed despite hypotheses",
                               witness={"h": H.labels[h]})
    return {"hypotheses": True, "conclusion": True}
