"""Deterministic JSON report builders shared by the service and the CLI."""

from __future__ import annotations

import json

from .cases import REFERENCE_CASES, component_tag
from .errors import InputError
from .fields import CyclotomicField, RationalField
from .groupoid import build_groupoid, groupoid_report
from .groups import FiniteGroup, group_from_spec, subset_label
from .hopf import (GroupDatum, HopfAlgebraData, coradical_filtration,
                   grouplike_group, rank_one)
from .hpar import (apar_multiplicity_report, build_hpar,
                   diff_against_reference, kpar_group, psi_to_kpar, theta_and_p)
from .partial_action import decompose
from .errors import UnsupportedPresentation
from .suites import SUITES, run_suites

SCHEMA = "hopfpar/1"


def canonical_json(obj, pretty: bool = True) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_field_spec(spec: str, *needed_scalars: str):
    """Resolve 'rational' | 'cyclotomic:N' | 'auto' against the used scalars."""
    spec = (spec or "auto").strip().lower()
    if spec == "rational":
        return RationalField()
    if spec.startswith("cyclotomic:"):
        n = int(spec.split(":", 1)[1])
        return RationalField() if n <= 1 else CyclotomicField(n)
    if spec != "auto":
        raise InputError(f"unknown field spec {spec!r}")
    if any("zeta" in s for s in needed_scalars):
        raise InputError("scalars mention zeta; pass --field cyclotomic:N explicitly")
    rational = RationalField()
    for s in needed_scalars:
        for term in s.split(","):
            try:
                rational.parse(term)
            except Exception:
                # not rational: 'i' terms promote the session to Q(zeta_4)
                return CyclotomicField(4)
    return rational


def field_json(field) -> dict:
    if isinstance(field, RationalField):
        return {"kind": "rational", "n": 1}
    return {"kind": "cyclotomic", "n": field.order}


def resolve_group(spec: str = None, table_json: dict = None) -> FiniteGroup:
    if table_json is not None:
        return FiniteGroup.from_json(table_json)
    if spec:
        return group_from_spec(spec)
    raise InputError("a group spec or an explicit table is required")


def build_chi(group: FiniteGroup, chi_spec: str, field) -> list:
    """A character from either per-element values or one generator value."""
    parts = [p.strip() for p in chi_spec.split(",")]
    if len(parts) == group.order:
        return [field.parse(p) for p in parts]
    if len(parts) != 1:
        raise InputError("chi needs 1 value (cyclic generator) or one per element")
    value = field.parse(parts[0])
    if group.order == 1:
        return [field.one]
    if group.element_order(1) != group.order:
        if value == field.one:
            return [field.one] * group.order
        raise InputError("single-value chi needs a cyclic group (element 1 a generator)")
    chi = [field.one] * group.order
    power = field.one
    elt = 0
    for _ in range(1, group.order):
        elt = group.mul(elt, 1)
        power = power * value
        chi[elt] = power
    return chi


# ---------------------------------------------------------------------------


def kpar_report(group: FiniteGroup, include_structure: bool = False) -> dict:
    field = RationalField()
    hp = kpar_group(group, field)
    gd = build_groupoid(group)
    psi = psi_to_kpar(gd, hp)
    comp_report = groupoid_report(gd, field)
    blocks = []
    for b in hp.blocks:
        blocks.append({
            "representative": subset_label(group, b["representative"]),
            "orbit": [subset_label(group, m) for m in b["orbit"]],
            "stabilizer_order": b["stabilizer_order"],
            "dim": b["dim"],
        })
    out = {
        "schema": SCHEMA,
        "command": "kpar",
        "group": {"name": group.name, "order": group.order,
                  "labels": group.labels},
        "dim": hp.dim,
        "components": comp_report["components"],
        "matrix_decomposition": " + ".join(
            c["block"] for c in comp_report["components"]),
        "blocks": blocks,
        "checks": {
            "partial_representation": True,
            "theta_section": theta_and_p(hp),
            "psi_isomorphism": psi,
            "matrix_form_pairs": hp.matrix_form["dim"] ** 2,
        },
    }
    if include_structure:
        out["structure"] = hp.carrier.structure_to_json()
    return out


def rankone_report(group: FiniteGroup, chi_spec: str, a_label: str,
                   kappa_spec: str, truncation: int, field,
                   against: str = None, include_structure: bool = False) -> dict:
    chi = build_chi(group, chi_spec, field)
    a = group.element_by_label(a_label)
    kappa = field.parse(kappa_spec)
    datum = GroupDatum(group, chi, a, kappa, field)
    n = datum.validate()
    H = rank_one(datum)
    glikes, _ = grouplike_group(H)
    filt = coradical_filtration(H)

    report = {
        "schema": SCHEMA,
        "command": "rankone",
        "field": field_json(field),
        "truncation": truncation,
        "datum": {
            "group": {"name": group.name, "order": group.order},
            "chi": chi_spec,
            "a": group.label(a),
            "kappa": kappa_spec,
            "n": n,
            "nilpotent_type": datum.nilpotent_type(),
        },
        "hopf": {
            "dim": H.dim,
            "axioms": "pass",
            "grouplike_order": glikes.order,
            "filtration_dims": filt.dims,
        },
    }

    try:
        hp = build_hpar(H, truncation)
    except UnsupportedPresentation as exc:
        report["apar"] = {"status": "unsupported-presentation",
                          "reason": exc.message}
        report["hpar"] = {"status": "skipped"}
        if include_structure:
            report["structure"] = {"hopf": H.to_json()}
        if against:
            report["against"] = {"case": against, "match": False,
                                 "discrepancies": ["base algebra unsupported"]}
        return report

    data = hp.apar
    comps = []
    for comp in data.components:
        sq = None if comp.square is None else field.format(comp.square[1])
        entry = comp.table_json(H)
        entry["isomorphism_type"] = component_tag(comp.kind, sq)
        comps.append(entry)
    gamma_ideals = decompose(data.pa, hp.sys)
    report["apar"] = {
        "status": "ok",
        "dim": data.A.dim,
        "truncated": data.A.truncated,
        "components": comps,
        "gamma_ideals": [
            {"representative": g["representative"],
             "orbit": g["orbit"],
             "stabilizer_order": g["stabilizer_order"],
             "component_dim": g["component_dim"],
             "stability": g["stability"],
             **({"truncated_at": g["truncated_at"]} if "truncated_at" in g else {})}
            for g in gamma_ideals],
    }

    blocks = []
    for b in hp.blocks:
        blocks.append({
            "representative": subset_label(hp.group, b["representative"]),
            "orbit": [subset_label(hp.group, m) for m in b["orbit"]],
            "stabilizer_order": b["stabilizer_order"],
            "dim": b["dim"],
        })
    report["hpar"] = {
        "status": "ok",
        "dim": hp.dim,
        "blocks": blocks,
        "theta": theta_and_p(hp),
    }

    mult = apar_multiplicity_report(data)
    report["multiplicities"] = {
        "classes": [
            {"stabilizer": c["stabilizer"],
             "stabilizer_order": c["stabilizer_order"],
             "count": c["count"],
             "component": c["component_tag"],
             "isomorphy_spot_check": c["spot_check"]}
            for c in mult["classes"]],
    }

    if include_structure:
        report["structure"] = {
            "hopf": H.to_json(),
            "hpar": hp.carrier.structure_to_json(),
        }

    if against:
        if against not in REFERENCE_CASES:
            raise InputError(f"unknown reference case {against!r}; "
                             f"choose from {sorted(REFERENCE_CASES)}")
        diffs = diff_against_reference(hp, REFERENCE_CASES[against])
        report["against"] = {"case": against, "match": not diffs,
                             "discrepancies": diffs}
    return report


def hopf_structure_suite(obj: dict) -> dict:
    """Axiom battery for a user-supplied structure-constant file."""
    try:
        H = HopfAlgebraData.from_structure_json(obj, check=False)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed structure-constant input: {exc}")
    failures = H.check_axioms()
    check = {"name": "hopf-axioms", "passed": not failures}
    if failures:
        check["witness"] = failures[:5]
    return {"suite": "hopf-structure", "passed": not failures,
            "checks": [check]}


def verify_report(suites, max_group_order: int = 4, truncation: int = 3,
                  hopf_structure: dict = None) -> dict:
    names = list(SUITES) if "all" in suites else list(suites)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise InputError(f"unknown suites {unknown}; available: {sorted(SUITES)}")
    out = run_suites(names, max_group_order=max_group_order,
                     truncation=truncation)
    suite_reports = out["suites"]
    passed = out["passed"]
    if hopf_structure is not None:
        extra = hopf_structure_suite(hopf_structure)
        suite_reports = suite_reports + [extra]
        passed = passed and extra["passed"]
    return {
        "schema": SCHEMA,
        "command": "verify",
        "max_group_order": max_group_order,
        "truncation": truncation,
        "passed": passed,
        "suites": suite_reports,
    }
