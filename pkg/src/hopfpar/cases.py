"""Expected decomposition data for the two dimension-8 rank-one cases.

These tables drive the `--against-paper` diff mode: component relation
tables, block dimensions and bases, and the tensor-level reduction
identities of the smash product.  Coefficients are scalar strings parsed
in the session field.  Subsets of the grouplike group Z4 = {1,g,g2,g3}
appear as bitmasks (bit l = g^l).
"""

from __future__ import annotations

_ALL_H = ["1", "g", "g2", "g3", "x", "gx", "g2x", "g3x"]

# component tables: mask -> (x-part coefficients for eps_{g^l x} against the
# surviving generator, generator label, square constant or None for a free
# generator; the grouplike pattern is always the mask itself)
_COMPONENTS_SHARED = {
    1: (["1", "0", "0", "1"], "x"),
    3: (["0", "1", "0", "-1"], "gx"),
    5: (["1", "1", "1", "1"], "x"),
    7: (["0", "0", "1", "1"], "g2x"),
    9: (["1", "0", "-1", "0"], "x"),
    11: (["0", "1", "1", "0"], "gx"),
    13: (["1", "1", "0", "0"], "x"),
    15: (["0", "0", "0", "0"], None),
}

_BLOCK_BASES = {
    1: [(1, a, h) for a in (0, 1) for h in ("1", "x")],
    3: [(3, a, h) for a in (0, 1) for h in ("1", "g", "x", "gx")]
       + [(9, a, h) for a in (0, 1) for h in ("1", "g3", "x", "g3x")],
    5: [(5, "n", h) for h in ("1", "g2", "x", "g2x")],
    7: [(7, a, h) for a in (0, 1) for h in ("1", "g", "g2", "x", "gx", "g2x")]
       + [(11, a, h) for a in (0, 1) for h in ("1", "g", "g3", "x", "gx", "g3x")]
       + [(13, a, h) for a in (0, 1) for h in ("1", "g2", "g3", "x", "g2x", "g3x")],
    15: [(15, 0, h) for h in _ALL_H],
}


def _pure(mask, alpha, h):
    return (mask, alpha, h, [(mask, alpha, h, "1")])


def _shared_identities():
    """Reductions of a # h that hold in both cases."""
    out = []
    # the scalar block: everything is a pure tensor
    for h in _ALL_H:
        out.append(_pure(15, 0, h))
    # vanishing at grouplike slots outside each subset
    for mask, kept in ((1, [0]), (3, [0, 1]), (9, [0, 3]),
                       (7, [0, 1, 2]), (11, [0, 1, 3]), (13, [0, 2, 3])):
        for alpha in (0, 1):
            for l in range(4):
                h = "1" if l == 0 else f"g{l}" if l > 1 else "g"
                terms = [(mask, alpha, h, "1")] if l in kept else []
                out.append((mask, alpha, h, terms))
    # x-column reductions with a zero or pure answer, identical in both cases
    out += [
        (1, 0, "x", [(1, 1, "g", "1"), (1, 0, "x", "1")]),
        (1, 0, "gx", []),
        (1, 0, "g2x", []),
        (1, 0, "g3x", [(1, 1, "1", "1")]),
        (1, 1, "gx", []),
        (1, 1, "g2x", []),
        (3, 0, "x", [(3, 0, "x", "1")]),
        (3, 0, "gx", [(3, 1, "g2", "1"), (3, 0, "gx", "1")]),
        (3, 0, "g2x", []),
        (3, 0, "g3x", [(3, 1, "1", "-1")]),
        (3, 1, "x", [(3, 1, "x", "1")]),
        (3, 1, "g2x", []),
        (9, 0, "x", [(9, 1, "g", "1"), (9, 0, "x", "1")]),
        (9, 0, "gx", []),
        (9, 0, "g2x", [(9, 1, "g3", "-1")]),
        (9, 0, "g3x", [(9, 0, "g3x", "1")]),
        (9, 1, "gx", []),
        (9, 1, "g3x", [(9, 1, "g3x", "1")]),
        (7, 0, "x", [(7, 0, "x", "1")]),
        (7, 0, "gx", [(7, 0, "gx", "1")]),
        (7, 0, "g2x", [(7, 1, "g3", "1"), (7, 0, "g2x", "1")]),
        (7, 0, "g3x", [(7, 1, "1", "1")]),
        (7, 1, "x", [(7, 1, "x", "1")]),
        (7, 1, "gx", [(7, 1, "gx", "1")]),
        (11, 0, "x", [(11, 0, "x", "1")]),
        (11, 0, "gx", [(11, 1, "g2", "1"), (11, 0, "gx", "1")]),
        (11, 0, "g2x", [(11, 1, "g3", "1")]),
        (11, 0, "g3x", [(11, 0, "g3x", "1")]),
        (11, 1, "x", [(11, 1, "x", "1")]),
        (11, 1, "g3x", [(11, 1, "g3x", "1")]),
        (13, 0, "x", [(13, 1, "g", "1"), (13, 0, "x", "1")]),
        (13, 0, "gx", [(13, 1, "g2", "1")]),
        (13, 0, "g2x", [(13, 0, "g2x", "1")]),
        (13, 0, "g3x", [(13, 0, "g3x", "1")]),
        (13, 1, "g2x", [(13, 1, "g2x", "1")]),
        (13, 1, "g3x", [(13, 1, "g3x", "1")]),
    ]
    return out


# the generic-degree reductions in the free component, n below the cutoff
_POLY_IDENTITIES = [
    (5, "n", "1", [(5, "n", "1", "1")]),
    (5, "n", "g", []),
    (5, "n", "g2", [(5, "n", "g2", "1")]),
    (5, "n", "g3", []),
    (5, "n", "x", [(5, "n+1", "g", "1"), (5, "n", "x", "1")]),
    (5, "n", "gx", [(5, "n+1", "g2", "1")]),
    (5, "n", "g2x", [(5, "n+1", "g3", "1"), (5, "n", "g2x", "1")]),
    (5, "n", "g3x", [(5, "n+1", "1", "1")]),
]

# reductions whose right side differs between the two cases: the nilpotent
# case kills the square, the non-nilpotent case folds it to -1
_CASE_IDENTITIES = {
    "nilpotent8": [
        (1, 1, "x", [(1, 1, "x", "1")]),
        (1, 1, "g3x", []),
        (3, 1, "gx", [(3, 1, "gx", "1")]),
        (3, 1, "g3x", []),
        (9, 1, "x", [(9, 1, "x", "1")]),
        (9, 1, "g2x", []),
        (7, 1, "g2x", [(7, 1, "g2x", "1")]),
        (7, 1, "g3x", []),
        (11, 1, "gx", [(11, 1, "gx", "1")]),
        (11, 1, "g2x", []),
        (13, 1, "x", [(13, 1, "x", "1")]),
        (13, 1, "gx", []),
    ],
    "nonnilpotent8": [
        (1, 1, "x", [(1, 0, "g", "-1"), (1, 1, "x", "1")]),
        (1, 1, "g3x", [(1, 0, "1", "-1")]),
        (3, 1, "gx", [(3, 0, "g2", "-1"), (3, 1, "gx", "1")]),
        (3, 1, "g3x", [(3, 0, "1", "1")]),
        (9, 1, "x", [(9, 0, "g", "-1"), (9, 1, "x", "1")]),
        (9, 1, "g2x", [(9, 0, "g3", "1")]),
        (7, 1, "g2x", [(7, 0, "g3", "-1"), (7, 1, "g2x", "1")]),
        (7, 1, "g3x", [(7, 0, "1", "-1")]),
        (11, 1, "gx", [(11, 0, "g2", "-1"), (11, 1, "gx", "1")]),
        (11, 1, "g2x", [(11, 0, "g3", "-1")]),
        (13, 1, "x", [(13, 0, "g", "-1"), (13, 1, "x", "1")]),
        (13, 1, "gx", [(13, 0, "g2", "-1")]),
    ],
}


def _case(name: str, kappa: str, square: str, tag: str) -> dict:
    comps = {}
    for mask, (coeffs, gen) in _COMPONENTS_SHARED.items():
        if mask == 5:
            kind, sq = "polynomial", None
        elif mask == 15:
            kind, sq = "scalar", None
        else:
            kind, sq = "finite", square
        comps[mask] = {"x_coeffs": coeffs, "generator": gen,
                       "kind": kind, "square": sq}
    return {
        "name": name,
        "group": "cyclic:4",
        "chi": "-1",
        "a": "g",
        "kappa": kappa,
        "dim": 8,
        "grouplike_order": 4,
        "filtration_dims": [4, 8],
        "components": comps,
        "component_counts": {tag: 6, "K[t]": 1, "K": 1},
        "block_dims": {1: 4, 3: 16, 5: None, 7: 36, 15: 8},  # None = 4*(N+1)
        "block_bases": _BLOCK_BASES,
        "identities": _shared_identities() + _CASE_IDENTITIES[name],
        "poly_identities": _POLY_IDENTITIES,
        "multiplicities": {"trivial": 6, "order2": 1, "order4": 1},
    }


REFERENCE_CASES = {
    "nilpotent8": _case("nilpotent8", "0", "0", "K[t]/(t^2)"),
    "nonnilpotent8": _case("nonnilpotent8", "1", "-1", "K[t]/(t^2+1)"),
}


def component_tag(kind: str, square_str) -> str:
    if kind == "polynomial":
        return "K[t]"
    if kind == "scalar":
        return "K"
    if square_str in (None, "0"):
        return "K[t]/(t^2)"
    if square_str == "-1":
        return "K[t]/(t^2+1)"
    return f"K[t]/(t^2-({square_str}))"
