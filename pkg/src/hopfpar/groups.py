"""Finite groups by multiplication table and the partial action on P1(G).

Subsets of G are integer bitmasks (bit i = element i); P1(G) is the family
of subsets containing the identity, which always carries label 0.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .errors import InputError, NoIdentity, NoInverse, NotAssociative, OrderTooLarge

DEFAULT_MAX_ORDER = 16


def max_subset_order() -> int:
    env = os.environ.get("HOPFPAR_MAX_ORDER")
    return int(env) if env else DEFAULT_MAX_ORDER


class FiniteGroup:
    """Validated multiplication-table group with identity label 0."""

    def __init__(self, table, labels=None, name: str = "G"):
        n = len(table)
        for i, row in enumerate(table):
            if len(row) != n:
                raise InputError(f"row {i} has length {len(row)}, expected {n}")
            for v in row:
                if not (0 <= v < n):
                    raise InputError(f"table entry {v} out of range 0..{n - 1}")
        for a in range(n):
            if table[0][a] != a or table[a][0] != a:
                raise NoIdentity("element 0 is not a two-sided identity",
                                 witness={"element": a})
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if table[a][b] == 0 and table[b][a] == 0:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise NoInverse(f"element {a} has no two-sided inverse",
                                witness={"element": a})
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise NotAssociative(
                            f"associativity fails at ({a}, {b}, {c})",
                            witness={"triple": [a, b, c]})
        self.order = n
        self.table = [list(r) for r in table]
        self.inverse = inv
        self.labels = list(labels) if labels else default_labels(n)
        if len(self.labels) != n:
            raise InputError("label count does not match group order")
        self.name = name

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    def label(self, a: int) -> str:
        return self.labels[a]

    def element_by_label(self, label: str) -> int:
        if label in self.labels:
            return self.labels.index(label)
        try:
            idx = int(label)
        except ValueError:
            raise InputError(f"unknown group element {label!r}; labels are {self.labels}")
        if not (0 <= idx < self.order):
            raise InputError(f"element index {idx} out of range")
        return idx

    def is_central(self, a: int) -> bool:
        return all(self.mul(a, b) == self.mul(b, a) for b in self.elements())

    def to_json(self) -> dict:
        return {"order": self.order, "table": self.table, "labels": self.labels}

    @classmethod
    def from_json(cls, obj: dict) -> "FiniteGroup":
        if "table" not in obj:
            raise InputError("group JSON needs a 'table' field")
        return cls(obj["table"], labels=obj.get("labels"), name=obj.get("name", "G"))

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def default_labels(n: int) -> list:
    return ["e"] + [f"g{i}" for i in range(1, n)]


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + ["g" if i == 1 else f"g{i}" for i in range(1, n)]
    return FiniteGroup(table, labels=labels, name=f"Z{n}")


def klein_four_group() -> FiniteGroup:
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return FiniteGroup(table, labels=["e", "a", "b", "ab"], name="V4")


def symmetric_group_3() -> FiniteGroup:
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms]
    return FiniteGroup(table, labels=["e", "r", "r2", "s", "rs", "r2s"], name="S3")


def dihedral_group_4() -> FiniteGroup:
    # elements r^i s^j, index i + 4j;  s r = r^-1 s
    def mul(x, y):
        i1, j1 = x % 4, x // 4
        i2, j2 = y % 4, y // 4
        i = (i1 + (i2 if j1 == 0 else -i2)) % 4
        return i + 4 * ((j1 + j2) % 2)

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    return FiniteGroup(table, labels=["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"],
                       name="D4")


def quaternion_group_8() -> FiniteGroup:
    # 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    base = {
        ("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
        ("i", "1"): "i", ("i", "i"): "-1", ("i", "j"): "k", ("i", "k"): "-j",
        ("j", "1"): "j", ("j", "i"): "-k", ("j", "j"): "-1", ("j", "k"): "i",
        ("k", "1"): "k", ("k", "i"): "j", ("k", "j"): "-i", ("k", "k"): "-1",
    }
    units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def mul(x, y):
        sx, cx = (x.startswith("-"), x.lstrip("-"))
        sy, cy = (y.startswith("-"), y.lstrip("-"))
        r = base[(cx, cy)]
        neg = sx ^ sy ^ r.startswith("-")
        core = r.lstrip("-")
        return ("-" if neg else "") + core

    idx = {u: i for i, u in enumerate(units)}
    table = [[idx[mul(a, b)] for b in units] for a in units]
    return FiniteGroup(table, labels=units, name="Q8")


BUILTIN_GROUPS = {
    "klein4": klein_four_group,
    "s3": symmetric_group_3,
    "d4": dihedral_group_4,
    "q8": quaternion_group_8,
}


def group_from_spec(spec: str) -> FiniteGroup:
    spec = spec.strip().lower()
    if spec.startswith("cyclic:"):
        return cyclic_group(int(spec.split(":", 1)[1]))
    if spec in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[spec]()
    raise InputError(f"unknown group spec {spec!r}; use cyclic:N or one of "
                     f"{sorted(BUILTIN_GROUPS)}")


# ---------------------------------------------------------------------------
# subsets of G containing the identity, and the partial action g . X


def subset_members(mask: int, order: int) -> list:
    return [i for i in range(order) if mask >> i & 1]


def subset_label(group: FiniteGroup, mask: int) -> str:
    names = [("1" if i == 0 else group.label(i)) for i in subset_members(mask, group.order)]
    return "{" + ",".join(names) + "}"


def p1_subsets(group: FiniteGroup, max_order: Optional[int] = None) -> list:
    bound = max_order if max_order is not None else max_subset_order()
    if group.order > bound:
        raise OrderTooLarge(
            f"group order {group.order} exceeds the P1 enumeration bound {bound}",
            witness={"order": group.order, "bound": bound})
    n = group.order
    return [m | 1 for m in range(0, 1 << n, 2)]


def act_partial(group: FiniteGroup, g: int, mask: int) -> Optional[int]:
    """g . X = gX when g^{-1} in X, else undefined (None)."""
    if not (mask >> group.inv(g)) & 1:
        return None
    out = 0
    for x in subset_members(mask, group.order):
        out |= 1 << group.mul(g, x)
    return out


def stabilizer(group: FiniteGroup, mask: int) -> int:
    """G_X = {g : g^{-1} in X, gX = X} as a subgroup bitmask."""
    out = 0
    for g in group.elements():
        if (mask >> group.inv(g)) & 1 and act_partial(group, g, mask) == mask:
            out |= 1 << g
    return out


@dataclass
class OrbitDecomposition:
    group: FiniteGroup
    classes: list          # list of sorted lists of masks
    representatives: list  # min mask per class
    stabilizers: list      # subgroup mask of each representative

    def class_of(self, mask: int) -> int:
        for k, cls in enumerate(self.classes):
            if mask in cls:
                return k
        raise InputError(f"subset {mask} not in P1(G)")


def orbit_decomposition(group: FiniteGroup, max_order: Optional[int] = None) -> OrbitDecomposition:
    subsets = p1_subsets(group, max_order)
    seen = set()
    classes = []
    for start in subsets:
        if start in seen:
            continue
        todo, orbit = [start], {start}
        while todo:
            cur = todo.pop()
            for g in group.elements():
                nxt = act_partial(group, g, cur)
                if nxt is not None and nxt not in orbit:
                    orbit.add(nxt)
                    todo.append(nxt)
        orbit = sorted(orbit)
        classes.append(orbit)
        seen |= set(orbit)
    classes.sort(key=lambda cls: cls[0])
    reps = [cls[0] for cls in classes]
    stabs = []
    for rep in reps:
        st = stabilizer(group, rep)
        if not is_subgroup(group, st):
            raise NotAssociative("stabilizer failed the subgroup check",
                                 witness={"subset": rep})
        stabs.append(st)
    return OrbitDecomposition(group, classes, reps, stabs)


def is_subgroup(group: FiniteGroup, mask: int) -> bool:
    mem = subset_members(mask, group.order)
    if 0 not in mem:
        return False
    for a in mem:
        if not (mask >> group.inv(a)) & 1:
            return False
        for b in mem:
            if not (mask >> group.mul(a, b)) & 1:
                return False
    return True


def generated_subgroup(group: FiniteGroup, gens) -> int:
    mask = 1
    frontier = [0] + list(gens)
    while frontier:
        a = frontier.pop()
        for g in gens:
            for c in (group.mul(a, g), group.inv(group.mul(a, g))):
                if not (mask >> c) & 1:
                    mask |= 1 << c
                    frontier.append(c)
    return mask


def all_subgroups(group: FiniteGroup) -> list:
    found = {1}
    for gens_mask in range(1 << group.order):
        gens = subset_members(gens_mask, group.order)
        if len(gens) > 3:
            continue
        found.add(generated_subgroup(group, gens))
    return sorted(found)


def conjugate_subset(group: FiniteGroup, g: int, mask: int) -> int:
    out = 0
    for x in subset_members(mask, group.order):
        out |= 1 << group.mul(group.mul(g, x), group.inv(g))
    return out


def subgroup_conjugacy_classes(group: FiniteGroup) -> list:
    """Subgroups up to conjugacy; each class listed sorted, min mask first."""
    subs = all_subgroups(group)
    seen, classes = set(), []
    for s in subs:
        if s in seen:
            continue
        orbit = sorted({conjugate_subset(group, g, s) for g in group.elements()})
        classes.append(orbit)
        seen |= set(orbit)
    classes.sort(key=lambda cls: cls[0])
    return classes


def stabilizer_multiplicities(group: FiniteGroup, max_order: Optional[int] = None) -> dict:
    """q(G, L): how many X in P1(G) have stabilizer conjugate to L."""
    classes = subgroup_conjugacy_classes(group)
    rep_of = {}
    for cls in classes:
        for s in cls:
            rep_of[s] = cls[0]
    counts = {cls[0]: 0 for cls in classes}
    for mask in p1_subsets(group, max_order):
        st = stabilizer(group, mask)
        counts[rep_of[st]] += 1
    return counts
