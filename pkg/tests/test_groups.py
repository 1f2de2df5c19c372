import pytest

from hopfpar.errors import NoIdentity, NoInverse, NotAssociative, OrderTooLarge
from hopfpar.groups import (FiniteGroup, act_partial, all_subgroups,
                            conjugate_subset, cyclic_group, dihedral_group_4,
                            group_from_spec, is_subgroup, klein_four_group,
                            orbit_decomposition, p1_subsets,
                            quaternion_group_8, stabilizer,
                            stabilizer_multiplicities, subset_label,
                            symmetric_group_3)

ALL_BUILTINS = [cyclic_group(n) for n in range(1, 9)] + [
    klein_four_group(), symmetric_group_3(), dihedral_group_4(),
    quaternion_group_8()]


def test_valid_tables():
    assert cyclic_group(2).table == [[0, 1], [1, 0]]
    assert cyclic_group(4).order == 4
    for g in ALL_BUILTINS:
        assert g.mul(0, 0) == 0


def test_no_inverse_witness():
    with pytest.raises(NoInverse) as err:
        FiniteGroup([[0, 1], [1, 1]])
    assert err.value.witness == {"element": 1}


def test_no_identity():
    with pytest.raises(NoIdentity):
        FiniteGroup([[0, 0], [1, 1]])


def test_not_associative_names_triple():
    # a Latin square with identity that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative) as err:
        FiniteGroup(table)
    assert "triple" in (err.value.witness or {})


def test_p1_subset_counts():
    assert [subset_label(cyclic_group(2), m) for m in p1_subsets(cyclic_group(2))] \
        == ["{1}", "{1,g}"]
    assert len(p1_subsets(cyclic_group(4))) == 8
    assert p1_subsets(cyclic_group(1)) == [1]


def test_order_guard(monkeypatch):
    big = cyclic_group(5)
    with pytest.raises(OrderTooLarge):
        p1_subsets(big, max_order=4)
    monkeypatch.setenv("HOPFPAR_MAX_ORDER", "3")
    with pytest.raises(OrderTooLarge):
        p1_subsets(big)
    monkeypatch.setenv("HOPFPAR_MAX_ORDER", "6")
    assert len(p1_subsets(big)) == 16


def test_partial_action_examples():
    z4 = cyclic_group(4)
    # g . {1, g3} = {1, g}
    assert act_partial(z4, 1, 0b1001) == 0b0011
    # g . {1} undefined since g^{-1} = g3 not in {1}
    assert act_partial(z4, 1, 0b0001) is None
    for g in ALL_BUILTINS:
        for mask in p1_subsets(g):
            assert act_partial(g, 0, mask) == mask


def test_partiality_law():
    for g in [cyclic_group(4), symmetric_group_3()]:
        for mask in p1_subsets(g):
            for a in g.elements():
                for b in g.elements():
                    inner = act_partial(g, b, mask)
                    if inner is None:
                        continue
                    outer = act_partial(g, a, inner)
                    combined = act_partial(g, g.mul(a, b), mask)
                    if outer is not None and combined is not None:
                        assert outer == combined


def test_orbit_decomposition_z4():
    dec = orbit_decomposition(cyclic_group(4))
    assert dec.representatives == [1, 3, 5, 7, 15]
    assert dec.classes == [[1], [3, 9], [5], [7, 11, 13], [15]]
    assert dec.stabilizers == [1, 1, 5, 1, 15]


def test_orbit_decomposition_z2():
    dec = orbit_decomposition(cyclic_group(2))
    assert dec.classes == [[1], [3]]


def test_stabilizer_of_index_two_subset():
    assert stabilizer(cyclic_group(4), 0b0101) == 0b0101


def test_stabilizers_are_subgroups():
    for g in ALL_BUILTINS:
        if g.order > 8:
            continue
        for mask in p1_subsets(g):
            assert is_subgroup(g, stabilizer(g, mask))


def test_orbit_size_times_stabilizer():
    for g in ALL_BUILTINS:
        dec = orbit_decomposition(g)
        for cls, st in zip(dec.classes, dec.stabilizers):
            for mask in cls:
                inv_count = sum(1 for a in g.elements() if (mask >> g.inv(a)) & 1)
                assert inv_count == bin(mask).count("1")
            assert len(cls) == bin(cls[0]).count("1") // bin(st).count("1")


def test_stabilizer_conjugation_isomorphism():
    for g in [cyclic_group(4), symmetric_group_3(), dihedral_group_4()]:
        for mask in p1_subsets(g):
            st = stabilizer(g, mask)
            for a in g.elements():
                moved = act_partial(g, a, mask)
                if moved is not None:
                    assert conjugate_subset(g, a, st) == stabilizer(g, moved)


def test_multiplicities_z4():
    counts = stabilizer_multiplicities(cyclic_group(4))
    assert counts == {1: 6, 0b0101: 1, 0b1111: 1}


def test_multiplicities_z2_z1():
    assert stabilizer_multiplicities(cyclic_group(2)) == {1: 1, 3: 1}
    assert stabilizer_multiplicities(cyclic_group(1)) == {1: 1}


def test_multiplicity_totals():
    for g in ALL_BUILTINS:
        counts = stabilizer_multiplicities(g)
        assert sum(counts.values()) == len(p1_subsets(g))
        assert all(v >= 0 for v in counts.values())


def test_subgroup_enumeration_s3():
    subs = all_subgroups(symmetric_group_3())
    # S3 has 6 subgroups: 1, three of order 2, one of order 3, S3
    assert len(subs) == 6


def test_group_from_spec_and_json():
    g = group_from_spec("cyclic:3")
    assert g.order == 3
    again = FiniteGroup.from_json(g.to_json())
    assert again.table == g.table and again.labels == g.labels
    assert group_from_spec("q8").order == 8
