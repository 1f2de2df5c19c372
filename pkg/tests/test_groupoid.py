from hopfpar.fields import RationalField
from hopfpar.groupoid import (build_groupoid, components, decompose_matrix_form,
                              groupoid_algebra, groupoid_report, matrix_blocks)
from hopfpar.groups import (cyclic_group, dihedral_group_4, klein_four_group,
                            orbit_decomposition, p1_subsets,
                            quaternion_group_8, symmetric_group_3)

QQ = RationalField()


def test_arrow_counts():
    assert len(build_groupoid(cyclic_group(2)).arrows) == 3
    assert len(build_groupoid(cyclic_group(4)).arrows) == 20
    assert len(build_groupoid(cyclic_group(1)).arrows) == 1


def test_z2_arrows_exact():
    gd = build_groupoid(cyclic_group(2))
    assert set(gd.arrows) == {(1, 0), (3, 0), (3, 1)}


def test_composition_example():
    gd = build_groupoid(cyclic_group(2))
    a = (3, 1)  # ({1,g}, g)
    assert gd.compose(a, a) == (3, 0)
    assert gd.compose((1, 0), a) is None  # source {1} != target {1,g}


def test_inverse_and_identity():
    gd = build_groupoid(cyclic_group(4))
    for a in gd.arrows:
        assert gd.compose(a, gd.identity(gd.source(a))) == a
        assert gd.compose(gd.inverse(a), a) == gd.identity(gd.source(a))


def test_components_match_orbits():
    for g in [cyclic_group(4), klein_four_group(), symmetric_group_3()]:
        gd = build_groupoid(g)
        dec = components(gd)
        assert sorted(m for cls in dec.classes for m in cls) == sorted(gd.objects)


def test_component_counts():
    assert len(components(build_groupoid(cyclic_group(4))).classes) == 5
    assert len(components(build_groupoid(cyclic_group(2))).classes) == 2
    assert len(components(build_groupoid(cyclic_group(1))).classes) == 1


def test_groupoid_algebra_axioms():
    for g in [cyclic_group(2), cyclic_group(3), cyclic_group(4)]:
        alg = groupoid_algebra(build_groupoid(g), QQ)
        assert alg.check_unital() is None
        assert alg.check_associative() is None


def test_matrix_decomposition_z4():
    dec = decompose_matrix_form(build_groupoid(cyclic_group(4)), QQ)
    assert dec["summands"] == [(1, 1), (2, 1), (1, 2), (3, 1), (1, 4)]
    assert dec["dim"] == 20
    assert sum(m * m * s for m, s in dec["summands"]) == 20


def test_matrix_decomposition_small():
    assert decompose_matrix_form(build_groupoid(cyclic_group(2)), QQ)["summands"] \
        == [(1, 1), (1, 2)]
    assert decompose_matrix_form(build_groupoid(cyclic_group(1)), QQ)["summands"] \
        == [(1, 1)]


def test_block_dimension_sums_up_to_order_8():
    for g in [cyclic_group(n) for n in range(1, 9)] + [
            klein_four_group(), symmetric_group_3(), dihedral_group_4(),
            quaternion_group_8()]:
        dec = orbit_decomposition(g)
        total = sum(len(cls) ** 2 * bin(st).count("1")
                    for cls, st in zip(dec.classes, dec.stabilizers))
        assert total == sum(bin(m).count("1") for m in p1_subsets(g))


def test_connecting_arrows_valid():
    gd = build_groupoid(symmetric_group_3())
    for block in matrix_blocks(gd):
        for obj, g in block.connecting.items():
            from hopfpar.groups import act_partial
            assert act_partial(gd.group, g, block.representative) == obj


def test_report_shape():
    rep = groupoid_report(build_groupoid(cyclic_group(4)), QQ)
    assert rep["dim"] == 20
    blocks = [c["block"] for c in rep["components"]]
    assert blocks == ["Mat_1(K)", "Mat_2(K)", "Mat_1(K[{1,g2}])", "Mat_3(K)",
                      "Mat_1(K[{1,g,g2,g3}])"]
    assert [c["m"] for c in rep["components"]] == [1, 2, 1, 3, 1]
