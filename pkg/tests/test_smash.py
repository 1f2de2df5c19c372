from hopfpar.algebra import dual_numbers, scalar_algebra
from hopfpar.fields import RationalField
from hopfpar.groups import cyclic_group
from hopfpar.hpar import check_partial_rep
from hopfpar.partial_action import subgroup_indicator_action, trivial_action
from hopfpar.smash import build_smash
from hopfpar.suites import action_corpus

QQ = RationalField()


def test_global_action_gives_full_tensor(KZ4):
    A = dual_numbers(QQ)
    sp = build_smash(trivial_action(KZ4, A))
    assert sp.dim == A.dim * KZ4.dim
    # in the global case the projection is the identity on pure tensors
    for a in range(A.dim):
        for h in range(KZ4.dim):
            flat = a * KZ4.dim + h
            assert sp.project0({flat: QQ.one}) == {flat: QQ.one}


def test_partial_z2_carrier_dim_one(KZ2):
    pa = subgroup_indicator_action(KZ2, cyclic_group(2), 0b01, scalar_algebra(QQ))
    sp = build_smash(pa)
    assert sp.dim == 1
    assert sp.carrier.labels == ["1#1"]


def test_projection_idempotent_on_corpus():
    for name, pa in action_corpus()[:5]:
        sp = build_smash(pa, verify=False)
        for a in range(pa.A.dim):
            for h in range(pa.H.dim):
                once = sp.project0({a * pa.H.dim + h: QQ.one})
                assert sp.project0(once) == once


def test_unit_of_carrier(KZ2):
    pa = trivial_action(KZ2, scalar_algebra(QQ))
    sp = build_smash(pa)
    assert sp.carrier.check_unital() is None


def test_eta_is_partial_representation():
    for name, pa in action_corpus():
        sp = build_smash(pa, verify=False)
        eta = [sp.bracket(pa.H.basis_vec(h)) for h in range(pa.H.dim)]
        rep = check_partial_rep(eta, pa.H, sp.carrier)
        assert rep["passed"], name


def test_eta_unit(KZ2):
    pa = trivial_action(KZ2, scalar_algebra(QQ))
    sp = build_smash(pa)
    assert sp.bracket(KZ2.unit_vec()) == sp.carrier.unit_vec()


def test_eta_partial_isometry_like_identity(KZ2):
    # eta(g) eta(g) eta(g) = eta(g) follows from the PR axioms with S(g) = g
    pa = subgroup_indicator_action(KZ2, cyclic_group(2), 0b11, scalar_algebra(QQ))
    sp = build_smash(pa)
    eta_g = sp.bracket({1: QQ.one})
    c = sp.carrier
    assert c.mul(c.mul(eta_g, eta_g), eta_g) == eta_g


def test_algebra_map_eta_for_global_actions(KZ4):
    # for a global action eta is multiplicative outright
    pa = trivial_action(KZ4, dual_numbers(QQ))
    sp = build_smash(pa)
    for h in range(KZ4.dim):
        for k in range(KZ4.dim):
            lhs = sp.carrier.mul(sp.bracket(KZ4.basis_vec(h)),
                                 sp.bracket(KZ4.basis_vec(k)))
            rhs = sp.bracket(KZ4.mul(KZ4.basis_vec(h), KZ4.basis_vec(k)))
            assert lhs == rhs


def test_smash_associativity_exhaustive():
    for name, pa in action_corpus()[:4]:
        sp = build_smash(pa, verify=False)
        assert sp.carrier.check_associative() is None, name
