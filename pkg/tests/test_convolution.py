import pytest

from hopfpar.algebra import scalar_algebra
from hopfpar.convolution import (conv_unit, convolve,
                                 coradical_agreement_verdict,
                                 difference_idempotent_check,
                                 is_convolution_idempotent, linmap_kernel,
                                 linmaps_equal, wedge_vanishing_check)
from hopfpar.errors import PreconditionViolated
from hopfpar.fields import RationalField
from hopfpar.groups import cyclic_group
from hopfpar.hopf import group_algebra
from hopfpar.linalg import Subspace
from hopfpar.partial_action import compute_PX, unit_map
from hopfpar.suites import (action_corpus, orbit_closed_idempotents,
                            p_sum_idempotents)

QQ = RationalField()


def test_convolution_unit_is_neutral(KZ2):
    A = scalar_algebra(QQ)
    u = conv_unit(KZ2, A)
    f = [{0: QQ.one}, {}]  # the indicator of the identity
    assert linmaps_equal(convolve(f, u, KZ2, A), f)
    assert linmaps_equal(convolve(u, f, KZ2, A), f)


def test_identity_convolved_with_itself(KZ2):
    # f = g = identity map of KZ2 viewed as C -> A; on the grouplike g the
    # Sweedler expansion gives f(g)f(g) = g^2 = e
    A = group_algebra(cyclic_group(2), QQ).alg
    ident = [{0: QQ.one}, {1: QQ.one}]
    sq = convolve(ident, ident, KZ2, A)
    assert sq[1] == {0: QQ.one}
    assert sq[0] == {0: QQ.one}


def test_unit_map_is_convolution_idempotent():
    for name, pa in action_corpus():
        e = unit_map(pa)
        assert is_convolution_idempotent(e, pa.H, pa.A)


def test_scaled_unit_not_idempotent(KZ2):
    A = scalar_algebra(QQ)
    u = conv_unit(KZ2, A)
    doubled = [{k: v * 2 for k, v in vec.items()} for vec in u]
    assert not is_convolution_idempotent(doubled, KZ2, A)


def test_alpha_E_idempotent():
    for name, pa in action_corpus()[:5]:
        sys = compute_PX(pa, verify=False)
        for E in list(sys.P.values())[:4]:
            alpha = [pa.act_basis(h, E) for h in range(pa.H.dim)]
            assert is_convolution_idempotent(alpha, pa.H, pa.A)


def test_wedge_vanishing_trivial(KZ2):
    A = scalar_algebra(QQ)
    u = conv_unit(KZ2, A)
    zero = Subspace.zero(QQ, 2)
    assert wedge_vanishing_check(u, zero, zero, KZ2, A)


def test_wedge_vanishing_on_kernel_line(KZ2):
    # f = u o eps on KZ2: kernel is spanned by g - e
    A = scalar_algebra(QQ)
    f = conv_unit(KZ2, A)
    V = Subspace.from_rows(QQ, 2, [[-QQ.one, QQ.one]])
    assert wedge_vanishing_check(f, V, V, KZ2, A)


def test_wedge_vanishing_precondition():
    KZ2 = group_algebra(cyclic_group(2), QQ)
    A = scalar_algebra(QQ)
    f = conv_unit(KZ2, A)
    bad = Subspace.from_rows(QQ, 2, [[QQ.one, QQ.zero]])
    with pytest.raises(PreconditionViolated):
        wedge_vanishing_check(f, bad, bad, KZ2, A)


def test_wedge_vanishing_property_over_corpus():
    for name, pa in action_corpus():
        e = unit_map(pa)
        ker = linmap_kernel(e, pa.H, pa.A)
        rows = [list(r) for r in ker.basis]
        for vrows in (rows, rows[:1], rows[1:]):
            V = Subspace.from_rows(QQ, pa.H.dim, vrows)
            assert wedge_vanishing_check(e, V, V, pa.H, pa.A)


def test_trivial_equal_verdict(KZ2):
    A = scalar_algebra(QQ)
    u = conv_unit(KZ2, A)
    assert coradical_agreement_verdict(u, u, KZ2, A)["verdict"] == "equal"


def test_coradical_disagreement_verdict():
    corpus = action_corpus()
    name, pa = corpus[2]  # partial-Z2-on-K
    e = unit_map(pa)
    u = conv_unit(pa.H, pa.A)
    verdict = coradical_agreement_verdict(u, e, pa.H, pa.A)
    assert verdict["verdict"] == "hypothesis-failed: coradical disagreement"


def test_theorem_corpus_full():
    positives = 0
    for name, pa in action_corpus():
        H, A = pa.H, pa.A
        sys = compute_PX(pa, verify=False)
        e = unit_map(pa)
        for E in orbit_closed_idempotents(sys):
            f = [A.mul(e[h], E) for h in range(H.dim)]
            g = [A.mul(pa.act_basis(h, E), E) for h in range(H.dim)]
            verdict = coradical_agreement_verdict(f, g, H, A)
            assert verdict["verdict"] == "equal", (name, verdict)
            positives += 1
    assert positives >= 100


def test_difference_idempotent_lemma():
    checked = 0
    for name, pa in action_corpus():
        e = unit_map(pa)
        sys = compute_PX(pa, verify=False)
        for E in p_sum_idempotents(sys):
            g = [pa.act_basis(h, E) for h in range(pa.H.dim)]
            assert difference_idempotent_check(e, g, pa.H, pa.A)
            checked += 1
    assert checked >= 100


def test_difference_idempotent_precondition(KZ2):
    A = scalar_algebra(QQ)
    u = conv_unit(KZ2, A)
    not_idem = [{k: v * 2 for k, v in vec.items()} for vec in u]
    with pytest.raises(PreconditionViolated):
        difference_idempotent_check(not_idem, u, KZ2, A)


def test_convolution_associativity_samples():
    for name, pa in action_corpus()[:4]:
        H, A = pa.H, pa.A
        e = unit_map(pa)
        u = conv_unit(H, A)
        sys = compute_PX(pa, verify=False)
        maps = [e, u] + [[pa.act_basis(h, E) for h in range(H.dim)]
                         for E in list(sys.P.values())[:2]]
        for f in maps:
            for g in maps:
                for k in maps:
                    left = convolve(convolve(f, g, H, A), k, H, A)
                    right = convolve(f, convolve(g, k, H, A), H, A)
                    assert linmaps_equal(left, right)
