import pytest

from thetajordan.abelian import CapExceeded, FiniteAbelianGroup, make_group
from thetajordan.heis import ThetaElement, theta_group
from thetajordan.lattice import all_subgroups, is_abelian
from thetajordan.symplectic import (
    comm_pairing,
    is_isotropic,
    max_isotropic_order,
    pairing_space,
    structural_min_abelian_index,
)

from helpers import divisor_chains


def space(factors):
    return pairing_space(make_group(factors))


class TestPairing:
    def test_diagonal_vanishes(self):
        for factors in ([1], [2], [3], [2, 2]):
            P = space(factors)
            for p in P.points():
                assert P.pairing(p, p) == 0

    def test_frozen_z2(self):
        P = space([2])
        assert P.pairing(((1,), (0,)), ((0,), (1,))) == 1

    def test_frozen_z3_antisymmetric_values(self):
        P = space([3])
        assert P.pairing(((1,), (0,)), ((0,), (1,))) == 1
        assert P.pairing(((0,), (1,)), ((1,), (0,))) == 2  # -1 mod 3

    def test_antisymmetry_and_bilinearity_exhaustive(self):
        for factors in ([2], [3], [4], [2, 2]):
            P = space(factors)
            m = P.m
            pts = P.points()
            for p in pts:
                for q in pts:
                    assert (P.pairing(p, q) + P.pairing(q, p)) % m == 0
                    for r in pts[:6]:
                        assert P.pairing(P.add(p, r), q) == (
                            P.pairing(p, q) + P.pairing(r, q)
                        ) % m

    def test_comm_pairing_alias(self):
        P = space([2])
        p, q = ((1,), (0,)), ((0,), (1,))
        assert comm_pairing(P, p, q) == P.pairing(p, q)

    def test_index_point_roundtrip(self):
        for factors in ([1], [2], [4, 2]):
            P = space(factors)
            for i, p in enumerate(P.points()):
                assert P.index(p) == i
                assert P.point(i) == p


class TestBridgeToCommutator:
    def test_central_exponent_equals_pairing(self):
        # exhaustive over all pairs for every base of order <= 4
        for factors in ([2], [3], [4], [2, 2]):
            K = make_group(factors)
            G = theta_group(K)
            P = pairing_space(K)
            for g in G.elements():
                for h in G.elements():
                    c = G.commutator(g, h)
                    assert c.a == P.pairing((g.k, g.l), (h.k, h.l))


class TestIsotropic:
    def test_zero_subgroup(self):
        P = space([2])
        assert is_isotropic(P, [P.zero()])

    def test_base_times_trivial_character(self):
        for factors in ([2], [3], [2, 2]):
            P = space(factors)
            zero = P.base.zero()
            S = [(k, zero) for k in P.base.elements()]
            assert is_isotropic(P, S)

    def test_full_space_z2_is_not(self):
        P = space([2])
        assert not is_isotropic(P, P.points())

    def test_rejects_nonclosed(self):
        P = space([2])
        with pytest.raises(ValueError):
            is_isotropic(P, [P.zero(), ((1,), (0,)), ((0,), (1,))])
        with pytest.raises(ValueError):
            is_isotropic(P, [((1,), (0,))])  # no zero


class TestMaxIsotropic:
    def test_trivial(self):
        assert max_isotropic_order(space([1])) == 1

    def test_z2(self):
        assert max_isotropic_order(space([2])) == 2

    def test_order16_spaces(self):
        assert max_isotropic_order(space([4])) == 4
        assert max_isotropic_order(space([2, 2])) == 4

    def test_methods_agree(self):
        for factors in ([2], [3], [4], [2, 2]):
            P = space(factors)
            brute = max_isotropic_order(P, method="brute")
            structural = max_isotropic_order(P, method="structural")
            assert brute == structural == P.base.order

    def test_brute_cap(self):
        with pytest.raises(CapExceeded):
            max_isotropic_order(space([30]), method="brute")
        # 'both' falls back to the structural constant above the cap
        assert max_isotropic_order(space([30])) == 30

    def test_agreement_all_types_up_to_8(self):
        for fs in divisor_chains(8):
            if not fs:
                continue
            P = pairing_space(FiniteAbelianGroup(fs))
            assert max_isotropic_order(P, method="brute") == P.base.order


class TestAbelianIffIsotropic:
    def test_over_full_subgroup_lattice(self):
        # subgroups of the theta group that contain the center are abelian
        # exactly when their image in the pairing space is isotropic
        for factors in ([2], [3], [4], [2, 2]):
            K = make_group(factors)
            G = theta_group(K)
            P = pairing_space(K)
            C = G.to_concrete()
            center = set(G.center().members)
            for sub in all_subgroups(C):
                if not center <= set(sub.members):
                    continue
                image = {(g.k, g.l) for g in map(G.element, sub.members)}
                isotropic = all(
                    P.pairing(p, q) == 0 for p in image for q in image
                )
                assert is_abelian(C, sub) == isotropic


class TestStructuralIndex:
    def test_values(self):
        assert structural_min_abelian_index(make_group([1])) == 1
        assert structural_min_abelian_index(make_group([2])) == 2
        assert structural_min_abelian_index(make_group([5])) == 5

    def test_matches_oracle_small(self):
        from thetajordan.lattice import min_abelian_index

        for factors in ([2], [3], [4], [2, 2]):
            K = make_group(factors)
            G = theta_group(K).to_concrete()
            assert structural_min_abelian_index(K) == min_abelian_index(G)

    def test_max_abelian_splits_as_center_times_isotropic(self):
        from thetajordan.lattice import max_abelian_order

        for factors in ([2], [3], [4], [2, 2]):
            K = make_group(factors)
            G = theta_group(K).to_concrete()
            P = pairing_space(K)
            assert max_abelian_order(G) == K.order * max_isotropic_order(P)
