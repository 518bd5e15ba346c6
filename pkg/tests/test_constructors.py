"""Constructed algebras: group algebras, duals, subalgebra inclusions."""

import pytest

from hopfdepth.algebras import (
    dual_group_algebra,
    dual_quotient_subalgebra,
    group_algebra,
    subgroup_subalgebra,
    trivial_subalgebra,
)
from hopfdepth.errors import NotNormalError
from hopfdepth.groups import builtin_group, enumerate_subgroups, group_from_generators
from hopfdepth.hopf import verify_hopf_axioms
from hopfdepth.scalars import CYC_ONE, CYC_ZERO


class TestGroupAlgebra:
    def test_c2_structure(self):
        H = group_algebra(builtin_group("C2"))
        assert H.dim == 2
        assert H.mult[1][1] == {0: CYC_ONE}  # s * s = e
        assert H.comult[1] == {(1, 1): CYC_ONE}  # grouplike
        assert H.counit == (CYC_ONE, CYC_ONE)

    def test_trivial_group(self):
        H = group_algebra(group_from_generators("triv", 1, []))
        assert H.dim == 1
        assert verify_hopf_axioms(H).ok

    def test_cocommutative(self):
        for name in ("S3", "D4", "Q8"):
            assert group_algebra(builtin_group(name)).is_cocommutative()

    def test_commutative_iff_abelian(self):
        assert group_algebra(builtin_group("C6")).is_commutative()
        assert not group_algebra(builtin_group("S3")).is_commutative()


class TestDualGroupAlgebra:
    def test_c2_partition_of_unity(self):
        D = dual_group_algebra(builtin_group("C2"))
        assert D.unit == (CYC_ONE, CYC_ONE)
        assert D.mult[0][1] == {}
        assert D.mult[1][1] == {1: CYC_ONE}

    def test_commutative_always(self):
        for name in ("S3", "Q8", "A4"):
            assert dual_group_algebra(builtin_group(name)).is_commutative()

    def test_cocommutative_iff_abelian(self):
        assert dual_group_algebra(builtin_group("C4")).is_cocommutative()
        assert not dual_group_algebra(builtin_group("S3")).is_cocommutative()

    def test_trivial_group(self):
        D = dual_group_algebra(group_from_generators("triv", 1, []))
        assert D.dim == 1


class TestDualityPairing:
    def test_structural_duality(self):
        # evaluation pairing <d_a, g> = [a == g] interchanges the structures:
        # mult of k^G is dual to comult of k[G] and vice versa, unit to counit,
        # and the antipodes are mutually transpose.
        for name in ("S3", "D4"):
            G = builtin_group(name)
            H = group_algebra(G)
            D = dual_group_algebra(G)
            n = G.order
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        assert D.mult[a][b].get(c, CYC_ZERO) == H.comult[c].get(
                            (a, b), CYC_ZERO
                        )
                        assert D.comult[c].get((a, b), CYC_ZERO) == H.mult[a][b].get(
                            c, CYC_ZERO
                        )
            assert D.counit == H.unit
            assert D.unit == H.counit
            for a in range(n):
                for b in range(n):
                    assert D.antipode[a].get(b, CYC_ZERO) == H.antipode[b].get(a, CYC_ZERO)


class TestSubgroupSubalgebra:
    def test_a3_in_s3(self):
        G = builtin_group("S3")
        a3 = next(s for s in enumerate_subgroups(G) if s.order == 3)
        K = subgroup_subalgebra(G, a3)
        assert K.dim == 3
        assert verify_hopf_axioms(K.induced).ok

    def test_c2_in_s3(self):
        G = builtin_group("S3")
        c2 = next(s for s in enumerate_subgroups(G) if s.order == 2)
        K = subgroup_subalgebra(G, c2)
        assert K.dim == 2
        assert K.index == 3

    def test_trivial(self):
        H = group_algebra(builtin_group("S3"))
        K = trivial_subalgebra(H)
        assert K.dim == 1
        assert K.induced.counit == (CYC_ONE,)

    def test_every_subgroup_of_d4_verifies(self):
        G = builtin_group("D4")
        H = group_algebra(G)
        for sub in enumerate_subgroups(G):
            K = subgroup_subalgebra(G, sub, algebra=H)
            assert K.dim == sub.order
            assert G.order % K.dim == 0


class TestDualQuotientSubalgebra:
    def test_s3_mod_a3(self):
        G = builtin_group("S3")
        a3 = next(s for s in enumerate_subgroups(G) if s.order == 3)
        K = dual_quotient_subalgebra(G, a3)
        assert K.dim == 2
        # coset indicators: the rows partition the dual basis
        total = [CYC_ZERO] * 6
        for row in K.inclusion:
            total = [t + r for t, r in zip(total, row)]
        assert tuple(total) == K.parent.unit

    def test_full_normal_subgroup_gives_scalars(self):
        G = builtin_group("S3")
        full = next(s for s in enumerate_subgroups(G) if s.order == 6)
        K = dual_quotient_subalgebra(G, full)
        assert K.dim == 1

    def test_trivial_normal_subgroup_gives_everything(self):
        G = builtin_group("S3")
        triv = next(s for s in enumerate_subgroups(G) if s.order == 1)
        K = dual_quotient_subalgebra(G, triv)
        assert K.dim == 6

    def test_non_normal_rejected(self):
        G = builtin_group("S3")
        c2 = next(s for s in enumerate_subgroups(G) if s.order == 2)
        with pytest.raises(NotNormalError):
            dual_quotient_subalgebra(G, c2)

    def test_q8_center_quotient(self):
        G = builtin_group("Q8")
        center = next(s for s in enumerate_subgroups(G) if s.order == 2)
        K = dual_quotient_subalgebra(G, center)
        assert K.dim == 4
