"""Depth machinery: restriction, induction, the depth-two test, the theorem."""

from fractions import Fraction

import pytest

from hopfdepth.algebras import (
    dual_group_algebra,
    dual_quotient_subalgebra,
    group_algebra,
    subgroup_subalgebra,
    trivial_subalgebra,
)
from hopfdepth.characters import (
    counit_character,
    irreducible_characters,
    multiplicity,
    regular_character,
)
from hopfdepth.depth import (
    DepthPair,
    constituents,
    depth_pair,
    depth_two_test,
    equivalence_classes,
    induce,
    lemma_test,
    regular_induction_check,
    restrict,
    theorem_check,
    verify_class_formulas,
)
from hopfdepth.groups import builtin_group, enumerate_subgroups
from hopfdepth.scalars import CYC_ONE, CYC_ZERO, Cyc

from oracles import classical_induced_values, subgroup_character_values


def s3_setup():
    G = builtin_group("S3")
    H = group_algebra(G)
    subs = enumerate_subgroups(G)
    a3 = next(s for s in subs if s.order == 3)
    c2 = next(s for s in subs if s.order == 2)
    return G, H, subs, a3, c2


class TestRestrict:
    def test_std_restricted_to_a3(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, a3, algebra=H)
        irr_h = irreducible_characters(H)
        std = irr_h.characters[2]
        dec = restrict(std, K)
        irr_k = depth_pair(K).irr_k
        # the two nontrivial linear characters of A3, once each
        eps = irr_k.trivial_index
        assert dec.mults[eps] == 0
        assert sorted(dec.mults) == [0, 1, 1]
        assert dec.total_degree() == 2

    def test_counit_restricts_to_counit(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, a3, algebra=H)
        dec = restrict(counit_character(H), K)
        eps = depth_pair(K).irr_k.trivial_index
        assert dec.mults == tuple(1 if a == eps else 0 for a in range(3))

    def test_dual_restriction_follows_cosets(self):
        G = builtin_group("S3")
        D = dual_group_algebra(G)
        a3 = next(s for s in enumerate_subgroups(G) if s.order == 3)
        K = dual_quotient_subalgebra(G, a3, algebra=D)
        irr_h = irreducible_characters(D)
        from hopfdepth.groups import left_cosets

        cosets = left_cosets(G, a3)
        for g in range(6):
            chi_g = next(c for c in irr_h if c.values == D.basis_vector(g))
            dec = restrict(chi_g, K)
            assert sum(dec.mults) == 1
            # the restriction is the coset functional of the coset containing g
            coset_idx = next(i for i, cs in enumerate(cosets) if g in cs)
            assert dec.character().values == K.induced.basis_vector(coset_idx)


class TestInduce:
    def test_trivial_character_of_a3(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, a3, algebra=H)
        dp = depth_pair(K)
        eps_k = counit_character(K.induced)
        dec = induce(eps_k, K)
        # trivial + sign, each once; the degree-2 character absent
        assert dec.total_degree() == 2
        assert dec.mults[dp.irr_h.degrees.index(2)] == 0
        assert sorted(dec.mults) == [0, 1, 1]

    def test_trivial_character_of_c2(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, c2, algebra=H)
        dp = depth_pair(K)
        dec = induce(counit_character(K.induced), K)
        # trivial + standard
        std_idx = dp.irr_h.degrees.index(2)
        triv_idx = dp.irr_h.index_of(counit_character(H))
        assert dec.mults[std_idx] == 1
        assert dec.mults[triv_idx] == 1
        assert dec.total_degree() == 3

    def test_trivial_subalgebra_induces_regular(self):
        G, H, subs, a3, c2 = s3_setup()
        K = trivial_subalgebra(H)
        dec = induce(counit_character(K.induced), K)
        irr_h = irreducible_characters(H)
        assert dec.mults == irr_h.degrees
        assert dec.character() == regular_character(H)


class TestConstituents:
    def test_support(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, c2, algebra=H)
        dec = induce(counit_character(K.induced), K)
        assert set(constituents(dec)) == set(dec.support())
        assert len(constituents(dec)) == 2

    def test_zero_decomposition(self):
        from hopfdepth.depth import Decomposition

        G, H, subs, a3, c2 = s3_setup()
        irr = irreducible_characters(H)
        assert constituents(Decomposition(irr, (0, 0, 0))) == ()


class TestDepthTwo:
    def test_normal_pair(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, a3, algebra=H)
        res = depth_two_test(K)
        assert res.is_depth_two
        assert res.minimal_n == 2
        assert res.witnesses == ()

    def test_non_normal_pair_witnesses(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, c2, algebra=H)
        dp = depth_pair(K)
        res = depth_two_test(K)
        assert not res.is_depth_two
        assert res.minimal_n is None
        eps_k = dp.irr_k.trivial_index
        sgn_h = next(
            i
            for i, c in enumerate(dp.irr_h)
            if dp.irr_h.degrees[i] == 1 and c != counit_character(H)
        )
        assert (eps_k, sgn_h) in res.witnesses

    def test_iterated_operators_explicitly(self):
        # eps_K up = eps + std; up-down = 2 eps_K + sgn_K; up-down-up = 2 eps + sgn + 3 std
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, c2, algebra=H)
        dp = depth_pair(K)
        eps_k = dp.irr_k.trivial_index
        sgn_k = 1 - eps_k
        ud = dp.up_down(eps_k)
        assert ud[eps_k] == 2 and ud[sgn_k] == 1
        unit = tuple(1 if a == eps_k else 0 for a in range(2))
        udu = dp._induce_mults(dp._restrict_mults(dp._induce_mults(unit)))
        triv = dp.irr_h.index_of(counit_character(H))
        std = dp.irr_h.degrees.index(2)
        sgn = next(i for i in range(3) if i not in (triv, std))
        assert udu[triv] == 2 and udu[sgn] == 1 and udu[std] == 3

    def test_dual_pairs_always_depth_two(self):
        G = builtin_group("Q8")
        D = dual_group_algebra(G)
        for sub in enumerate_subgroups(G):
            K = dual_quotient_subalgebra(G, sub, algebra=D)
            res = depth_two_test(K)
            assert res.is_depth_two
            assert res.minimal_n == K.index


class TestLemma:
    def test_normal_pair(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, a3, algebra=H)
        assert lemma_test(K)

    def test_non_normal_pair(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, c2, algebra=H)
        assert not lemma_test(K)

    def test_trivial_subalgebra(self):
        G, H, subs, a3, c2 = s3_setup()
        K = trivial_subalgebra(H)
        assert lemma_test(K)
        dp = depth_pair(K)
        assert dp.up_down(0) == (6,)


class TestEquivalenceClasses:
    def test_s3_a3_partition(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, a3, algebra=H)
        part = equivalence_classes(K)
        dp = depth_pair(K)
        triv = dp.irr_h.index_of(counit_character(H))
        std = dp.irr_h.degrees.index(2)
        sgn = next(i for i in range(3) if i not in (triv, std))
        assert set(map(frozenset, part.classes_h)) == {
            frozenset({triv, sgn}),
            frozenset({std}),
        }
        assert part.sizes_h == (2, 4)
        assert part.sizes_k == (1, 2)
        eps_k = dp.irr_k.trivial_index
        assert set(map(frozenset, part.classes_k)) == {
            frozenset({eps_k}),
            frozenset({0, 1, 2}) - {eps_k},
        }
        assert part.well_defined

    def test_k_equals_h_singletons(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, subs[-1], algebra=H)
        part = equivalence_classes(K)
        assert all(len(c) == 1 for c in part.classes_h)
        assert len(part.classes_h) == 3

    def test_trivial_subalgebra_single_class(self):
        G, H, subs, a3, c2 = s3_setup()
        K = trivial_subalgebra(H)
        part = equivalence_classes(K)
        assert part.classes_h == ((0, 1, 2),)
        assert part.classes_k == ((0,),)

    def test_partitions_cover_and_are_disjoint(self):
        for name in ("D4", "A4"):
            G = builtin_group(name)
            H = group_algebra(G)
            for sub in enumerate_subgroups(G):
                K = subgroup_subalgebra(G, sub, algebra=H)
                part = equivalence_classes(K)
                nh = len(irreducible_characters(H))
                nk = len(depth_pair(K).irr_k)
                assert sorted(i for c in part.classes_h for i in c) == list(range(nh))
                assert sorted(a for c in part.classes_k for a in c) == list(range(nk))
                assert part.well_defined


class TestClassFormulas:
    def test_s3_a3(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, a3, algebra=H)
        report = verify_class_formulas(K)
        assert report.ok

    def test_k_equals_h_reduces_to_identity(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, subs[-1], algebra=H)
        assert verify_class_formulas(K).ok

    def test_fails_for_non_normal(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, c2, algebra=H)
        assert not verify_class_formulas(K).ok

    def test_proportional_restrictions_within_class(self):
        G = builtin_group("Q8")
        H = group_algebra(G)
        center = next(s for s in enumerate_subgroups(G) if s.order == 2)
        K = subgroup_subalgebra(G, center, algebra=H)
        dp = depth_pair(K)
        part = equivalence_classes(K)
        for comp in part.classes_h:
            normalized = {
                tuple(Fraction(m, dp.irr_h.degrees[c]) for m in dp.rmatrix[c])
                for c in comp
            }
            assert len(normalized) == 1


class TestRegularInduction:
    def test_c2_in_s3_value_level(self):
        G, H, subs, a3, c2 = s3_setup()
        K = subgroup_subalgebra(G, c2, algebra=H)
        dp = depth_pair(K)
        tk = regular_character(K.induced)
        up = induce(tk, K)
        assert up.character() == regular_character(H)
        back = restrict(up.character(), K)
        assert back.mults == tuple(3 * m for m in dp.irr_k.decompose(tk))
        assert regular_induction_check(K)

    def test_factor_matches_index(self):
        G, H, subs, a3, c2 = s3_setup()
        for sub in subs:
            K = subgroup_subalgebra(G, sub, algebra=H)
            assert regular_induction_check(K)


class TestFrobeniusAgainstClassicalInduction:
    @pytest.mark.parametrize("name", ["S3", "D4", "A4"])
    def test_group_pairs(self, name):
        G = builtin_group(name)
        H = group_algebra(G)
        irr_h = irreducible_characters(H)
        for sub in enumerate_subgroups(G):
            K = subgroup_subalgebra(G, sub, algebra=H)
            dp = depth_pair(K)
            for a, alpha in enumerate(dp.irr_k):
                by_elem = dict(subgroup_character_values(K, alpha))
                ind_vals = classical_induced_values(G, sub.elements, by_elem)
                for c, chi in enumerate(irr_h):
                    acc = CYC_ZERO
                    for g in range(G.order):
                        acc = acc + ind_vals[g] * chi.values[G.inverse[g]]
                    classical = acc * Cyc.rational(Fraction(1, G.order))
                    assert classical == Cyc.rational(dp.rmatrix[c][a]), (
                        name,
                        sub.describe(),
                        a,
                        c,
                    )


class TestDepthInvariants:
    def test_chi_constituent_of_down_up(self):
        for name in ("S3", "Q8"):
            G = builtin_group(name)
            H = group_algebra(G)
            irr_h = irreducible_characters(H)
            for sub in enumerate_subgroups(G):
                K = subgroup_subalgebra(G, sub, algebra=H)
                dp = depth_pair(K)
                for c in range(len(irr_h)):
                    down = dp.rmatrix[c]
                    again = dp._induce_mults(down)
                    assert again[c] > 0

    def test_degree_bookkeeping(self):
        G = builtin_group("D4")
        H = group_algebra(G)
        for sub in enumerate_subgroups(G):
            K = subgroup_subalgebra(G, sub, algebra=H)
            dp = depth_pair(K)
            for a, alpha in enumerate(dp.irr_k):
                dec = induce(alpha, K)
                assert dec.total_degree() == K.index * dp.irr_k.degrees[a]


class TestTheoremCheck:
    def test_s3_normal_pair(self):
        G, H, subs, a3, c2 = s3_setup()
        v = theorem_check(subgroup_subalgebra(G, a3, algebra=H))
        assert v.verdict == "PASS"
        assert all(v.booleans)
        assert v.minimal_n == 2
        assert v.vanishing_zero and v.integral_values_ok and v.regular_induction_ok
        assert v.formulas_ok

    def test_s3_non_normal_pair(self):
        G, H, subs, a3, c2 = s3_setup()
        v = theorem_check(subgroup_subalgebra(G, c2, algebra=H))
        assert v.verdict == "PASS"
        assert not any(v.booleans)
        assert v.witnesses
        assert v.formulas_ok is None

    def test_dual_pair(self):
        G = builtin_group("S3")
        a3 = next(s for s in enumerate_subgroups(G) if s.order == 3)
        v = theorem_check(dual_quotient_subalgebra(G, a3))
        assert v.verdict == "PASS"
        assert all(v.booleans)

    def test_verdict_serialization_field_order(self):
        G, H, subs, a3, c2 = s3_setup()
        v = theorem_check(subgroup_subalgebra(G, a3, algebra=H))
        keys = list(v.to_dict().keys())
        assert keys[:6] == [
            "pair",
            "depth_two",
            "lemma",
            "integral_central",
            "adjoint_stable",
            "ideal_normal",
        ]
        assert keys[6:8] == ["minimal_n", "witnesses"]
