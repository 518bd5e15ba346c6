"""Group layer: closure, builtins, subgroups, classes, parsing, files."""

import json

import pytest

from hopfdepth.errors import GroupError
from hopfdepth.groups import (
    FiniteGroup,
    Subgroup,
    builtin_group,
    enumerate_subgroups,
    group_from_data,
    group_from_generators,
    left_cosets,
    load_group_file,
    parse_permutation,
    perm_to_cycles,
    resolve_group,
    subgroup_from_permutations,
    trivial_subgroup,
)


class TestParsing:
    def test_cycles_round_trip(self):
        for text, degree in [("(1 2)", 3), ("(1 2 3)(4 5)", 5), ("()", 4), ("(1 3)(2 4)", 4)]:
            p = parse_permutation(text, degree)
            assert parse_permutation(perm_to_cycles(p), degree) == p

    def test_compact_digits(self):
        assert parse_permutation("(123)", 3) == parse_permutation("(1 2 3)", 3)
        assert parse_permutation("(12)(34)", 4) == parse_permutation("(1 2)(3 4)", 4)

    def test_bad_input(self):
        with pytest.raises(GroupError):
            parse_permutation("(1 2", 3)
        with pytest.raises(GroupError):
            parse_permutation("(1 9)", 3)
        with pytest.raises(GroupError):
            parse_permutation("(1 2)(2 3)", 3)


class TestClosure:
    def test_s3_from_generators(self):
        G = group_from_generators("S3", 3, ["(1 2)", "(1 2 3)"])
        assert G.order == 6
        assert G.labels[0] == "()"

    def test_d4_from_generators(self):
        G = group_from_generators("D4", 4, ["(1 2 3 4)", "(1 3)"])
        assert G.order == 8

    def test_empty_generators_trivial(self):
        G = group_from_generators("triv", 3, [])
        assert G.order == 1

    def test_order_cap(self):
        with pytest.raises(GroupError):
            group_from_generators("S5", 5, ["(1 2)", "(1 2 3 4 5)"], cap=100)


class TestBuiltins:
    def test_orders_and_exponents(self):
        expect = {
            "C2": (2, 2),
            "C3": (3, 3),
            "C4": (4, 4),
            "C6": (6, 6),
            "C2xC2": (4, 2),
            "S3": (6, 6),
            "D4": (8, 4),
            "Q8": (8, 4),
            "A4": (12, 6),
            "S4": (24, 12),
        }
        for name, (order, exponent) in expect.items():
            G = builtin_group(name)
            assert (G.order, G.exponent()) == (order, exponent), name

    def test_aliases(self):
        assert resolve_group("C2×C2") is builtin_group("C2xC2")

    def test_unknown_group(self):
        with pytest.raises(GroupError):
            resolve_group("M11")

    def test_q8_is_quaternion(self):
        G = builtin_group("Q8")
        orders = sorted(G.element_order(i) for i in range(8))
        assert orders == [1, 2, 4, 4, 4, 4, 4, 4]
        assert not G.is_abelian()


class TestSubgroups:
    def test_counts(self):
        expect = {"S3": 6, "C4": 3, "Q8": 6, "D4": 10, "A4": 10, "S4": 30, "C2xC2": 5}
        for name, count in expect.items():
            subs = enumerate_subgroups(builtin_group(name))
            assert len(subs) == count, name
            # Lagrange, and deterministic ordering by (order, elements)
            for s in subs:
                assert builtin_group(name).order % s.order == 0
            assert subs == sorted(subs, key=lambda s: (s.order, s.elements))

    def test_normal_counts(self):
        expect = {"S3": 3, "D4": 6, "Q8": 6, "A4": 3, "S4": 4}
        for name, count in expect.items():
            subs = enumerate_subgroups(builtin_group(name))
            assert sum(1 for s in subs if s.is_normal()) == count, name

    def test_subgroup_validation(self):
        G = builtin_group("S3")
        with pytest.raises(GroupError):
            Subgroup(G, (0, 1, 2))  # (1 2) and (1 2 3) alone are not closed

    def test_from_permutations(self):
        G = builtin_group("S3")
        sub = subgroup_from_permutations(G, [parse_permutation("(1 2 3)", 3)])
        assert sub.order == 3
        assert sub.is_normal()

    def test_cosets(self):
        G = builtin_group("S3")
        a3 = next(s for s in enumerate_subgroups(G) if s.order == 3)
        cosets = left_cosets(G, a3)
        assert len(cosets) == 2
        assert 0 in cosets[0]

    def test_trivial(self):
        G = builtin_group("S3")
        assert trivial_subgroup(G).order == 1
        assert trivial_subgroup(G).describe() == "{e}"

    def test_cap(self):
        with pytest.raises(GroupError):
            enumerate_subgroups(builtin_group("S4"), cap=12)


class TestConjugacyClasses:
    def test_s3(self):
        G = builtin_group("S3")
        sizes = [len(c) for c in G.conjugacy_classes()]
        assert sizes == [1, 3, 2]
        assert G.conjugacy_classes()[0] == (0,)

    def test_abelian_singletons(self):
        G = builtin_group("C6")
        assert all(len(c) == 1 for c in G.conjugacy_classes())

    def test_q8(self):
        G = builtin_group("Q8")
        sizes = sorted(len(c) for c in G.conjugacy_classes())
        assert sizes == [1, 1, 2, 2, 2]


class TestGroupFiles:
    def test_generator_file(self, tmp_path):
        path = tmp_path / "c4.json"
        path.write_text(json.dumps({"name": "C4x", "degree": 4, "generators": [[2, 3, 4, 1]]}))
        G = load_group_file(path)
        assert G.order == 4 and G.name == "C4x"

    def test_cayley_file(self, tmp_path):
        path = tmp_path / "c2.json"
        path.write_text(json.dumps({"name": "C2t", "cayley": [[0, 1], [1, 0]]}))
        G = load_group_file(path)
        assert G.order == 2

    def test_bad_cayley_rejected(self):
        with pytest.raises(GroupError):
            group_from_data({"name": "bad", "cayley": [[0, 1], [0, 1]]})
        with pytest.raises(GroupError):
            group_from_data({"name": "bad", "cayley": [[1, 0], [0, 1]]})

    def test_bad_generator_rejected(self):
        with pytest.raises(GroupError):
            group_from_data({"name": "bad", "degree": 3, "generators": [[1, 1, 2]]})


class TestCayleyValidation:
    def test_non_associative_rejected(self):
        # a Latin square with identity that is not a group table
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(GroupError):
            FiniteGroup(["e", "a", "b", "c", "d"], table)
