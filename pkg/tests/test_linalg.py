"""Exact elimination: echelon bases, kernels, span comparison."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hopfdepth.linalg import Echelon, echelon_of, matrix_kernel, spans_equal

ONE = Fraction(1)


def F(x):
    return Fraction(x)


class TestEchelon:
    def test_rank_and_membership(self):
        ech = Echelon(3, ONE)
        assert ech.push([F(1), F(2), F(0)])
        assert ech.push([F(0), F(1), F(1)])
        assert not ech.push([F(1), F(3), F(1)])
        assert ech.rank == 2
        assert ech.contains([F(2), F(5), F(1)])
        assert not ech.contains([F(0), F(0), F(1)])

    def test_coordinates_track_inputs(self):
        ech = Echelon(3, ONE, track=True)
        rows = [[F(1), F(1), F(0)], [F(0), F(2), F(2)]]
        for r in rows:
            ech.push(r)
        co = ech.coordinates([F(2), F(4), F(2)])
        assert co == [F(2), F(1)]
        assert ech.coordinates([F(0), F(0), F(1)]) is None

    def test_pivot_choice_is_first_nonzero(self):
        ech = Echelon(3, ONE)
        ech.push([F(0), F(0), F(5)])
        assert ech.pivots == [2]


class TestKernel:
    def test_simple_kernel(self):
        rows = [[F(1), F(1), F(1)]]
        kern = matrix_kernel(rows, 3, ONE)
        assert len(kern) == 2
        for x in kern:
            assert sum(x, F(0)) == 0
        # deterministic: free columns produce unit entries in column order
        assert kern[0][1] == 1 and kern[1][2] == 1

    def test_full_rank_kernel_empty(self):
        rows = [[F(1), F(0)], [F(1), F(1)]]
        assert matrix_kernel(rows, 2, ONE) == []

    def test_zero_matrix(self):
        kern = matrix_kernel([[F(0), F(0)]], 2, ONE)
        assert len(kern) == 2


small = st.integers(min_value=-3, max_value=3)


class TestSpans:
    def test_known_equal_spans(self):
        a = [[F(1), F(0), F(1)], [F(0), F(1), F(1)]]
        b = [[F(1), F(1), F(2)], [F(2), F(-1), F(1)]]
        assert spans_equal(a, b, 3, ONE)
        c = [[F(1), F(0), F(0)], [F(0), F(1), F(1)]]
        assert not spans_equal(a, c, 3, ONE)

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(st.tuples(small, small, small, small), min_size=1, max_size=5),
        st.permutations(range(5)),
        st.sampled_from([1, 2, 3, -1]),
    )
    def test_canonical_form_is_span_invariant(self, rows, perm, scale):
        rows = [[F(x) for x in r] for r in rows]
        shuffled = [rows[i] for i in perm if i < len(rows)]
        scaled = [[F(scale) * x for x in r] for r in shuffled]
        # adding a row that is already a combination must not change the canonical form
        combo = [sum(col, F(0)) for col in zip(*rows)]
        augmented = scaled + [combo]
        assert echelon_of(rows, 4, ONE).canonical() == echelon_of(augmented, 4, ONE).canonical()
