import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from balanced_sets.algebra.gf2_core import (
    AffineCoset,
    BitVec,
    Gf2Matrix,
    Subspace,
    annihilator,
    canonical_rep,
    coordinates,
    dot,
    hyperplane,
    index_of,
    iter_vectors,
    nullspace,
    pairing_signs,
    rref,
    solve_affine,
    span,
    vec_of,
)
from balanced_sets.utils.errors import GuardError, InputError

from strategies import vectors, widths


def v(text: str) -> BitVec:
    return BitVec.from_string(text)


@st.composite
def subspaces(draw, low: int = 1, high: int = 7) -> Subspace:
    n = draw(widths(low, high))
    rows = draw(st.lists(vectors(n), max_size=n + 1))
    return span(rows, n)


class TestBitVec:
    def test_string_round_trip_keeps_leading_zeros(self):
        assert str(v("0010")) == "0010"
        assert v("0010").bits == 2

    def test_first_coordinate_is_most_significant(self):
        x = v("1000")
        assert x.coordinate(1) == 1
        assert x.coordinate(4) == 0
        assert index_of(x) == 8

    def test_unit_vectors(self):
        assert str(BitVec.unit(1, 4)) == "1000"
        assert str(BitVec.unit(4, 4)) == "0001"
        with pytest.raises(InputError):
            BitVec.unit(5, 4)

    @pytest.mark.parametrize("text", ["", "10a1", "2", " "])
    def test_rejects_non_binary_text(self, text):
        with pytest.raises(InputError):
            BitVec.from_string(text)

    def test_width_limits(self):
        BitVec.from_string("1" * 64)
        with pytest.raises(InputError):
            BitVec.from_string("1" * 65)
        with pytest.raises(InputError):
            BitVec(3, 8)

    def test_weight_and_xor(self):
        assert v("1011").weight == 3
        assert v("1100") ^ v("1010") == v("0110")

    def test_mixed_widths_are_rejected(self):
        with pytest.raises(InputError):
            dot(v("101"), v("1010"))
        with pytest.raises(InputError):
            v("10") ^ v("100")

    def test_index_round_trip(self):
        assert vec_of(index_of(v("0110")), 4) == v("0110")
        with pytest.raises(InputError):
            vec_of(16, 4)


def test_pairing():
    assert dot(v("1001"), v("1100")) == 1
    assert dot(v("1001"), v("1001")) == 0
    assert dot(v("0000"), v("1111")) == 0


@given(st.data())
def test_pairing_signs_match_dot(data):
    n = data.draw(widths(1, 8))
    xs = data.draw(st.lists(vectors(n), min_size=1, max_size=6))
    ys = data.draw(st.lists(vectors(n), min_size=1, max_size=6))
    table = pairing_signs(
        np.array([x.bits for x in xs], dtype=np.uint64),
        np.array([y.bits for y in ys], dtype=np.uint64),
    )
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            assert table[i, j] == (-1) ** dot(x, y)


class TestRowReduction:
    def test_rref_is_fully_reduced(self):
        space, rank = rref(Gf2Matrix.from_strings(["1100", "0110", "1010"]))
        assert rank == 2
        assert [str(row) for row in space.basis] == ["1010", "0110"]

    def test_unreduced_basis_is_rejected(self):
        with pytest.raises(InputError):
            Subspace(4, (v("1100"), v("0100")))
        with pytest.raises(InputError):
            Subspace(4, (v("0100"), v("1000")))

    def test_nullspace(self):
        space = nullspace(Gf2Matrix.from_strings(["0100", "0001"]))
        assert [str(row) for row in space.basis] == ["1000", "0010"]

    def test_nullspace_of_no_rows_is_everything(self):
        assert nullspace(Gf2Matrix(3, ())) == Subspace.full(3)

    @given(subspaces())
    def test_double_annihilator(self, space):
        assert annihilator(annihilator(space)) == space
        assert annihilator(space).dimension == space.width - space.dimension

    @given(subspaces())
    def test_members_are_sorted_and_closed(self, space):
        members = space.member_indices()
        assert len(members) == space.cardinality
        assert list(members) == sorted(members)
        lookup = {int(m) for m in members}
        for a in list(lookup)[:8]:
            for b in list(lookup)[:8]:
                assert a ^ b in lookup

    def test_enumeration_guard(self):
        with pytest.raises(GuardError):
            Subspace.full(10).enumerate(guard=8)

    def test_intersection(self):
        a = span([v("1000"), v("0100")])
        b = span([v("0100"), v("0010")])
        assert a.intersection(b) == span([v("0100")])

    def test_membership(self):
        space = span([v("1010"), v("0110")])
        assert v("1100") in space
        assert v("0001") not in space


class TestHyperplane:
    @given(st.data())
    def test_dimension_and_members(self, data):
        n = data.draw(widths(1, 7))
        y = data.draw(vectors(n))
        plane = hyperplane(y)
        assert plane.dimension == (n if y.is_zero else n - 1)
        assert all(dot(x, y) == 0 for x in plane.enumerate())


class TestCanonicalRep:
    @settings(max_examples=60)
    @given(subspaces(high=6), st.data())
    def test_is_the_smallest_member_of_the_coset(self, space, data):
        x = data.draw(vectors(space.width))
        coset = [x ^ m for m in space.enumerate()]
        assert canonical_rep(x, space) == min(coset)

    def test_affine_coset(self):
        space = span([v("1000"), v("0010")])
        coset = AffineCoset.through(v("1011"), space)
        assert str(coset.representative) == "0001"
        assert [str(m) for m in coset.members()] == ["0001", "0011", "1001", "1011"]
        assert coset.contains(v("1001"))
        with pytest.raises(InputError):
            AffineCoset(v("1001"), space)


class TestSolve:
    def test_solution_satisfies_every_equation(self):
        m = Gf2Matrix.from_strings(["1100", "0110", "0011"])
        y = solve_affine(m, [1, 0, 1])
        assert [dot(row, y) for row in m.rows] == [1, 0, 1]
        assert canonical_rep(y, nullspace(m)) == y

    def test_inconsistent_system(self):
        m = Gf2Matrix.from_strings(["1100", "1100"])
        assert solve_affine(m, [0, 1]) is None

    def test_bad_right_hand_side(self):
        m = Gf2Matrix.from_strings(["1100"])
        with pytest.raises(InputError):
            solve_affine(m, [1, 0])
        with pytest.raises(InputError):
            solve_affine(m, [2])

    @given(st.data())
    def test_every_consistent_system_is_solved(self, data):
        n = data.draw(widths(1, 6))
        rows = tuple(data.draw(st.lists(vectors(n), min_size=1, max_size=5)))
        target = data.draw(vectors(n))
        m = Gf2Matrix(n, rows)
        rhs = [dot(row, target) for row in rows]
        y = solve_affine(m, rhs)
        assert y is not None
        assert [dot(row, y) for row in rows] == rhs


class TestCoordinates:
    def test_inside_and_outside(self):
        basis = [v("1000"), v("0100")]
        assert coordinates(v("1100"), basis) == [1, 1]
        assert coordinates(v("0100"), basis) == [0, 1]
        assert coordinates(v("0010"), basis) is None

    def test_dependent_family_is_rejected(self):
        with pytest.raises(InputError):
            coordinates(v("1100"), [v("1000"), v("1000")])


def test_matrix_apply_pairs_with_each_row():
    m = Gf2Matrix.from_strings(["10", "01", "11"])
    assert str(m.apply(v("10"))) == "101"
    assert str(m.apply(v("11"))) == "110"


def test_iter_vectors_is_in_index_order():
    assert [str(x) for x in iter_vectors(2)] == ["00", "01", "10", "11"]
