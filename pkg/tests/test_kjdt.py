"""Tests for shifted K-theoretic jeu de taquin: the switch operation,
slides, switch sequences, and rectification."""

import json

import pytest

from shifted_hecke import (
    HOLE,
    Marker,
    ShiftedTableau,
    SkewTableau,
    ValidationError,
    antidiagonal_tableau,
    insertion_tableau,
    kswitch,
    rectify,
    slide,
    standard_switch_sequence,
    validate_switch_sequence,
    viable_switch_sequences,
)
from shifted_hecke.kjdt import (
    board_from_json_dict,
    board_to_json_dict,
    increasing_violations,
)


def M(i):
    return Marker(i)


# ---------------------------------------------------------------------------
# the switch operation


class TestKswitch:
    def test_simple_swap(self):
        board = {(1, 1): M(1), (1, 2): 5}
        assert kswitch(board, M(1), 5) == {(1, 1): 5, (1, 2): M(1)}

    def test_no_op_when_not_adjacent(self):
        board = {(1, 1): M(1), (1, 3): 5}
        assert kswitch(board, M(1), 5) == board

    def test_no_op_when_label_absent(self):
        board = {(1, 1): M(1), (1, 2): 5}
        assert kswitch(board, M(2), 5) == board
        assert kswitch(board, M(1), 7) == board

    def test_does_not_mutate_input(self):
        board = {(1, 1): M(1), (1, 2): 5}
        kswitch(board, M(1), 5)
        assert board == {(1, 1): M(1), (1, 2): 5}

    def test_label_splits_into_both_neighbors(self):
        # one value box adjacent to two switched boxes gets copied into both
        board = {(1, 1): 1, (1, 2): HOLE, (2, 1): HOLE, (2, 2): 2}
        out = kswitch(board, HOLE, 2)
        assert out == {(1, 1): 1, (1, 2): 2, (2, 1): 2, (2, 2): HOLE}

    def test_rejects_equal_labels(self):
        with pytest.raises(ValidationError, match="distinct labels"):
            kswitch({}, 5, 5)

    def test_marker_identity(self):
        assert M(3) == M(3)
        assert M(3) != M(4)
        assert M(3) != 3
        assert hash(M(3)) == hash(M(3))
        with pytest.raises(ValidationError, match="start at 1"):
            Marker(0)


class TestIncreasingViolations:
    def test_clean_board(self):
        assert increasing_violations({(1, 1): 1, (1, 2): 2, (2, 2): 3}) == []

    def test_flags_east_and_south(self):
        assert increasing_violations({(1, 1): 2, (1, 2): 2}) == [((1, 1), (1, 2))]
        assert increasing_violations({(1, 1): 3, (2, 1): 1}) == [((1, 1), (2, 1))]

    def test_markers_and_holes_are_skipped(self):
        assert increasing_violations({(1, 1): 5, (1, 2): M(1), (2, 1): HOLE}) == []


# ---------------------------------------------------------------------------
# slides


FIVE_BOX_VALUES = {(1, 3): 1, (2, 2): 2, (2, 3): 3, (3, 1): 4, (3, 2): 5}


class TestSlide:
    def test_forward_slide_with_split(self):
        # the 1 and 2 each step into a hole; the 3 then borders two holes at
        # once and lands in both, leaving the final hole behind it
        out = slide(FIVE_BOX_VALUES, [(1, 2), (2, 1)])
        assert out == {
            (1, 2): 1, (1, 3): 3,
            (2, 1): 2, (2, 2): 3, (2, 3): HOLE,
            (3, 1): 4, (3, 2): 5,
        }

    def test_reverse_slide_with_split(self):
        # run backwards from holes on the outer rim, largest value first;
        # the 5 splits into two holes, the rest shift one step outward
        out = slide(FIVE_BOX_VALUES, [(1, 4), (2, 4), (3, 3), (4, 2)],
                    forward=False)
        assert out == {
            (1, 3): HOLE, (1, 4): 1,
            (2, 2): HOLE, (2, 3): 2, (2, 4): 3,
            (3, 1): HOLE, (3, 2): 4, (3, 3): 5,
            (4, 2): 5,
        }

    def test_single_forward_step(self):
        out = slide({(1, 2): 7}, [(1, 1)])
        assert out == {(1, 1): 7, (1, 2): HOLE}

    def test_rejects_occupied_starting_cell(self):
        with pytest.raises(ValidationError, match="already holds"):
            slide(FIVE_BOX_VALUES, [(1, 3)])

    def test_rejects_touching_forward_holes(self):
        # starting cells of a forward slide play the role of maximal boxes
        # of an inner shape, which never touch east or south
        with pytest.raises(ValidationError, match="maximal boxes"):
            slide({(1, 3): 1}, [(1, 1), (1, 2)])

    def test_reverse_holes_may_touch(self):
        out = slide({(1, 1): 1}, [(1, 2), (1, 3)], forward=False)
        assert out == {(1, 1): HOLE, (1, 2): 1, (1, 3): HOLE}


# ---------------------------------------------------------------------------
# switch sequences


class TestSwitchSequences:
    def test_standard_sequence(self):
        assert standard_switch_sequence(2, 2) == ((2, 1), (2, 2), (1, 1), (1, 2))
        assert standard_switch_sequence(1, 3) == ((1, 1), (1, 2), (1, 3))

    def test_validate_accepts_standard(self):
        for m, v in ((2, 2), (3, 2), (1, 4)):
            seq = standard_switch_sequence(m, v)
            assert validate_switch_sequence(seq, m, v) == seq

    def test_validate_rejects_wrong_multiset(self):
        with pytest.raises(ValidationError, match="exactly once"):
            validate_switch_sequence([(1, 1)], 1, 2)
        with pytest.raises(ValidationError, match="exactly once"):
            validate_switch_sequence([(1, 1), (1, 1)], 1, 2)

    def test_validate_rejects_value_order(self):
        with pytest.raises(ValidationError, match="value 2 before value 1"):
            validate_switch_sequence([(1, 2), (1, 1)], 1, 2)

    def test_validate_rejects_marker_order(self):
        with pytest.raises(ValidationError, match="marker 1 before marker 2"):
            validate_switch_sequence([(1, 1), (2, 1)], 2, 1)

    def test_viable_counts(self):
        # linear extensions of the grid order, counted like standard
        # fillings of a rectangle
        assert len(viable_switch_sequences(1, 5)) == 1
        assert len(viable_switch_sequences(2, 2)) == 2
        assert len(viable_switch_sequences(6, 2)) == 132
        assert len(viable_switch_sequences(3, 4)) == 462

    def test_viable_sequences_validate(self):
        for seq in viable_switch_sequences(2, 3):
            assert validate_switch_sequence(seq, 2, 3) == seq

    def test_standard_is_viable(self):
        assert standard_switch_sequence(2, 3) in set(viable_switch_sequences(2, 3))


# ---------------------------------------------------------------------------
# antidiagonal skew tableaux


class TestAntidiagonal:
    def test_212(self):
        t = antidiagonal_tableau((2, 1, 2))
        assert t.cells == {(3, 3): 2, (2, 4): 1, (1, 5): 2}
        assert t.outer.parts == (5, 3, 1)
        assert t.inner.parts == (4, 2)

    def test_reading_word_recovers_input(self):
        for w in ((2, 1, 2), (1,), (3, 1, 2, 3)):
            assert antidiagonal_tableau(w).reading_word() == w

    def test_empty(self):
        t = antidiagonal_tableau(())
        assert t.cells == {}


# ---------------------------------------------------------------------------
# rectification


EX_SKEW = SkewTableau(
    {(1, 5): 1, (2, 4): 2, (2, 5): 3, (3, 3): 1, (3, 4): 4},
    outer=(5, 4, 2), inner=(4, 2),
)

# the nontrivial switches of the superstandard sweep for EX_SKEW, in order
EX_SWITCHES = [
    (6, 1), (6, 4),
    (5, 1), (5, 2), (5, 3),
    (4, 1),
    (3, 1), (3, 3),
    (2, 1), (2, 2), (2, 4),
    (1, 1), (1, 2), (1, 3), (1, 4),
]


class TestRectify:
    def test_worked_example_superstandard(self):
        assert rectify(EX_SKEW, "superstandard").rows == ((1, 2, 3), (4,))

    def test_worked_example_trajectory(self):
        # replay the sweeps by hand, checking the boards along the way
        board = dict(EX_SKEW.cells)
        for idx, cell in enumerate(EX_SKEW.inner.cells(), 1):
            board[cell] = M(idx)
        assert board == {
            (1, 1): M(1), (1, 2): M(2), (1, 3): M(3), (1, 4): M(4), (1, 5): 1,
            (2, 2): M(5), (2, 3): M(6), (2, 4): 2, (2, 5): 3,
            (3, 3): 1, (3, 4): 4,
        }
        boards = {}
        for m, v in EX_SWITCHES:
            board = kswitch(board, M(m), v)
            boards[(m, v)] = board
        assert boards[(6, 4)] == {
            (1, 1): M(1), (1, 2): M(2), (1, 3): M(3), (1, 4): M(4), (1, 5): 1,
            (2, 2): M(5), (2, 3): 1, (2, 4): 2, (2, 5): 3,
            (3, 3): 4, (3, 4): M(6),
        }
        # switching marker 2 with the 1 below it and the 1 east of it
        # duplicates the marker
        assert boards[(2, 1)] == {
            (1, 1): M(1), (1, 2): 1, (1, 3): M(2), (1, 4): 3, (1, 5): M(4),
            (2, 2): M(2), (2, 3): 2, (2, 4): M(3), (2, 5): M(5),
            (3, 3): 4, (3, 4): M(6),
        }
        assert board == {
            (1, 1): 1, (1, 2): 2, (1, 3): 3, (1, 4): M(1), (1, 5): M(4),
            (2, 2): 4, (2, 3): M(1), (2, 4): M(3), (2, 5): M(5),
            (3, 3): M(2), (3, 4): M(6),
        }
        values = {c: l for c, l in board.items() if isinstance(l, int)}
        assert values == {(1, 1): 1, (1, 2): 2, (1, 3): 3, (2, 2): 4}

    def test_explicit_sequence_matches_superstandard(self):
        seq = standard_switch_sequence(6, 4)
        assert rectify(EX_SKEW, seq) == rectify(EX_SKEW, "superstandard")

    def test_insertion_oracle_for_all_viable_orders(self):
        # every viable order rectifies the staircase of 212 to its
        # insertion tableau
        skew = antidiagonal_tableau((2, 1, 2))
        target = insertion_tableau((2, 1, 2))
        assert target.rows == ((1, 2),)
        sequences = viable_switch_sequences(6, 2)
        assert len(sequences) == 132
        for seq in sequences:
            assert rectify(skew, seq) == target

    def test_by_iterated_slides(self):
        skew = antidiagonal_tableau((2, 1))
        out = rectify(skew, [[(1, 2)], [(1, 1)]])
        assert out.rows == ((1, 2),)

    def test_accepts_bare_cell_dict(self):
        out = rectify({(1, 2): 1, (2, 2): 2}, "superstandard")
        assert out.rows == ((1, 2),)

    def test_rejects_unknown_order_name(self):
        with pytest.raises(ValidationError, match="unknown rectification order"):
            rectify(EX_SKEW, "backwards")

    def test_rejects_ambiguous_shape_for_markers(self):
        skew = SkewTableau({(2, 2): 1})
        with pytest.raises(ValidationError, match="ambiguous"):
            rectify(skew, "superstandard")

    def test_rejects_slides_that_stall(self):
        with pytest.raises(ValidationError, match="did not reach a straight shape"):
            rectify(SkewTableau({(2, 2): 1}), [[(1, 2)]])

    def test_rejects_bad_explicit_sequence(self):
        with pytest.raises(ValidationError, match="exactly once"):
            rectify(EX_SKEW, [(6, 1), (6, 2)])


# ---------------------------------------------------------------------------
# board serialization


class TestBoardJson:
    def test_round_trip(self):
        board = {(1, 1): M(1), (1, 2): 3, (2, 2): HOLE}
        doc = json.loads(json.dumps(board_to_json_dict(board)))
        assert board_from_json_dict(doc) == board

    def test_labels_are_tagged(self):
        doc = board_to_json_dict({(1, 1): M(2), (1, 2): 3, (2, 2): HOLE})
        kinds = {(cell["row"], cell["col"]): cell["label"] for cell in doc["cells"]}
        assert kinds[(1, 1)] == {"marker": 2}
        assert kinds[(1, 2)] == {"v": 3}
        assert kinds[(2, 2)] == "hole"
