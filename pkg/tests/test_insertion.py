"""Tests for shifted Hecke insertion: single steps, full words, recording
tableaux, descent sets, and the reverse map."""

import pytest
from hypothesis import given, settings, strategies as st

from shifted_hecke import (
    Entry,
    SetValuedShiftedTableau,
    ShiftedTableau,
    ValidationError,
    descent_set,
    descent_set_recording,
    hecke_insertion_tableau,
    insert_one,
    insert_word,
    insertion_tableau,
    reverse_insert,
    weak_descent_set,
)
from shifted_hecke.core import restrict

words = st.lists(st.integers(1, 4), max_size=7).map(tuple)


def q_tableau(shape, cells):
    return SetValuedShiftedTableau(
        shape, {c: tuple(Entry.parse(s) for s in es.split(",")) for c, es in cells.items()}
    )


# ---------------------------------------------------------------------------
# single insertions


class TestInsertOne:
    def test_into_empty(self):
        out = insert_one(ShiftedTableau(()), 7)
        assert out.tableau.rows == ((7,),)
        assert out.terminal == (1, 1)
        assert not out.primed
        assert out.new_box

    def test_append_to_row(self):
        out = insert_one(ShiftedTableau(((1, 2),)), 3)
        assert out.tableau.rows == ((1, 2, 3),)
        assert out.terminal == (1, 3)
        assert not out.primed
        assert out.new_box

    def test_equal_letter_merges(self):
        # inserting a copy of the last entry adds no box; the path ends
        # unprimed at the bottom of the column through that entry
        out = insert_one(ShiftedTableau(((1, 2),)), 2)
        assert out.tableau.rows == ((1, 2),)
        assert out.terminal == (1, 2)
        assert not out.primed
        assert not out.new_box

    def test_bump_in_first_column_goes_to_columns(self):
        # a bump out of the diagonal box continues by column insertion,
        # which records a primed step
        out = insert_one(ShiftedTableau(((2,),)), 1)
        assert out.tableau.rows == ((1, 2),)
        assert out.terminal == (1, 2)
        assert out.primed
        assert out.new_box

    def test_mid_tableau_bump(self):
        # inserting 5 bumps the 6, which merges into the existing row-2
        # entries below, ending on the second row without growing the shape
        t = ShiftedTableau(((1, 2, 3, 4, 6), (4, 5, 6, 8), (6, 7)))
        out = insert_one(t, 5)
        assert out.tableau.rows == ((1, 2, 3, 4, 5), (4, 5, 6, 8), (6, 7))
        assert out.terminal == (3, 4)
        assert not out.primed
        assert not out.new_box


# ---------------------------------------------------------------------------
# whole words


class TestInsertWord:
    def test_step_sequence(self):
        partials = []
        t = ShiftedTableau(())
        for x in (2, 1, 1, 5, 4, 3, 2):
            t = insert_one(t, x).tableau
            partials.append(t.rows)
        assert partials == [
            ((2,),),
            ((1, 2),),
            ((1, 2),),
            ((1, 2, 5),),
            ((1, 2, 4), (5,)),
            ((1, 2, 3), (4, 5)),
            ((1, 2, 3, 5), (3, 4)),
        ]

    def test_small_tableaux(self):
        expected = {
            (3, 2, 1): ((1, 2, 3),),
            (3, 1, 2): ((1, 2), (3,)),
            (1, 3, 2): ((1, 2), (3,)),
            (3, 1, 2, 3): ((1, 2, 3), (3,)),
            (1, 2, 1): ((1, 2),),
            (2, 1): ((1, 2),),
            (2, 1, 1): ((1, 2),),
            (2, 1, 1, 3, 2): ((1, 2, 3), (3,)),
        }
        for w, rows in expected.items():
            assert insertion_tableau(w).rows == rows, w

    def test_451132_pair(self):
        p, q = insert_word((4, 5, 1, 1, 3, 2))
        assert p.rows == ((1, 2, 4, 5), (3,))
        assert q == q_tableau((4, 1), {
            (1, 1): "1", (1, 2): "2", (1, 3): "3',4'", (1, 4): "6'", (2, 2): "5",
        })

    def test_354211_pair(self):
        p, q = insert_word((3, 5, 4, 2, 1, 1))
        assert p.rows == ((1, 2, 3, 4), (5,))
        assert q == q_tableau((4, 1), {
            (1, 1): "1", (1, 2): "2", (1, 3): "4'", (1, 4): "5',6'", (2, 2): "3",
        })

    def test_empty_word(self):
        p, q = insert_word(())
        assert p.rows == ()
        assert q.cells == {}

    def test_entries_match_letters(self):
        for w in ((2, 1, 1, 3, 2), (4, 5, 1, 1, 3, 2), (1, 1, 1)):
            assert insertion_tableau(w).entry_set() == set(w)


# ---------------------------------------------------------------------------
# unshifted Hecke insertion


class TestHeckeInsertion:
    def test_small_tableaux(self):
        assert hecke_insertion_tableau((1, 2, 1))[0].rows == ((1, 2), (2,))
        assert hecke_insertion_tableau((3, 1, 2))[0].rows == ((1, 2), (3,))
        assert hecke_insertion_tableau((1, 1))[0].rows == ((1,),)

    def test_shape_component(self):
        t, shape = hecke_insertion_tableau((1, 2, 1))
        assert shape == (2, 1)
        assert tuple(len(r) for r in t.rows) == shape


# ---------------------------------------------------------------------------
# descents


class TestDescents:
    def test_word_descents(self):
        assert descent_set((4, 5, 1, 1, 3, 2)) == {2, 5}
        assert descent_set((1, 1, 2)) == set()
        assert descent_set(()) == set()

    def test_weak_descents_count_equalities(self):
        assert weak_descent_set((4, 5, 1, 1, 3, 2)) == {2, 3, 5}
        assert weak_descent_set((1, 1, 2)) == {1}

    def test_recording_descents(self):
        _, q = insert_word((4, 5, 1, 1, 3, 2))
        assert descent_set_recording(q) == {2, 5}
        _, q = insert_word((3, 5, 4, 2, 1, 1))
        assert descent_set_recording(q) == {2, 3, 4}

    def test_recording_descent_cases(self):
        # i unprimed, i+1 primed in a later box: always a descent
        _, q = insert_word((2, 1))
        assert descent_set_recording(q) == {1}
        # i primed, i+1 primed, same box: no descent
        _, q = insert_word((2, 1, 1))
        assert descent_set_recording(q) == {1}
        # i and i+1 unprimed with i+1 weakly north: no descent
        _, q = insert_word((1, 2))
        assert descent_set_recording(q) == set()

    @given(words)
    @settings(max_examples=200, deadline=None)
    def test_descents_transfer_to_recording(self, w):
        _, q = insert_word(w)
        assert descent_set_recording(q) == descent_set(w)


# ---------------------------------------------------------------------------
# properties of the correspondence


class TestInsertionProperties:
    @given(words)
    @settings(max_examples=200, deadline=None)
    def test_entries_equal_letters(self, w):
        assert insertion_tableau(w).entry_set() == set(w)

    @given(words)
    @settings(max_examples=150, deadline=None)
    def test_reverse_round_trip(self, w):
        p, q = insert_word(w)
        assert reverse_insert(p, q) == w

    @given(words, st.integers(1, 4))
    @settings(max_examples=150, deadline=None)
    def test_restriction_commutes(self, w, k):
        # inserting the subword of letters <= k gives the restriction of
        # the insertion tableau to entries <= k
        assert insertion_tableau(restrict(w, k)) == restrict(insertion_tableau(w), k)

    def test_distinct_words_distinct_pairs(self):
        from itertools import product
        seen = {}
        for n in range(5):
            for w in product((1, 2, 3), repeat=n):
                pair = insert_word(w)
                assert pair not in seen, (w, seen.get(pair))
                seen[pair] = w


# ---------------------------------------------------------------------------
# reverse insertion


class TestReverseInsert:
    def test_known_pairs(self):
        for w in ((4, 5, 1, 1, 3, 2), (2, 1, 1, 3, 2), (1,), ()):
            p, q = insert_word(w)
            assert reverse_insert(p, q) == w

    def test_accepts_row_tuples(self):
        _, q = insert_word((2, 1))
        assert reverse_insert(((1, 2),), q) == (2, 1)

    def test_rejects_shape_mismatch(self):
        q = q_tableau((1,), {(1, 1): "1"})
        with pytest.raises(ValidationError, match="different shapes"):
            reverse_insert(ShiftedTableau(((1, 2),)), q)
