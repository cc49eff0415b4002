"""Tests for products of equivalence classes, structure coefficients, and
the ring map from initial words to polynomials."""

import json
from math import comb

import pytest

from shifted_hecke import (
    K_poly,
    LRTable,
    TruncatedPolynomial,
    ValidationError,
    class_product_urt,
    insertion_tableau,
    lr_coefficients,
    phi,
    product_class_representatives,
    shift_word,
    shuffle,
    skew_fillings,
    verify_product_identity,
    word_class,
)


# ---------------------------------------------------------------------------
# word helpers


class TestShiftAndShuffle:
    def test_shift_word(self):
        assert shift_word((1, 2, 1), 2) == (3, 4, 3)
        assert shift_word((), 5) == ()
        assert shift_word((3,), 0) == (3,)

    def test_shuffle_small(self):
        assert sorted(set(shuffle((1,), (2,)))) == [(1, 2), (2, 1)]
        assert sorted(set(shuffle((1, 2), (3,)))) == [
            (1, 2, 3), (1, 3, 2), (3, 1, 2),
        ]

    def test_shuffle_counts_with_multiplicity(self):
        for u, v in (((1, 2), (3, 4)), ((1,), (1, 1)), ((1, 2), (1, 3))):
            assert len(shuffle(u, v)) == comb(len(u) + len(v), len(u))

    def test_shuffle_preserves_subwords(self):
        u, v = (1, 2), (3, 4)
        for w in shuffle(u, v):
            assert tuple(x for x in w if x in u) == u
            assert tuple(x for x in w if x in v) == v


# ---------------------------------------------------------------------------
# classes of initial words


class TestWordClass:
    def test_rejects_non_initial(self):
        with pytest.raises(ValidationError, match="is not an initial word"):
            word_class((3, 1))

    def test_urt_class_is_exact(self):
        wc = word_class((1, 2, 3))
        assert wc.representative == (1, 2, 3)
        assert wc.urt
        assert not wc.truncated
        assert {t.rows for t in wc.tableaux} == {((1, 2, 3),)}

    def test_search_class_with_two_tableaux(self):
        wc = word_class((1, 2, 4, 5, 3), max_len=7)
        assert not wc.urt
        assert not wc.truncated
        assert sorted(t.rows for t in wc.tableaux) == [
            ((1, 2, 3, 5), (4,)), ((1, 2, 3, 5), (4, 5)),
        ]

    def test_truncation_flag(self):
        wc = word_class((1, 2, 4, 5, 3), max_len=7, max_states=2)
        assert wc.truncated


# ---------------------------------------------------------------------------
# products of classes


SEVEN_ROWS = (
    ((1, 2, 3), (4,)),
    ((1, 2, 4), (3,)),
    ((1, 2, 3), (3, 4)),
    ((1, 2, 3, 4),),
    ((1, 2, 3, 4), (3,)),
    ((1, 2, 3, 4), (4,)),
    ((1, 2, 3, 4), (3, 4)),
)


class TestClassProduct:
    def test_seven_tableaux(self):
        t12 = insertion_tableau((1, 2))
        seven = class_product_urt(t12, t12)
        assert tuple(t.rows for t in seven) == SEVEN_ROWS

    def test_representatives(self):
        t12 = insertion_tableau((1, 2))
        t1 = insertion_tableau((1,))
        reps = product_class_representatives(t12, t1)
        assert set(reps) == {(1, 2, 3), (3, 1, 2), (3, 1, 2, 3)}

    def test_product_set_partitions_into_classes(self):
        # the classes of the reading words of the seven tableaux tile the
        # product set: each is contained in it, two classes either share
        # every tableau or none, and together they cover everything
        t12 = insertion_tableau((1, 2))
        seven = set(class_product_urt(t12, t12))
        classes = []
        for t in sorted(seven, key=lambda t: t.rows):
            wc = word_class(t.reading_word())
            assert not wc.truncated
            assert wc.tableaux <= seven
            classes.append(frozenset(wc.tableaux))
        for a in classes:
            for b in classes:
                assert a == b or not (a & b)
        assert frozenset().union(*classes) == seven

    def test_product_against_single_box(self):
        t1 = insertion_tableau((1,))
        out = class_product_urt(t1, t1)
        assert tuple(t.rows for t in out) == (((1, 2),),)


# ---------------------------------------------------------------------------
# structure coefficients


class TestLRCoefficients:
    def test_recorded_tables(self):
        cases = [
            ((1,), (1,), {(2,): 1}),
            ((1,), (2,), {(2, 1): 1, (3,): 1, (3, 1): 1}),
            ((2, 1), (1,), {(3, 1): 1}),
            ((2,), (2, 1), {(3, 2): 1, (4, 1): 1, (4, 2): 1}),
        ]
        for lam, mu, expected in cases:
            table = lr_coefficients(lam, mu)
            assert {nu.parts: c for nu, c in table.sorted_items()} == expected

    def test_empty_factor(self):
        table = lr_coefficients((2, 1), ())
        assert {nu.parts: c for nu, c in table.sorted_items()} == {(2, 1): 1}

    def test_target_kind_does_not_matter(self):
        for lam, mu in (((1,), (1,)), ((1,), (2,)), ((1,), (3, 1)), ((2,), (2, 1))):
            assert lr_coefficients(lam, mu, kind="minimal") == \
                lr_coefficients(lam, mu, kind="superstandard")

    def test_json_round_trip(self):
        table = lr_coefficients((1,), (2,))
        doc = json.loads(json.dumps(table.to_json_dict()))
        assert doc["lambda"] == [1] and doc["mu"] == [2]
        assert {tuple(row["nu"]): row["c"] for row in doc["coeffs"]} == {
            (2, 1): 1, (3,): 1, (3, 1): 1,
        }
        assert LRTable.from_json_dict(doc) == table


class TestVerifyProductIdentity:
    def test_recorded_products_hold(self):
        for lam, mu in (((1,), (1,)), ((1,), (2,)), ((2, 1), (1,))):
            report = verify_product_identity(lam, mu, 3, 6)
            assert report.matches
            assert report.first_difference is None

    def test_hook_squared(self):
        report = verify_product_identity((2, 1), (2, 1), 3, 6)
        assert report.matches
        assert {nu.parts: c for nu, c in report.table.sorted_items()} == {(4, 2): 1}

    def test_report_carries_both_sides(self):
        report = verify_product_identity((1,), (1,), 2, 4)
        assert report.product == K_poly((1,), 2, 4) * K_poly((1,), 2, 4)
        assert report.expansion == report.product


# ---------------------------------------------------------------------------
# the ring map


class TestPhi:
    def test_empty_word_is_one(self):
        assert phi((), 2, 3) == TruncatedPolynomial.one(2, 3)

    def test_single_letter(self):
        assert phi((1,), 2, 3) == K_poly((1,), 2, 3)

    def test_equivalent_words_map_equally(self):
        assert phi((1, 2), 2, 4) == K_poly((2,), 2, 4)
        assert phi((1, 2, 1), 2, 4) == K_poly((2,), 2, 4)

    def test_multiplicativity_small(self):
        nvars, maxdeg = 2, 4
        for u in ((1,), (1, 2)):
            for v in ((1,), (1, 2)):
                lhs = phi(u, nvars, maxdeg) * phi(v, nvars, maxdeg)
                total = TruncatedPolynomial.zero(nvars, maxdeg)
                for t in class_product_urt(insertion_tableau(u), insertion_tableau(v)):
                    total = total + K_poly(t.shape, nvars, maxdeg)
                assert lhs == total, (u, v)


# ---------------------------------------------------------------------------
# skew fillings


class TestSkewFillings:
    def test_column_fillings(self):
        fills = list(skew_fillings((1,), (2, 1), 1, 3))
        assert fills == [
            {(1, 2): 1, (2, 2): 2},
            {(1, 2): 1, (2, 2): 3},
            {(1, 2): 2, (2, 2): 3},
        ]

    def test_row_fillings_increase(self):
        fills = list(skew_fillings((1,), (3,), 1, 3))
        assert fills == [{(1, 2): 1, (1, 3): 2}, {(1, 2): 1, (1, 3): 3},
                         {(1, 2): 2, (1, 3): 3}]

    def test_empty_difference(self):
        assert list(skew_fillings((2, 1), (2, 1), 1, 5)) == [{}]

    def test_rejects_bad_containment(self):
        with pytest.raises(ValidationError, match="does not fit"):
            list(skew_fillings((2, 1), (1,), 1, 3))
