import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rskdyn import (
    RskPair,
    SemistandardTableau,
    StandardTableau,
    Word,
    find_violation,
    row_insert,
    rsk,
    rsk_inverse,
    shape_of,
    validate,
)
from rskdyn.equivalence import semistandard_fillings, standard_tableaux

from conftest import all_words, w, words_up_to


def words_strategy(max_k=4, max_len=60):
    return st.integers(1, max_k).flatmap(
        lambda k: st.lists(st.integers(1, k), max_size=max_len).map(
            lambda letters: Word(tuple(letters), k)
        )
    )


class TestWord:
    def test_parse_digits(self):
        assert w("211").letters == (2, 1, 1)
        assert w("211").k == 2

    def test_parse_comma_form(self):
        word = Word.parse("10,2,11")
        assert word.letters == (10, 2, 11)
        assert word.k == 11

    def test_parse_empty(self):
        assert Word.parse("", k=3).letters == ()

    def test_letter_out_of_range(self):
        with pytest.raises(ValueError, match="outside alphabet"):
            Word((3,), 2)

    def test_bad_alphabet(self):
        with pytest.raises(ValueError):
            Word((), 0)

    def test_str_roundtrip(self):
        assert str(w("1221")) == "1221"
        assert str(Word((10, 2), 10)) == "10,2"


class TestRowInsert:
    def test_into_empty(self):
        t, cell = row_insert(SemistandardTableau(()), 2)
        assert t.rows == ((2,),)
        assert cell == (1, 1)

    def test_bump_to_new_row(self):
        t, cell = row_insert(SemistandardTableau(((2,),)), 1)
        assert t.rows == ((1,), (2,))
        assert cell == (2, 1)

    def test_append_to_first_row(self):
        t, cell = row_insert(SemistandardTableau(((1,), (2,))), 2)
        assert t.rows == ((1, 2), (2,))
        assert cell == (1, 2)

    def test_rejects_bad_letter(self):
        with pytest.raises(ValueError):
            row_insert(SemistandardTableau(()), 0)
        with pytest.raises(ValueError):
            row_insert(SemistandardTableau(()), 3, k=2)

    def test_grows_by_one_and_stays_valid(self):
        t = SemistandardTableau(())
        for letter in (3, 1, 2, 2, 1, 3, 1):
            before = t.size
            t, cell = row_insert(t, letter)
            assert t.size == before + 1
            assert find_violation(t.rows, "semistandard") is None
            r, c = cell
            assert t.rows[r - 1][c - 1] is not None


class TestRsk:
    def test_descent(self):
        pair = rsk(w("21"))
        assert pair.p.rows == ((1,), (2,))
        assert pair.q.rows == ((1,), (2,))

    def test_three_letters(self):
        pair = rsk(w("211"))
        assert pair.p.rows == ((1, 1), (2,))
        assert pair.q.rows == ((1, 3), (2,))

    def test_empty(self):
        pair = rsk(Word((), 2))
        assert pair.p.rows == ()
        assert pair.q.rows == ()

    def test_matches_repeated_row_insert(self):
        for word in words_up_to(3, 5):
            t = SemistandardTableau(())
            cells = []
            for letter in word.letters:
                t, cell = row_insert(t, letter)
                cells.append(cell)
            pair = rsk(word)
            assert pair.p == t
            assert pair.q.entry_cells() == cells

    @given(words_strategy())
    @settings(max_examples=150)
    def test_content_conserved(self, word):
        assert rsk(word).p.content() == Counter(word.letters)

    @given(words_strategy())
    @settings(max_examples=150)
    def test_row_bound(self, word):
        assert len(rsk(word).p.rows) <= word.k

    @given(words_strategy())
    @settings(max_examples=100)
    def test_prefix_stability(self, word):
        full_q = rsk(word).q
        for n in range(len(word) + 1):
            expected = tuple(
                tuple(a for a in row if a <= n) for row in full_q.rows
            )
            expected = tuple(row for row in expected if row)
            assert rsk(word.prefix(n)).q.rows == expected

    @given(words_strategy())
    @settings(max_examples=100)
    def test_monotone_growth(self, word):
        previous = ()
        for n in range(1, len(word) + 1):
            shape = rsk(word.prefix(n)).p.shape
            grown = [
                shape[i] - (previous[i] if i < len(previous) else 0)
                for i in range(len(shape))
            ]
            assert sum(grown) == 1 and all(g in (0, 1) for g in grown)
            previous = shape


class TestRskInverse:
    def test_examples(self):
        assert str(rsk_inverse(RskPair(
            SemistandardTableau(((1, 2), (2,))), StandardTableau(((1, 3), (2,)))
        ))) == "212"
        assert str(rsk_inverse(RskPair(
            SemistandardTableau(((1, 1), (2,))), StandardTableau(((1, 2), (3,)))
        ))) == "121"

    def test_empty(self):
        pair = RskPair(SemistandardTableau(()), StandardTableau(()))
        assert rsk_inverse(pair).letters == ()

    def test_shape_mismatch_rejected(self):
        pair = RskPair(SemistandardTableau(((1, 1),)), StandardTableau(((1,), (2,))))
        with pytest.raises(ValueError, match="shape mismatch"):
            rsk_inverse(pair)

    def test_invalid_tableau_rejected(self):
        pair = RskPair(SemistandardTableau(((2, 1),)), StandardTableau(((1, 2),)))
        with pytest.raises(ValueError, match="invalid insertion tableau"):
            rsk_inverse(pair)

    def test_round_trip_small(self):
        for k in (1, 2, 3):
            for word in words_up_to(k, 6):
                assert rsk_inverse(rsk(word), k) == word

    def test_image_characterization(self):
        # every valid same-shape pair of size <= 6 over three letters is hit
        def partitions(total, bound=None):
            if total == 0:
                yield ()
                return
            for first in range(min(total, bound or total), 0, -1):
                for rest in partitions(total - first, first):
                    yield (first,) + rest

        for size in range(0, 7):
            for shape in partitions(size):
                for p in semistandard_fillings(shape, 3):
                    for q in standard_tableaux(shape):
                        pair = RskPair(p, q)
                        assert rsk(rsk_inverse(pair, 3)) == pair

    @given(words_strategy())
    @settings(max_examples=150)
    def test_round_trip_random(self, word):
        assert rsk_inverse(rsk(word), word.k) == word


class TestValidate:
    def test_good_semistandard(self):
        ok, violation = validate([[1, 1], [2]], "semistandard")
        assert ok and violation is None

    def test_row_decrease(self):
        ok, violation = validate([[2, 1]], "semistandard")
        assert not ok
        assert violation.cell == (1, 2)
        assert "decreases" in violation.reason

    def test_duplicate_standard_entry(self):
        ok, violation = validate([[1, 2], [2]], "standard")
        assert not ok
        assert "duplicate entry 2" in violation.reason

    def test_column_violation(self):
        ok, violation = validate([[1, 2], [1, 3]], "standard")
        assert not ok
        assert violation.cell == (2, 1)

    def test_row_longer_than_above(self):
        ok, violation = validate([[1], [2, 3]], "semistandard")
        assert not ok

    def test_standard_weak_row_rejected(self):
        ok, violation = validate([[1, 1]], "standard")
        assert not ok

    def test_missing_entry(self):
        ok, violation = validate([[1, 3]], "standard")
        assert not ok
        assert "missing" in violation.reason or "duplicate" in violation.reason

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            validate([[1]], "weird")


def test_shape_of():
    assert shape_of(SemistandardTableau(((1, 1), (2,)))) == (2, 1)
    assert shape_of(SemistandardTableau(())) == ()
    assert shape_of(SemistandardTableau(((1, 2, 2),))) == (3,)
