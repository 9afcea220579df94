import itertools
import random

import pytest

from rskdyn import (
    CandidateLimitError,
    StandardTableau,
    Word,
    decode,
    determination_curve,
    rsk,
)

from conftest import all_words, w


class TestDecode:
    def test_forced_class(self):
        result = decode(StandardTableau(((1,), (2,))), 2)
        assert result.determined == (2, 1)
        assert result.candidate_count == 1

    def test_one_wildcard(self):
        result = decode(StandardTableau(((1, 3), (2,))), 2)
        assert result.determined == (2, 1, None)
        assert result.candidate_count == 2
        assert {str(word) for word in result.candidates} == {"211", "212"}

    def test_single_letter_alphabet(self):
        result = decode(StandardTableau(((1,),)), 1)
        assert result.determined == (1,)
        assert result.candidate_count == 1

    def test_empty(self):
        result = decode(StandardTableau(()), 2)
        assert result.determined == ()
        assert result.candidate_count == 1
        assert result.determined_fraction() == 1.0

    def test_too_deep_shape_rejected(self):
        with pytest.raises(ValueError, match="rows"):
            decode(StandardTableau(((1,), (2,), (3,))), 2)

    def test_invalid_tableau_rejected(self):
        with pytest.raises(ValueError, match="invalid"):
            decode(StandardTableau(((2, 1),)), 2)

    def test_candidate_cap(self):
        # one long row over four letters: hugely many fillings
        q = StandardTableau((tuple(range(1, 41)),))
        with pytest.raises(CandidateLimitError) as err:
            decode(q, 4, max_candidates=1000)
        assert err.value.count > 1000

    def test_soundness_exhaustive(self):
        # the source word is always a candidate and every pinned letter is its
        for k in (1, 2, 3):
            for n in range(0, 8):
                for word in all_words(k, n):
                    result = decode(rsk(word).q, k)
                    assert word in result.candidates
                    for got, truth in zip(result.determined, word.letters):
                        assert got is None or got == truth

    def test_candidate_count_two_rows(self):
        for word in all_words(2, 9):
            result = decode(rsk(word).q, 2)
            shape = rsk(word).p.shape + (0,)
            assert result.candidate_count == shape[0] - shape[1] + 1

    def test_as_dict(self):
        result = decode(StandardTableau(((1, 3), (2,))), 2)
        assert result.as_dict() == {"determined": [2, 1, None], "candidates": 2, "n": 3}


class TestDeterminationCurve:
    def test_fully_determined_word(self):
        assert determination_curve(w("21"), [2]) == [(2, 1.0, 1.0)]

    def test_third_position_open(self):
        ((n, frac_all, frac_half),) = determination_curve(w("211"), [3])
        assert n == 3
        assert frac_all == pytest.approx(2 / 3)
        assert frac_half == 1.0

    def test_single_letter(self):
        assert determination_curve(Word((1,), 1), [1]) == [(1, 1.0, 1.0)]

    def test_default_grid(self):
        word = Word(tuple(random.Random(0).randint(1, 2) for _ in range(40)), 2)
        curve = determination_curve(word)
        assert [n for n, _, _ in curve] == [1, 2, 4, 8, 16, 32, 40]

    def test_bad_grid(self):
        with pytest.raises(ValueError):
            determination_curve(w("21"), [5])

    def test_monotone_determination(self):
        # once pinned, a position stays pinned to the same letter
        rng = random.Random(9)
        for _ in range(15):
            n = rng.randint(4, 32)
            word = Word(tuple(rng.randint(1, 2) for _ in range(n)), 2)
            previous: dict[int, int] = {}
            for m in range(1, n + 1):
                result = decode(rsk(word.prefix(m)).q, 2)
                for idx, letter in enumerate(result.determined):
                    if letter is None:
                        continue
                    if idx in previous:
                        assert previous[idx] == letter
                    previous[idx] = letter
