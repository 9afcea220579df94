import itertools

import pytest

from rskdyn import (
    TruncatedPoint,
    Word,
    bracket,
    bracket_equivalent,
    coplactic_equivalent,
    plactic_equivalent,
    rank,
    rsk,
    young_tail_equivalent,
    young_tail_equivalent_binary,
)

from conftest import all_words, w


def iterated_bracketing(word: Word) -> frozenset:
    """Literal repeated-scan oracle: bracket adjacent descents, drop them,
    and rescan the remaining subword until none are left."""
    active = list(range(len(word.letters)))
    pairs = []
    while True:
        matched = []
        i = 0
        while i + 1 < len(active):
            a, b = active[i], active[i + 1]
            if word.letters[a] == 2 and word.letters[b] == 1:
                matched.append(i)
                i += 2
            else:
                i += 1
        if not matched:
            return frozenset(pairs)
        for i in reversed(matched):
            pairs.append((active[i] + 1, active[i + 1] + 1))
            del active[i : i + 2]


class TestBracket:
    def test_examples(self):
        analysis = bracket(w("2211"))
        assert analysis.rank == 2
        assert analysis.pairs == frozenset({(2, 3), (1, 4)})
        assert analysis.free_indices == ()

        analysis = bracket(w("1122"))
        assert analysis.rank == 0
        assert analysis.free_indices == (1, 2, 3, 4)

        analysis = bracket(w("212"))
        assert analysis.rank == 1
        assert analysis.pairs == frozenset({(1, 2)})
        assert analysis.free_indices == (3,)

    def test_empty(self):
        analysis = bracket(Word((), 2))
        assert analysis.rank == 0 and analysis.pairs == frozenset()

    def test_rejects_large_letters(self):
        with pytest.raises(ValueError, match="not in the alphabet"):
            bracket(Word((1, 3), 3))
        with pytest.raises(ValueError):
            rank(Word((3,), 3))

    def test_matches_iterated_oracle_exhaustively(self):
        for n in range(0, 13):
            for word in all_words(2, n):
                assert bracket(word).pairs == iterated_bracketing(word)

    def test_pair_values_and_free_form(self):
        for n in range(0, 11):
            for word in all_words(2, n):
                analysis = bracket(word)
                for i, j in analysis.pairs:
                    assert i < j
                    assert word.letters[i - 1] == 2 and word.letters[j - 1] == 1
                free_letters = [word.letters[i - 1] for i in analysis.free_indices]
                assert free_letters == sorted(free_letters)  # reads 1^a 2^b
                covered = {i for pair in analysis.pairs for i in pair}
                covered.update(analysis.free_indices)
                assert covered == set(range(1, n + 1))
                assert len(covered) == len(analysis.pairs) * 2 + len(analysis.free_indices)

    def test_as_dict(self):
        assert bracket(w("212")).as_dict() == {
            "rank": 1,
            "pairs": [[1, 2]],
            "free": [3],
        }


class TestRank:
    def test_examples(self):
        assert rank(w("2211")) == 2
        assert rank(w("1122")) == 0
        assert rank(Word((), 2)) == 0

    def test_equals_second_row_exhaustively(self):
        for n in range(0, 13):
            for word in all_words(2, n):
                shape = rsk(word).p.shape
                second = shape[1] if len(shape) > 1 else 0
                assert rank(word) == second

    def test_recording_second_row_holds_matched_one_positions(self):
        # the second recording row collects exactly the matched 1s' indices
        for n in range(0, 12):
            for word in all_words(2, n):
                analysis = bracket(word)
                q_rows = rsk(word).q.rows
                second = set(q_rows[1]) if len(q_rows) > 1 else set()
                assert second == {j for _, j in analysis.pairs}


class TestBinaryEquivalences:
    def test_bracket_equivalent_examples(self):
        assert bracket_equivalent(w("211"), w("212"))
        assert not bracket_equivalent(w("2211"), w("2121"))
        assert bracket_equivalent(w("11"), w("11"))
        with pytest.raises(ValueError, match="lengths"):
            bracket_equivalent(w("1"), w("11"))

    def test_matches_coplactic_exhaustively(self):
        # partition fingerprints: equal pairings and equal recording tableaux
        # classify the cube identically, which settles every pair at once
        for n in range(1, 13):
            by_pairs = {}
            by_q = {}
            for word in all_words(2, n):
                key_a = bracket(word).pairs
                key_b = rsk(word).q.rows
                assert by_pairs.setdefault(key_a, key_b) == key_b
                assert by_q.setdefault(key_b, key_a) == key_a

    def test_matches_coplactic_pairwise_small(self):
        for n in range(1, 8):
            words = all_words(2, n)
            for u, v in itertools.product(words, repeat=2):
                assert bracket_equivalent(u, v) == coplactic_equivalent(u, v)

    def test_young_tail_binary_examples(self):
        a = TruncatedPoint(w("211"), w("12"))
        b = TruncatedPoint(w("121"), w("12"))
        c = TruncatedPoint(w("112"), w("12"))
        assert young_tail_equivalent_binary(a, b)
        assert not young_tail_equivalent_binary(a, c)
        assert young_tail_equivalent_binary(a, a)
        with pytest.raises(ValueError, match="split"):
            young_tail_equivalent_binary(a, TruncatedPoint(w("1"), w("")))

    def test_rank_content_matches_insertion_fingerprints(self):
        # (rank, content) and the insertion tableau classify the cube
        # identically, so the two tail relations agree for every pair
        for n in range(1, 11):
            by_profile = {}
            by_p = {}
            for word in all_words(2, n):
                profile = (rank(word), word.letters.count(1))
                p_rows = rsk(word).p.rows
                assert by_profile.setdefault(profile, p_rows) == p_rows
                assert by_p.setdefault(p_rows, profile) == profile

    def test_agrees_with_general_predicate(self):
        for n in (1, 2, 3, 4):
            for tail_len in (0, 2):
                prefixes = all_words(2, n)
                for tail in all_words(2, tail_len):
                    for u, v in itertools.product(prefixes, repeat=2):
                        a = TruncatedPoint(u, tail)
                        b = TruncatedPoint(v, tail)
                        assert young_tail_equivalent_binary(a, b) == young_tail_equivalent(a, b)
