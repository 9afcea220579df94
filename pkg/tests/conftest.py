"""Shared helpers: brute-force oracles the library code never uses."""

from __future__ import annotations

import itertools

from rskdyn import Word, rsk

def w(text: str, k: int | None = None) -> Word:
    return Word.parse(text, k=k)


def all_words(k: int, n: int) -> list[Word]:
    """Every word of exactly length n over 1..k."""
    return [Word(t, k) for t in itertools.product(range(1, k + 1), repeat=n)]


def words_up_to(k: int, max_len: int) -> list[Word]:
    out = []
    for n in range(max_len + 1):
        out.extend(all_words(k, n))
    return out


def classify_by(words, key):
    """Group words by a key function (the direct-filter oracle)."""
    classes: dict = {}
    for word in words:
        classes.setdefault(key(word), set()).add(word)
    return classes


def classify_by_insertion(words):
    return classify_by(words, lambda word: rsk(word).p)


def classify_by_recording(words):
    return classify_by(words, lambda word: rsk(word).q)
