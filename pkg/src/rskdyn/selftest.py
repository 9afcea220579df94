"""Exhaustive small-size oracles, runnable from the CLI.

Each check sweeps every word up to a small size and verifies one exact
statement by brute force.  The pytest suite runs the same statements at
larger sizes; this module is the quick self-contained subset.
"""

from __future__ import annotations

import itertools
import random

from .bracketing import bracket, rank
from .equivalence import (
    count_semistandard_fillings,
    enumerate_coplactic_class,
    enumerate_plactic_class,
    semistandard_fillings,
)
from .stream import RskStream
from .tableau import Word, find_violation, rsk, rsk_inverse

__all__ = ["run_selftest", "CHECKS"]


def _all_words(k: int, max_len: int):
    for n in range(max_len + 1):
        for tup in itertools.product(range(1, k + 1), repeat=n):
            yield Word(tup, k)


def check_round_trip() -> str | None:
    for k in (1, 2, 3):
        for w in _all_words(k, 5):
            pair = rsk(w)
            if rsk_inverse(pair, k) != w:
                return f"round trip failed for {w}"
            if pair.p.shape != pair.q.shape:
                return f"shape mismatch for {w}"
            if find_violation(pair.p.rows, "semistandard") is not None:
                return f"insertion tableau invalid for {w}"
            if find_violation(pair.q.rows, "standard") is not None:
                return f"recording tableau invalid for {w}"
    return None


def check_rank_is_second_row() -> str | None:
    for w in _all_words(2, 10):
        if rank(w) != (rsk(w).p.shape + (0, 0))[1]:
            return f"rank mismatch for {w}"
    return None


def check_pairing_matches_recording() -> str | None:
    for n in range(1, 9):
        by_pairs: dict = {}
        by_q: dict = {}
        for tup in itertools.product((1, 2), repeat=n):
            w = Word(tup, 2)
            key_a = bracket(w).pairs
            key_b = rsk(w).q.rows
            if by_pairs.setdefault(key_a, key_b) != key_b:
                return f"same pairing, different recording tableau at {w}"
            if by_q.setdefault(key_b, key_a) != key_a:
                return f"same recording tableau, different pairing at {w}"
    return None


def check_rank_content_matches_insertion() -> str | None:
    for n in range(1, 9):
        by_profile: dict = {}
        by_p: dict = {}
        for tup in itertools.product((1, 2), repeat=n):
            w = Word(tup, 2)
            profile = (rank(w), tup.count(1))
            p_rows = rsk(w).p.rows
            if by_profile.setdefault(profile, p_rows) != p_rows:
                return f"same rank/content, different insertion tableau at {w}"
            if by_p.setdefault(p_rows, profile) != profile:
                return f"same insertion tableau, different rank/content at {w}"
    return None


def check_class_partitions() -> str | None:
    for k in (2, 3):
        for n in range(6):
            words = [Word(t, k) for t in itertools.product(range(1, k + 1), repeat=n)]
            plactic_seen: set = set()
            coplactic_seen: set = set()
            for w in words:
                pair = rsk(w)
                if pair.p not in plactic_seen:
                    plactic_seen.add(pair.p)
                    members = enumerate_plactic_class(pair.p, k)
                    direct = {u for u in words if rsk(u).p == pair.p}
                    if members != direct:
                        return f"plactic class mismatch at {pair.p}"
                if pair.q not in coplactic_seen:
                    coplactic_seen.add(pair.q)
                    members = enumerate_coplactic_class(pair.q, k)
                    direct = {u for u in words if rsk(u).q == pair.q}
                    if members != direct:
                        return f"coplactic class mismatch at {pair.q}"
    return None


def check_filling_count_formula() -> str | None:
    shapes = [(), (1,), (3,), (2, 1), (2, 2), (3, 1), (4, 2), (3, 2, 1), (2, 2, 1)]
    for shape in shapes:
        for k in (1, 2, 3, 4):
            counted = count_semistandard_fillings(shape, k)
            listed = sum(1 for _ in semistandard_fillings(shape, k))
            if counted != listed:
                return f"filling count mismatch for shape {shape}, k={k}"
    return None


def check_stream_matches_batch() -> str | None:
    rng = random.Random(20260810)
    for _ in range(25):
        k = rng.randint(1, 4)
        n = rng.randint(0, 200)
        letters = tuple(rng.randint(1, k) for _ in range(n))
        stream = RskStream(k)
        for a in letters:
            stream.push(a)
        if stream.snapshot() != rsk(Word(letters, k)):
            return f"stream/batch mismatch for k={k}, n={n}"
    return None


CHECKS = [
    ("round-trip", check_round_trip),
    ("rank equals second row", check_rank_is_second_row),
    ("pairing matches recording tableau", check_pairing_matches_recording),
    ("rank/content matches insertion tableau", check_rank_content_matches_insertion),
    ("class enumeration matches brute force", check_class_partitions),
    ("filling count formula matches enumeration", check_filling_count_formula),
    ("stream matches batch", check_stream_matches_batch),
]


def run_selftest(verbose: bool = True) -> bool:
    import sys

    ok = True
    for name, fn in CHECKS:
        problem = fn()
        if verbose or problem:
            status = "ok" if problem is None else f"FAILED: {problem}"
            sys.stderr.write(f"selftest {name}: {status}\n")
        ok = ok and problem is None
    return ok
