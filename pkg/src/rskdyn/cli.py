"""Command-line surface: one-shot transforms, class enumeration, decoding,
and experiment execution.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success/pass,
1 invalid input, 2 experiment failed, 3 experiment inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bracketing import bracket
from .decoder import CandidateLimitError, decode
from .equivalence import (
    ClassLabel,
    enumerate_coplactic_class,
    enumerate_plactic_class,
    words_as_json,
)
from .tableau import (
    RskPair,
    SemistandardTableau,
    StandardTableau,
    Word,
    find_violation,
    rsk,
    rsk_inverse,
)

__all__ = ["main", "run", "build_parser"]


def _read_json_source(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    return json.loads(text)


def _load_tableau(data: dict, kind: str):
    if not isinstance(data, dict) or "rows" not in data:
        raise ValueError('expected a JSON object with a "rows" field')
    rows = data["rows"]
    bad = find_violation(rows, kind)
    if bad is not None:
        raise ValueError(f"invalid {kind} tableau: {bad}")
    cls = SemistandardTableau if kind == "semistandard" else StandardTableau
    return cls(tuple(tuple(row) for row in rows))


def _print(text: str) -> None:
    sys.stdout.write(text + "\n")


def _format_tableau_text(t) -> str:
    if not t.rows:
        return "(empty)"
    return "\n".join(" ".join(str(a) for a in row) for row in t.rows)


def _cmd_rsk(args) -> int:
    word = Word.parse(args.word, k=args.k)
    if args.events:
        from .stream import RskStream

        stream = RskStream(word.k, record_cells=False, history_limit=0)
        for letter in word.letters:
            _print(json.dumps(stream.push(letter).as_dict(), sort_keys=True))
        return 0
    pair = rsk(word)
    if args.format == "json":
        _print(json.dumps(pair.as_dict(), sort_keys=True))
    else:
        _print("P:")
        _print(_format_tableau_text(pair.p))
        _print("Q:")
        _print(_format_tableau_text(pair.q))
        _print(f"shape: {list(pair.p.shape)}")
    return 0


def _cmd_inverse(args) -> int:
    data = _read_json_source(args.pair)
    if not isinstance(data, dict) or "p" not in data or "q" not in data:
        raise ValueError('expected a JSON object with "p" and "q" fields')
    pair = RskPair(
        _load_tableau(data["p"], "semistandard"), _load_tableau(data["q"], "standard")
    )
    word = rsk_inverse(pair, k=args.k)
    if args.format == "json":
        _print(json.dumps({"word": str(word), "k": word.k}, sort_keys=True))
    else:
        _print(str(word))
    return 0


def _cmd_class(args) -> int:
    data = _read_json_source(args.tableau)
    if args.kind == "plactic":
        t = _load_tableau(data, "semistandard")
        label = ClassLabel("plactic", t)
        members = enumerate_plactic_class(t, k=args.k)
    else:
        if args.k is None:
            raise ValueError("coplactic classes need --k (the alphabet size)")
        t = _load_tableau(data, "standard")
        label = ClassLabel("coplactic", t)
        members = enumerate_coplactic_class(t, args.k)
    if args.format == "json":
        _print(
            json.dumps(
                {
                    "kind": label.kind,
                    "tableau": t.as_dict(),
                    "size": len(members),
                    "words": words_as_json(members),
                },
                sort_keys=True,
            )
        )
    else:
        for text in words_as_json(members):
            _print(text if isinstance(text, str) else ",".join(map(str, text)))
        _print(f"({label.kind} class, {len(members)} words)")
    return 0


def _cmd_rank(args) -> int:
    word = Word.parse(args.word, k=2)
    analysis = bracket(word)
    if args.format == "json":
        _print(json.dumps(analysis.as_dict(), sort_keys=True))
    else:
        _print(f"rank: {analysis.rank}")
        _print(f"pairs: {sorted(analysis.pairs)}")
        _print(f"free: {list(analysis.free_indices)}")
    return 0


def _cmd_decode(args) -> int:
    q = _load_tableau(_read_json_source(args.tableau), "standard")
    result = decode(q, args.k, max_candidates=args.max_candidates)
    if args.format == "json":
        _print(json.dumps(result.as_dict(), sort_keys=True))
    else:
        text = "".join("?" if a is None else str(a) for a in result.determined)
        _print(text if result.n else "(empty)")
        _print(f"candidates: {result.candidate_count}")
    return 0


def _cmd_simulate(args) -> int:
    from .experiments import run_experiment

    overrides = {}
    for key in ("trials", "horizon", "steps", "n", "q", "letter", "words", "runs", "epsilon"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    if args.p is not None:
        overrides["p"] = [float(x) for x in args.p.split(",")]
    report = run_experiment(
        args.experiment,
        seed=args.seed,
        parallelism=args.parallelism,
        config_path=args.config,
        **overrides,
    )
    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        sys.stderr.write(f"report written to {args.out}\n")
    else:
        sys.stdout.write(text)
    if args.trial_csv:
        with open(args.trial_csv, "w", encoding="utf-8", newline="") as handle:
            report.write_trial_csv(handle)
        sys.stderr.write(f"per-trial rows written to {args.trial_csv}\n")
    sys.stderr.write(f"verdict: {report.verdict}\n")
    return report.exit_code


def _cmd_selftest(args) -> int:
    from .selftest import run_selftest

    ok = run_selftest(verbose=not args.quiet)
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rskdyn",
        description="RSK insertion as a streaming process: transforms, class "
        "enumeration, decoding, and seeded experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )

    p_rsk = sub.add_parser("rsk", help="insert a word; print the tableau pair")
    p_rsk.add_argument("word", help='word as digits ("211") or comma-separated integers')
    p_rsk.add_argument("--k", type=int, default=None, help="alphabet size (default: max letter)")
    p_rsk.add_argument(
        "--events",
        action="store_true",
        help="emit one JSON growth event per letter instead of the tableau pair",
    )
    add_format(p_rsk)
    p_rsk.set_defaults(fn=_cmd_rsk)

    p_inv = sub.add_parser("inverse", help="recover the word of a tableau pair")
    p_inv.add_argument("pair", help='JSON file with {"p": …, "q": …} ("-" for stdin)')
    p_inv.add_argument("--k", type=int, default=None, help="alphabet for the output word")
    add_format(p_inv)
    p_inv.set_defaults(fn=_cmd_inverse)

    p_class = sub.add_parser("class", help="enumerate a plactic or coplactic class")
    p_class.add_argument("kind", choices=("plactic", "coplactic"))
    p_class.add_argument("tableau", help='JSON file with {"rows": [[…]]} ("-" for stdin)')
    p_class.add_argument("--k", type=int, default=None, help="alphabet size")
    add_format(p_class)
    p_class.set_defaults(fn=_cmd_class)

    p_rank = sub.add_parser("rank", help="bracket a binary word")
    p_rank.add_argument("word", help="word over the letters 1 and 2")
    add_format(p_rank)
    p_rank.set_defaults(fn=_cmd_rank)

    p_dec = sub.add_parser("decode", help="recover determined letters from a recording tableau")
    p_dec.add_argument("tableau", help='JSON file with {"rows": [[…]]} ("-" for stdin)')
    p_dec.add_argument("--k", type=int, required=True, help="alphabet size")
    p_dec.add_argument(
        "--max-candidates",
        type=int,
        default=10**6,
        help="abort when the class is larger than this",
    )
    add_format(p_dec)
    p_dec.set_defaults(fn=_cmd_decode)

    p_sim = sub.add_parser("simulate", help="run a seeded experiment and emit a JSON report")
    p_sim.add_argument("experiment", help="experiment name (see the experiments registry)")
    p_sim.add_argument("--seed", type=int, required=True, help="master seed (required)")
    p_sim.add_argument("--p", default=None, help="letter probabilities, e.g. 0.5,0.3,0.2")
    p_sim.add_argument("--trials", type=int, default=None)
    p_sim.add_argument("--horizon", type=int, default=None)
    p_sim.add_argument("--steps", type=int, default=None)
    p_sim.add_argument("--n", type=int, default=None)
    p_sim.add_argument("--q", type=int, default=None)
    p_sim.add_argument("--letter", type=int, default=None)
    p_sim.add_argument("--words", type=int, default=None)
    p_sim.add_argument("--runs", type=int, default=None)
    p_sim.add_argument("--epsilon", type=float, default=None)
    p_sim.add_argument("--parallelism", type=int, default=1)
    p_sim.add_argument("--config", default=None, help="TOML config overriding the defaults")
    p_sim.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    p_sim.add_argument("--trial-csv", default=None, help="also write per-trial rows as CSV")
    p_sim.set_defaults(fn=_cmd_simulate)

    p_self = sub.add_parser("selftest", help="run the exhaustive small-size oracles")
    p_self.add_argument("--quiet", action="store_true")
    p_self.set_defaults(fn=_cmd_selftest)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage; remap to 1
        return 0 if exc.code in (0, None) else 1
    try:
        return args.fn(args)
    except CandidateLimitError as err:
        sys.stderr.write(f"error: {err}\n")
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
