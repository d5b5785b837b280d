"""
Command-line front end.

    goising analyze game.sgf [--params FILE] [--out DIR] [--formats csv,json,svg]
                             [--window N] [--kappa X] [--size N] [--verbose]
    goising batch DIR|FILE... [same flags] [--workers N]

Exit status is 0 on success, 1 for bad input (unreadable files, malformed
records, bad parameters) and 2 when a recorded move cannot be replayed.
"""

import argparse
import glob
import json
import os
import sys
from dataclasses import dataclass, replace
from urllib.parse import urlparse

from . import __version__
from .energy import ParameterError
from .energy.params import _process_params
from .fetch import is_url, load_game
from .output import FORMATS, write_atomic, write_outputs
from .replay import (
    IllegalRecordedMove,
    batch_evaluate,
    predict_winner,
    replay,
)
from .sgf import SgfError
from .transitions import detect_transitions

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_REPLAY = 2


@dataclass(frozen=True)
class RunConfig:
    inputs: tuple
    params: str = None
    out: str = "."
    formats: tuple = ("csv", "json")
    window: int = 20
    kappa: float = 6.0
    size: int = None
    workers: int = 1
    verbose: bool = False

    def __post_init__(self):
        if len(self.inputs) == 0:
            raise ValueError("At least one input is required")
        if len(self.formats) == 0:
            raise ValueError("At least one output format is required")
        bad = set(self.formats) - set(FORMATS)
        if bad:
            raise ValueError(
                f"Unknown formats {sorted(bad)}; expected a subset of {FORMATS}"
            )

    @property
    def detector(self):
        return {"window": self.window, "kappa": self.kappa}


def _stem(item):
    name = urlparse(str(item)).path if is_url(item) else os.fspath(item)
    return os.path.splitext(os.path.basename(name))[0] or "game"


def _unique_stems(labels):
    """Output stems for `labels`, a repeated stem suffixed `-<n>` by position."""
    stems = []
    seen = set()
    for n, label in enumerate(labels, start=1):
        stem = _stem(label)
        if stem in seen:
            stem = f"{stem}-{n}"
        seen.add(stem)
        stems.append(stem)
    return stems


def _error(msg):
    print(f"goising: error: {msg}", file=sys.stderr)


def _verdict_line(label, verdict):
    official = "?" if verdict.official is None else verdict.official.letter
    return (
        f"{label}: predicted {verdict.predicted.letter}"
        f" (S_black={verdict.S_black:.6g}, S_white={verdict.S_white:.6g}),"
        f" official {official}, {verdict.agreement.value}"
    )


def cmd_analyze(config):
    """Replay one game and write its series; returns the exit status."""
    item = config.inputs[0]
    try:
        params = _process_params(config.params)
        game = load_game(item)
        if config.size is not None:
            game = replace(game, board_size=config.size)
    except (SgfError, ParameterError, OSError) as e:
        _error(f"{item}: {e}")
        return EXIT_INPUT

    try:
        series = replay(
            game, params, diags=config.verbose, output=config.verbose
        )
    except IllegalRecordedMove as e:
        _error(f"{item}: move {e.move_number}: {e.reason}")
        return EXIT_REPLAY
    except ValueError as e:
        _error(f"{item}: {e}")
        return EXIT_INPUT

    events = detect_transitions(series, config.window, config.kappa)
    verdict = predict_winner(series) if len(series) else None

    os.makedirs(config.out, exist_ok=True)
    stem = os.path.join(config.out, _stem(item))
    write_outputs(
        stem, series, verdict, events, config.detector, config.formats
    )

    if verdict is not None:
        print(_verdict_line(_stem(item), verdict))
    for e in events:
        print(f"  transition at move {e.move_number}: delta={e.delta:.6g}")
    return EXIT_OK


def expand_inputs(inputs):
    """SGF files named by `inputs`, directories expanded, sorted by path."""
    paths = []
    for item in inputs:
        if not is_url(item) and os.path.isdir(item):
            paths.extend(glob.glob(os.path.join(item, "*.sgf")))
        else:
            paths.append(os.fspath(item))
    return sorted(paths)


def cmd_batch(config):
    """Replay many games and write their verdicts plus `summary.json`."""
    try:
        params = _process_params(config.params)
    except (ParameterError, OSError) as e:
        _error(f"{config.params}: {e}")
        return EXIT_INPUT

    paths = expand_inputs(config.inputs)
    if len(paths) == 0:
        _error("no SGF files found")
        return EXIT_INPUT

    summary = batch_evaluate(paths, params, config.workers, size=config.size)

    os.makedirs(config.out, exist_ok=True)
    formats = tuple(dict.fromkeys(("json",) + tuple(config.formats)))
    stems = _unique_stems([e.label for e in summary.entries])
    for entry, name in zip(summary.entries, stems):
        if entry.verdict is None:
            _error(f"{entry.label}: {entry.error}")
            continue
        events = detect_transitions(entry.series, config.window, config.kappa)
        stem = os.path.join(config.out, name)
        write_outputs(
            stem, entry.series, entry.verdict, events, config.detector, formats
        )
        if config.verbose:
            print(_verdict_line(entry.label, entry.verdict))

    doc = summary.as_dict()
    doc["parameters"] = params.as_dict()
    doc["detector"] = config.detector
    write_atomic(
        os.path.join(config.out, "summary.json"),
        json.dumps(doc, indent=2, ensure_ascii=False) + "\n",
    )

    rate = "n/a" if doc["rate"] is None else f"{summary.rate:.3f}"
    print(
        f"{len(summary.entries)} games: {summary.exact} exact,"
        f" {summary.disagree} disagree, {summary.unknown} unknown,"
        f" {summary.failed} failed; agreement rate {rate}"
    )

    if summary.failed == len(summary.entries):
        kinds = {e.error_kind for e in summary.entries}
        return EXIT_INPUT if kinds == {"input"} else EXIT_REPLAY
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # Usage errors are input errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _formats(text):
    fmts = tuple(f.strip() for f in text.split(",") if f.strip())
    bad = [f for f in fmts if f not in FORMATS]
    if bad or not fmts:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated subset of {','.join(FORMATS)};"
            f" got {text!r}"
        )
    return fmts


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--params", help="key=value parameter file")
    common.add_argument("--out", default=".", help="output directory")
    common.add_argument(
        "--formats",
        type=_formats,
        default=("csv", "json"),
        help="comma-separated subset of csv,json,svg,nc (default csv,json)",
    )
    common.add_argument(
        "--window", type=int, default=20, help="transition detector window"
    )
    common.add_argument(
        "--kappa", type=float, default=6.0, help="transition detector threshold"
    )
    common.add_argument("--size", type=int, help="override the board size")
    common.add_argument("--verbose", action="store_true", help="per-move table")

    parser = _Parser(
        prog="goising",
        description="Strength of each colour in recorded Go games",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser(
        "analyze", parents=[common], help="analyze one game"
    )
    analyze.add_argument("input", help="SGF file or http(s) URL")

    batch = sub.add_parser("batch", parents=[common], help="analyze many games")
    batch.add_argument("inputs", nargs="+", help="directories, SGF files or URLs")
    batch.add_argument(
        "--workers", type=int, default=1, help="number of worker processes"
    )
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        inputs = (args.input,)
    else:
        inputs = tuple(args.inputs)
    try:
        config = RunConfig(
            inputs=inputs,
            params=args.params,
            out=args.out,
            formats=args.formats,
            window=args.window,
            kappa=args.kappa,
            size=args.size,
            workers=getattr(args, "workers", 1),
            verbose=args.verbose,
        )
    except ValueError as e:
        _error(str(e))
        return EXIT_INPUT

    if config.window < 2:
        _error(f"--window must be at least 2; got {config.window}")
        return EXIT_INPUT
    if not config.kappa > 0:
        _error(f"--kappa must be positive; got {config.kappa}")
        return EXIT_INPUT

    if args.command == "analyze":
        return cmd_analyze(config)
    return cmd_batch(config)
