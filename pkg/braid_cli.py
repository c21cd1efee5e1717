#!/usr/bin/env python3
"""
Braid Centralizer - Command Line

Normal forms, inverses, sliding circuits, ultra summit set graphs and
centralizer generators for braids given as words, plus the genericity
experiment.

Usage:
    python braid_cli.py nf "3: 1 2 1"
    python braid_cli.py centralizer "3: 1 1" --format json
    python braid_cli.py uss "3: 1 2 2 1" --out graph.json
    python braid_cli.py experiment --n 4 --lengths 4,8 --trials 50 --seed 7

Exit status: 0 on success, 1 for invalid input, 2 when a cap is exceeded.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

# Add scripts to path
sys.path.append(str(Path(__file__).parent / "scripts"))
from utils.centralizer import centralizer_generators, centralizer_to_json
from utils.conjugacy import slide_to_circuit
from utils.errors import CapExceededError, InvalidBraidError, OracleBoundError
from utils.genericity import (
    DEFAULT_LENGTHS,
    INDEPENDENT,
    SAMPLERS,
    report_to_csv,
    report_to_json,
    run_experiment,
)
from utils.normal_form import format_normal_form, invert, normalize, to_word
from utils.uss_graph import (
    VERTEX_CAP,
    build_uss_graph,
    check_minimal_uss,
    cycling_orbits,
    graph_to_json,
    normal_form_to_json,
)
from utils.words import format_braid_word, parse_braid

logger = logging.getLogger("braid_cli")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAP = 2

BRAID_VERBS = ("nf", "inv", "sc", "uss", "centralizer")


def parse_lengths(text):
    try:
        lengths = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected comma-separated integers, got {text!r}")
    if not lengths or any(l < 1 for l in lengths):
        raise argparse.ArgumentTypeError("Lengths must be positive integers")
    return lengths


def build_parser():
    parser = argparse.ArgumentParser(
        description="Garside normal forms and centralizers of braids"
    )
    parser.add_argument("verb", choices=BRAID_VERBS + ("experiment",))
    parser.add_argument("braid", nargs="?", help='braid word such as "3: 1 -2 D"')
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--out", type=Path, help="write machine-readable output here")
    parser.add_argument("--cap", type=int, default=VERTEX_CAP, help="vertex cap for graphs")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--n", type=int, default=4, help="strands for the experiment")
    parser.add_argument("--lengths", type=parse_lengths, default=list(DEFAULT_LENGTHS))
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument(
        "--sampler", choices=SAMPLERS, default=INDEPENDENT,
        help="left-weighted reaches long lengths in small B_n that independent draws cannot",
    )
    parser.add_argument("--verbose", action="store_true")
    return parser


def _emit(text, out=None):
    if out is None:
        print(text)
    else:
        out.write_text(text + "\n")


def _dump(obj):
    return json.dumps(obj, indent=2)


def run_nf(x, args):
    if args.format == "json":
        return _dump({
            "n": x.n,
            **normal_form_to_json(x),
            "text": format_normal_form(x),
            "word": format_braid_word(to_word(x)),
        })
    return format_normal_form(x)


def run_inv(x, args):
    inverse = invert(x)
    if args.format == "json":
        return _dump({
            "n": x.n,
            "input": {"inf": x.inf, "sup": x.sup, "length": x.length},
            **normal_form_to_json(inverse),
            "text": format_normal_form(inverse),
        })
    return "\n".join([
        f"input: inf={x.inf} sup={x.sup} length={x.length}",
        format_normal_form(inverse),
    ])


def run_sc(x, args):
    step = slide_to_circuit(x)
    if args.format == "json":
        return _dump({
            "n": x.n,
            "representative": format_normal_form(step.element),
            "conjugator": format_normal_form(step.conjugator),
        })
    return "\n".join([
        f"representative: {format_normal_form(step.element)}",
        f"conjugator: {format_normal_form(step.conjugator)}",
    ])


def run_uss(x, args):
    graph = build_uss_graph(x, vertex_cap=args.cap)
    orbits = cycling_orbits(graph)
    base = graph.base_element
    minimal = check_minimal_uss(base)
    summary = (
        f"vertices={len(graph.vertices)} arrows={len(graph.arrows)} "
        f"orbits={len(orbits)} minimal={'true' if minimal else 'false'}"
    )
    exported = _dump(graph_to_json(graph))
    if args.out is not None:
        args.out.write_text(exported + "\n")
        return summary
    if args.format == "json":
        print(summary, file=sys.stderr)
        return exported
    return summary


def run_centralizer(x, args):
    output = centralizer_generators(x, vertex_cap=args.cap)
    if args.format == "json":
        return _dump(centralizer_to_json(output))
    lines = [
        f"case: {output.case_tag}",
        f"k: {output.k}",
        f"uss_size: {output.uss_size}",
        f"conjugator: {format_normal_form(output.conjugator)}",
        "generators:",
    ]
    lines.extend(f"  {format_normal_form(g)}" for g in output.generators)
    return "\n".join(lines)


def run_experiment_verb(args):
    if args.trials < 1:
        raise InvalidBraidError(f"Need at least one trial, got {args.trials}")
    report = run_experiment(
        n=args.n,
        lengths=args.lengths,
        trials=args.trials,
        seed=args.seed,
        workers=args.workers,
        vertex_cap=args.cap,
        progress=args.verbose,
        method=args.sampler,
    )
    if args.format == "json":
        return _dump(report_to_json(report))
    return report_to_csv(report).rstrip("\n")


HANDLERS = {
    "nf": run_nf,
    "inv": run_inv,
    "sc": run_sc,
    "uss": run_uss,
    "centralizer": run_centralizer,
}


def dispatch(args):
    """Run one command; returns the exit status."""
    logger.debug("Running %s", args.verb)
    try:
        if args.verb == "experiment":
            text = run_experiment_verb(args)
            out = args.out
        else:
            if args.braid is None:
                raise InvalidBraidError(f"Verb {args.verb!r} needs a braid argument")
            x = normalize(parse_braid(args.braid))
            text = HANDLERS[args.verb](x, args)
            out = args.out if args.verb != "uss" else None
    except (InvalidBraidError, OracleBoundError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceededError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_CAP
    _emit(text, out)
    return EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    return dispatch(args)


if __name__ == "__main__":
    sys.exit(main())
