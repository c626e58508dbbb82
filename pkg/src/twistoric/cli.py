"""Command line driver.

Commands:
  validate   check an input file and report every violated condition
  enumerate  list all normalized sequences for a given n
  analyze    full report for one input sequence
  model      model equations for one index pair
  classify   fiber classification for one index pair

Input files hold a single JSON object {"n": ..., "vectors": [[a, b], ...]}.
Every command writes one JSON document to stdout (or --output) and the same
input always produces byte-identical output.  Exit codes: 0 on success, 1
when the input fails validation or cannot be read, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .errors import (
    BadIndices,
    CapExceeded,
    DegenerateConstants,
    RootCollision,
    RootOrderViolation,
    SequenceValidationError,
    TwistoricError,
)
from .lattice import validate
from .report import DEFAULT_CAP, run_analyze, run_enumerate, run_model

USAGE_ERRORS = (BadIndices, CapExceeded, DegenerateConstants, RootCollision, RootOrderViolation)


class InputDataError(ValueError):
    """The content of an input file is unusable (distinct from bad flags)."""


def _parse_fractions(text: str | None) -> tuple[Fraction, ...] | None:
    if text is None:
        return None
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse rational list {text!r}: {exc}") from exc


def _load_vectors(path: str) -> list[list[int]]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputDataError(f"{path}: {exc}") from exc
    if not isinstance(data, dict) or "vectors" not in data:
        raise InputDataError(f"{path}: expected an object with a 'vectors' key")
    vectors = data["vectors"]
    if "n" in data and data["n"] != len(vectors) - 2:
        raise InputDataError(f"{path}: stated n = {data['n']} but {len(vectors)} vectors given")
    return vectors


def _emit(payload: dict | list, output: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistoric",
        description="Toric surfaces and projective twistor-space models from torus-action data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="validate an input sequence")
    p_validate.add_argument("--input", required=True, help="path to the input JSON file")
    p_validate.add_argument("--output", help="write the verdict here instead of stdout")

    p_enum = sub.add_parser("enumerate", help="enumerate all sequences for n")
    p_enum.add_argument("--n", type=int, required=True, help="number of projective-plane summands")
    p_enum.add_argument("--count-only", action="store_true", help="emit only the count")
    p_enum.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest allowed n")
    p_enum.add_argument("--output", help="write the listing here instead of stdout")

    p_analyze = sub.add_parser("analyze", help="full report for one sequence")
    p_analyze.add_argument("--input", required=True, help="path to the input JSON file")
    p_analyze.add_argument("--roots", help="comma-separated pencil roots for labels 3..k")
    p_analyze.add_argument("--constants", help="comma-separated scale constants c1,c2")
    p_analyze.add_argument("--output", help="write the report here instead of stdout")

    for name in ("model", "classify"):
        p = sub.add_parser(name, help=f"emit the {name} output for one index pair")
        p.add_argument("--input", required=True, help="path to the input JSON file")
        p.add_argument("--i", type=int, required=True, help="first pencil index (1-based)")
        p.add_argument("--j", type=int, required=True, help="second pencil index (1-based)")
        p.add_argument("--roots", help="comma-separated pencil roots for labels 3..k")
        p.add_argument("--constants", help="comma-separated scale constants")
        if name == "model":
            p.add_argument("--full", action="store_true", help="emit the full model chain")
        p.add_argument("--output", help="write the result here instead of stdout")
    return parser


def _dispatch(args: argparse.Namespace) -> tuple[dict | list, int]:
    if args.command == "validate":
        vectors = _load_vectors(args.input)
        try:
            seq = validate(vectors)
        except SequenceValidationError as exc:
            payload = {
                "valid": False,
                "violations": [
                    {"code": v.code, "index": v.index, "message": v.message} for v in exc.violations
                ],
            }
            return payload, 1
        return {"valid": True, "n": seq.n, "vectors": [list(v) for v in seq.vectors]}, 0

    if args.command == "enumerate":
        return run_enumerate(args.n, count_only=args.count_only, cap=args.cap), 0

    if args.command == "analyze":
        vectors = _load_vectors(args.input)
        return (
            run_analyze(
                vectors,
                roots_tail=_parse_fractions(args.roots),
                constants=_parse_fractions(args.constants),
            ),
            0,
        )

    if args.command in ("model", "classify"):
        vectors = _load_vectors(args.input)
        record = run_model(
            vectors,
            args.i,
            args.j,
            roots_tail=_parse_fractions(args.roots),
            constants=_parse_fractions(args.constants),
            full=getattr(args, "full", False),
        )
        if args.command == "classify":
            return {"i": record["i"], "j": record["j"], "fibers": record["fibers"]}, 0
        return record, 0

    raise AssertionError(f"unhandled command {args.command}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = _dispatch(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InputDataError, OSError, SequenceValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TwistoricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(payload, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
