"""Command-line entry point: ``chernsplit <subcommand> ...``.

Exit codes: 0 success, 2 parse or usage error, 3 domain error,
4 verification failure. Results are JSON on stdout or in ``--output``.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from pathlib import Path

from .errors import DomainError, ParseError
from .linkmodel.io import link_from_json, load_link, read_json
from .skein import cs_expectation
from .skein.expectation import NORMALIZATIONS
from .splitting import (
    TheoryLevel,
    normal_order,
    split_inner_product,
    tmym_expectation,
    word_from_json,
)
from .wzwlab.suites import FIXTURES, SUITES, run_suite

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse's exit status, prefix the tool name
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _clean(obj):
    """Replace non-finite floats by None so the output is strict JSON."""
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def render(obj) -> str:
    return json.dumps(_clean(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_word(path: str):
    obj = read_json(path)
    word = word_from_json(obj)
    curves = obj.get("curves")
    if curves is None:
        return word, None
    if not isinstance(curves, dict):
        raise ParseError("field 'curves' must map curve ids to link objects")
    parsed = {}
    for cid, link in curves.items():
        try:
            parsed[cid] = link_from_json(link)
        except ParseError as exc:
            raise ParseError(f"field 'curves.{cid}': {exc}") from None
    return word, parsed


def cmd_invariant(args) -> tuple[dict, int]:
    pd = load_link(args.input)
    return cs_expectation(pd, args.level, args.normalization).to_json(), EXIT_OK


def cmd_tmym(args) -> tuple[dict, int]:
    word, curves = _load_word(args.word)
    t = TheoryLevel("TMYM", args.level, args.m)
    result = tmym_expectation(word, t, curves, args.length_scale, args.normalization)
    return result.to_json(), EXIT_OK


def cmd_algebra(args) -> tuple[dict, int]:
    word, _ = _load_word(args.word)
    ordered, phase = normal_order(word, args.level)
    z = phase.to_complex()
    out = {
        "level": args.level,
        "input": word.to_json(),
        "normal_ordered": ordered.to_json(),
        "phase": {
            "numerator": phase.numerator,
            "denominator": phase.denominator,
            "unit": "2pi",
            "re": z.real,
            "im": z.imag,
        },
    }
    return out, EXIT_OK


def cmd_split(args) -> tuple[dict, int]:
    return split_inner_product(TheoryLevel(args.theory, args.level, args.m)).to_json(), EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    reports = run_suite(args.suite, args.grid, args.seed, args.amplitude, args.level, args.tol, args.fixture)
    residuals = []
    for r in reports:
        for res in r.residuals:
            residuals.append({"suite": r.suite, **res.to_json()})
    converged = all(r.converged for r in reports)
    out = {
        "suite": args.suite,
        "grid": args.grid,
        "fixture": args.fixture,
        "seed": args.seed,
        "amplitude": args.amplitude,
        "level": args.level,
        "residuals": residuals,
        "converged": converged,
    }
    return out, EXIT_OK if converged else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chernsplit", description="CS invariants, TMYM/YM splitting and lattice WZW checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", default=None, help="write JSON here (atomically) instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("invariant", parents=[common], help="CS Wilson-loop expectation of a link")
    s.add_argument("--input", required=True, help="link JSON (braid or pd format)")
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--normalization", choices=NORMALIZATIONS, default="writhe_corrected")
    s.set_defaults(func=cmd_invariant)

    s = sub.add_parser("tmym", parents=[common], help="TMYM loop observable via the level-k/2 CS split")
    s.add_argument("--word", required=True, help="word JSON with entries, intersections, optional curves")
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--m", type=float, required=True, help="topological mass")
    s.add_argument("--length-scale", type=float, default=None)
    s.add_argument("--normalization", choices=NORMALIZATIONS, default="writhe_corrected")
    s.set_defaults(func=cmd_tmym)

    s = sub.add_parser("algebra", parents=[common], help="normal-order a W/T word")
    s.add_argument("--word", required=True)
    s.add_argument("--level", type=int, required=True)
    s.set_defaults(func=cmd_algebra)

    s = sub.add_parser("split", parents=[common], help="inner-product splitting of TMYM or YM")
    s.add_argument("--theory", choices=("TMYM", "YM"), required=True)
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--m", type=float, required=True)
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("verify", parents=[common], help="lattice verification suites")
    s.add_argument("--suite", choices=SUITES + ("all",), required=True)
    s.add_argument("--grid", type=int, default=32)
    s.add_argument("--amplitude", type=float, default=0.3)
    s.add_argument("--seed", type=int, default=None, help="required unless the fixture is constant")
    s.add_argument("--level", type=int, default=2)
    s.add_argument("--tol", type=float, default=None, help="defaults to a per-suite tolerance")
    s.add_argument("--fixture", choices=FIXTURES, default="random")
    s.set_defaults(func=cmd_verify)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify":
        randomized = args.fixture == "random" or args.suite in ("symplectic", "all")
        if randomized and args.seed is None:
            print("chernsplit: error: --seed is required for randomized suites", file=sys.stderr)
            return EXIT_PARSE
    try:
        result, code = args.func(args)
        write_output(render(result), args.output)
    except ParseError as exc:
        print(f"chernsplit: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"chernsplit: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return code


if __name__ == "__main__":
    sys.exit(main())
