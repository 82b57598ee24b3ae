"""Command line front end.

    adoinv --knot trefoil --color 2 --method both
    adoinv --braid "1 -2 1 -2" --strands 3 --color 3 --format json
    adoinv --braid "s1^3" --color 2 --lambda 0.5

Exit codes: 0 ok, 2 parse error, 3 degenerate specialisation, 4 the two
pipelines disagree.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .ado import KNOTS, ado_direct, ado_topological, specialize_invariant
from .coeffring import DegenerateSpecialization, scalar_to_json
from .verma import BraidWord, writhe

EXIT_OK, EXIT_PARSE, EXIT_DEGENERATE, EXIT_MISMATCH = 0, 2, 3, 4

_TOKEN = re.compile(r"^(?:(-?\d+)|s(\d+)(?:\^(-?\d+))?)$")


class BraidParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"token {position}: {message}")
        self.position = position


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse "1 -2 1 -2" or "s1^3 s2^-1" (tokens may be mixed)."""
    letters: list[int] = []
    for pos, tok in enumerate(text.replace(",", " ").split(), start=1):
        m = _TOKEN.match(tok)
        if not m:
            raise BraidParseError(f"malformed token {tok!r}", pos)
        if m.group(1) is not None:
            g, power = int(m.group(1)), 1
        else:
            g, power = int(m.group(2)), int(m.group(3) or 1)
        if g == 0:
            raise BraidParseError("generator index 0", pos)
        letters.extend([g if power > 0 else -g] * abs(power))
        if strands is not None and abs(g) >= strands:
            raise BraidParseError(f"generator {abs(g)} needs more than {strands} strands", pos)
    if strands is None:
        strands = max((abs(x) for x in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def parse_lambda(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise ValueError(f"cannot read lambda from {text!r}") from None


@dataclass
class RunConfig:
    word: BraidWord
    N: int
    method: str = "direct"
    lam: complex | None = None
    fmt: str = "text"
    label: str | None = None


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    results = {}
    if cfg.method in ("direct", "both"):
        results["direct"] = ado_direct(cfg.word, cfg.N)
    if cfg.method in ("topological", "both"):
        results["topological"] = ado_topological(cfg.word, cfg.N)
    first = next(iter(results.values()))
    equal = None
    if len(results) == 2:
        equal = results["direct"].value == results["topological"].value

    numeric = None
    status = EXIT_OK
    if cfg.lam is not None:
        try:
            numeric = specialize_invariant(first, cfg.lam)
        except DegenerateSpecialization as exc:
            print(f"error: {exc}", file=sys.stderr)
            status = EXIT_DEGENERATE
    if equal is False:
        status = EXIT_MISMATCH

    if cfg.fmt == "json":
        payload = {
            "n": cfg.word.strands,
            "N": cfg.N,
            "writhe": writhe(cfg.word),
            "method": cfg.method,
            "value": scalar_to_json(first.value),
            "tExp": first.t_exp,
        }
        if equal is not None:
            payload["equal"] = equal
            payload["topological"] = scalar_to_json(results["topological"].value)
        if numeric is not None:
            payload["lambda"] = [cfg.lam.real, cfg.lam.imag]
            payload["numeric"] = [numeric.real, numeric.imag]
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        name = cfg.label or str(cfg.word)
        for method, r in results.items():
            out.write(f"{name}  N={cfg.N}  {method}: {r.value}\n")
        if equal is not None:
            out.write(f"equal: {str(equal).lower()}\n")
        if numeric is not None:
            out.write(f"lambda={cfg.lam}: {numeric.real:.12g} {numeric.imag:+.12g}i\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="adoinv", description="Coloured Alexander invariants of braid closures.")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--braid", help='braid word, e.g. "1 -2 1 -2" or "s1^3"')
    src.add_argument("--knot", choices=sorted(KNOTS))
    p.add_argument("--strands", type=int, help="number of strands (default: inferred)")
    p.add_argument("--color", type=int, default=2, help="colour N (root of unity of order 2N)")
    p.add_argument("--method", choices=("direct", "topological", "both"), default="direct")
    p.add_argument("--lambda", dest="lam", help='evaluate at lambda, e.g. "0.5" or "0.3+0.1i"')
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    p.add_argument("--max-color", type=int, default=5)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        if not 2 <= args.color <= args.max_color:
            raise ValueError(f"colour must lie in 2..{args.max_color}")
        if args.knot:
            word, label = KNOTS[args.knot], args.knot
            if args.strands is not None and args.strands != word.strands:
                word = word.extended(args.strands)
        else:
            word, label = parse_braid(args.braid, args.strands), None
        lam = parse_lambda(args.lam) if args.lam is not None else None
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return run(RunConfig(word, args.color, args.method, lam, args.fmt, label))


if __name__ == "__main__":
    sys.exit(main())
