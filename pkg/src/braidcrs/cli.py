"""
Command-line entry point: ``braidcrs <verb> -n N -w "<word>" [options]``.

Words are whitespace- or comma-separated signed generator indices, so
``"1 -2 3"`` is σ1 σ2⁻¹ σ3.
"""

from __future__ import annotations

import argparse
import json
import sys

from .centralizer_crs import membership_via_centralizer
from .conjugacy import DEFAULT_MAX_SIZE, TableOverflowError, centralizer_generators, \
    sliding_circuits_set, super_summit_set
from .crs import BOUNDARY, canonical_reduction_system, classify, component_braid, crs_json
from .curves import InvalidCurveError, curve_orbit, parse_curve, parse_multicurve
from .garside import (
    BraidError,
    CanonicalBraid,
    InvalidGeneratorError,
    MalformedWordError,
    StrandCountError,
    parse_braid_word,
)
from .reduction import reduction_catalog
from .render import render_multicurve_svg

EXIT_OK = 0
EXIT_MALFORMED_WORD = 3
EXIT_BAD_GENERATOR = 4
EXIT_BAD_STRAND_COUNT = 5
EXIT_INVALID_CURVE = 6
EXIT_OVERFLOW = 7
EXIT_OTHER = 8

VERBS = ("nf", "classify", "crs", "sss", "sc", "orbit", "simplices", "centralizer", "component",
         "member")


class UsageError(Exception):
    pass


def braid_json(b: CanonicalBraid) -> dict:
    return {
        "n": b.n,
        "inf": b.inf,
        "factors": [[x + 1 for x in p] for p in b.factors],
        "canonical": str(b),
        "word": " ".join(str(x) for x in b.to_word()),
    }


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidcrs",
                                description="Normal forms, summit sets and canonical reduction systems of braids.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("-n", "--strands", type=int, required=True, help="number of strands")
    p.add_argument("-w", "--word", default="", help='signed generator indices, e.g. "1 -2 3"')
    p.add_argument("--curve", help="standard curve as a,b or [a,b]")
    p.add_argument("--multicurve", help="multicurve as {[a,b],[c,d]}")
    p.add_argument("--format", choices=("json", "text", "svg"), default="text")
    p.add_argument("--out", help="write the output to this file instead of stdout")
    p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE,
                   help="cap on the size of conjugacy tables")
    return p


def _table_output(table, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{"braid": str(g), "conjugator": str(table.conjugator(g))} for g in table])
    return table.dump()


def run(args: argparse.Namespace) -> str:
    n = args.strands
    alpha = parse_braid_word(args.word, n)
    fmt = args.format
    if fmt == "svg" and args.verb not in ("crs", "simplices"):
        raise UsageError("svg output is only available for crs and simplices")
    verb = args.verb

    if verb == "nf":
        return json.dumps(braid_json(alpha)) if fmt == "json" else f"{alpha}\n"

    if verb == "classify":
        kind = classify(alpha, args.max_size)
        return json.dumps({"class": kind.value}) if fmt == "json" else f"{kind.value}\n"

    if verb == "crs":
        result = canonical_reduction_system(alpha, args.max_size)
        if fmt == "svg":
            return render_multicurve_svg(result.curves, n)
        if fmt == "json":
            return crs_json(alpha, args.max_size)
        return f"{result.curves}\nconjugator {result.conjugator}\n"

    if verb == "sss":
        return _table_output(super_summit_set(alpha, args.max_size), fmt)

    if verb == "sc":
        return _table_output(sliding_circuits_set(alpha, args.max_size), fmt)

    if verb == "orbit":
        if not args.curve:
            raise UsageError("orbit needs --curve")
        orbit = curve_orbit(parse_curve(args.curve, n), alpha)
        if fmt == "json":
            return json.dumps({"closed": orbit.closed, "curves": [[c.a, c.b] for c in orbit.curves]})
        status = "Closed" if orbit.closed else "HitNonStandard"
        return f"{status} " + " ".join(str(c) for c in orbit.curves) + "\n"

    if verb == "simplices":
        cat = reduction_catalog(alpha)
        if fmt == "svg":
            sets = cat.maximal_multicurves()
            common = frozenset.intersection(*sets) if sets else frozenset()
            return render_multicurve_svg(common, n)
        if fmt == "json":
            return cat.to_json()
        lines = [f"d = {cat.dimension}"]
        lines += ["{" + ",".join(str(c) for c in sorted(m)) + "}" for m in cat.maximal_multicurves()]
        return "\n".join(lines) + "\n"

    if verb == "centralizer":
        gens = centralizer_generators(alpha, args.max_size).generators
        if fmt == "json":
            return json.dumps({"generators": [braid_json(g) for g in gens]})
        return "".join(f"{g}\n" for g in gens)

    if verb == "component":
        if not args.multicurve:
            raise UsageError("component needs --multicurve")
        M = parse_multicurve(args.multicurve, n)
        c = parse_curve(args.curve, n) if args.curve else BOUNDARY
        delta = component_braid(alpha, M, c)
        return json.dumps(braid_json(delta)) if fmt == "json" else f"{delta}\n"

    if verb == "member":
        if not args.curve:
            raise UsageError("member needs --curve")
        v = membership_via_centralizer(alpha, parse_curve(args.curve, n), max_size=args.max_size)
        if fmt == "json":
            return json.dumps({"member": v.member, "reason": v.reason.value, "l": v.l,
                               "witness": str(v.witness) if v.witness is not None else None})
        return f"{'member' if v.member else 'non-member'} ({v.reason.value}, l = {v.l})\n"

    raise UsageError(f"unknown verb {verb}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = run(args)
    except MalformedWordError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED_WORD
    except InvalidGeneratorError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_GENERATOR
    except StrandCountError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_STRAND_COUNT
    except InvalidCurveError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_CURVE
    except TableOverflowError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_OVERFLOW
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BraidError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_OTHER
    if not out.endswith("\n"):
        out += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
