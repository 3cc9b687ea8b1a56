"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 search exhausted or resource limit,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from .braid import BraidError, BraidWord, closure, torus_braid
from .bracket import ResourceError
from .diagram import DiagramError, orient, parse_pd
from .profile import ConsistencyError, invariant_profile
from .surgery import BandError, BandSpec, attach_band

EXIT_OK, EXIT_INPUT, EXIT_EXHAUSTED, EXIT_CONSISTENCY = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(f"{self.prog}: {message}")


def _text_or_file(value):
    if value == "-":
        return sys.stdin.read()
    if os.path.isfile(value):
        with open(value) as fh:
            return fh.read()
    return value


def _add_inputs(p, knot=True):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"),
                   help="standard diagram of T(P,Q): Q-strand closure of (s1..s_{Q-1})^P")
    g.add_argument("--braid", metavar="FILE|WORD", help='braid text such as "4: 1 2 3"')
    g.add_argument("--pd", metavar="FILE", help="PD code file ('-' for stdin)")
    if knot:
        g.add_argument("--knot", metavar="NAME", help="bundled knot (unknot, 3_1, 4_1, 5_1, 5_2, 6_1)")


def _diagram(args):
    if args.torus:
        return closure(torus_braid(*args.torus))
    if args.braid:
        return closure(BraidWord.parse(_text_or_file(args.braid).strip()))
    if args.pd:
        return parse_pd(_text_or_file(args.pd))
    if getattr(args, "knot", None):
        from .knot_table import get
        return get(args.knot).diagram()
    raise InputError("an input is required: --torus P Q, --braid, --pd or --knot")


def _budget(args):
    from .search import SearchBudget

    base = SearchBudget.load(args.config)
    over = {}
    for name in ("path_len", "twists", "max_crossings", "workers", "time_limit_s"):
        v = getattr(args, name, None)
        if v is not None:
            over[name] = v
    if over:
        vals = {k: getattr(base, k) for k in base.__dataclass_fields__}
        vals.update(over)
        base = SearchBudget(**vals)
    return base


def _cmd_invariants(args, out):
    d = _diagram(args)
    od = orient(d)
    if od.component_count != 1:
        raise InputError(f"invariant profiles need a knot; input has {od.component_count} components")
    out.write(invariant_profile(od).render() + "\n")
    return EXIT_OK


def _cmd_pinch(args, out):
    from .pinch import TorusParams, pinch_sequence

    if not args.torus:
        raise InputError("pinch needs --torus P Q")
    seq = pinch_sequence(TorusParams(*args.torus))
    k = seq.steps[0]
    out.write(f"b1 = {seq.b1}\n")
    out.write(f"{k.p} {k.q} {seq.b1} seq={seq.render()}\n")
    return EXIT_OK


def _cmd_table(args, out):
    from .pinch import batson_table, table_lines, table_text

    rows = batson_table(args.p_max, args.q_max)
    out.write(("\n".join(table_lines(rows)) if args.machine else table_text(rows)) + "\n")
    return EXIT_OK


def _cmd_band_apply(args, out):
    if not args.band:
        raise InputError("band apply needs --band")
    od = orient(_diagram(args))
    band = BandSpec.parse(_text_or_file(args.band).strip())
    d, coherence = attach_band(od, band)
    rod = orient(d)
    out.write(f"coherence: {coherence}\n")
    out.write(f"components: {rod.component_count}\n")
    out.write(f"crossings: {d.crossing_count}\n")
    out.write("pd: " + " / ".join(f"X {a} {b} {c} {e}" for a, b, c, e in d.crossings) + "\n")
    if rod.component_count == 1:
        out.write(invariant_profile(rod).render() + "\n")
    return EXIT_OK


def _cmd_band_search(args, out):
    from .knot_table import get
    from .search import search_to_profile

    od = orient(_diagram(args))
    target = get(args.target).profile
    budget = _budget(args)
    rep = search_to_profile(od, target, budget, source="input")
    out.write(f"candidates examined: {rep.examined}\n")
    out.write("stages: " + " ".join(f"{k}={v}" for k, v in rep.stage_counts.items()) + "\n")
    out.write(f"complete: {str(rep.complete).lower()}\n")
    out.write(f"matches: {len(rep.results)}\n")
    for r in rep.results:
        out.write(r.band.render() + "\n")
    if rep.results:
        return EXIT_OK
    out.write(f"deepest stage reached: {rep.deepest_stage() or 'none'}\n")
    return EXIT_EXHAUSTED


def _cmd_certify(args, out):
    from .certify import CERTIFY_BUDGET, certify_t49

    budget = _budget(args) if (args.config or os.environ.get("KNOTBAND_CONFIG")) else CERTIFY_BUDGET
    ok, report = certify_t49(fixture=args.fixture, budget=budget)
    out.write(report)
    if ok:
        return EXIT_OK
    return EXIT_CONSISTENCY if args.fixture else EXIT_EXHAUSTED


def build_parser():
    p = _Parser(prog="knotband", description="Band moves, pinch sequences and knot invariants.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    q = sub.add_parser("invariants", help="invariant profile of a knot")
    _add_inputs(q)
    q.set_defaults(func=_cmd_invariants)

    q = sub.add_parser("pinch", help="pinch sequence and b1 of the torus-knot surface")
    q.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"), required=True)
    q.set_defaults(func=_cmd_pinch)

    q = sub.add_parser("table", help="pinch table over coprime p > q >= 2")
    q.add_argument("--p-max", type=int, default=12)
    q.add_argument("--q-max", type=int, default=12)
    q.add_argument("--machine", action="store_true", help="'p q b1 seq=...' lines")
    q.set_defaults(func=_cmd_table)

    band = sub.add_parser("band", help="band surgery")
    bsub = band.add_subparsers(dest="band_command", parser_class=_Parser)
    q = bsub.add_parser("apply", help="attach one band")
    _add_inputs(q)
    q.add_argument("--band", metavar="FILE|TEXT")
    q.set_defaults(func=_cmd_band_apply)
    q = bsub.add_parser("search", help="search bands reaching a bundled target knot")
    _add_inputs(q, knot=False)
    q.add_argument("--target", default="6_1")
    _add_budget_flags(q)
    q.set_defaults(func=_cmd_band_search)

    q = sub.add_parser("certify-t49", help="certify the single band from T(4,9) to 6_1")
    q.add_argument("--fixture", action="store_true", help="replay the committed band")
    _add_budget_flags(q)
    q.set_defaults(func=_cmd_certify)
    return p


def _add_budget_flags(q):
    q.add_argument("--config", help="budget file of 'key = value' lines (default: $KNOTBAND_CONFIG)")
    q.add_argument("--path-len", dest="path_len", type=int)
    q.add_argument("--twists", type=int)
    q.add_argument("--max-crossings", dest="max_crossings", type=int)
    q.add_argument("--workers", type=int)
    q.add_argument("--time-limit", dest="time_limit_s", type=float)


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not hasattr(args, "func"):
            parser.print_usage(sys.stderr)
            raise InputError("a subcommand is required")
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (BraidError, DiagramError, BandError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())
