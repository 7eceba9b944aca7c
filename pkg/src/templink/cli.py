"""Command-line surface: linking, crossings, censuses and verification runs.

Exit codes: 0 on success (for ``verify``: all pairs negative), 1 when a
verification finds a non-negative pair, 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import census
from .crossing import enumerate_cuts, self_crossing, crossing_number
from .kneading import Triple, is_admissible, kneading
from .linking import homology_order, template_linking
from .words import CyclicWord, canonicalize

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_word(text: str) -> CyclicWord:
    root, _ = canonicalize(text)  # powers code the same orbit as their root
    return root


def _triple(args) -> Triple:
    return Triple(args.p, args.q, args.r)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _pair_reports_payload(t: Triple, reports, elapsed_s: float) -> dict:
    worst = max((r.lk for r in reports), default=Fraction(0))
    return {
        "p": t.p,
        "q": t.q,
        "r": t.r,
        "elapsed_s": elapsed_s,
        "pairs": len(reports),
        "violations": sum(not r.negative for r in reports),
        "worst": _fmt_rational(worst),
        "reports": [r.as_dict() for r in reports],
    }


def _render_pair_reports(t: Triple, reports, fmt: str, elapsed_s: float = 0.0) -> str:
    if fmt == "csv":
        return census.reports_to_csv(reports)
    if fmt == "json":
        return json.dumps(_pair_reports_payload(t, reports, elapsed_s), indent=2) + "\n"
    lines = [f"{'word1':<20} {'word2':<20} {'cr':>4} {'lk':>10} negative"]
    for r in reports:
        lines.append(
            f"{r.word1:<20} {r.word2:<20} {r.cr:>4} {_fmt_rational(r.lk):>10} {str(r.negative).lower()}"
        )
    return "\n".join(lines) + "\n"


def _cmd_lk(args) -> int:
    t = _triple(args)
    w1, w2 = _parse_word(args.word1), _parse_word(args.word2)
    print(_fmt_rational(template_linking(t, w1, w2)))
    return EXIT_OK


def _cmd_cr(args) -> int:
    w1, w2 = _parse_word(args.word1), _parse_word(args.word2)
    print(self_crossing(w1) if w1 == w2 else crossing_number(w1, w2))
    return EXIT_OK


def _cmd_admissible(args) -> int:
    k = kneading(_triple(args))
    for text in args.words:
        w = _parse_word(text)
        print(f"{w} {str(is_admissible(w, k)).lower()}")
    return EXIT_OK


def _word_list_output(words, fmt: str, out) -> None:
    if fmt == "json":
        _emit(json.dumps([w.word for w in words], indent=2) + "\n", out)
    elif fmt == "csv":
        _emit("word\n" + "".join(f"{w.word}\n" for w in words), out)
    else:
        _emit("".join(f"{w.word}\n" for w in words), out)


def _cmd_enumerate(args) -> int:
    words = census.enumerate_admissible(_triple(args), args.max_len)
    _word_list_output(words, args.format, args.out)
    return EXIT_OK


def _cmd_extremal(args) -> int:
    words = census.extremal_orbits(_triple(args))
    _word_list_output(words, args.format, args.out)
    return EXIT_OK


def _cmd_cuts(args) -> int:
    w = _parse_word(args.word)
    cuts = enumerate_cuts(w)
    if args.format == "json":
        _emit(
            json.dumps(
                [{"u": c.u, "v": c.v, "rotation": c.rotation, "split": c.split} for c in cuts],
                indent=2,
            )
            + "\n",
            args.out,
        )
    else:
        _emit("".join(f"{c.u}|{c.v} (rotation {c.rotation}, split {c.split})\n" for c in cuts), args.out)
    return EXIT_OK


def _cmd_table(args) -> int:
    k = kneading(_triple(args))
    for name in ("u_L", "u_R", "v_L", "v_R"):
        print(f"{name} = {getattr(k, name)}")
    return EXIT_OK


def _cmd_homology(args) -> int:
    print(homology_order(args.orders))
    return EXIT_OK


def _verify_single(args) -> int:
    t = _triple(args)
    if args.words:
        words = [_parse_word(w) for w in args.words]
        seen: list[CyclicWord] = []
        for w in words:
            if w not in seen:
                seen.append(w)
        words = seen
    else:
        words = census.extremal_orbits(t)
    start = time.perf_counter()
    reports = census.verify_pairs(t, words, include_self=args.self)
    elapsed = time.perf_counter() - start
    _emit(_render_pair_reports(t, reports, args.format, elapsed_s=elapsed), args.out)
    bad = [r for r in reports if not r.negative]
    if bad:
        for r in bad:
            print(
                f"violation: lk({r.word1},{r.word2}) = {_fmt_rational(r.lk)} >= 0",
                file=sys.stderr,
            )
        return EXIT_VIOLATION
    return EXIT_OK


def _verify_over_range(args) -> int:
    summary = census.verify_range(
        args.p_max, args.q_max, args.r_max, include_p2=not args.no_p2, jobs=args.jobs
    )
    if args.format == "json":
        payload = {
            "triples": [
                {
                    "p": s.p,
                    "q": s.q,
                    "r": s.r,
                    "words": s.n_words,
                    "pairs": s.n_pairs,
                    "violations": len(s.violations),
                    "worst": _fmt_rational(s.worst),
                    "worst_pair": list(s.worst_pair),
                    "elapsed_s": s.elapsed_s,
                }
                for s in summary.triples
            ],
            "total_pairs": summary.total_pairs,
            "total_violations": summary.total_violations,
            "elapsed_s": summary.elapsed_s,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    elif args.format == "csv":
        lines = ["p,q,r,words,pairs,violations,worst_num,worst_den,elapsed_s"]
        for s in summary.triples:
            lines.append(
                f"{s.p},{s.q},{s.r},{s.n_words},{s.n_pairs},{len(s.violations)},"
                f"{s.worst.numerator},{s.worst.denominator},{s.elapsed_s:.3f}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = []
        for s in summary.triples:
            lines.append(
                f"({s.p},{s.q},{s.r}): {s.n_words} orbits, {s.n_pairs} pairs, "
                f"{len(s.violations)} violations, worst lk = {_fmt_rational(s.worst)} "
                f"[{s.worst_pair[0]}, {s.worst_pair[1]}] ({s.elapsed_s:.2f}s)"
            )
        lines.append(
            f"total: {summary.total_pairs} pairs, {summary.total_violations} violations "
            f"in {summary.elapsed_s:.2f}s"
        )
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def _cmd_verify(args) -> int:
    range_mode = args.p_max is not None
    single_mode = args.p is not None
    if range_mode == single_mode:
        raise ValueError("verify needs either --p/--q/--r or --p-max/--q-max/--r-max")
    if range_mode:
        if args.q_max is None or args.r_max is None:
            raise ValueError("range mode needs --p-max, --q-max and --r-max")
        if args.words:
            raise ValueError("explicit words only make sense with a single triple")
        return _verify_over_range(args)
    if args.q is None or args.r is None:
        raise ValueError("single-triple mode needs --p, --q and --r")
    return _verify_single(args)


def _add_triple_flags(sp, required: bool = True) -> None:
    sp.add_argument("--p", type=int, required=required)
    sp.add_argument("--q", type=int, required=required)
    sp.add_argument("--r", type=int, required=required)


def _add_output_flags(sp) -> None:
    sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sp.add_argument("--out", default=None, help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="templink",
        description="Exact crossing and linking numbers of two-ribbon template orbits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("lk", help="linking number of two orbits on the (p,q,r)-template")
    _add_triple_flags(sp)
    sp.add_argument("word1")
    sp.add_argument("word2")
    sp.set_defaults(func=_cmd_lk)

    sp = sub.add_parser("cr", help="crossing number of two orbit words (template-free)")
    sp.add_argument("word1")
    sp.add_argument("word2")
    sp.set_defaults(func=_cmd_cr)

    sp = sub.add_parser("admissible", help="test words against the kneading bounds")
    _add_triple_flags(sp)
    sp.add_argument("words", nargs="+")
    sp.set_defaults(func=_cmd_admissible)

    sp = sub.add_parser("enumerate", help="all admissible orbits up to a length bound")
    _add_triple_flags(sp)
    sp.add_argument("--max-len", type=int, required=True)
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("extremal", help="the extremal orbits of the (p,q,r)-template")
    _add_triple_flags(sp)
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_extremal)

    sp = sub.add_parser("cuts", help="all cuts of a cyclic word (template-free)")
    sp.add_argument("word")
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_cuts)

    sp = sub.add_parser(
        "verify",
        help="check negativity of all orbit pairs (extremal by default)",
    )
    _add_triple_flags(sp, required=False)
    sp.add_argument("--p-max", type=int, default=None)
    sp.add_argument("--q-max", type=int, default=None)
    sp.add_argument("--r-max", type=int, default=None)
    sp.add_argument("--no-p2", action="store_true", help="skip the p = 2 families in range mode")
    sp.add_argument("--self", action=argparse.BooleanOptionalAction, default=True)
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    sp.add_argument("words", nargs="*", help="explicit orbit words (single-triple mode)")
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("table", help="print the four kneading sequences of (p,q,r)")
    _add_triple_flags(sp)
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser("homology", help="order of H_1 for an n-conic sphere, n >= 3")
    sp.add_argument("orders", type=int, nargs="+")
    sp.set_defaults(func=_cmd_homology)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
