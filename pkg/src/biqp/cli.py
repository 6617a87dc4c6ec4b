"""Command-line interface: ``biqp <subcommand> ...``.

Exit status is 0 on success, 1 when an operation is called outside its
domain (or ``verify`` finds a discrepancy) and 2 on malformed arguments.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import oracle, overlaps, quasiperiods, relations, sturmian
from .errors import DomainError
from .words import BiWord, check_word


def _word(text: str) -> str:
    try:
        return check_word(text, nonempty=True)
    except DomainError as e:
        raise argparse.ArgumentTypeError(f"invalid word {text!r}: {e}") from None


def _biword(text: str) -> BiWord:
    try:
        return BiWord.parse(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(f"invalid biinfinite word {text!r}: {e}") from None


def _directive(text: str) -> sturmian.SturmLang:
    try:
        return sturmian.SturmLang.parse(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(f"invalid directive {text!r}: {e}") from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid length {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"invalid length {text!r}: must be nonnegative")
    return n


def _at_least_one(text: str) -> int:
    n = _positive(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"invalid value {text!r}: must be at least 1")
    return n


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    elif text:
        print(text)


def _show(u: str) -> str:
    return u if u else "ε"


# ---------------------------------------------------------------------------


def cmd_qp_check(args) -> int:
    if args.bi is not None:
        ok = quasiperiods.is_quasiperiod_bi(args.q, args.bi)
        payload = {"word": args.bi.as_dict(), "q": args.q, "quasiperiod": ok}
    else:
        ok = quasiperiods.is_quasiperiod_finite(args.q, args.word)
        payload = {"word": args.word, "q": args.q, "quasiperiod": ok}
    _emit(args, payload, "true" if ok else "false")
    return 0


def cmd_qp_list(args) -> int:
    if args.bi is not None:
        if args.length is None:
            raise DomainError("--length is required with --bi")
        found = sorted(quasiperiods.quasiperiods_of_length(args.bi, args.length))
        payload = {"word": args.bi.as_dict(), "length": args.length, "quasiperiods": found}
    else:
        found = sorted(quasiperiods.quasiperiods_finite(args.word))
        if args.length is not None:
            found = [q for q in found if len(q) == args.length]
        payload = {"word": args.word, "length": args.length, "quasiperiods": found}
    _emit(args, payload, "\n".join(found))
    return 0


def cmd_f_table(args) -> int:
    t = overlaps.f_table(args.q, args.r)
    _emit(args, t.as_dict(), t.format())
    return 0


def cmd_classify(args) -> int:
    c = relations.classify(args.q, args.r)
    t = overlaps.f_table(args.q, args.r)
    payload = {**c.as_dict(), "f_table": t.as_dict()}
    _emit(args, payload, c.tag.value)
    return 0


def cmd_deriv(args) -> int:
    d = quasiperiods.derivated_sequence(args.bi, args.q)
    _emit(args, {"word": args.bi.as_dict(), "q": args.q, **d.as_dict()}, d.text())
    return 0


def cmd_chains(args) -> int:
    chains = quasiperiods.chains_of_length(args.bi, args.length)
    lines = [" ".join(c.members) + (" (cyclic)" if c.cyclic else "") for c in chains]
    payload = {"word": args.bi.as_dict(), "length": args.length, "chains": [c.as_dict() for c in chains]}
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_sturmian(args) -> int:
    lang = args.directive
    base = {"directive": list(lang.directive)}
    if args.sturm_cmd == "qp":
        found = sorted(sturmian.sturmian_quasiperiods(lang, args.length))
        _emit(args, {**base, "length": args.length, "quasiperiods": found, "count": len(found)}, "\n".join(found))
    elif args.sturm_cmd == "bispecial":
        found = sturmian.bispecial_factors(lang, args.max)
        lines = [f"{len(s)} {_show(s)}" for s in found]
        _emit(args, {**base, "max": args.max, "bispecial": found}, "\n".join(lines))
    elif args.sturm_cmd == "rauzy":
        g = sturmian.rauzy_graph(lang, args.length)
        if args.dot and not args.json:
            print(g.to_dot())
        else:
            k, l, m = g.decomposition
            text = "\n".join(
                [f"{a} -> {b} [{c}]" for a, b, c in g.edges]
                + [f"right special: {g.right_special}", f"left special: {g.left_special}", f"k={k} l={l} m={m}"]
            )
            _emit(args, {**base, **g.as_dict()}, text)
    return 0


def cmd_verify(args) -> int:
    cfg = oracle.SweepConfig(max_len=args.max_len)
    reports = oracle.run_all(cfg)
    ok = all(r.ok for r in reports)
    if args.json:
        print(json.dumps({"ok": ok, "config": vars(cfg), "reports": [r.as_dict() for r in reports]}))
    else:
        for r in reports:
            print(r.summary())
            for d in r.discrepancies[:5]:
                print("   ", d)
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON object")

    p = argparse.ArgumentParser(prog="biqp", description="Quasiperiods of finite and biinfinite words.")
    sub = p.add_subparsers(dest="command", required=True)

    def target(sp, required=True):
        g = sp.add_mutually_exclusive_group(required=required)
        g.add_argument("--bi", type=_biword, metavar="LEFT|CENTER|RIGHT", help="eventually periodic biinfinite word")
        g.add_argument("--word", type=_word, help="finite word")

    sp = sub.add_parser("qp-check", parents=[common], help="is q a quasiperiod of the word")
    target(sp)
    sp.add_argument("q", type=_word)
    sp.set_defaults(func=cmd_qp_check)

    sp = sub.add_parser("qp-list", parents=[common], help="list quasiperiods")
    target(sp)
    sp.add_argument("--length", type=_positive)
    sp.set_defaults(func=cmd_qp_list)

    sp = sub.add_parser("f-table", parents=[common], help="relation table of two words")
    sp.add_argument("q", type=_word)
    sp.add_argument("r", type=_word)
    sp.set_defaults(func=cmd_f_table)

    sp = sub.add_parser("classify", parents=[common], help="classify a couple of words")
    sp.add_argument("q", type=_word)
    sp.add_argument("r", type=_word)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("deriv", parents=[common], help="derivated sequence along q")
    sp.add_argument("--bi", type=_biword, required=True, metavar="LEFT|CENTER|RIGHT")
    sp.add_argument("q", type=_word)
    sp.set_defaults(func=cmd_deriv)

    sp = sub.add_parser("chains", parents=[common], help="chains of quasiperiods of one length")
    sp.add_argument("--bi", type=_biword, required=True, metavar="LEFT|CENTER|RIGHT")
    sp.add_argument("--length", type=_positive, required=True)
    sp.set_defaults(func=cmd_chains)

    sp = sub.add_parser("sturmian", help="Sturmian languages")
    sp.add_argument("--directive", type=_directive, required=True, help="comma-separated partial quotients")
    ssub = sp.add_subparsers(dest="sturm_cmd", required=True)
    s2 = ssub.add_parser("qp", parents=[common], help="quasiperiods of one length")
    s2.add_argument("--length", type=_positive, required=True)
    s2 = ssub.add_parser("bispecial", parents=[common], help="bispecial factors")
    s2.add_argument("--max", type=_positive, required=True)
    s2 = ssub.add_parser("rauzy", parents=[common], help="Rauzy graph")
    s2.add_argument("--length", type=_positive, required=True)
    s2.add_argument("--dot", action="store_true", help="Graphviz output")
    sp.set_defaults(func=cmd_sturmian)

    sp = sub.add_parser("verify", parents=[common], help="run the brute-force sweeps")
    sp.add_argument("--max-len", type=_at_least_one, default=oracle.SweepConfig().max_len)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as e:
        print(f"biqp: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
