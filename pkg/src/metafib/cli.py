"""Command-line front end.

Exit codes: 0 success, 1 a verification or comparison failed, 2 bad usage.
All output is deterministic: the same argument vector always produces
byte-identical text.
"""

from __future__ import annotations

import argparse
import sys

from . import codes, compositions, oeis, sequences, series, trees, verify, words

GF_ORDER_GUARD = 1 << 16


def _emit_pairs(pairs, fmt, out):
    for n, value in pairs:
        if fmt == "plain":
            out.write(f"{value}\n")
        elif fmt == "tsv":
            out.write(f"{n}\t{value}\n")
        else:  # bfile
            out.write(f"{n} {value}\n")


def _emit_table(pairs, fmt, out):
    sep = "\t" if fmt == "tsv" else " "
    for n, value in pairs:
        out.write(f"{n}{sep}{value}\n")


def _cmd_seq(args, out):
    start, stop = args.start, args.to
    if start < 1 or stop < start:
        raise ValueError("need 1 <= from <= to")
    fn = {"a": sequences.a, "d": sequences.d, "p": sequences.p}[args.which]
    pairs = [(n, fn(args.s, n)) for n in range(start, stop + 1)]
    _emit_pairs(pairs, args.format, out)
    return 0


def _cmd_gf(args, out):
    if args.order < 0 or args.order > GF_ORDER_GUARD:
        raise ValueError(f"order must be within 0..{GF_ORDER_GUARD}")
    which = args.which
    if which == "ruler":
        gf = series.gf_ruler(args.order)
    elif which == "D":
        gf = series.gf_Ds_sum(args.s, args.order)
    elif which == "P":
        gf = series.gf_Ps(args.s, args.order)
    else:  # A
        if args.method == "product":
            if args.s == 0:
                raise ValueError("the product form needs s >= 1")
            gf = series.gf_As(args.s, args.order)
        elif args.method == "quotient":
            gf = series.gf_A_from_D(args.s, args.order)
        else:  # auto
            if args.s == 0:
                print(
                    "note: product form needs s >= 1; using the quotient form",
                    file=sys.stderr,
                )
                gf = series.gf_A_from_D(args.s, args.order)
            else:
                gf = series.gf_As(args.s, args.order)
    _emit_table(enumerate(gf.coeffs), args.format, out)
    return 0


def _format_code(code):
    return ",".join(str(l) for l in code)


def _cmd_codes(args, out):
    sub = args.codes_cmd
    if sub == "greedy":
        out.write(_format_code(codes.greedy_tree(args.n, args.height)) + "\n")
    elif sub == "enumerate":
        for code in codes.enumerate_codes(args.n, args.height):
            out.write(_format_code(code) + "\n")
    elif sub == "mtable":
        if args.nmax < 2:
            raise ValueError("nmax must be >= 2")
        heights = range(1, args.nmax)
        for n in range(2, args.nmax + 1):
            row = [str(codes.M(n, h)) for h in heights]
            out.write("\t".join([str(n)] + row) + "\n")
    elif sub == "amax":
        start = max(args.start, 2)
        pairs = [(n, codes.a_max(n)) for n in range(start, args.to + 1)]
        _emit_pairs(pairs, args.format, out)
    elif sub == "bseq":
        start = max(args.start, 1)
        pairs = [(n, codes.b_seq(n)) for n in range(start, args.to + 1)]
        _emit_pairs(pairs, args.format, out)
    return 0


def _cmd_word(args, out):
    which = args.word_cmd
    if which == "d":
        out.write(words.word_D(args.n) + "\n")
    elif which == "e":
        out.write(words.word_E(args.n) + "\n")
    elif which == "stream":
        out.write(words.dword_prefix(args.s, args.length) + "\n")
    elif which == "runs":
        out.write(words.ruler_factorization(args.s, args.terms) + "\n")
    elif which == "morphism":
        out.write(words.morphism_fixed_point(args.length) + "\n")
    return 0


def _cmd_compositions(args, out):
    found = compositions.enumerate_compositions(args.s, args.n)
    for parts in found:
        out.write(f"{args.n} = " + "+".join(str(x) for x in parts) + "\n")
    return 0


def _cmd_tree(args, out):
    out.write(trees.render(args.s, args.n, args.max_width) + "\n")
    return 0


def _cmd_verify(args, out):
    ok = verify.run_all(args.depth, stream=out)
    return 0 if ok else 1


def _cmd_oeis(args, out):
    if args.id is not None:
        role = oeis.ROLE_MAP.get(args.id)
        if role is None:
            known = ", ".join(sorted(oeis.ROLE_MAP))
            raise ValueError(f"unknown sequence id {args.id}; known: {known}")
    else:
        if args.seq is None:
            raise ValueError("need either --id or --seq")
        min_index = 0 if args.seq == "a" else 1
        role = oeis.SequenceRole(
            args.seq, args.s, args.index_delta, args.value_delta,
            min_index - args.index_delta,
        )
    compared, mismatch = oeis.check_bfile(args.bfile, role)
    if mismatch is not None:
        n, file_value, mine = mismatch
        out.write(f"MISMATCH at n={n}: file has {file_value}, computed {mine}\n")
        return 1
    if compared == 0:
        print("warning: no overlapping indices to compare", file=sys.stderr)
    out.write(f"OK: compared {compared} values\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metafib",
        description="Leaf-count sequences of delayed binary forests: "
        "sequences, words, generating functions, compositions, compact codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = {"choices": ["plain", "tsv", "bfile"], "default": "plain"}

    p = sub.add_parser("seq", help="emit a, d, or p values")
    p.add_argument("which", choices=["a", "d", "p"])
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--from", dest="start", type=int, default=1)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--format", **fmt)
    p.set_defaults(run=_cmd_seq)

    p = sub.add_parser("gf", help="emit generating-function coefficients")
    p.add_argument("which", choices=["ruler", "D", "A", "P"])
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--method", choices=["auto", "product", "quotient"],
                   default="auto")
    p.add_argument("--format", **fmt)
    p.set_defaults(run=_cmd_gf)

    p = sub.add_parser("codes", help="compact-code constructions and tables")
    codes_sub = p.add_subparsers(dest="codes_cmd", required=True)
    q = codes_sub.add_parser("greedy")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--height", type=int, required=True)
    q = codes_sub.add_parser("enumerate")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--height", type=int, default=None)
    q = codes_sub.add_parser("mtable")
    q.add_argument("--nmax", type=int, required=True)
    q = codes_sub.add_parser("amax")
    q.add_argument("--from", dest="start", type=int, default=2)
    q.add_argument("--to", type=int, required=True)
    q.add_argument("--format", **fmt)
    q = codes_sub.add_parser("bseq")
    q.add_argument("--from", dest="start", type=int, default=1)
    q.add_argument("--to", type=int, required=True)
    q.add_argument("--format", **fmt)
    p.set_defaults(run=_cmd_codes)

    p = sub.add_parser("word", help="dump 0/1 words")
    word_sub = p.add_subparsers(dest="word_cmd", required=True)
    q = word_sub.add_parser("d")
    q.add_argument("--n", type=int, required=True)
    q = word_sub.add_parser("e")
    q.add_argument("--n", type=int, required=True)
    q = word_sub.add_parser("stream")
    q.add_argument("--s", type=int, default=0)
    q.add_argument("--length", type=int, required=True)
    q = word_sub.add_parser("runs")
    q.add_argument("--s", type=int, default=0)
    q.add_argument("--terms", type=int, required=True)
    q = word_sub.add_parser("morphism")
    q.add_argument("--length", type=int, required=True)
    p.set_defaults(run=_cmd_word)

    p = sub.add_parser("compositions", help="list restricted compositions")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(run=_cmd_compositions)

    p = sub.add_parser("tree", help="draw a forest prefix")
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-width", type=int, default=100)
    p.set_defaults(run=_cmd_tree)

    p = sub.add_parser("verify", help="run every cross-module identity")
    p.add_argument("--depth", choices=["quick", "full"], default="quick")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("oeis", help="compare a b-file against local values")
    p.add_argument("--bfile", required=True)
    p.add_argument("--id", default=None)
    p.add_argument("--seq", choices=["a", "d", "p", "ruler"], default=None)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--index-delta", type=int, default=0)
    p.add_argument("--value-delta", type=int, default=0)
    p.set_defaults(run=_cmd_oeis)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args, sys.stdout)
    except oeis.BFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
