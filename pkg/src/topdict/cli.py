"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 input error, 3 internal invariant
failure. ``TOPDICT_SEED`` overrides the fingerprint seed used by ``build``.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import harness
from .baseline import count, report
from .counters import OpCounters
from .dictionary import ENGINES, Dictionary, FormatError
from .topdag import ConsistencyError
from .toptree import ConstructionError
from .trie import InputError, read_corpus, write_corpus

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
BENCH_HEADER = ("pattern_len", "engine", "comparisons", "clusters_visited", "nanoseconds")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _seed(args) -> int:
    env = os.environ.get("TOPDICT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"TOPDICT_SEED must be an integer, got {env!r}")
    return args.seed


def _pattern(text: str) -> tuple:
    data = os.fsencode(text)
    if b"\n" in data:
        raise InputError("pattern contains the line separator")
    return tuple(data)


def cmd_build(args) -> int:
    strings = read_corpus(args.input)
    d = Dictionary.build(strings, sigma=args.sigma, seed=_seed(args))
    d.save(args.output)
    st = d.stats()
    print(f"strings={st.num_strings} n={st.n} sigma={st.sigma} n_T={st.n_trie} n_TD={st.n_td}")
    return EXIT_OK


def _answer(d: Dictionary, p: tuple, args) -> bytes:
    oc = OpCounters()
    res, fin = d.locate(p, args.engine, oc)
    line = f"matched={res.matched_len} prefix={'true' if res.is_prefix else 'false'}"
    if args.count:
        line += f" count={count(d.dag, fin)}"
    if args.verbose:
        line += " " + " ".join(f"{k}={v}" for k, v in oc.as_dict().items())
    out = [line.encode()]
    if args.report:
        out.extend(bytes(p + s) for s in report(d.dag, fin))
    return b"\n".join(out) + b"\n"


def cmd_query(args) -> int:
    d = Dictionary.load(args.dict)
    if args.batch:
        pats = read_corpus(args.batch)
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            outs = list(pool.map(lambda p: _answer(d, p, args), pats))
    else:
        if args.pattern is None:
            raise _Usage("query needs a pattern or --batch")
        outs = [_answer(d, _pattern(args.pattern), args)]
    for o in outs:
        sys.stdout.buffer.write(o)
    sys.stdout.flush()
    return EXIT_OK


def cmd_stats(args) -> int:
    d = Dictionary.load(args.dict)
    st = d.stats()
    print(f"strings={st.num_strings}")
    print(f"n={st.n}")
    print(f"sigma={st.sigma}")
    print(f"n_T={st.n_trie}")
    print(f"top_tree_clusters={st.n_top_tree}")
    print(f"n_TD={st.n_td}")
    print(f"height={st.height}")
    print(f"seed={d.ctx.seed}")
    return EXIT_OK


def cmd_bench(args) -> int:
    d = Dictionary.load(args.dict)
    pats = read_corpus(args.patterns)
    engines = ENGINES if args.engine == "all" else (args.engine,)
    rows = harness.measure(d, pats, engines, timing=args.measure)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(BENCH_HEADER)
    for r in rows:
        w.writerow([r[k] for k in BENCH_HEADER])
    return EXIT_OK


def _symbol_bytes(strings, sigma: int) -> list:
    if sigma <= 26:
        return [tuple(97 + c for c in s) for s in strings]
    if sigma <= 255:
        # skip the line feed byte
        return [tuple(c if c < 10 else c + 1 for c in s) for s in strings]
    raise InputError("the corpus text format holds at most 255 symbols")


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "parity":
        strings = harness.gen_parity(args.sigma, args.m)
    elif fam == "padded-parity":
        strings = harness.gen_padded_parity(args.sigma, args.m, args.n)
    elif fam == "random":
        strings = harness.gen_random(args.n, args.sigma, args.k, args.seed)
    elif fam == "unary":
        strings = harness.gen_unary(args.n)
    else:
        strings = harness.gen_repetitive(args.n, args.period, args.seed, args.sigma)
    strings = _symbol_bytes(strings, args.sigma)
    if args.output == "-":
        sys.stdout.buffer.write(b"".join(bytes(s) + b"\n" for s in strings))
    else:
        write_corpus(args.output, strings)
    return EXIT_OK


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="topdict", description="Compressed string dictionary over a top DAG.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="build a dictionary file from a corpus")
    b.add_argument("input")
    b.add_argument("output")
    b.add_argument("--sigma", type=int, default=None, help="alphabet size (default: max byte + 1)")
    b.add_argument("--seed", type=int, default=0, help="fingerprint seed")
    b.set_defaults(func=cmd_build)

    q = sub.add_parser("query", help="prefix search")
    q.add_argument("dict")
    q.add_argument("pattern", nargs="?")
    q.add_argument("--engine", choices=ENGINES, default="auto")
    q.add_argument("--count", action="store_true")
    q.add_argument("--report", action="store_true")
    q.add_argument("--verbose", action="store_true", help="print operation counters")
    q.add_argument("--batch", help="file with one pattern per line")
    q.add_argument("--jobs", type=int, default=4)
    q.set_defaults(func=cmd_query)

    s = sub.add_parser("stats", help="print dictionary statistics")
    s.add_argument("dict")
    s.set_defaults(func=cmd_stats)

    be = sub.add_parser("bench", help="per-pattern counters as CSV")
    be.add_argument("dict")
    be.add_argument("patterns")
    be.add_argument("--engine", choices=ENGINES + ("all",), default="all")
    be.add_argument("--measure", action="store_true", help="record wall time per query")
    be.set_defaults(func=cmd_bench)

    g = sub.add_parser("gen", help="generate a corpus")
    g.add_argument("family", choices=("parity", "padded-parity", "random", "unary", "repetitive"))
    g.add_argument("-o", "--output", default="-")
    g.add_argument("--sigma", type=int, default=2)
    g.add_argument("--m", type=int, default=8)
    g.add_argument("--n", type=int, default=1024)
    g.add_argument("--k", type=int, default=16)
    g.add_argument("--period", type=int, default=7)
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as e:
        print(f"topdict: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, InputError, FormatError) as e:
        print(f"topdict: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (ConsistencyError, ConstructionError, AssertionError) as e:
        print(f"topdict: internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
