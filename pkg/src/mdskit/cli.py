"""Command line front end.

Reports are deterministic `key = value` lines on stdout.  Positions,
blocks, and move serializations are 1-based on the command line; the
library is 0-based throughout.  Exit status: 0 on success, 1 when a
well-formed input fails a verification (not MDS, spectra disagree,
classification contradicted), 2 on usage or input errors.
"""

import argparse
import os
import sys
import warnings

from .codes import Code, format_code, is_mds, information_set_check, read_code, write_code
from .constructions import (
    cyclic_mols,
    doubly_extended_rs,
    extended_rs_code,
    mols_to_code,
    repetition_code,
    rs_code,
    sum_zero_code,
    universe_code,
)
from .errors import (
    CodeFileError,
    MdskitError,
    NotMds,
    OutOfStatedRegime,
    SearchSpaceTooLarge,
    TheoremViolation,
    ZeroWordAbsent,
)
from .galois import Field
from .search import (
    SearchSpec,
    enumerate_mds,
    verify_bounds,
    verify_distribution,
    verify_spectrum_theorems,
)
from .spectra import (
    PartitionSpec,
    distance_distribution_from,
    partition_distance_enumerator,
    partition_weight_enumerator_bruteforce,
    partition_weight_enumerator_formula,
    weight_distribution_bruteforce,
    weight_distribution_formula,
    weight_spectrum,
)
from .transforms import classify_binary, format_move, normalize_to_zero, residual, ResidualSpec


def _int_list(text):
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _block_list(text):
    """'1,2/3,4' -> [[1, 2], [3, 4]] (still 1-based)."""
    return [_int_list(part) for part in text.split("/")]


def _format_set(values):
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def _bool(value):
    return "true" if value else "false"


def _positions_from_cli(raw):
    """1-based CLI positions to 0-based, preserving order."""
    return [p - 1 for p in raw]


def _load(path):
    if not os.path.exists(path):
        raise CodeFileError(f"no such file: {path}")
    return read_code(path)


def _emit_code(code, out):
    """Write to `out` when given (and report it), else print the file text."""
    if out:
        write_code(code, out)
        report = is_mds(code)
        print(f"q = {code.q}")
        print(f"n = {code.n}")
        print(f"k = {code.k}")
        if code.k > 0:
            print(f"d = {report.d}")
        print(f"out = {out}")
    else:
        sys.stdout.write(format_code(code))


# ---------------------------------------------------------------- commands

def _cmd_construct(args):
    fam = args.family
    if fam == "repetition":
        _need(args, "n", "q")
        code = repetition_code(args.n, args.q)
    elif fam == "universe":
        _need(args, "k", "q")
        code = universe_code(args.k, args.q)
    elif fam == "sum-zero":
        _need(args, "k", "q")
        code = sum_zero_code(args.k, Field(args.q))
    elif fam == "rs":
        _need(args, "k", "q")
        fieldobj = Field(args.q)
        points = args.points if args.points is not None else list(fieldobj.elements)
        code = rs_code(fieldobj, args.k, points)
    elif fam == "ext-rs":
        _need(args, "k", "q")
        code = extended_rs_code(Field(args.q), args.k)
    elif fam == "dx-rs":
        _need(args, "q")
        code = doubly_extended_rs(Field(args.q))
    elif fam == "mols":
        _need(args, "p")
        code = mols_to_code(cyclic_mols(args.p))
    else:
        raise MdskitError(f"unknown family {fam!r}")
    _emit_code(code, args.out)
    return 0


def _need(args, *names):
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise MdskitError(f"family {args.family!r} needs {' '.join(missing)}")


def _cmd_verify(args):
    code = _load(args.file)
    report = is_mds(code)
    print(f"q = {code.q}")
    print(f"n = {code.n}")
    print(f"k = {code.k}")
    print(f"d = {report.d}")
    print(f"singleton_bound = {report.singleton_bound}")
    print(f"is_mds = {_bool(report.is_mds)}")
    ok = report.is_mds
    if args.information_set is not None:
        positions = _positions_from_cli(args.information_set)
        good = information_set_check(code, positions)
        print(f"information_set = {_bool(good)}")
        ok = ok and good
    return 0 if ok else 1


def _require_mds_with_zero(code):
    report = is_mds(code)
    if not report.is_mds:
        raise NotMds(f"d={report.d} < {report.singleton_bound}")
    if not code.contains_zero():
        raise ZeroWordAbsent("code does not contain the zero word; run normalize first")
    return report


def _cmd_spectrum(args):
    code = _load(args.file)
    report = _require_mds_with_zero(code)
    brute = weight_distribution_bruteforce(code)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OutOfStatedRegime)
        closed = weight_distribution_formula(code.n, code.k, code.q)
    print(f"q = {code.q}")
    print(f"n = {code.n}")
    print(f"k = {code.k}")
    print(f"d = {report.d}")
    print(f"total = {brute.total()}")
    print(f"W = {_format_set(weight_spectrum(code))}")
    for w in sorted(brute.spectrum()):
        print(f"E({w}) = {brute[w]}")
    print(f"regime = {'stated' if code.q >= code.k else 'empirical'}")
    match = brute == closed
    print(f"match = {_bool(match)}")
    return 0 if match else 1


def _cmd_pwe(args):
    code = _load(args.file)
    report = _require_mds_with_zero(code)
    blocks = [_positions_from_cli(b) for b in args.partition]
    spec = PartitionSpec(code.n, blocks)
    profile = tuple(args.profile)
    brute = partition_weight_enumerator_bruteforce(code, spec, profile)
    closed = partition_weight_enumerator_formula(code.n, code.k, code.q, spec, profile)
    print(f"q = {code.q}")
    print(f"n = {code.n}")
    print(f"k = {code.k}")
    print(f"d = {report.d}")
    partition_echo = "/".join(",".join(str(p + 1) for p in sorted(b)) for b in blocks)
    print(f"partition = {partition_echo}")
    print(f"profile = {','.join(str(w) for w in profile)}")
    print(f"w = {sum(profile)}")
    print(f"bruteforce = {brute}")
    print(f"formula = {closed}")
    match = brute == closed
    print(f"match = {_bool(match)}")
    return 0 if match else 1


def _cmd_distances(args):
    code = _load(args.file)
    report = is_mds(code)
    if not report.is_mds:
        raise NotMds(f"d={report.d} < {report.singleton_bound}")
    center = tuple(args.center) if args.center else min(code.words)
    dist = distance_distribution_from(code, center)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OutOfStatedRegime)
        closed = weight_distribution_formula(code.n, code.k, code.q)
    print(f"q = {code.q}")
    print(f"n = {code.n}")
    print(f"k = {code.k}")
    print(f"d = {report.d}")
    print(f"center = {' '.join(str(s) for s in center)}")
    for w in sorted(dist.counts):
        print(f"D({w}) = {dist[w]}")
    match = dist == closed
    print(f"match = {_bool(match)}")
    return 0 if match else 1


def _cmd_residual(args):
    code = _load(args.file)
    positions = _positions_from_cli(args.positions)
    values = tuple(args.values)
    spec = ResidualSpec(tuple(positions), values)
    out = residual(code, spec)
    _emit_code(out, args.out)
    return 0


def _cmd_normalize(args):
    code = _load(args.file)
    word = tuple(args.word) if args.word else None
    normalized, moves = normalize_to_zero(code, word)
    write_code(normalized, args.out)
    print(f"q = {code.q}")
    print(f"n = {code.n}")
    print(f"k = {code.k}")
    print(f"moves = {len(moves)}")
    for move in moves:
        print(f"move = {format_move(move)}")
    print(f"out = {args.out}")
    return 0


def _cmd_classify_binary(args):
    code = _load(args.file)
    result = classify_binary(code)
    print(f"q = {code.q}")
    print(f"n = {code.n}")
    print(f"k = {code.k}")
    print(f"kind = {result.kind.value}")
    print(f"moves = {len(result.moves)}")
    for move in result.moves:
        print(f"move = {format_move(move)}")
    return 0


def _search_limits(args):
    max_words = 2 ** 16
    env = os.environ.get("MDSKIT_MAX_SEARCH")
    if env:
        max_words = int(env)
    if getattr(args, "max_words", None) is not None:
        max_words = args.max_words
    max_length = args.max_length if getattr(args, "max_length", None) is not None else 12
    return max_words, max_length


def _cmd_search(args):
    max_words, max_length = _search_limits(args)
    spec = SearchSpec(args.n, args.k, args.q,
                      require_zero=args.require_zero,
                      mode=args.mode,
                      limit=args.limit,
                      max_words=max_words,
                      max_length=max_length,
                      max_nodes=args.max_nodes)
    result = enumerate_mds(spec)
    print(f"q = {args.q}")
    print(f"n = {args.n}")
    print(f"k = {args.k}")
    print(f"d = {args.n - args.k + 1}")
    print(f"require_zero = {_bool(args.require_zero)}")
    print(f"mode = {args.mode}")
    if args.mode == "exists":
        print(f"exists = {_bool(result.count > 0)}")
    else:
        print(f"count = {result.count}")
    print(f"complete = {_bool(result.complete)}")
    if args.mode == "collect" and args.emit_codes:
        os.makedirs(args.emit_codes, exist_ok=True)
        for idx, code in enumerate(result.codes, start=1):
            path = os.path.join(args.emit_codes, f"code-{idx:04d}.txt")
            write_code(code, path)
            print(f"code[{idx}] = {path}")
    return 0


def _admissible(n, k, q):
    if k > 1 and n > q + k - 1:
        return False
    if q <= k and n > k + 1:
        return False
    return True


def _cmd_check_theorems(args):
    max_words, max_length = _search_limits(args)
    q, max_n = args.q, args.max_n
    print(f"q = {q}")
    print(f"max_n = {max_n}")
    idx = 0
    failures = 0

    def line(status, text):
        nonlocal idx
        idx += 1
        print(f"check[{idx}] = {status} {text}")

    # only length bounds whose witness length bound+1 fits under max_n
    k_max = 1
    for k in range(2, max_n + 1):
        bound = k + 1 if q <= k else q + k - 1
        if bound + 1 <= max_n:
            k_max = k
    for report in verify_bounds(q, k_max, max_words=max_words,
                                max_length=max_length, max_nodes=args.max_nodes):
        if not report.passed:
            failures += 1
        line("pass" if report.passed else "fail", report.claim)

    for k in range(1, max_n + 1):
        for n in range(k, max_n + 1):
            if not _admissible(n, k, q):
                continue
            try:
                spec = SearchSpec(n, k, q, require_zero=True, mode="collect",
                                  limit=args.limit_per_shape,
                                  max_words=max_words, max_length=max_length,
                                  max_nodes=args.max_nodes)
                result = enumerate_mds(spec)
            except SearchSpaceTooLarge as exc:
                line("skip", f"(n={n}, k={k})_{q}: {exc}")
                continue
            if not result.codes:
                if result.complete:
                    line("skip", f"(n={n}, k={k})_{q}: no codes exist")
                else:
                    line("skip", f"(n={n}, k={k})_{q}: unresolved within node budget")
                continue
            tag = f"codes={len(result.codes)}" + ("" if result.complete else " sample")

            spectrum_bad = 0
            dist_bad = 0
            dist_empirical = False
            classify_bad = 0
            for code in result.codes:
                for rep in verify_spectrum_theorems(code):
                    if not rep.passed:
                        spectrum_bad += 1
                rep = verify_distribution(code)
                dist_empirical = rep.out_of_regime
                if not rep.passed:
                    dist_bad += 1
                if q == 2:
                    try:
                        classify_binary(code)
                    except TheoremViolation:
                        classify_bad += 1
            if spectrum_bad:
                failures += 1
            line("pass" if not spectrum_bad else "fail",
                 f"spectrum (n={n}, k={k})_{q} {tag}")
            if dist_empirical:
                line("empirical" if not dist_bad else "empirical-disagree",
                     f"distribution (n={n}, k={k})_{q} {tag}")
            else:
                if dist_bad:
                    failures += 1
                line("pass" if not dist_bad else "fail",
                     f"distribution (n={n}, k={k})_{q} {tag}")
            if q == 2:
                if classify_bad:
                    failures += 1
                line("pass" if not classify_bad else "fail",
                     f"binary-classification (n={n}, k={k})_{q} {tag}")

    print(f"checks = {idx}")
    print(f"failures = {failures}")
    print(f"result = {'pass' if failures == 0 else 'fail'}")
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------- parser

def build_parser():
    parser = argparse.ArgumentParser(
        prog="mdskit",
        description="Construct, verify, and dissect MDS codes over small alphabets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code from a named family")
    p.add_argument("family", choices=["repetition", "universe", "sum-zero",
                                      "rs", "ext-rs", "dx-rs", "mols"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--p", type=int, help="prime order for the mols family")
    p.add_argument("--points", type=_int_list, help="evaluation points for rs")
    p.add_argument("--out", help="write the code file here instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check a code file for the MDS property")
    p.add_argument("file")
    p.add_argument("--information-set", type=_int_list,
                   help="1-based positions that should determine codewords")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("spectrum", help="weight distribution, brute force vs closed form")
    p.add_argument("file")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("pwe", help="partition weight enumerator at one profile")
    p.add_argument("file")
    p.add_argument("--partition", type=_block_list, required=True,
                   help="1-based blocks, e.g. 1,2/3,4")
    p.add_argument("--profile", type=_int_list, required=True,
                   help="weight in each block, e.g. 1,2")
    p.set_defaults(func=_cmd_pwe)

    p = sub.add_parser("distances", help="distance distribution from a codeword")
    p.add_argument("file")
    p.add_argument("--center", type=_int_list,
                   help="codeword symbols, e.g. 0,1,2 (default: least word)")
    p.set_defaults(func=_cmd_distances)

    p = sub.add_parser("residual", help="fix positions to values, delete them")
    p.add_argument("file")
    p.add_argument("--positions", type=_int_list, required=True, help="1-based")
    p.add_argument("--values", type=_int_list, required=True)
    p.add_argument("--out", help="write the residual code here instead of stdout")
    p.set_defaults(func=_cmd_residual)

    p = sub.add_parser("normalize", help="move a codeword onto zero")
    p.add_argument("file")
    p.add_argument("--word", type=_int_list,
                   help="codeword to send to zero (default: least word)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("classify-binary", help="name the binary MDS shape")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify_binary)

    p = sub.add_parser("search", help="exhaustive walk over (n, k)_q MDS codes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--require-zero", action="store_true")
    p.add_argument("--mode", choices=["count", "exists", "collect"], default="count")
    p.add_argument("--limit", type=int)
    p.add_argument("--emit-codes", metavar="DIR",
                   help="in collect mode, write one file per code here")
    p.add_argument("--max-words", type=int, help="override the q^k guard")
    p.add_argument("--max-length", type=int, help="override the length guard")
    p.add_argument("--max-nodes", type=int,
                   help="stop after this many partial extensions (default: no cap)")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("check-theorems",
                       help="verify spectra, distributions, and length bounds by search")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--limit-per-shape", type=int, default=512,
                   help="cap on codes enumerated per (n, k)")
    p.add_argument("--max-words", type=int, help="override the q^k guard")
    p.add_argument("--max-length", type=int, help="override the length guard")
    p.add_argument("--max-nodes", type=int, default=200000,
                   help="walk budget per shape; unresolved shapes are skipped")
    p.set_defaults(func=_cmd_check_theorems)

    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotMds, TheoremViolation, ZeroWordAbsent) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MdskitError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
