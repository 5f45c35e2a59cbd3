"""Command line entry point.

Exit codes: 0 success, 1 verification failure, 2 precondition failure,
3 unreadable or malformed artifact.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from itertools import groupby
from pathlib import Path

import numpy as np

from . import artifact
from .applications import build_ccc, build_dss, verify_ccc
from .core import NotZdb, ZdbFunction, verify_pdf, verify_zdb
from .cyclotomic import (
    coset_params,
    construct_coset_zdb,
    construct_pair_coset_zdb,
    pair_coset_params,
)
from .errors import ArtifactFormatError, EvenPrimeNotAllowed, NotPrime, ZdbError
from .algebra import is_prime
from .product import construct_product, product_params

EXIT_OK, EXIT_NOT_ZDB, EXIT_PRECONDITION, EXIT_FORMAT = 0, 1, 2, 3


class CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def compact(values, run: int = 4) -> str:
    """Comma list with long runs written as value x count."""
    parts = []
    for v, grp in groupby(values):
        c = len(list(grp))
        parts.extend([str(v)] * c if c < run else [f"{v}x{c}"])
    return ",".join(parts)


def fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _construct(args) -> tuple[ZdbFunction, tuple]:
    if args.family == "coset":
        return construct_coset_zdb(args.m), coset_params(args.m)
    if args.family == "paircoset":
        if args.m == 2:
            raise EvenPrimeNotAllowed("m must be an odd prime")
        f = construct_pair_coset_zdb(args.m)
        return f, pair_coset_params(args.m)
    if len(args.e) != 1:
        raise CliFailure(EXIT_PRECONDITION, "construct takes a single --e value")
    f = construct_product(args.q, args.e[0], allow_repeated_primes=args.allow_repeated_primes)
    p = product_params(args.q, args.e[0])
    return f, (p.n, p.ell_bar, p.lam)


def cmd_construct(args) -> int:
    f, triple = _construct(args)
    out = args.out or Path(_default_name(args))
    artifact.save(out, f)
    tau = sorted(int(t) for t in f.histogram())
    print(f"({triple[0]}, {triple[1]}, {triple[2]}) tau={{{compact(tau)}}}")
    print(f"wrote {out}", file=sys.stderr)
    return EXIT_OK


def _default_name(args) -> str:
    if args.family == "product":
        return f"product_q{'-'.join(map(str, args.q))}_e{args.e[0]}.json"
    return f"{args.family}_m{args.m}.json"


def _verified(f: ZdbFunction):
    result = verify_zdb(f)
    if isinstance(result, NotZdb):
        raise CliFailure(
            EXIT_NOT_ZDB,
            f"NOT ZDB: shift {result.shift_a} agrees {result.count_a} times, "
            f"shift {result.shift_b} agrees {result.count_b} times",
        )
    if not verify_pdf(f, result):
        raise CliFailure(EXIT_NOT_ZDB, "NOT ZDB: partition-side coverage disagrees with shift counts")
    return result


def cmd_verify(args) -> int:
    f, _ = artifact.load(args.path)
    params = _verified(f)
    artifact.save(args.path, f, params)
    print(f"({params.n}, {params.ell_bar}, {params.lam})")
    print(f"tau={{{compact(params.tau)}}}")
    return EXIT_OK


def _load_checked(path):
    f, stored = artifact.load(path)
    params = _verified(f)
    if stored is not None and stored != params:
        raise CliFailure(EXIT_NOT_ZDB, f"stored params {stored.triple} disagree with verification {params.triple}")
    return f, params


def cmd_ccc(args) -> int:
    f, params = _load_checked(args.path)
    code = build_ccc(f, params)
    check = verify_ccc(code)
    if not check:
        raise CliFailure(EXIT_NOT_ZDB, f"code check failed: {check.reason}")
    comp = compact(code.composition)
    line = f"({code.n},{code.M},{code.d},[{comp}])_{code.alphabet_size}"
    if code.bound is None:
        line += " bound=inapplicable NOT-OPTIMAL"
    else:
        line += f" bound={fmt_fraction(code.bound)} {'OPTIMAL' if code.optimal else 'NOT-OPTIMAL'}"
    print(line)
    if args.emit_codewords:
        np.savetxt(args.emit_codewords, code.codewords, fmt="%d", delimiter=" ")
        print(f"wrote {code.M} codewords to {args.emit_codewords}", file=sys.stderr)
    return EXIT_OK


def cmd_dss(args) -> int:
    f, params = _load_checked(args.path)
    dss = build_dss(f, params)
    verdict = "PERFECT" if dss.perfect else "NOT-PERFECT"
    tau = compact(sorted(dss.tau))
    print(f"({dss.n},{{{tau}}},{dss.rho}) {verdict} bound={dss.bound} r={dss.r} "
          f"{'OPTIMAL' if dss.optimal else 'NOT-OPTIMAL'}")
    print(f"sufficient condition ell*lambda <= n: {'holds' if dss.lemma_condition else 'fails'}")
    if dss.crt_map is not None:
        print("group re-indexed to Z_n by CRT", file=sys.stderr)
    return EXIT_OK if dss.perfect else EXIT_NOT_ZDB


def _table_instances(args):
    if args.family in ("coset", "paircoset"):
        for m in args.m:
            yield f"m={m}", m
    else:
        for e in args.e:
            yield f"q={','.join(map(str, args.q))} e={e}", e


def cmd_table(args) -> int:
    rows = [("instance", "(n, ell_bar, lambda)", "tau", "status", "CCC", "DSS r/bound", "DSS", "ell*lam<=n")]
    for name, arg in _table_instances(args):
        try:
            if args.family == "coset":
                predicted = coset_params(arg)
                build = lambda a=arg: construct_coset_zdb(a)
            elif args.family == "paircoset":
                predicted = pair_coset_params(arg)
                build = lambda a=arg: construct_pair_coset_zdb(a)
            else:
                p = product_params(args.q, arg)
                predicted = (p.n, p.ell_bar, p.lam)
                build = lambda a=arg: construct_product(args.q, a, args.allow_repeated_primes)
            if args.family != "product" and not is_prime(arg):
                raise NotPrime(f"{arg} is not prime")
            f = build()
        except ZdbError as exc:
            rows.append((name, "-", "-", f"REJECTED ({exc})", "-", "-", "-", "-"))
            continue
        tau = sorted(int(t) for t in f.histogram())
        ccc = dss_col = opt = cond = "-"
        if f.n > args.max_verify_n:
            status = "UNVERIFIED"
        else:
            params = verify_zdb(f)
            ok = not isinstance(params, NotZdb) and params.triple == predicted and verify_pdf(f, params)
            status = "VERIFIED" if ok else "FAILED"
            if ok:
                code = build_ccc(f, params)
                ccc = "OPTIMAL" if code.optimal else "NOT-OPTIMAL"
                try:
                    dss = build_dss(f, params)
                    dss_col = f"{dss.r}/{dss.bound}"
                    opt = ("PERFECT " if dss.perfect else "") + ("OPTIMAL" if dss.optimal else "NOT-OPTIMAL")
                    cond = "yes" if dss.lemma_condition else "no"
                except ZdbError:
                    opt = "non-cyclic"
        rows.append((name, str(predicted), "{" + compact(tau) + "}", status, ccc, dss_col, opt, cond))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zdb", description="Construct and certify ZDB functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="build a ZDB function artifact")
    fam = con.add_subparsers(dest="family", required=True)
    prod = fam.add_parser("product", help="generalized cyclotomy on GF(q_1) x ... x GF(q_k)")
    prod.add_argument("--q", type=_int_list, required=True)
    prod.add_argument("--e", type=_int_list, required=True)
    prod.add_argument("--allow-repeated-primes", action="store_true")
    for name in ("coset", "paircoset"):
        p = fam.add_parser(name, help=f"{name} leaders on Z_(2^m-1)")
        p.add_argument("--m", type=int, required=True)
    for p in (prod, fam.choices["coset"], fam.choices["paircoset"]):
        p.add_argument("--out", type=Path)
        p.set_defaults(func=cmd_construct)

    ver = sub.add_parser("verify", help="exhaustively verify an artifact")
    ver.add_argument("path", type=Path)
    ver.set_defaults(func=cmd_verify)

    ccc = sub.add_parser("ccc", help="derive and certify the constant composition code")
    ccc.add_argument("path", type=Path)
    ccc.add_argument("--emit-codewords", type=Path, metavar="OUT")
    ccc.set_defaults(func=cmd_ccc)

    dss = sub.add_parser("dss", help="derive and certify the difference system of sets")
    dss.add_argument("path", type=Path)
    dss.set_defaults(func=cmd_dss)

    tab = sub.add_parser("table", help="predicted parameter rows with exhaustive verification")
    tab.add_argument("--family", choices=("product", "coset", "paircoset"), required=True)
    tab.add_argument("--m", type=_int_list, default=[])
    tab.add_argument("--q", type=_int_list, default=[])
    tab.add_argument("--e", type=_int_list, default=[])
    tab.add_argument("--allow-repeated-primes", action="store_true")
    tab.add_argument("--max-verify-n", type=int, default=10000)
    tab.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliFailure as exc:
        print(exc, file=sys.stdout if exc.code == EXIT_NOT_ZDB else sys.stderr)
        return exc.code
    except ArtifactFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except ZdbError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
