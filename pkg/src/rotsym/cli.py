"""Command line: spectra, weights, point queries, verification suites, exploration.

All emissions are canonical (fixed ordering, LF line endings, sorted JSON
keys) so repeated invocations are byte-identical; timing goes to stderr.
"""

import argparse
import json
import math
import sys
import time

from .boolfn import (
    DEFAULT_MAX_VARS,
    anf_to_table,
    function_from_dict,
    is_rotation_symmetric,
    weight,
)
from .recurrence import (
    BASE_THRESHOLD,
    F3_weight_and_nonlinearity,
    F3_zero_value,
    eval_F3_point,
    eval_subfunction_point,
)
from .rsbf import F2, F3, SubFamily, generate_rsbf, orbit_representatives, subfunction_family
from .verify import SUITES, report_to_csv, report_to_json, run_suite
from .walsh import nonlinearity, walsh_point, walsh_spectrum

# "F3" always means the cyclic family; the fourth split member must be "f3".
_SUBFAMILY_NAMES = {
    "f0": SubFamily.F0, "f1": SubFamily.F1, "f2": SubFamily.F2, "f3": SubFamily.F3,
    "F0": SubFamily.F0, "F1": SubFamily.F1, "F2": SubFamily.F2,
}


class UsageError(ValueError):
    """Bad flag combination or malformed argument value; exits with code 2."""


def parse_mask(text: str, n: int) -> int:
    """Mask mini-language: decimal, 0x hex, bit:k, zero, ones, period:<bits>:<p>."""
    t = text.strip().lower()
    if t == "zero":
        return 0
    if t == "ones":
        return (1 << n) - 1
    if t.startswith("bit:"):
        k = int(t[4:])
        if not 0 <= k < n:
            raise UsageError(f"bit index {k} out of range for n={n}")
        return 1 << k
    if t.startswith("period:"):
        try:
            _, bits, period = t.split(":")
            p = int(period)
        except ValueError:
            raise UsageError(f"malformed period mask {text!r}") from None
        if p < 1 or not bits or len(bits) > p or set(bits) - {"0", "1"}:
            raise UsageError(f"malformed period mask {text!r}")
        pattern = bits.ljust(p, "0")
        v = 0
        for i in range(n):
            if pattern[i % p] == "1":
                v |= 1 << i
        return v
    try:
        v = int(t, 16) if t.startswith("0x") else int(t)
    except ValueError:
        raise UsageError(f"malformed mask {text!r}") from None
    if not 0 <= v < (1 << n):
        raise UsageError(f"mask {text!r} out of range for n={n}")
    return v


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_lines(header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(str(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def _builtin_anf(args):
    fam = args.family.strip()
    if fam == "F3":
        return F3(args.n)
    if fam in _SUBFAMILY_NAMES:
        return subfunction_family(args.n)[_SUBFAMILY_NAMES[fam]]
    if fam == "quad":
        if args.stride is None:
            raise UsageError("family quad needs --stride")
        return F2(args.n, args.stride)
    raise UsageError(f"unknown family {args.family!r}")


def cmd_spectrum(args) -> int:
    cap = args.max_table_vars
    if args.file:
        with open(args.file) as fh:
            func = function_from_dict(json.load(fh), max_vars=cap)
        n = func.n
        source = args.file
        tables = [func]
        columns = ["value"]
    elif args.family == "subfamilies":
        if args.n is None:
            raise UsageError("builtin families need --n")
        n = args.n
        source = "subfamilies"
        tables = [anf_to_table(a, max_vars=cap) for a in subfunction_family(n).values()]
        columns = ["f0", "f1", "f2", "f3"]
    else:
        if args.n is None:
            raise UsageError("builtin families need --n")
        n = args.n
        source = args.family
        tables = [anf_to_table(_builtin_anf(args), max_vars=cap)]
        columns = ["value"]

    spectra = [walsh_spectrum(f, max_vars=cap).values for f in tables]

    if args.orbit_compress:
        bad = [i for i, f in enumerate(tables) if not is_rotation_symmetric(f)]
        if bad:
            raise UsageError(
                "orbit compression needs a rotation-symmetric function; "
                f"column(s) {', '.join(columns[i] for i in bad)} are not"
            )
        orbits = orbit_representatives(n)
        masks = orbits.representatives
        sizes = orbits.orbit_sizes
        rows = [
            [m, s] + [int(vals[m]) for vals in spectra]
            for m, s in zip(masks, sizes)
        ]
        header = ["mask", "orbit_size"] + columns
    else:
        rows = [[m] + [int(vals[m]) for vals in spectra] for m in range(1 << n)]
        header = ["mask"] + columns

    if args.format == "json":
        payload = {
            "n": n,
            "source": source,
            "orbit_compressed": bool(args.orbit_compress),
            "columns": header,
            "rows": rows,
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    else:
        _emit(_csv_lines(header, rows), args.out)
    return 0


def cmd_nl(args) -> int:
    n = args.n
    w, nl = F3_weight_and_nonlinearity(n)
    zero = F3_zero_value(n)
    verified = ""
    status = 0
    if args.verify:
        cap = args.max_table_vars
        func = anf_to_table(F3(n), max_vars=cap)
        spec = walsh_spectrum(func, max_vars=cap)
        rep = nonlinearity(spec)
        table = (weight(func), rep.linear_nl, rep.affine_nl, int(spec.values[0]))
        if table == (w, nl, nl, zero):
            verified = "yes"
        else:
            verified = "no"
            print(f"mismatch: table={table} sequences={(w, nl, nl, zero)}", file=sys.stderr)
            status = 1
    row = [n, w, nl, nl, zero, verified]
    header = ["n", "weight", "linear_nl", "affine_nl", "zero_value", "verified"]
    if args.format == "json":
        payload = {
            "n": n,
            "weight": str(w),
            "linear_nl": str(nl),
            "affine_nl": str(nl),
            "zero_value": str(zero),
            "verified": verified,
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    else:
        _emit(_csv_lines(header, [row]), args.out)
    return status


def cmd_point(args) -> int:
    n = args.n
    c = parse_mask(args.mask, n)
    if args.family is None or args.family == "F3":
        if n >= BASE_THRESHOLD + 2:
            value = eval_F3_point(n, c)
        else:
            value = walsh_point(anf_to_table(F3(n), max_vars=args.max_table_vars), c)
    elif args.family in _SUBFAMILY_NAMES:
        value = eval_subfunction_point(_SUBFAMILY_NAMES[args.family], n, c)
    else:
        raise UsageError(f"unknown family {args.family!r}")
    _emit(f"{value}\n", args.out)
    return 0


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    if args.max_n < 3:
        raise UsageError(f"--max-n must be at least 3, got {args.max_n}")
    if args.max_n > args.max_table_vars:
        raise UsageError(
            f"--max-n {args.max_n} exceeds the explicit-table cap {args.max_table_vars}"
        )
    t0 = time.perf_counter()
    report = run_suite(args.suite, args.max_n, threads=args.threads, max_vars=args.max_table_vars)
    wall = time.perf_counter() - t0
    text = report_to_json(report) if args.format == "json" else report_to_csv(report)
    _emit(text, args.out)
    good, bad = report.totals
    print(f"suite={report.suite} pass={good} fail={bad} wall_time_s={wall:.3f}", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_explore(args) -> int:
    if (args.monomial is None) == (args.stride is None):
        raise UsageError("explore needs exactly one of --monomial or --stride")
    cap = args.max_table_vars
    lo, hi = args.n, args.max_n
    if hi is None:
        raise UsageError("explore needs --max-n")
    if lo is None:
        lo = 3
    if hi > cap:
        raise UsageError(f"--max-n {hi} exceeds the explicit-table cap {cap}")
    rows = []
    for n in range(lo, hi + 1):
        if args.monomial is not None:
            try:
                base = tuple(int(x) for x in args.monomial.split(","))
            except ValueError:
                raise UsageError(f"malformed monomial {args.monomial!r}") from None
            if not base or max(base) >= n:
                print(f"note: n={n} skipped (monomial needs n > {max(base)})", file=sys.stderr)
                continue
            label = "sanf:" + ".".join(str(i) for i in base)
            anf = generate_rsbf(n, base)
            even = ""
        else:
            s = args.stride
            if not 1 <= s < n:
                print(f"note: n={n} skipped (stride {s} needs n > {s})", file=sys.stderr)
                continue
            label = f"quad:s={s}"
            anf = F2(n, s)
            even = "yes" if (n // math.gcd(n, s)) % 2 == 0 else "no"
        func = anf_to_table(anf, max_vars=cap)
        rep = nonlinearity(walsh_spectrum(func, max_vars=cap))
        w = weight(func)
        equal = "yes" if rep.linear_nl == w == rep.affine_nl else "no"
        rows.append([n, label, w, rep.linear_nl, rep.affine_nl, equal, even])
    header = ["n", "family", "weight", "linear_nl", "affine_nl", "nl_equals_weight", "n_over_gcd_even"]
    if args.format == "json":
        payload = {"columns": header, "rows": rows}
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    else:
        _emit(_csv_lines(header, rows), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotsym",
        description="Exact Walsh-spectrum analysis of rotation-symmetric Boolean functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="write the emission to a file instead of stdout")
        p.add_argument(
            "--max-table-vars",
            type=int,
            default=DEFAULT_MAX_VARS,
            help="explicit truth-table size cap (variables)",
        )

    p = sub.add_parser("spectrum", help="full Walsh spectrum of a builtin family or function file")
    p.add_argument("--n", type=int)
    p.add_argument("--family", default="F3",
                   help="F3, f0..f3, subfamilies (four columns), or quad with --stride")
    p.add_argument("--stride", type=int)
    p.add_argument("--file", help="function file (JSON) instead of a builtin family")
    p.add_argument("--orbit-compress", action="store_true",
                   help="one row per rotation class (rotation-symmetric functions only)")
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("nl", help="weight, nonlinearity, and zero-mask coefficient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true",
                   help="recompute from the explicit table and compare (n within cap)")
    common(p)
    p.set_defaults(func=cmd_nl)

    p = sub.add_parser("point", help="one exact Walsh coefficient at any size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mask", required=True,
                   help="decimal, 0x hex, bit:k, zero, ones, or period:<bits>:<p>")
    p.add_argument("--family", help="f0..f3 for a sub-family; default is the cyclic family")
    common(p)
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=("tables", "theorem", "lemmas", "recurrences", "all"))
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="shorthand for verify --suite tables")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify, suite="tables")

    p = sub.add_parser("explore", help="weight vs nonlinearity across sizes for a family")
    p.add_argument("--monomial", help="comma-separated variable indices of the base monomial")
    p.add_argument("--stride", type=int, help="quadratic family stride")
    p.add_argument("--n", type=int, help="first size (default 3)")
    p.add_argument("--max-n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_explore)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_table_vars > DEFAULT_MAX_VARS:
        est = (1 << args.max_table_vars) * 9
        print(
            f"cap raised to {args.max_table_vars} variables: a full table plus "
            f"spectrum needs about {est} bytes",
            file=sys.stderr,
        )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
