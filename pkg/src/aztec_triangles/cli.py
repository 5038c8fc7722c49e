"""Command-line front end.

Verbs: count, enumerate, crosscheck, verify, render.  Counts print as bare
decimal integers; enumerate emits a JSON header line followed by one JSON
object per element in canonical order; verify prints a JSON report array.

Exit codes: 0 success / all checks pass, 1 a verification or crosscheck
failed, 2 invalid input, 3 enumeration cap exceeded (see AZTEC_CAP).
"""

import argparse
import json
import sys

from .domains import build_domain, enumerate_tilings, render
from .errors import CapExceeded, IdentityError
from .formulas import product_case1, product_case2
from .partitions import Partition, check_partition, normalize
from .paths import enumerate_path_families
from .sequences import count_sequences, enumerate_sequences
from .tableaux import enumerate_tableaux
from .verify import SUITES, run_suite


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}") from exc
    return check_partition(parts)


def _staircase_parameters(mu: Partition):
    """(k, n) with mu = (k,...,1,0^(n-k)), or None if mu is not of that form."""
    n = len(mu)
    k = len(normalize(mu))
    if tuple(mu) != tuple(range(k, 0, -1)) + (0,) * (n - k):
        return None
    return k, n


def _cmd_count(args) -> int:
    mu = parse_partition(args.mu)
    if args.method == "det":
        value = count_sequences(mu, args.case)
    elif args.method == "product":
        staircase = _staircase_parameters(mu)
        if staircase is None or staircase[0] < 1:
            raise ValueError(
                f"--method product needs mu of the form (k,...,1,0,...); got {args.mu!r}"
            )
        k, n = staircase
        value = (
            product_case1(k, 2 * n) if args.case == 1 else product_case2(k, n)
        )
    else:  # brute
        value = len(enumerate_tilings(build_domain(mu, args.case)))
    print(value)
    return 0


_MODELS = {
    "sequence": lambda mu, case: enumerate_sequences(mu, case),
    "tableau": lambda mu, case: enumerate_tableaux(mu, case),
    "paths": lambda mu, case: enumerate_path_families(mu, case),
    "tiling": lambda mu, case: enumerate_tilings(build_domain(mu, case)),
}


def _cmd_enumerate(args) -> int:
    mu = parse_partition(args.mu)
    items = _MODELS[args.model](mu, args.case)
    total = len(items)
    if args.limit is not None:
        items = items[: args.limit]
    print(
        json.dumps(
            {
                "mu": list(mu),
                "case": args.case,
                "model": args.model,
                "count": total,
                "emitted": len(items),
            }
        )
    )
    for item in items:
        print(json.dumps(item.to_json()))
    return 0


def _cmd_crosscheck(args) -> int:
    mu = parse_partition(args.mu)
    case = args.case
    counts = {
        "sequences": len(enumerate_sequences(mu, case)),
        "tableaux": len(enumerate_tableaux(mu, case)),
        "paths": len(enumerate_path_families(mu, case)),
        "tilings": len(enumerate_tilings(build_domain(mu, case))),
        "determinant": count_sequences(mu, case),
    }
    agree = len(set(counts.values())) == 1
    print(json.dumps({"mu": list(mu), "case": case, **counts, "agree": agree}))
    return 0 if agree else 1


def _cmd_verify(args) -> int:
    records = run_suite(args.suite, args.kmax)
    print(json.dumps(records, indent=2))
    return 0 if all(r["pass"] for r in records) else 1


def _cmd_render(args) -> int:
    mu = parse_partition(args.mu)
    domain = build_domain(mu, args.case)
    if args.tiling_index is None:
        text = render(domain, args.format)
    else:
        tilings = enumerate_tilings(domain)
        if not 0 <= args.tiling_index < len(tilings):
            raise ValueError(
                f"tiling index {args.tiling_index} out of range (0..{len(tilings) - 1})"
            )
        text = render(tilings[args.tiling_index], args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aztec-triangles",
        description="Count, enumerate, verify and draw domino tilings of "
        "generalized Aztec triangles.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_mu_case(p):
        p.add_argument("--mu", required=True, help="partition, e.g. '3,2,1' (trailing zeros count)")
        p.add_argument("--case", type=int, choices=(1, 2), required=True)

    p = sub.add_parser("count", help="print the exact tiling count")
    add_mu_case(p)
    p.add_argument("--method", choices=("det", "product", "brute"), default="det")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="stream one model's objects as JSON")
    add_mu_case(p)
    p.add_argument("--model", choices=sorted(_MODELS), required=True)
    p.add_argument("--limit", type=int, default=None, help="truncate canonical order")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("crosscheck", help="run all four counters and compare")
    add_mu_case(p)
    p.set_defaults(func=_cmd_crosscheck)

    p = sub.add_parser("verify", help="run an identity suite, print JSON report")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    p.add_argument("--kmax", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="draw a domain or one of its tilings")
    add_mu_case(p)
    p.add_argument("--tiling-index", type=int, default=None)
    p.add_argument("--format", choices=("ascii", "svg"), required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except IdentityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
