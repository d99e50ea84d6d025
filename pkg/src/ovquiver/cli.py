"""``ovq``: command-line access to every computation in the package.

Exit codes: 0 success, 2 usage or input error, 3 a mathematical violation
(diagnostic JSON on stderr).
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import MathViolation, QuiverFormatError
from .ov import (
    EXPONENT_NOTE,
    disk_gw,
    divisibility_checks,
    f_at_one,
    fp_function,
    ov_f_mu,
    ov_table,
    product_verify,
)
from .partitions import Partition, divisors
from .quiver import Quiver, betti_extract, hlrv_special_check, hua_kac, leg_quiver_dim
from .rr import g_table, rr_verify

__all__ = ["main", "load_quiver", "build_parser"]


class UsageError(Exception):
    pass


def load_quiver(path):
    """Read ``{"vertices": r, "edges": [[tail, head], ...]}`` from ``path``."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverFormatError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        return Quiver.from_dict(data)
    except QuiverFormatError as exc:
        raise type(exc)(f"{path}: {exc}") from None


def _csv_ints(text):
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def _csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _render(args, payload, text=None, table=None):
    if args.format == "json":
        return _dump(payload)
    if args.format == "text":
        return text if text is not None else _dump(payload)
    if table is None:
        raise UsageError(f"--format csv is not available for '{args.command}' (use json or text)")
    return _csv(*table)


# subcommands ---------------------------------------------------------------


def cmd_compute(args):
    table = ov_table(args.tau, args.max_degree)
    lines = [f"f_{m}^{args.tau} = {table.row(m)}" for m in range(1, args.max_degree + 1)]
    text = "# u = q^(1/2)\n" + "\n".join(lines) + "\n"
    if args.format == "csv":
        return table.to_csv()
    return _render(args, table.to_json(), text)


def cmd_fmu(args):
    mu = Partition.from_parts(args.partition)
    value = ov_f_mu(args.tau, mu, args.max_degree)
    payload = {"tau": args.tau, "partition": list(mu.parts), "note": EXPONENT_NOTE, "f": value.to_json()}
    return _render(args, payload, f"f_{mu}^{args.tau} = {value}\n")


def cmd_product_check(args):
    table = ov_table(args.tau, args.max_degree)
    report = product_verify(table, u_order=args.order)
    payload = report.to_json()
    return _render(args, payload, f"{payload['status']} to x^{args.max_degree}, u^{args.order}\n")


def cmd_gpoly(args):
    rows = g_table(args.max_degree)
    text = "".join(f"g_{g.m}(q) = {g}\n" for g in rows)
    csv_rows = [(g.m, k, n) for g in rows for k, n in sorted(g.coefficients.items())]
    return _render(args, [g.to_json() for g in rows], text, (["m", "k", "n"], csv_rows))


def cmd_rr(args):
    report = rr_verify(args.variant, args.order, args.max_degree)
    payload = report.to_json()
    return _render(args, payload, f"variant {args.variant} to q^{args.order}: {payload['status']}\n")


def cmd_f_one(args):
    value = f_at_one(args.n, args.tau)
    payload = {"m": args.n, "tau": args.tau, "value": str(value)}
    return _render(args, payload, f"f_{args.n}^{args.tau}(1) = {value}\n")


def cmd_gw(args):
    value = disk_gw(args.n, args.tau)
    payload = {"m": args.n, "tau": args.tau, "value": str(value)}
    if args.cross_check:
        table = ov_table(args.tau, args.n)
        closure = sum(Fraction(table.row(args.n // d).eval_at_one(), d * d) for d in divisors(args.n))
        payload["from_invariants"] = str(closure)
        payload["agree"] = closure == value
    return _render(args, payload, f"GW_{args.n}^{args.tau} = {value}\n")


def _q_poly(coefficients):
    terms = []
    for i, c in enumerate(coefficients):
        if c == "0":
            continue
        mono = "1" if i == 0 else ("q" if i == 1 else f"q^{i}")
        terms.append(mono if c == "1" else (c if i == 0 else f"{c}*{mono}"))
    return " + ".join(terms) or "0"


def cmd_hua(args):
    quiver = load_quiver(args.quiver)
    bound = args.dim_bound if args.dim_bound is not None else [1] * quiver.vertex_count
    table = hua_kac(quiver, bound)
    payload = table.to_json()
    lines = []
    for item in payload["values"]:
        lines.append(f"A_{tuple(item['v'])} = {_q_poly(item['coefficients'])}")
    csv_rows = [
        (",".join(map(str, item["v"])), i, c)
        for item in payload["values"]
        for i, c in enumerate(item["coefficients"])
        if c != "0"
    ]
    return _render(args, payload, "\n".join(lines) + "\n", (["v", "q_power", "coefficient"], csv_rows))


def cmd_betti(args):
    table = ov_table(args.tau, args.n)
    betti = betti_extract(args.n, args.tau, table)
    d = leg_quiver_dim(args.n, 1 - args.tau)
    payload = {"n": args.n, "tau": args.tau, "dimension": d, "betti": [[deg, str(b)] for deg, b in betti]}
    text = "".join(f"dim H_c^{deg} = {b}\n" for deg, b in betti) or "empty\n"
    return _render(args, payload, text, (["degree", "dim"], betti))


def cmd_hlrv(args):
    report = hlrv_special_check(args.k, args.max_degree)
    return _render(args, report.to_json(), f"verified for k = {args.k}, n <= {args.max_degree}\n")


def cmd_fp(args):
    payload = {"n": args.n, "p": args.p, "value": str(fp_function(args.n, args.p))}
    if args.alpha is not None:
        payload["checks"] = divisibility_checks(args.p, args.alpha, args.n, args.tau).to_json()
    return _render(args, payload, f"f_{args.p}({args.n}) = {payload['value']}\n")


# parser --------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="ovq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.set_defaults(func=func, subparser=p)
        return p

    p = add("compute", cmd_compute, "Ooguri-Vafa invariants N_{m,k}(tau) for m <= M")
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--max-degree", type=_positive, required=True)

    p = add("fmu", cmd_fmu, "invariant f_mu^tau for a general partition mu")
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--partition", type=_csv_ints, required=True)
    p.add_argument("--max-degree", type=_positive, default=None, help="series cap (default |mu|)")

    p = add("product-check", cmd_product_check, "expand the infinite product and compare")
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--max-degree", type=_positive, required=True)
    p.add_argument("--order", type=_positive, default=40, help="u-exponent truncation")

    p = add("gpoly", cmd_gpoly, "the polynomials g_1..g_M")
    p.add_argument("--max-degree", type=_positive, required=True)

    p = add("rr", cmd_rr, "Rogers-Ramanujan reproduction")
    p.add_argument("--variant", type=int, choices=(1, 2), required=True)
    p.add_argument("--order", type=_positive, required=True, help="q-exponent truncation")
    p.add_argument("--max-degree", type=_positive, default=None, help="rows of g to use")

    p = add("f-one", cmd_f_one, "f_m^tau(1) by the Mobius/binomial formula")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--tau", type=int, required=True)

    p = add("gw", cmd_gw, "genus-zero disk invariant")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--cross-check", action="store_true", help="also sum the invariants over divisors")

    p = add("hua", cmd_hua, "Kac polynomials via Hua's formula")
    p.add_argument("--quiver", required=True)
    p.add_argument("--dim-bound", type=_csv_ints, default=None)

    p = add("betti", cmd_betti, "Betti numbers read off f_n^tau for tau <= 0")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--tau", type=int, required=True)

    p = add("hlrv-check", cmd_hlrv, "compare f_n^(1-k) with the k-leg quiver series")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--max-degree", type=_positive, required=True)

    p = add("fp", cmd_fp, "f_p(n) and, with --alpha, the two congruences")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--alpha", type=_positive, default=None)
    p.add_argument("--tau", type=int, default=0)

    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args, extra = parser.parse_known_args(argv)
            if extra:
                # report against the subcommand so its grammar is shown
                args.subparser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        output = args.func(args)
    except MathViolation as exc:
        stderr.write(json.dumps(exc.diagnostic(), indent=2) + "\n")
        return 3
    except FileNotFoundError as exc:
        stderr.write(f"ovq {args.command}: FileNotFound: {exc.filename}\n")
        return 2
    except (UsageError, ValueError) as exc:
        stderr.write(f"ovq {args.command}: error: {exc}\n")
        return 2
    stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
