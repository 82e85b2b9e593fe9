"""Command-line entry point.

Exit codes: 0 when every check matches, 1 on any mismatch, 2 on usage or
precondition errors.
"""

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .counting import count_affine, count_projective
from .errors import DiagcountError, HypothesisViolated
from .ffield import make_field
from .gfunction import GParams, evaluate_G
from .padic import symmetric_lift
from .surface import SurfaceSpec
from .verify import VerificationReport, failure_report, verify_theorem1, verify_theorem2

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

CSV_COLUMNS = ["p", "r", "theorem", "d", "h", "lambda", "precision",
               "lhs", "g_value", "lifted_rhs", "match", "status"]


class UsageError(Exception):
    pass


# -- parsing helpers -----------------------------------------------------------

def parse_int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_fraction(text):
    """Parse ``a/b`` or ``a``; fractions must already be in lowest terms."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = (int(x) for x in text.split("/"))
        else:
            num, den = int(text), 1
    except ValueError:
        raise UsageError(f"not a fraction: {text!r}") from None
    if den <= 0:
        raise UsageError(f"denominator must be positive: {text!r}")
    value = Fraction(num, den)
    if value.denominator != den:
        raise UsageError(f"fraction {text!r} is not in lowest terms (write {value})")
    return value


def parse_fraction_list(text):
    return [parse_fraction(x) for x in text.split(",") if x.strip()]


def resolve_lambdas(F, token):
    """``all`` -> every unit as g^0..g^(q-2); ``g^k`` -> a generator power;
    an integer -> the constant polynomial."""
    if isinstance(token, str):
        tok = token.strip()
        if tok == "all":
            return F.units()
        if tok.startswith("g^"):
            try:
                return [F.gen_power(int(tok[2:]))]
            except ValueError:
                raise UsageError(f"bad lambda {token!r}") from None
        try:
            token = int(tok)
        except ValueError:
            raise UsageError(f"bad lambda {token!r}") from None
    if isinstance(token, bool) or not isinstance(token, int):
        raise UsageError(f"bad lambda {token!r}")
    return [F(token)]


def _field(p, r):
    try:
        return make_field(p, r)
    except DiagcountError as exc:
        raise UsageError(str(exc)) from None


# -- reports -------------------------------------------------------------------

def emit_report(result, fmt="json", timings=False):
    """Serialize a report, or a list of reports, to bytes."""
    if fmt == "json":
        if isinstance(result, VerificationReport):
            data = result.to_dict(timings=timings)
        else:
            data = [r.to_dict(timings=timings) for r in result]
        return (json.dumps(data, indent=2) + "\n").encode()
    if fmt == "csv":
        reports = [result] if isinstance(result, VerificationReport) else list(result)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for rep in reports:
            w.writerow(_csv_row(rep))
        return buf.getvalue().encode()
    raise ValueError(f"unknown format {fmt!r}")


def _csv_row(rep):
    inp = rep.inputs
    failed = [n for n, ok in rep.hypothesis_checks if not ok]
    status = "ok" if rep.computed else "hypothesis:" + (failed[0] if failed else "unknown")
    blank = lambda v: "" if v is None else v  # noqa: E731
    return [
        inp["p"], inp["r"], inp.get("theorem", ""), inp["d"],
        ";".join(str(x) for x in inp["h"]),
        ";".join(str(x) for x in inp["lambda"]),
        blank(rep.precision), blank(rep.lhs), blank(rep.g_value), blank(rep.lifted_rhs),
        "true" if rep.match else "false", status,
    ]


# -- jobs ----------------------------------------------------------------------

def expand_job(job):
    """One job object -> list of concrete task tuples (one per lambda)."""
    if not isinstance(job, dict):
        raise UsageError(f"job must be an object, got {job!r}")
    try:
        p, r, d, h = int(job["p"]), int(job.get("r", 1)), int(job["d"]), list(job["h"])
        lam = job["lambda"]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed job {job!r}: {exc}") from None
    theorem = job.get("theorem", "thm1")
    if theorem not in ("thm1", "thm2"):
        raise UsageError(f"unknown theorem {theorem!r}")
    precision = job.get("precision")
    F = _field(p, r)
    return [(p, r, d, tuple(h), lam_.code, precision, theorem) for lam_ in resolve_lambdas(F, lam)]


def run_task(task):
    p, r, d, h, lam_code, precision, theorem = task
    F = make_field(p, r)
    lam = F.from_code(lam_code)
    inputs = {"p": p, "r": r, "d": d, "h": list(h), "lambda": list(lam.coeffs), "theorem": theorem}
    try:
        spec = SurfaceSpec(F, d, h, lam)
        if theorem == "thm1":
            return verify_theorem1(spec, precision)
        return verify_theorem2(F, d, h[0], lam, precision)
    except HypothesisViolated as exc:
        checks = getattr(exc, "checks", None) or [(exc.condition, False)]
        return failure_report(inputs, checks)
    except DiagcountError as exc:
        return failure_report(inputs, [(type(exc).__name__ + ": " + str(exc), False)])


def default_threads():
    env = os.environ.get("DIAGCOUNT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"DIAGCOUNT_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def run_tasks(tasks, threads):
    if threads <= 1 or len(tasks) <= 1:
        return [run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        # map preserves job order regardless of completion order
        return list(pool.map(run_task, tasks, chunksize=max(1, len(tasks) // (4 * threads))))


def exit_code_for(reports):
    if any(r.computed and not r.match for r in reports):
        return EXIT_MISMATCH
    if any(not r.computed for r in reports):
        return EXIT_USAGE
    return EXIT_OK


# -- subcommands -----------------------------------------------------------------

def cmd_count(args, out):
    F = _field(args.p, args.r)
    h = parse_int_list(args.h)
    for lam in resolve_lambdas(F, args.lam):
        spec = SurfaceSpec(F, args.d, h, lam)
        n = count_projective(spec) if args.projective else count_affine(spec)
        out.write(f"{n}\n")
    return EXIT_OK


def cmd_gfun(args, out):
    F = _field(args.p, args.r)
    top = parse_fraction_list(args.top)
    bottom = parse_fraction_list(args.bottom)
    (t,) = resolve_lambdas(F, args.t)
    params = GParams(top, bottom, t, F)
    value, audit = evaluate_G(params, args.precision)
    mod = value.modulus
    data = {
        "p": F.p,
        "r": F.r,
        "precision": args.precision,
        "residue": [str(c) for c in value.coeffs],
        "lifted": symmetric_lift(value.coeffs[0], mod) if value.is_rational() else None,
        "min_exponent": audit.min_exponent,
        "guard_digits": audit.guard,
    }
    out.write(json.dumps(data, indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    F = _field(args.p, args.r)
    if args.theorem == "thm1":
        if args.h is None:
            raise UsageError("verify thm1 needs --h")
        h = parse_int_list(args.h)
    else:
        if args.k is None:
            raise UsageError("verify thm2 needs --k")
        h = [args.k, args.d - args.k]
    tasks = [(F.p, F.r, args.d, tuple(h), lam.code, args.precision, args.theorem)
             for lam in resolve_lambdas(F, args.lam)]
    reports = run_tasks(tasks, 1)
    result = reports[0] if len(reports) == 1 else reports
    out.write(emit_report(result, args.format, timings=args.timings).decode())
    return exit_code_for(reports)


def cmd_identities(args, out):
    from .sweeps import run_named

    results = run_named(args.which, args.qmax)
    for res in results:
        out.write(res.summary() + "\n")
        for label in res.failures[:20]:
            out.write(f"  failed: {label}\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


def cmd_sweep(args, out):
    try:
        with open(args.jobs) as fh:
            jobs = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read job file: {exc}") from None
    if not isinstance(jobs, list):
        raise UsageError("job file must hold a JSON array")
    tasks = [t for job in jobs for t in expand_job(job)]
    threads = args.threads if args.threads is not None else default_threads()
    reports = run_tasks(tasks, threads)
    fmt = args.format or ("json" if args.out.endswith(".json") else "csv")
    with open(args.out, "wb") as fh:
        fh.write(emit_report(reports, fmt, timings=args.timings))
    matched = sum(1 for r in reports if r.match)
    out.write(f"{len(reports)} jobs, {matched} matched -> {args.out}\n")
    return exit_code_for(reports)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="diagcount",
        description="Point counts on diagonal hypersurfaces and p-adic hypergeometric functions.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def field_args(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--r", type=int, default=1)

    sp = sub.add_parser("count", help="exact affine or projective point count")
    field_args(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--h", required=True, help="comma-separated exponents h_1,...,h_n")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--projective", action="store_true")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("gfun", help="evaluate nGn[top; bottom | t]_q mod p^M")
    field_args(sp)
    sp.add_argument("--top", required=True)
    sp.add_argument("--bottom", required=True)
    sp.add_argument("--t", required=True)
    sp.add_argument("--precision", type=int, required=True)
    sp.set_defaults(func=cmd_gfun)

    sp = sub.add_parser("verify", help="certify one theorem instance")
    sp.add_argument("theorem", choices=["thm1", "thm2"])
    field_args(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--h")
    sp.add_argument("--k", type=int)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--precision", type=int)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--timings", action="store_true", help="include wall-clock timings")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("identities", help="exhaustive lemma and identity sweeps")
    sp.add_argument("--which", required=True,
                    choices=["floors", "gamma", "reflection", "claim", "theta", "affine"])
    sp.add_argument("--qmax", type=int, required=True)
    sp.set_defaults(func=cmd_identities)

    sp = sub.add_parser("sweep", help="run a JSON job file")
    sp.add_argument("--jobs", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--format", choices=["json", "csv"])
    sp.add_argument("--threads", type=int)
    sp.add_argument("--timings", action="store_true")
    sp.set_defaults(func=cmd_sweep)
    return ap


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, DiagcountError) as exc:
        sys.stderr.write(f"diagcount: error: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
