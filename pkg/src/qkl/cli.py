"""Command-line front end.

Subcommands: verify-finite, verify-proof, numeric, converge, limit-check.
Exit codes: 0 all checks passed, 1 some check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from qkl import identities as ide
from qkl import numeric as num
from qkl.kernels import BACKEND

OUTPUT_ENV = "QKL_OUTPUT_DIR"
DEFAULT_OUTPUT = "qkl-reports"

PROOF_STEPS = ("combination", "k-telescope", "partial-fraction", "s-telescope", "n-level")
NUMERIC_CHOICES = sorted(num.NUMERIC_IDENTITIES) + ["bbb-classical", "kl-classical", "markov-parametric"]


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    grid: dict = field(default_factory=dict)
    digits: int | None = None
    prec: int | None = None
    output_dir: str = DEFAULT_OUTPUT
    output_format: str = "json"
    jobs: int = 1
    sabotage: str | None = None


# ---------------------------------------------------------------------------
# argument parsing


def parse_range(text, *, minimum=None, name="range"):
    """'a..b' (inclusive), 'a' or 'a,b,c' -> sorted list of ints."""
    values = []
    try:
        for part in str(text).split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo, hi = int(lo), int(hi)
                if hi < lo:
                    raise UsageError(f"empty {name} {text!r}")
                values.extend(range(lo, hi + 1))
            elif part:
                values.append(int(part))
    except ValueError:
        raise UsageError(f"malformed {name} {text!r}") from None
    if not values:
        raise UsageError(f"empty {name} {text!r}")
    if minimum is not None and min(values) < minimum:
        raise UsageError(f"{name} values must be >= {minimum}, got {text!r}")
    return sorted(set(values))


def parse_rationals(text, name):
    out = []
    for part in str(text).split(","):
        part = part.strip()
        try:
            out.append(num.to_exact(part))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"malformed {name} list {text!r}") from None
    if not out:
        raise UsageError(f"empty {name} list")
    return out


def _q_values(text):
    qs = parse_rationals(text, "q")
    for q in qs:
        if not 0 < q < 1:
            raise UsageError(f"q must lie in (0, 1), got {q}")
    return qs


def _digits(value):
    if value < 1:
        raise UsageError(f"--digits must be >= 1, got {value}")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="qkl", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"qkl (kernels: {BACKEND})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--out", default=os.environ.get(OUTPUT_ENV, DEFAULT_OUTPUT), help="output directory")
        sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for grid cells")
        sp.add_argument("--sabotage", default=None, help=argparse.SUPPRESS)

    sp = sub.add_parser("verify-finite", help="exact check of the finite form over an (N, r) grid")
    sp.add_argument("--n", default="1..10")
    sp.add_argument("--r", default="0..4")
    sp.add_argument("--max-degree", type=int, default=None, help="abort cells whose degree exceeds this")
    common(sp)

    sp = sub.add_parser("verify-proof", help="exact check of each telescoping step")
    sp.add_argument("--steps", default=",".join(PROOF_STEPS))
    sp.add_argument("--n", default="2..8")
    sp.add_argument("--s", default="0..3", help="depths for combination (s >= 1 used) and k-telescope")
    sp.add_argument("--r", default="1..4", help="r values for s-telescope and n-level")
    common(sp)

    sp = sub.add_parser("numeric", help="numeric residuals of the infinite identities")
    sp.add_argument("--identity", required=True, choices=NUMERIC_CHOICES)
    sp.add_argument("--q", default="1/2")
    sp.add_argument("--x", default=None)
    sp.add_argument("--r", default="0")
    sp.add_argument("--a", default="0..3")
    sp.add_argument("--digits", type=int, default=25)
    common(sp)

    sp = sub.add_parser("converge", help="terms to tolerance, plain vs accelerated series")
    sp.add_argument("--identity", choices=("r-family", "markov-apery-classical"), default="r-family")
    sp.add_argument("--r", default="0..2")
    sp.add_argument("--q", default="0.5,0.9")
    sp.add_argument("--digits", type=int, default=30)
    common(sp)

    sp = sub.add_parser("limit-check", help="classical accelerated series against direct zeta summation")
    sp.add_argument("--r", default=None, help="odd zeta values zeta(2r+3)")
    sp.add_argument("--markov-a", default=None)
    sp.add_argument("--digits", type=int, default=12)
    common(sp)
    return p


# ---------------------------------------------------------------------------
# cells


def _run_cell(cell):
    kind, kwargs = cell
    try:
        return _CELLS[kind](**kwargs)
    except ide.ResourceLimitError as exc:
        return ide.VerificationReport(check=kind, params=kwargs, status="resource-cap", witness=str(exc))
    except (num.NonGeometricSeriesError, ZeroDivisionError) as exc:
        return ide.VerificationReport(check=kind, params=_jsonable(kwargs), status="fail", witness=str(exc))


def _jsonable(d):
    return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in d.items()}


_CELLS = {
    "finite-form": lambda N, r, max_degree=None, sabotage=None: ide.verify_finite_form(
        N, r, max_degree=max_degree, sabotage=sabotage
    ),
    "step-combination": lambda n, k, s, drop_lower=False: ide.verify_step_combination(n, k, s, drop_lower=drop_lower),
    "step-k-telescope": lambda n, s: ide.verify_step_k_telescope(n, s),
    "lemma-partial-fraction": lambda n, k: ide.verify_lemma_partial_fraction(n, k),
    "step-s-telescope": lambda n, k, r, minus_one=0: ide.verify_step_s_telescope(n, k, r, minus_one=minus_one),
    "step-n-level": lambda n, r: ide.verify_step_n_level(n, r),
    "numeric": lambda **kw: num.numeric_identity_check(**kw),
    "markov-parametric": lambda a, tol: num.markov_parametric_check(a, tol),
    "kl-classical": lambda x0, tol: num.kl_classical_check(x0=x0, tol=tol),
    "bbb-classical": lambda x0, tol: num.bbb_classical_check(x0=x0, tol=tol),
    "odd-zeta": lambda r, digits: num.odd_zeta_limit_check(r, digits),
}


def _run_cells(cells, jobs):
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_cell, cells))
    return [_run_cell(c) for c in cells]


# ---------------------------------------------------------------------------
# output


def _slug(report):
    parts = [report.check.replace(":", "-")]
    for key in sorted(report.params):
        val = str(report.params[key]).replace("/", "_")
        parts.append(f"{key}{val}")
    return "_".join(parts)


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_reports(config, reports, extra=None):
    out = Path(config.output_dir)
    cfg = asdict(config)
    passed = sum(r.passed for r in reports)
    summary = {
        "config": cfg,
        "total": len(reports),
        "passed": passed,
        "failed": len(reports) - passed,
        "status": "pass" if passed == len(reports) else "fail",
        "checks": [],
    }
    if extra:
        summary.update(extra)
    if config.output_format != "text":
        out.mkdir(parents=True, exist_ok=True)
    if config.output_format == "json":
        for rep in reports:
            name = _slug(rep) + ".json"
            body = rep.to_dict()
            body["config"] = cfg
            (out / name).write_text(_dump(body))
            summary["checks"].append({"file": name, "check": rep.check, "params": rep.params, "status": rep.status})
    elif config.output_format == "csv":
        with open(out / "results.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["check", "params", "status", "witness", "residual_digits", "terms", "max_degree", "millis"])
            for rep in reports:
                w.writerow([rep.check, json.dumps(rep.params, sort_keys=True), rep.status, rep.witness,
                            rep.residual_digits, rep.terms, rep.max_degree, round(rep.millis, 3)])
                summary["checks"].append({"check": rep.check, "params": rep.params, "status": rep.status})
    if config.output_format != "text":
        (out / "summary.json").write_text(_dump(summary))
    return summary


def print_table(reports, stream=None):
    stream = stream or sys.stdout
    for rep in reports:
        params = " ".join(f"{k}={v}" for k, v in rep.params.items())
        extra = []
        if rep.max_degree is not None:
            extra.append(f"deg={rep.max_degree}")
        if rep.residual_digits is not None:
            extra.append(f"residual=1e-{rep.residual_digits}")
        if rep.terms is not None:
            extra.append(f"terms={rep.terms}")
        if not rep.passed:
            w = rep.witness if len(rep.witness) < 80 else rep.witness[:77] + "..."
            extra.append(f"witness={w}")
        print(f"{rep.status.upper():5} {rep.check} {params} {' '.join(extra)} [{rep.millis:.1f} ms]", file=stream)
    passed = sum(r.passed for r in reports)
    print(f"{passed}/{len(reports)} checks passed", file=stream)


def _finish(config, reports, extra=None):
    write_reports(config, reports, extra)
    print_table(reports)
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# commands


def _config(args, grid, **kw):
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    return RunConfig(
        command=args.command,
        grid=grid,
        output_dir=str(Path(args.out) / args.command),
        output_format=args.format,
        jobs=args.jobs,
        sabotage=args.sabotage,
        **kw,
    )


def cmd_verify_finite(args):
    Ns = parse_range(args.n, minimum=1, name="N range")
    rs = parse_range(args.r, minimum=0, name="r range")
    if args.sabotage not in (None, "remainder-sign"):
        raise UsageError(f"unknown sabotage {args.sabotage!r}")
    config = _config(args, {"N": Ns, "r": rs, "max_degree": args.max_degree})
    cells = [
        ("finite-form", {"N": N, "r": r, "max_degree": args.max_degree, "sabotage": args.sabotage})
        for N in Ns
        for r in rs
    ]
    return _finish(config, _run_cells(cells, args.jobs))


def cmd_verify_proof(args):
    steps = [s.strip() for s in args.steps.split(",") if s.strip()]
    unknown = set(steps) - set(PROOF_STEPS)
    if unknown or not steps:
        raise UsageError(f"--steps must be a non-empty subset of {','.join(PROOF_STEPS)}")
    ns = parse_range(args.n, minimum=2, name="n range")
    ss = parse_range(args.s, minimum=0, name="s range")
    rs = parse_range(args.r, minimum=1, name="r range")
    if args.sabotage not in (None, "depth-minus-one", "drop-lower"):
        raise UsageError(f"unknown sabotage {args.sabotage!r}")
    cells = []
    for n in ns:
        if "combination" in steps:
            cells += [
                ("step-combination", {"n": n, "k": k, "s": s, "drop_lower": args.sabotage == "drop-lower"})
                for k in range(1, n)
                for s in ss
                if s >= 1
            ]
        if "k-telescope" in steps:
            cells += [("step-k-telescope", {"n": n, "s": s}) for s in ss]
        if "partial-fraction" in steps:
            cells += [("lemma-partial-fraction", {"n": n, "k": k}) for k in range(1, n)]
        if "s-telescope" in steps:
            m1 = 1 if args.sabotage == "depth-minus-one" else 0
            cells += [("step-s-telescope", {"n": n, "k": k, "r": r, "minus_one": m1}) for k in range(1, n) for r in rs]
        if "n-level" in steps:
            cells += [("step-n-level", {"n": n, "r": r}) for r in rs]
    if not cells:
        raise UsageError("empty proof-step grid")
    config = _config(args, {"steps": steps, "n": ns, "s": ss, "r": rs})
    return _finish(config, _run_cells(cells, args.jobs))


def cmd_numeric(args):
    digits = _digits(args.digits)
    tol = Fraction(1, 10**digits)
    ident = args.identity
    xs = parse_rationals(args.x, "x") if args.x is not None else [None]
    grid = {"identity": ident, "digits": digits}
    cells = []
    if ident == "markov-parametric":
        a_vals = parse_range(args.a, minimum=0, name="a range")
        grid["a"] = a_vals
        cells = [("markov-parametric", {"a": a, "tol": tol}) for a in a_vals]
    elif ident in ("kl-classical", "bbb-classical"):
        for x in xs:
            x = Fraction(1, 2) if x is None else x
            if not abs(x) < 1:
                raise UsageError(f"x must satisfy |x| < 1, got {x}")
        xs = [Fraction(1, 2) if x is None else x for x in xs]
        grid["x"] = [str(x) for x in xs]
        cells = [(ident, {"x0": x, "tol": tol}) for x in xs]
    else:
        qs = _q_values(args.q)
        rs = parse_range(args.r, minimum=0, name="r range")
        grid.update(q=[str(q) for q in qs], x=[None if x is None else str(x) for x in xs], r=rs)
        needs_r = ident in ("r-family", "q-markov-apery")
        for q in qs:
            for x in xs:
                if x is not None and not abs(x) < 1:
                    raise UsageError(f"x must satisfy |x| < 1, got {x}")
                for r in rs if needs_r else [0]:
                    cells.append(("numeric", {"identity": ident, "q0": q, "x0": x, "digits": digits, "r": r}))
    config = _config(args, grid, digits=digits)
    return _finish(config, _run_cells(cells, args.jobs))


def cmd_converge(args):
    digits = _digits(args.digits)
    tol = Fraction(1, 10**digits)
    config = _config(args, {}, digits=digits)
    rows = []
    if args.identity == "markov-apery-classical":
        plan = [("markov-apery-classical", 1, 0, ide.SeriesSpec("zeta-classical", m=3), ide.SeriesSpec("markov-apery-classical"))]
    else:
        qs = _q_values(args.q)
        rs = parse_range(args.r, minimum=0, name="r range")
        plan = [
            ("r-family", q, r, ide.SeriesSpec("plain-qzeta", r=r), ide.SeriesSpec("r-family-rhs", r=r))
            for q in qs
            for r in rs
        ]
    config.grid = {"identity": args.identity, "rows": [[str(q), r] for _, q, r, _, _ in plan]}
    reports = []
    for name, q, r, plain, accel in plan:
        q0 = None if plain.classical else q
        t0 = time.perf_counter()
        try:
            terms_plain = num.terms_to_tolerance(plain, q0, tol=tol)
        except num.NonGeometricSeriesError:
            terms_plain = None
        t1 = time.perf_counter()
        terms_acc = num.terms_to_tolerance(accel, q0, tol=tol)
        t2 = time.perf_counter()
        ok = terms_plain is None or terms_acc < terms_plain
        speedup = None if terms_plain is None else round(terms_plain / terms_acc, 3)
        rows.append({
            "identity": name,
            "q": str(q),
            "r": r,
            "tolerance_digits": digits,
            "terms_plain": "non-geometric" if terms_plain is None else terms_plain,
            "terms_accelerated": terms_acc,
            "speedup": "inf" if speedup is None else speedup,
            "millis_plain": round((t1 - t0) * 1000, 3),
            "millis_accelerated": round((t2 - t1) * 1000, 3),
        })
        reports.append(ide.VerificationReport(
            check=f"converge:{name}",
            params={"q": str(q), "r": r, "digits": digits},
            status="pass" if ok else "fail",
            witness=f"plain={rows[-1]['terms_plain']} accelerated={terms_acc}",
            terms=terms_acc,
            millis=(t2 - t0) * 1000,
        ))
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "converge.csv", "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]))
        w.writeheader()
        w.writerows(rows)
    return _finish(config, reports, {"csv": "converge.csv"})


def cmd_limit_check(args):
    digits = _digits(args.digits)
    rs = parse_range(args.r, minimum=0, name="r range") if args.r is not None else []
    a_vals = parse_range(args.markov_a, minimum=0, name="a range") if args.markov_a is not None else []
    if args.r is None and args.markov_a is None:
        rs, a_vals = [0, 1, 2, 3], [0, 1, 2, 3]
    tol = Fraction(1, 10**digits)
    cells = [("odd-zeta", {"r": r, "digits": digits}) for r in rs]
    cells += [("markov-parametric", {"a": a, "tol": tol}) for a in a_vals]
    config = _config(args, {"r": rs, "markov_a": a_vals}, digits=digits)
    return _finish(config, _run_cells(cells, args.jobs))


COMMANDS = {
    "verify-finite": cmd_verify_finite,
    "verify-proof": cmd_verify_proof,
    "numeric": cmd_numeric,
    "converge": cmd_converge,
    "limit-check": cmd_limit_check,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"qkl: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
