"""Command-line front end: ``qsupercong {verify,identity,padic,scan}``.

Exit status is 0 when every check passes, 1 when any check fails, and 2 on
configuration, applicability or degeneracy errors.  Reports are sorted by
statement, then n (or p), then mode and trial, so equal configurations give
byte-identical JSON.  Per-record timings are included only with --timings.

The worker count comes from the QSUPERCONG_WORKERS environment variable
(default 1).
"""

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .errors import ApplicabilityError, DegeneracyError, UnknownStatementError
from .hypersums import ParamSampler, get_statement, identity_ids, run_identity, run_statement, statement_ids
from .padic import classical_applicable, classical_ids, classical_report, is_odd_prime

WORKERS_ENV = "QSUPERCONG_WORKERS"


class ConfigError(Exception):
    pass


def parse_int_set(text, odd_only):
    """'3-15' -> odd (or all) values in the range; '3,7,11' -> explicit list.

    Returns (values, explicit) where explicit is False for ranges.
    """
    text = text.strip()
    if "-" in text.lstrip("-") and "," not in text:
        lo, hi = text.split("-", 1)
        try:
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise ConfigError(f"bad range {text!r}") from None
        if lo > hi:
            raise ConfigError(f"empty range {text!r}")
        vals = [v for v in range(lo, hi + 1) if not odd_only or v % 2]
        return vals, False
    try:
        vals = [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise ConfigError(f"bad integer list {text!r}") from None
    return vals, True


def _factor_rows(report):
    return [{"factor": v.factor, "required": v.required, "achieved": v.achieved}
            for v in report.per_factor]


def _record(res, timings, phi_exponent=None):
    rec = {
        "statement": res.statement,
        "n": res.n,
        "m_mode": res.m_mode,
        "trial": res.trial,
        "params": res.params,
        "modulus": res.modulus,
        "per_factor": _factor_rows(res.report),
        "denominator_coprime": res.report.denominator_coprime,
        "pass": res.report.passed,
        "notes": res.report.notes,
        "resamples": res.resamples,
        "elapsed": round(res.elapsed, 4) if timings else None,
    }
    if phi_exponent is not None:
        rec["phi_exponent"] = phi_exponent
    if res.extra:
        rec.update(sorted(res.extra.items()))
    return rec


def _run_item(item):
    sid, n, mode, trials, seed, certify, phi_exponent = item
    return run_statement(sid, n, mode, ParamSampler(seed), trials, phi_exponent, certify)


def _map(fn, items):
    workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    if workers <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


def _modes(choice):
    return ["half", "full"] if choice == "both" else [choice]


def _plan_statements(args, phi_exponent):
    ids = args.statement or statement_ids()
    explicit_ids = bool(args.statement)
    items = []
    for sid in ids:
        spec = get_statement(sid)
        n_vals, explicit_n = parse_int_set(args.n, odd_only=True)
        for n in n_vals:
            if not spec.applicability(n) or n < 1 or n % 2 == 0:
                if explicit_n and explicit_ids:
                    spec.check_n(n)  # raises ApplicabilityError
                continue
            for mode in _modes(args.m_mode):
                if mode in spec.m_modes:
                    items.append((sid, n, mode, args.trials, args.seed, args.certify, phi_exponent))
    return items


def cmd_verify(args, phi_exponent=None):
    items = _plan_statements(args, phi_exponent)
    records = []
    for batch in _map(_run_item, items):
        records.extend(_record(r, args.timings, phi_exponent) for r in batch)
    records.sort(key=lambda r: (r["statement"], r["n"], r["m_mode"], r["trial"]))
    return records


def cmd_scan(args):
    if args.extra_exponent is None:
        raise ConfigError("scan needs --extra-exponent")
    if args.extra_exponent < 0:
        raise ConfigError("--extra-exponent must be nonnegative")
    return cmd_verify(args, args.extra_exponent)


def _identity_item(item):
    name, n, trials, seed, timings = item
    t0 = time.perf_counter()
    out = run_identity(name, n, trials, seed)
    dt = time.perf_counter() - t0
    return [{
        "statement": name, "n": n, "m_mode": "exact", "trial": t,
        "params": {k: str(v) for k, v in sorted(p.items())},
        "modulus": "identity", "per_factor": [], "denominator_coprime": True,
        "pass": ok, "notes": "" if ok else "sides differ",
        "resamples": 0, "elapsed": round(dt / len(out), 4) if timings else None,
    } for t, (p, ok) in enumerate(out)]


def cmd_identity(args):
    names = args.statement or identity_ids()
    for name in names:
        if name not in identity_ids():
            raise UnknownStatementError(name)
    n_vals, _ = parse_int_set(args.n if args.n != "3-15" else "0-6", odd_only=False)
    if any(n < 0 for n in n_vals):
        raise ConfigError("truncations must be nonnegative")
    items = [(name, n, args.trials, args.seed, args.timings) for name in names for n in n_vals]
    records = [r for batch in _map(_identity_item, items) for r in batch]
    records.sort(key=lambda r: (r["statement"], r["n"], r["trial"]))
    return records


def _padic_item(item):
    sid, p, r, timings = item
    t0 = time.perf_counter()
    res = classical_report(sid, p, r)
    rec = res.to_dict()
    rec["per_factor"] = [{"factor": f"p={p}", "required": res.exponent, "achieved": res.achieved}]
    rec["elapsed"] = round(time.perf_counter() - t0, 4) if timings else None
    return rec


def cmd_padic(args):
    if args.r < 1:
        raise ConfigError("--r must be positive")
    ids = args.statement or classical_ids()
    for sid in ids:
        if sid not in classical_ids():
            raise UnknownStatementError(sid)
    primes, _ = parse_int_set(args.primes, odd_only=True)
    if args.statement:
        bad = [p for p in primes if not is_odd_prime(p)]
        if bad:
            raise ConfigError(f"not odd primes: {bad}")
    primes = [p for p in primes if is_odd_prime(p)]
    items = []
    for sid in ids:
        for p in primes:
            # explicitly requested statements must apply; the default set is filtered
            if args.statement or classical_applicable(sid, p, args.r):
                items.append((sid, p, args.r, args.timings))
    records = _map(_padic_item, items)
    records.sort(key=lambda r: (r["statement"], r["p"], r["r"]))
    return records


# -- emission -----------------------------------------------------------------

def build_document(args, records):
    config = {
        "command": args.command,
        "statements": list(args.statement or []),
        "m_mode": getattr(args, "m_mode", None),
        "trials": args.trials,
        "seed": args.seed,
        "certify": getattr(args, "certify", False),
        "extra_exponent": getattr(args, "extra_exponent", None),
    }
    if args.command == "padic":
        config.update(primes=args.primes, r=args.r)
    else:
        config["n"] = args.n
    passed = sum(1 for r in records if r["pass"])
    return {
        "tool": "qsupercong",
        "version": __version__,
        "config": config,
        "summary": {"records": len(records), "passed": passed, "failed": len(records) - passed},
        "records": records,
    }


def _params_text(params):
    return ";".join(f"{k}={v}" for k, v in sorted(params.items()))


def emit(doc, fmt="json"):
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    records = doc["records"]
    if fmt == "csv":
        width = max((len(r.get("per_factor", [])) for r in records), default=0)
        head = ["statement", "n", "p", "r", "m_mode", "trial", "params", "modulus", "pass",
                "denominator_coprime", "elapsed"]
        for i in range(1, width + 1):
            head += [f"factor_{i}", f"required_{i}", f"achieved_{i}"]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(head)
        for r in records:
            row = [r.get("statement"), r.get("n", ""), r.get("p", ""), r.get("r", ""),
                   r.get("m_mode", ""), r.get("trial", ""), _params_text(r.get("params", {})),
                   r.get("modulus", ""), r["pass"], r.get("denominator_coprime", ""),
                   "" if r.get("elapsed") is None else r["elapsed"]]
            for f in r.get("per_factor", []):
                row += [f["factor"], f["required"], "inf" if f["achieved"] is None else f["achieved"]]
            row += [""] * (len(head) - len(row))
            w.writerow(row)
        return buf.getvalue()
    if fmt == "text":
        lines = []
        for r in records:
            where = f"p={r['p']} r={r['r']}" if "p" in r else f"n={r['n']} {r['m_mode']} trial={r['trial']}"
            vals = ", ".join(
                f"{f['factor']}: {'inf' if f['achieved'] is None else f['achieved']}/{f['required']}"
                for f in r.get("per_factor", []))
            params = _params_text(r.get("params", {}))
            lines.append(" ".join(x for x in ("PASS" if r["pass"] else "FAIL", r["statement"], where,
                                              params, f"[{vals}]" if vals else "") if x))
        s = doc["summary"]
        lines.append(f"{s['passed']}/{s['records']} passed")
        return "\n".join(lines) + "\n"
    raise ConfigError(f"unknown format {fmt!r}")


def build_parser():
    ap = argparse.ArgumentParser(prog="qsupercong", description="Exact verification of q-supercongruences.")
    ap.add_argument("--version", action="version", version=f"qsupercong {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, n_default="3-15"):
        p.add_argument("--statement", nargs="+", help="statement ids (default: all)")
        p.add_argument("--trials", type=int, default=3)
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--out", help="write the report here instead of standard output")
        p.add_argument("--timings", action="store_true", help="record per-check wall time")

    for name, helptext in (("verify", "check registered q-congruences"),
                           ("scan", "check statements at a different Phi_n exponent")):
        p = sub.add_parser(name, help=helptext)
        common(p)
        p.add_argument("--n", default="3-15", help="odd n: a range like 3-15 or a list like 3,7,11")
        p.add_argument("--m-mode", choices=("half", "full", "both"), default="both")
        p.add_argument("--certify", action="store_true",
                       help="use a parameter grid exceeding the degree bound instead of random draws")
        p.add_argument("--extra-exponent", type=int, default=None,
                       help="(scan) exponent e of Phi_n in the modulus [n]Phi_n^e or Phi_n^e")

    p = sub.add_parser("identity", help="check summation/transformation oracles")
    common(p)
    p.add_argument("--n", default="3-15", help="truncations, default 0-6")

    p = sub.add_parser("padic", help="check classical supercongruences at primes")
    common(p)
    p.add_argument("--primes", default="3-13", help="odd primes: a range or a list")
    p.add_argument("--r", type=int, default=1, help="exponent r in p^r (default 1)")
    return ap


def run(args):
    """Execute a parsed configuration; returns (document, exit status)."""
    if args.trials < 1:
        raise ConfigError("--trials must be at least 1")
    if args.command == "verify":
        records = cmd_verify(args)
    elif args.command == "scan":
        records = cmd_scan(args)
    elif args.command == "identity":
        records = cmd_identity(args)
    else:
        records = cmd_padic(args)
    doc = build_document(args, records)
    return doc, 0 if all(r["pass"] for r in records) else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, status = run(args)
        text = emit(doc, args.format)
    except (ConfigError, ApplicabilityError, DegeneracyError, UnknownStatementError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"qsupercong: error: {msg}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
