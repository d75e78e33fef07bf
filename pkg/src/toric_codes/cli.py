"""Command-line surface: build codes from declarative JSON job files,
compute distances and bounds, decode received words, and reproduce the
golden parameter tables.

Exit codes: 0 success, 2 input validation, 3 computation error, 4 golden
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .bounds import bound_report
from .codes import CodeError, LinearCode, WorkCapExceeded, min_distance, reed_muller, rm_predicted_params
from .decoder import SetupError, decode as decoder_decode, setup as decoder_setup
from .field import GF, FieldError, make_field
from .geometry import Fan2D, FanError, PoleError, TDivisor, polytope_of_divisor
from .reproduce import format_results, reproduce_table
from .tables import GOLDEN_TABLES
from .toric import ToricCodeSpec, build as toric_build, default_points


class ValidationError(ValueError):
    pass


EXIT_VALIDATION = 2
EXIT_COMPUTATION = 3
EXIT_MISMATCH = 4


# -- job files ------------------------------------------------------------------


def _require_keys(obj: dict, allowed: dict[str, bool], where: str) -> None:
    for key in obj:
        if key not in allowed:
            raise ValidationError(f"{where}: unknown key {key!r}")
    for key, required in allowed.items():
        if required and key not in obj:
            raise ValidationError(f"{where}: missing required key {key!r}")


def load_job(path: str) -> dict:
    try:
        with open(path) as fh:
            job = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read job file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"job file is not valid JSON: {exc}") from exc
    if not isinstance(job, dict):
        raise ValidationError("job file must contain a JSON object")
    _require_keys(
        job,
        {"field": True, "fan": True, "divisor": True, "points": False,
         "mindist": False, "decoder": False, "bounds": False},
        "job",
    )
    _require_keys(job["field"], {"p": True, "m": False, "modulus": False}, "field")
    _require_keys(job["fan"], {"rays": True}, "fan")
    if "points" in job:
        _require_keys(job["points"], {"torus": False, "orbits": False}, "points")
    if "mindist" in job:
        _require_keys(
            job["mindist"], {"method": False, "workers": False, "work_cap": False}, "mindist"
        )
    if "decoder" in job:
        _require_keys(job["decoder"], {"gprime": True, "list_cap": False}, "decoder")
    if "bounds" in job:
        _require_keys(job["bounds"], {"conjectures": False}, "bounds")
    return job


def job_to_spec(job: dict) -> ToricCodeSpec:
    fld = job["field"]
    try:
        gf = make_field(int(fld["p"]), int(fld.get("m", 1)), fld.get("modulus"))
        fan = Fan2D(job["fan"]["rays"])
        div = TDivisor(job["divisor"])
        if len(div) != fan.s:
            raise ValidationError(
                f"divisor has {len(div)} coefficients for a {fan.s}-ray fan"
            )
        pts_cfg = job.get("points", {})
        torus = bool(pts_cfg.get("torus", True))
        orbits = [int(i) - 1 for i in pts_cfg.get("orbits", [])]  # 1-based in files
        for i in orbits:
            if not 0 <= i < fan.s:
                raise ValidationError(f"orbit ray index {i + 1} out of range 1..{fan.s}")
        points = default_points(gf, fan, torus=torus, orbits=orbits)
        if not points:
            raise ValidationError("empty point set")
        return ToricCodeSpec(gf, fan, div, points)
    except (FieldError, FanError) as exc:
        raise ValidationError(str(exc)) from exc


# -- build output serialization ----------------------------------------------------


def serialize_build(result) -> str:
    spec = result.spec
    doc = {
        "field": {
            "p": spec.gf.p,
            "m": spec.gf.m,
            "q": spec.gf.q,
            "modulus": list(spec.gf.modulus),
        },
        "fan": {"rays": [list(v) for v in spec.fan.rays]},
        "divisor": list(spec.divisor.coeffs),
        "n": result.n,
        "k": result.k,
        "kc": result.kc,
        "injective": result.injective,
        "basis": [list(a) for a in spec.basis],
        "generator": [[int(x) for x in row] for row in result.eval_matrix],
        "warnings": list(result.warnings),
    }
    return json.dumps(doc, indent=1)


def load_build(path: str) -> tuple[GF, LinearCode, dict]:
    with open(path) as fh:
        doc = json.load(fh)
    gf = make_field(doc["field"]["p"], doc["field"]["m"], doc["field"]["modulus"])
    code = LinearCode(gf, np.array(doc["generator"], dtype=np.int16))
    return gf, code, doc


# -- subcommands ---------------------------------------------------------------------


def cmd_build(args) -> int:
    job = load_job(args.spec)
    result = toric_build(job_to_spec(job))
    text = serialize_build(result)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _mindist_report(code: LinearCode, job: dict, args):
    cfg = job.get("mindist", {})
    method = args.method or cfg.get("method", "auto")
    workers = args.workers or int(cfg.get("workers", 1))
    cap = args.work_cap or cfg.get("work_cap")
    kwargs = {"workers": workers}
    if cap is not None:
        kwargs["work_cap"] = int(cap)
        kwargs["work_budget"] = int(cap)
    return min_distance(code, method=method, **kwargs)


def cmd_mindist(args) -> int:
    if args.code:
        _, code, _ = load_build(args.code)
        job = {}
    else:
        job = load_job(args.spec)
        code = toric_build(job_to_spec(job)).code
    if code.k == 0:
        raise CodeError("empty code")
    rep = _mindist_report(code, job, args)
    doc = {
        "n": code.n,
        "k": code.k,
        "d": rep.d if rep.exact else None,
        "bounds": None if rep.exact else [rep.lower, rep.upper],
        "method": rep.method,
        "work": rep.work,
        "witness": [int(x) for x in rep.witness],
    }
    print(json.dumps(doc, indent=1))
    return 0


def cmd_bounds(args) -> int:
    job = load_job(args.spec)
    spec = job_to_spec(job)
    result = toric_build(spec)
    d = None
    if not args.no_mindist:
        d = _mindist_report(result.code, job, args).d
    poly = polytope_of_divisor(spec.fan, spec.divisor)
    rep = bound_report(spec.gf.q, spec.fan, spec.divisor, poly, result.n, result.k, d)
    doc = {
        "n": rep.n,
        "k": rep.k,
        "d": rep.d,
        "singleton_defect": rep.singleton_defect,
        "segment_upper": rep.segment_upper,
        "gv_rate": rep.gv_rate,
        "beats_gv": rep.beats_gv,
        "conjecture1": {
            "applicable": rep.conj1.applicable,
            "N": rep.conj1.N,
            "all_N": list(rep.conj1.all_N),
            "d_lower": str(rep.conj1.d_lower) if rep.conj1.d_lower is not None else None,
        },
        "conjecture2": {
            "smooth": rep.conj2.smooth,
            "strictly_convex": rep.conj2.strictly_convex,
            "degree_ok": rep.conj2.degree_ok,
            "applicable": rep.conj2.applicable,
            "predicted_k": rep.conj2.predicted_k,
            "d_lower": rep.conj2.d_lower,
            "deg_G2": str(rep.conj2.deg_G2),
        },
    }
    print(json.dumps(doc, indent=1))
    return 0


def cmd_decode(args) -> int:
    job = load_job(args.spec)
    if "decoder" not in job:
        raise ValidationError("job file has no decoder block")
    spec = job_to_spec(job)
    gprime = TDivisor(job["decoder"]["gprime"])
    if len(gprime) != spec.fan.s:
        raise ValidationError("decoder.gprime length does not match the fan")
    st = decoder_setup(spec, gprime)
    try:
        with open(args.received) as fh:
            received = [int(tok) for tok in fh.read().split()]
    except (OSError, ValueError) as exc:
        raise ValidationError(f"cannot read received vector: {exc}") from exc
    if len(received) != st.n:
        raise ValidationError(f"received vector has {len(received)} symbols, n = {st.n}")
    out = decoder_decode(
        np.array(received, dtype=np.int16),
        st,
        list_cap=int(job["decoder"].get("list_cap", 256)),
    )
    doc = {
        "status": out.status,
        "zero_set": [i + 1 for i in out.zero_set],  # 1-based positions
        "within_zero_cap": out.within_zero_cap,
        "zero_cap": st.zero_cap,
        "condition_c": st.condition_c,
        "diagnostics": out.diagnostics,
    }
    if out.status == "unique":
        doc["error"] = [int(x) for x in out.errors_found]
        doc["codeword"] = [int(x) for x in st.spec.gf.vsub(np.array(received, dtype=np.int16), out.errors_found)]
    elif out.status == "list":
        doc["errors"] = [[int(x) for x in e] for e in out.errors_found]
    print(json.dumps(doc, indent=1))
    return 0


def cmd_reproduce(args) -> int:
    results = reproduce_table(
        args.table, workers=args.workers or 1, work_budget=args.work_cap
    )
    print(format_results(results, args.format))
    bad = [r for r in results if not r.ok]
    if bad:
        print(f"\n{len(bad)} row(s) FAILED the golden diff", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


def cmd_rm(args) -> int:
    gf = make_field(args.p, args.m_ext)
    code = reed_muller(gf, args.m, args.ell)
    n, k, d = rm_predicted_params(gf.q, args.m, args.ell)
    doc = {
        "q": gf.q,
        "m": args.m,
        "ell": args.ell,
        "n": code.n,
        "k": code.k,
        "predicted": {"n": n, "k": k, "d": d},
    }
    if args.mindist:
        doc["d"] = min_distance(code).d
    print(json.dumps(doc, indent=1))
    return 0


# -- entry point -----------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="toric-codes",
        description="evaluation codes from 2-D fans over small finite fields",
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a code from a JSON job file")
    b.add_argument("--spec", required=True)
    b.add_argument("--output", help="write the serialized code here instead of stdout")
    b.set_defaults(fn=cmd_build)

    m = sub.add_parser("mindist", help="exact minimum distance")
    src = m.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec")
    src.add_argument("--code", help="a build output file")
    m.add_argument("--method", choices=["auto", "exhaustive", "infoset"])
    m.add_argument("--workers", type=int)
    m.add_argument("--work-cap", type=int)
    m.set_defaults(fn=cmd_mindist)

    bo = sub.add_parser("bounds", help="bound report for a job file")
    bo.add_argument("--spec", required=True)
    bo.add_argument("--no-mindist", action="store_true")
    bo.add_argument("--method", choices=["auto", "exhaustive", "infoset"])
    bo.add_argument("--workers", type=int)
    bo.add_argument("--work-cap", type=int)
    bo.set_defaults(fn=cmd_bounds)

    de = sub.add_parser("decode", help="decode a received word")
    de.add_argument("--spec", required=True)
    de.add_argument("--received", required=True, help="whitespace-separated element indices")
    de.set_defaults(fn=cmd_decode)

    re_ = sub.add_parser("reproduce", help="recompute a golden table and diff it")
    re_.add_argument("table", choices=list(GOLDEN_TABLES))
    re_.add_argument("--format", choices=["csv", "markdown", "json"], default="markdown")
    re_.add_argument("--workers", type=int)
    re_.add_argument("--work-cap", type=int)
    re_.set_defaults(fn=cmd_reproduce)

    rm = sub.add_parser("rm", help="Reed-Muller baseline code")
    rm.add_argument("--p", type=int, required=True, help="field characteristic")
    rm.add_argument("--m-ext", type=int, default=1, help="field extension degree")
    rm.add_argument("-m", "--m", dest="m", type=int, required=True, help="variables")
    rm.add_argument("-l", "--ell", dest="ell", type=int, required=True)
    rm.add_argument("--mindist", action="store_true")
    rm.set_defaults(fn=cmd_rm)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValidationError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (FieldError, FanError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (PoleError, CodeError, SetupError, WorkCapExceeded) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
