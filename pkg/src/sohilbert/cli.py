"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input.
Reports go to stdout, progress to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from math import comb

from sohilbert import __version__, oracle, polys
from sohilbert.cover import CoverError, cover_series, family_report
from sohilbert.series import SeriesError, expand, h_vector
from sohilbert.symdet import (
    RingSpec,
    SpecError,
    a_invariant_R,
    h_poly_R,
    is_gorenstein,
    krull_dim,
    same_parity,
)

log = logging.getLogger("sohilbert")

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


class InvalidInput(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    prime: int = 32003
    seed: int = 0
    oracle_budget: int = 4
    output_format: str = "text"
    guard_ambient: int = oracle.DEFAULT_GUARD.ambient

    @property
    def field(self) -> polys.PrimeField:
        return polys.PrimeField(self.prime)

    @property
    def guard(self) -> oracle.Guard:
        return oracle.Guard(ambient=self.guard_ambient)


def fmt_tuple(xs) -> str:
    return "(" + ", ".join(str(x) for x in xs) + ")"


def _stamp(cfg: RunConfig) -> dict:
    return {"prime": cfg.prime, "seed": cfg.seed, "version": __version__}


def _spec(t, n) -> RingSpec:
    try:
        return RingSpec(t, n)
    except SpecError as exc:
        raise InvalidInput(str(exc)) from None


# --- reports ----------------------------------------------------------------


def hvector_report(t: int, n: int, cfg: RunConfig, max_deg: int = 4) -> dict:
    spec = _spec(t, n)
    aR = a_invariant_R(spec)
    rep = {
        "t": t,
        "n": n,
        "grading": "Rescaled" if t % 2 == 0 else "YGrading",
        "dim": krull_dim(spec),
        "h_vector": None,
        "a_invariant_Y": -t * n,
        "a_invariant_rescaled": -t * n // 2 if t % 2 == 0 else None,
        "gorenstein_R": is_gorenstein(spec),
        "palindrome": None,
        "unimodal": None,
        "gap": None,
        "h_vector_R": None,
        "a_invariant_R_Y": aR,
        "a_invariant_R_rescaled": aR // 2,
        "cover_source": None,
        "hilbert_table_R": None,
        "hilbert_table_cover": None,
    }
    try:
        rep["h_vector_R"] = list(h_poly_R(spec, cfg.oracle_budget, field=cfg.field, guard=cfg.guard).numerator.coeffs)
    except oracle.BudgetError as exc:
        log.warning("h-vector of R not computed: %s", exc)

    if t % 2:
        log.info("t odd: no semistandard grading, emitting Y-graded tables")
        rep["hilbert_table_R"] = oracle.hilbert_function(
            spec, oracle.Label.GRAM_ONLY, max_deg, cfg.field, cfg.guard, rescale=False
        ).dims
        rep["hilbert_table_cover"] = oracle.hilbert_function(
            spec, oracle.Label.GRAM_PLUS_MINORS, max_deg, cfg.field, cfg.guard, rescale=False
        ).dims
    else:
        s = cover_series(spec, cfg.oracle_budget, field=cfg.field, guard=cfg.guard)
        prof = h_vector(s)
        rep["h_vector"] = list(prof.h)
        rep["palindrome"] = prof.palindrome
        rep["unimodal"] = prof.unimodal
        rep["cover_source"] = "closed" if same_parity(spec) else "oracle"
        if n == t + 2:
            m = t // 2
            rep["gap"] = prof.h[m] - prof.h[m + 1]
    rep.update(_stamp(cfg))
    return rep


def scan_rows(m_min: int, m_max: int) -> list[dict]:
    if not 1 <= m_min <= m_max <= 8:
        raise InvalidInput(f"need 1 <= m_min <= m_max <= 8, got {m_min}..{m_max}")
    rows = []
    for m in range(m_min, m_max + 1):
        r = family_report(m)
        rows.append(
            {
                "m": m,
                "t": r.spec.t,
                "n": r.spec.n,
                "dim": r.series.dim,
                "h_vector": list(r.profile.h),
                "gap": r.gap,
                "unimodal": r.profile.unimodal,
            }
        )
    return rows


def verify_report(t: int, n: int, max_deg: int, cfg: RunConfig, trials: int = 5) -> dict:
    """Oracle against closed-form (or reconstructed) expansions, plus Jacobian dimension."""
    spec = _spec(t, n)
    field, guard = cfg.field, cfg.guard
    checks = []

    def compare(name, source, grading, expected, label, rescale):
        log.info("oracle %s up to degree %d", name, max_deg)
        table = oracle.hilbert_function(spec, label, max_deg, field, guard, rescale=rescale)
        got = table.dims
        first = next((D for D, (a, b) in enumerate(zip(got, expected)) if a != b), None)
        checks.append(
            {
                "ring": name,
                "source": source,
                "grading": grading,
                "oracle": got,
                "expected": expected,
                "first_mismatch": first,
                "pass": first is None,
            }
        )

    hsR = h_poly_R(spec, cfg.oracle_budget, field=field, guard=guard)
    srcR = "closed" if n == t + 2 else "reconstructed"
    compare("R", srcR, "Rescaled", expand(hsR, max_deg), oracle.Label.GRAM_ONLY, True)

    if t % 2 == 0:
        sC = cover_series(spec, cfg.oracle_budget, field=field, guard=guard)
        srcC = "closed" if same_parity(spec) else "reconstructed"
        compare("cover", srcC, "Rescaled", expand(sC, max_deg), oracle.Label.GRAM_PLUS_MINORS, True)
    elif t == 1:
        poly_ring = [comb(n - 1 + D, n - 1) for D in range(max_deg + 1)]
        compare("cover", "polynomial ring", "YGrading", poly_ring, oracle.Label.GRAM_PLUS_MINORS, False)
    else:
        log.info("t odd and > 1: no closed form for the cover series, skipped")

    dim = krull_dim(spec)
    jac = {}
    for label in oracle.Label:
        gens = oracle.generator_set(spec, label, field)
        jac[str(label)] = oracle.jacobian_dim(gens, field, trials, cfg.seed)
    rep = {
        "t": t,
        "n": n,
        "max_deg": max_deg,
        "dim": dim,
        "checks": checks,
        "jacobian_dim": jac,
        "jacobian_pass": all(v == dim for v in jac.values()),
    }
    rep["passed"] = all(c["pass"] for c in checks) and rep["jacobian_pass"]
    rep.update(_stamp(cfg))
    return rep


def invariance_report(t: int, n: int, samples: int, cfg: RunConfig) -> dict:
    spec = _spec(t, n)
    if samples < 0:
        raise InvalidInput("samples must be nonnegative")
    r = polys.invariance_check(spec, cfg.field, samples, cfg.seed)
    delta_ok = polys.delta_identity_check(t, cfg.field)
    rep = {
        "t": t,
        "n": n,
        "samples": samples,
        "so_fixed": r.so_fixed,
        "reflection_sign": r.reflection_ok,
        "delta_identity": delta_ok,
        "failures": [list(f) for f in r.failures[:20]],
        "passed": r.passed and delta_ok,
    }
    rep.update(_stamp(cfg))
    return rep


# --- output -------------------------------------------------------------------


def _csv_value(v):
    if isinstance(v, list):
        return fmt_tuple(v)
    if v is None:
        return ""
    return v


def render(rows: list[dict], fmt: str, payload: dict | None = None) -> str:
    if fmt == "json":
        return json.dumps(payload if payload is not None else rows[0], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        flat = [{k: _csv_value(v) for k, v in r.items() if not isinstance(v, (dict,)) and k != "checks"} for r in rows]
        w = csv.DictWriter(buf, fieldnames=list(flat[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(flat)
        return buf.getvalue()
    lines = []
    for r in rows:
        for k, v in r.items():
            if isinstance(v, list) and all(isinstance(x, int) for x in v):
                v = fmt_tuple(v)
            elif isinstance(v, (list, dict)):
                v = json.dumps(v)
            elif v is None:
                v = "null"
            lines.append(f"{k}: {v}")
        lines.append("")
    return "\n".join(lines)


# --- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=32003, help="odd prime modulus for the oracle")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--oracle-budget", type=int, default=4, help="largest rescaled degree the oracle may compute")
    common.add_argument("--guard-ambient", type=int, default=oracle.DEFAULT_GUARD.ambient)

    parser = argparse.ArgumentParser(prog="sohilbert", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hvector", parents=[common], help="h-vectors of R and its cover")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-deg", type=int, default=4, help="table depth for odd t (Y grading)")

    p = sub.add_parser("scan", parents=[common], help="the 2m x (2m+2) family")
    p.add_argument("--m-min", type=int, default=1)
    p.add_argument("--m-max", type=int, default=6)

    p = sub.add_parser("verify", parents=[common], help="oracle versus closed forms")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-deg", type=int, default=3)
    p.add_argument("--trials", type=int, default=5)

    p = sub.add_parser("invariance", parents=[common], help="SO_t / O_t invariance of the generators")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO)
    log.propagate = False
    try:
        return _dispatch(args)
    finally:
        log.removeHandler(handler)


def _dispatch(args) -> int:
    try:
        cfg = RunConfig(args.prime, args.seed, args.oracle_budget, args.format, args.guard_ambient)
        cfg.field
        if args.command == "hvector":
            rep = hvector_report(args.t, args.n, cfg, args.max_deg)
            sys.stdout.write(render([rep], cfg.output_format))
            return EXIT_OK
        if args.command == "scan":
            try:
                rows = scan_rows(args.m_min, args.m_max)
            except CoverError as exc:
                log.error("scan assertion failed: %s", exc)
                return EXIT_MISMATCH
            payload = {"rows": rows, **_stamp(cfg)}
            if cfg.output_format == "csv":
                rows = [{**r, **_stamp(cfg)} for r in rows]
            sys.stdout.write(render(rows, cfg.output_format, payload))
            return EXIT_OK
        if args.command == "verify":
            rep = verify_report(args.t, args.n, args.max_deg, cfg, args.trials)
            sys.stdout.write(render([rep], cfg.output_format))
            if not rep["passed"]:
                bad = next((c for c in rep["checks"] if not c["pass"]), None)
                if bad:
                    log.error("FAIL: %s differs first at degree %s", bad["ring"], bad["first_mismatch"])
                else:
                    log.error("FAIL: Jacobian rank %s != dim %s", rep["jacobian_dim"], rep["dim"])
                return EXIT_MISMATCH
            log.info("PASS")
            return EXIT_OK
        if args.command == "invariance":
            rep = invariance_report(args.t, args.n, args.samples, cfg)
            sys.stdout.write(render([rep], cfg.output_format))
            return EXIT_OK if rep["passed"] else EXIT_MISMATCH
    except (InvalidInput, SpecError, polys.PolyError, oracle.OracleError, SeriesError, CoverError) as exc:
        log.error("error: %s", exc)
        return EXIT_INVALID
    return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
