"""Dispatch of CLI subcommands to the library, producing report dictionaries."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any

from . import cells, certify, fan, newton, residue
from .documents import IdealDocument, ParseError
from .errors import (
    ComplexTooLarge,
    DimensionMismatch,
    InvariantViolation,
    NotAResolution,
    NotArtinianError,
    NotIntegrallyClosed,
    UnsupportedDimension,
    ZeroIdealError,
)
from .ideal import MonIdeal, contains, is_artinian

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

INPUT_ERRORS = (
    ParseError,
    DimensionMismatch,
    NotArtinianError,
    ZeroIdealError,
    UnsupportedDimension,
    ComplexTooLarge,
    ValueError,
)


@dataclass
class Options:
    complex_kind: str = "taylor"
    timing: bool = False


def _gens(I: MonIdeal) -> list[list[int]]:
    return [list(g) for g in I.gens]


def _closure(I: MonIdeal, opts: Options) -> tuple[dict, int]:
    closure = newton.integral_closure(I)
    added = [list(g) for g in closure.gens if not contains(I, g)]
    return {
        "closure": _gens(closure),
        "integrally_closed": closure == I,
        "added": added,
    }, EXIT_OK


def _rees(I: MonIdeal, opts: Options) -> tuple[dict, int]:
    return {
        "rees_valuations": [{"ray": list(rho), "order": r} for rho, r in newton.rees_valuations(I)],
    }, EXIT_OK


def _complex(I: MonIdeal, opts: Options) -> cells.LabeledComplex:
    return certify.COMPLEXES[opts.complex_kind](I)


def _resolve(I: MonIdeal, opts: Options) -> tuple[dict, int]:
    C = _complex(I, opts)
    zero = cells.compose_zero(C)
    failures = cells.acyclicity_failures(C) if zero else []
    ok = zero and not failures
    prof = cells.rank_profile(C)
    faces = [
        {"degree": k, "vertices": list(f), "label": list(C.label(f))}
        for k, level in enumerate(C.faces) for f in level
    ]
    return {
        "complex": opts.complex_kind,
        "faces": faces,
        "compose_zero": zero,
        "is_resolution": ok,
        "acyclicity_failures": [list(b) for b in failures],
        "module_ranks": list(prof.module_ranks),
        "differential_ranks": list(prof.ranks),
        "rank_exact": prof.rank_exact,
        "rank_stable": prof.stable,
    }, EXIT_OK if ok else EXIT_NEGATIVE


def _residue(I: MonIdeal, opts: Options) -> tuple[dict, int]:
    C = _complex(I, opts)
    try:
        Rf = residue.residue_current(C, I)
    except NotAResolution as exc:
        return {"complex": opts.complex_kind, "is_resolution": False, "message": str(exc)}, EXIT_NEGATIVE
    ann = residue.annihilator(Rf)
    return {
        "complex": opts.complex_kind,
        "is_resolution": True,
        "components": [
            {"face": list(c.face), "alpha": list(c.alpha), "status": c.status.value} for c in Rf.components
        ],
        "annihilator": _gens(ann),
        "duality": ann == I,
    }, EXIT_OK if ann == I else EXIT_NEGATIVE


def certificate_dict(c: certify.Certificate) -> dict[str, Any]:
    return {
        "alpha": list(c.alpha),
        "rho": list(c.rho),
        "r": c.r,
        "ord_alpha_minus_one": c.ord_alpha_minus_one,
        "gamma": list(c.gamma),
        "k": c.k,
        "beta": list(c.beta),
        "a": c.a,
    }


def _pure_power_level(I: MonIdeal) -> int | None:
    """l if I = (z_1^l, ..., z_n^l), else None."""
    if len(I.gens) != I.dim:
        return None
    degrees = {sum(g) for g in I.gens}
    if len(degrees) == 1 and all(max(g) == sum(g) for g in I.gens):
        return degrees.pop()
    return None


def _certify(I: MonIdeal, opts: Options) -> tuple[dict, int]:
    rep = certify.certify_ideal(I, opts.complex_kind)
    comps = []
    for o in rep.components:
        entry: dict[str, Any] = {"face": list(o.face), "alpha": list(o.alpha), "status": o.status.value}
        if o.certificate is not None:
            entry["certificate"] = certificate_dict(o.certificate)
        elif o.failed:
            entry["witness"] = [
                {"rho": list(s.rho), "r": s.r, "ord_alpha_minus_one": s.ord_alpha_minus_one}
                for s in o.shortfalls
            ]
        comps.append(entry)
    out: dict[str, Any] = {
        "complex": rep.complex_kind,
        "closed": rep.closed,
        "certificates": len(rep.certificates),
        "components": comps,
    }
    ell = _pure_power_level(I)
    if ell is not None:
        out["pure_power_family"] = certify.pure_power_exponents(I.dim, ell)
    return out, EXIT_OK if rep.closed else EXIT_NEGATIVE


def _fan_dict(f: fan.Fan) -> dict[str, Any]:
    return {"rays": [list(r) for r in f.rays], "cones": [list(c.rays) for c in f.cones]}


def _fan(I: MonIdeal, opts: Options) -> tuple[dict, int]:
    nf = fan.normal_fan(I)
    reg = fan.regularize(nf)
    out = {
        "normal_fan": _fan_dict(nf),
        "regular_fan": _fan_dict(reg),
        "divisors": [
            {"ray": list(d.ray), "order": d.order, "ord_dz": d.ord_dz, "is_rees": d.is_rees}
            for d in fan.divisor_table(reg, I)
        ],
    }
    if I.dim == 2:
        out["consecutive_determinants"] = fan.consecutive_determinants(reg)
    return out, EXIT_OK


def _bs(I: MonIdeal, opts: Options) -> tuple[dict, int]:
    nu = min(I.dim, len(I.gens))
    holds = certify.briancon_skoda_check(I, nu)
    return {
        "nu": nu,
        "holds": holds,
        "closure_contained_in_ideal": certify.briancon_skoda_check(I, 1),
    }, EXIT_OK if holds else EXIT_NEGATIVE


def _smallness(I: MonIdeal, opts: Options) -> tuple[dict, int]:
    try:
        rep = certify.smallness_report(I)
    except NotIntegrallyClosed as exc:
        return {"refused": str(exc)}, EXIT_NEGATIVE
    return {
        "fan_refined": rep.fan_refined,
        "divisors": [
            {"ray": list(d.ray), "order": d.order, "ord_dz": d.ord_dz, "is_rees": d.is_rees}
            for d in rep.divisors
        ],
        "components": [
            {"alpha": list(c.alpha), "rho": list(c.rho), "a": c.a, "r": c.r} for c in rep.components
        ],
    }, EXIT_OK


SUBCOMMANDS = {
    "closure": _closure,
    "rees": _rees,
    "resolve": _resolve,
    "residue": _residue,
    "certify": _certify,
    "fan": _fan,
    "bs": _bs,
    "smallness": _smallness,
}


def run_subcommand(name: str, doc: IdealDocument, options: Options | None = None) -> tuple[dict[str, Any], int]:
    """Run one subcommand and return (report, exit code)."""
    opts = options or Options()
    report: dict[str, Any] = {"command": name, "ideal": doc.to_dict()}
    if doc.notice:
        report["notice"] = doc.notice
    t0 = time.perf_counter()
    try:
        if name not in SUBCOMMANDS:
            raise ParseError(f"unknown subcommand {name!r}")
        I = doc.ideal
        if not is_artinian(I):
            raise NotArtinianError(f"{I} is not Artinian")
        result, code = SUBCOMMANDS[name](I, opts)
    except InvariantViolation as exc:
        result, code = {"error": "internal invariant violated", "message": str(exc)}, EXIT_INTERNAL
    except INPUT_ERRORS as exc:
        result, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_INPUT
    report["result"] = result
    report["exit_code"] = code
    if opts.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    return report, code
