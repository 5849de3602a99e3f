"""Command-line interface.

Subcommands
-----------
gen frobenius|spread|circulant   write a scheme or graph coloring as JSON
check axioms|tcond|parabolics|separability|schurity
iso  alg|induced                 relation-level and point-level isomorphisms
classify thm2|wl                 arithmetic classification pipelines
verify-paper                     run the nine-criterion verification suite

Exit codes: 0 = pass/success, 2 = input error, 3 = check failed with a
certificate, 4 = unresolved/unknown.

JSON formats (exact field sets; all reports are emitted with sorted keys
and two-space indentation, so identical inputs give byte-identical bytes
regardless of thread count):

  scheme file   {"n": int, "rank": int, "star": [int], "colors": [[int]]}
  spec file     {"kernel": [{"cyclic": m, "units": [u]} |
                            {"elem_abelian": [p, dim], "matrices": [[[int]]]}],
                 "complement_order": k}
  psi file      {"mapping": [int]}    relation i of the source maps to
                                      mapping[i] of the target

The random seed only shuffles the scan order of candidate base points in
`iso induced`; every verdict is seed-independent.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field

import numpy as np

from .algiso import (
    RelationBijection,
    find_algebraic_isomorphisms,
    induced_isomorphism,
    schurity_via_base_triples,
)
from .circulants import CirculantSpec, circulant_from_connection, color_matrix, frobenius_circulant
from .frobenius import FrobeniusError, FrobeniusSpec, CyclicFactor, build_frobenius, invariant_lattice, thm2_profile
from .arith import mult_order
from .parabolic import divide_check, enumerate_parabolics, indistinguishing_number, separability_verdict
from .scheme import Scheme, SchemeError, from_orbitals, wl_closure
from .spreads import desarguesian_spread, hall_spread, scalar_spec, spread_scheme
from .tcond import check_t_condition
from .verify import run_all
from .wldim import dimwl_verdict

PASS, INPUT_ERROR, CHECK_FAILED, UNRESOLVED = 0, 2, 3, 4


@dataclass
class RunConfig:
    """Resolved invocation: what to run, on which inputs, how."""

    subcommand: str
    action: str = ""
    paths: list = field(default_factory=list)
    threads: int = 1
    fmt: str = "json"
    seed: int = 0
    options: dict = field(default_factory=dict)


def _default_threads() -> int:
    raw = os.environ.get("PFSCHEME_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit(payload: dict, fmt: str, out_path: str | None = None) -> None:
    if fmt == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        text = "".join("%s: %s\n" % (k, payload[k]) for k in sorted(payload))
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise SystemExit(_fail("cannot read %s: %s" % (path, exc)))
    except json.JSONDecodeError as exc:
        raise SystemExit(_fail("%s is not valid JSON (line %d column %d)"
                               % (path, exc.lineno, exc.colno)))


def _fail(message: str) -> int:
    sys.stderr.write("error: %s\n" % message)
    return INPUT_ERROR


def _load_scheme(path: str) -> Scheme:
    d = _load_json(path)
    try:
        if "star" in d and "rank" in d:
            return Scheme.from_json_dict(d)
        return Scheme(d["colors"])
    except (KeyError, SchemeError) as exc:
        raise SystemExit(_fail("%s: %s" % (path, exc)))


def _load_colors(path: str) -> np.ndarray:
    d = _load_json(path)
    if "colors" not in d:
        raise SystemExit(_fail("%s: missing 'colors'" % path))
    return np.asarray(d["colors"], dtype=np.int64)


def _parse_ints(raw: str) -> list[int]:
    try:
        return [int(x) for x in raw.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise SystemExit(_fail("expected a comma-separated integer list, got %r" % raw))


def _spec_from_args(args) -> FrobeniusSpec:
    try:
        if args.spec:
            return FrobeniusSpec.from_json_dict(_load_json(args.spec))
        if args.cyclic:
            vals = _parse_ints(args.cyclic)
            if len(vals) != 2:
                raise SystemExit(_fail("--cyclic needs exactly M,U"))
            m, u = vals
            return FrobeniusSpec((CyclicFactor(m, (u,)),), mult_order(u, m))
        if args.scalar:
            vals = _parse_ints(args.scalar)
            q = vals[0]
            dim = vals[1] if len(vals) > 1 else 2
            return scalar_spec(q, dim)
    except FrobeniusError as exc:
        raise SystemExit(_fail(str(exc)))
    raise SystemExit(_fail("provide --spec FILE, --cyclic M,U, or --scalar Q[,DIM]"))


# -- gen ---------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.kind == "frobenius":
        spec = _spec_from_args(args)
        try:
            scheme = from_orbitals(build_frobenius(spec))
        except FrobeniusError as exc:
            return _fail(str(exc))
        payload = scheme.to_json_dict()
        payload["valency"] = scheme.is_equivalenced()
        payload["fingerprint"] = scheme.fingerprint()
    elif args.kind == "spread":
        try:
            spread = (hall_spread(args.q) if args.plane == "hall"
                      else desarguesian_spread(args.q))
            scheme = spread_scheme(spread)
        except (ValueError, ArithmeticError) as exc:
            return _fail(str(exc))
        payload = scheme.to_json_dict()
        payload["plane"] = args.plane
        payload["fingerprint"] = scheme.fingerprint()
    else:
        try:
            if args.units:
                spec = CirculantSpec(args.n, tuple(_parse_ints(args.units)),
                                     tuple(_parse_ints(args.reps or "1")))
                circ = frobenius_circulant(spec)
            else:
                circ = circulant_from_connection(args.n, _parse_ints(args.conn or ""))
        except ValueError as exc:
            return _fail(str(exc))
        M = color_matrix(circ)
        payload = {"n": circ.n, "connection": sorted(circ.connection),
                   "colors": [[int(x) for x in row] for row in M]}
    _emit(payload, args.format, args.out)
    return PASS


# -- check -------------------------------------------------------------


def cmd_check_axioms(args) -> int:
    d = _load_json(args.scheme)
    try:
        s = Scheme(d["colors"]) if "colors" in d else None
        if s is None:
            return _fail("%s: missing 'colors'" % args.scheme)
        T = s.tensor()
        T.verify_triangle()
        T.verify_row_sums()
    except (KeyError, SchemeError) as exc:
        _emit({"passed": False, "certificate": str(exc)}, args.format)
        return CHECK_FAILED
    _emit({"passed": True, "n": s.n, "rank": s.rank,
           "valencies": list(s.valencies())}, args.format)
    return PASS


def cmd_check_tcond(args) -> int:
    s = _load_scheme(args.scheme)
    report = check_t_condition(s, args.t, workers=args.threads)
    _emit(report.to_json_dict(), args.format)
    return PASS if report.passed else CHECK_FAILED


def cmd_check_parabolics(args) -> int:
    s = _load_scheme(args.scheme)
    paras = enumerate_parabolics(s)
    payload = {
        "n": s.n,
        "rank": s.rank,
        "parabolics": [{"relations": sorted(e.relations), "block_size": e.n_e,
                        "classes": e.num_classes} for e in paras],
    }
    k = s.is_equivalenced()
    if k is not None:
        payload["valency"] = k
        payload["indistinguishing"] = indistinguishing_number(s)
        payload["divide"] = [{"lower": r.n_lower, "upper": r.n_upper,
                              "quotient": r.quotient, "ok": r.ok}
                             for r in divide_check(s, paras)]
    _emit(payload, args.format)
    return PASS


def cmd_check_separability(args) -> int:
    if args.spec:
        spec = FrobeniusSpec.from_json_dict(_load_json(args.spec))
        try:
            verdict = separability_verdict(spec)
        except FrobeniusError as exc:
            return _fail(str(exc))
    else:
        if not args.scheme:
            return _fail("provide --scheme FILE or --spec FILE")
        s = _load_scheme(args.scheme)
        try:
            verdict = separability_verdict(s, k=args.k)
        except SchemeError as exc:
            return _fail(str(exc))
    _emit(verdict.to_json_dict(), args.format)
    return PASS if verdict.separable else UNRESOLVED


def cmd_check_schurity(args) -> int:
    s = _load_scheme(args.scheme)
    try:
        result = schurity_via_base_triples(s)
    except SchemeError as exc:
        return _fail(str(exc))
    _emit(result.to_json_dict(), args.format)
    return PASS if result.schurian else CHECK_FAILED


# -- iso ---------------------------------------------------------------


def cmd_iso_alg(args) -> int:
    src = _load_scheme(args.source)
    dst = _load_scheme(args.target)
    isos, truncated = find_algebraic_isomorphisms(src, dst, limit=args.limit)
    payload = {
        "count": len(isos),
        "truncated": truncated,
        "mappings": [list(f.mapping) for f in isos],
    }
    _emit(payload, args.format)
    if isos:
        return PASS
    return UNRESOLVED if truncated else CHECK_FAILED


def cmd_iso_induced(args) -> int:
    src = _load_scheme(args.source)
    dst = _load_scheme(args.target)
    if args.psi:
        mapping = _load_json(args.psi).get("mapping")
        if mapping is None:
            return _fail("%s: missing 'mapping'" % args.psi)
        try:
            psi = RelationBijection(src, dst, tuple(int(x) for x in mapping))
        except SchemeError as exc:
            return _fail("psi is not an algebraic isomorphism: %s" % exc)
    else:
        try:
            psi = RelationBijection(src, dst, tuple(range(src.rank)))
        except SchemeError as exc:
            return _fail("identity is not an algebraic isomorphism here: %s" % exc)
    mu_candidates = None
    if args.seed:
        order = list(range(dst.n))
        random.Random(args.seed).shuffle(order)
        mu_candidates = order
    try:
        found = induced_isomorphism(src, dst, psi, mu_candidates=mu_candidates)
    except SchemeError as exc:
        return _fail(str(exc))
    if found is None:
        _emit({"induced": False,
               "certificate": "no compatible base triple reconstructs psi"},
              args.format)
        return CHECK_FAILED
    _emit({"induced": True, **found.to_json_dict()}, args.format)
    return PASS


# -- classify ----------------------------------------------------------


def cmd_classify_thm2(args) -> int:
    spec = _spec_from_args(args)
    try:
        lattice = invariant_lattice(spec)
        profile = thm2_profile(spec, lattice)
    except FrobeniusError as exc:
        return _fail(str(exc))
    _emit(profile.to_json_dict(), args.format)
    return PASS


def cmd_classify_wl(args) -> int:
    try:
        if args.units:
            spec = CirculantSpec(args.n, tuple(_parse_ints(args.units)),
                                 tuple(_parse_ints(args.reps or "1")))
            circ = frobenius_circulant(spec)
        else:
            circ = circulant_from_connection(args.n, _parse_ints(args.conn or ""))
    except ValueError as exc:
        return _fail(str(exc))
    verdict = dimwl_verdict(circ)
    _emit(verdict.to_json_dict(), args.format)
    if verdict.verdict == "Exactly2":
        return PASS
    if verdict.verdict == "ExceptionUnresolved":
        return UNRESOLVED
    if "exceeds the search limit" in verdict.reason:
        return UNRESOLVED
    return CHECK_FAILED


# -- verify-paper --------------------------------------------------------


def cmd_verify(args) -> int:
    results = run_all(threads=args.threads)
    for r in results:
        print(r.line())
    payload = {"criteria": [r.to_json_dict() for r in results],
               "all_passed": all(r.passed for r in results)}
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    return PASS if payload["all_passed"] else CHECK_FAILED


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pfscheme", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--threads", type=int, default=_default_threads(),
                   help="worker threads (default: PFSCHEME_THREADS or 1)")
    p.add_argument("--seed", type=int, default=0,
                   help="shuffle candidate scan order in 'iso induced' only")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate schemes and graph colorings")
    gsub = g.add_subparsers(dest="kind", required=True)
    gf = gsub.add_parser("frobenius")
    gf.add_argument("--spec")
    gf.add_argument("--cyclic", help="M,U for Z_M with unit U")
    gf.add_argument("--scalar", help="Q[,DIM] for F_Q^DIM with scalars")
    gf.add_argument("--out")
    gs = gsub.add_parser("spread")
    gs.add_argument("--q", type=int, required=True)
    gs.add_argument("--plane", choices=("desarguesian", "hall"),
                    default="desarguesian")
    gs.add_argument("--out")
    gc = gsub.add_parser("circulant")
    gc.add_argument("--n", type=int, required=True)
    gc.add_argument("--conn", help="comma-separated connection set")
    gc.add_argument("--units", help="unit generators of the complement")
    gc.add_argument("--reps", help="orbit representatives (with --units)")
    gc.add_argument("--out")

    c = sub.add_parser("check", help="run a structural check")
    csub = c.add_subparsers(dest="what", required=True)
    ca = csub.add_parser("axioms")
    ca.add_argument("--scheme", required=True)
    ct = csub.add_parser("tcond")
    ct.add_argument("--scheme", required=True)
    ct.add_argument("--t", type=int, choices=(3, 4), default=4)
    cp = csub.add_parser("parabolics")
    cp.add_argument("--scheme", required=True)
    cs = csub.add_parser("separability")
    cs.add_argument("--scheme")
    cs.add_argument("--spec")
    cs.add_argument("--k", type=int)
    cu = csub.add_parser("schurity")
    cu.add_argument("--scheme", required=True)

    i = sub.add_parser("iso", help="find isomorphisms")
    isub = i.add_subparsers(dest="level", required=True)
    ia = isub.add_parser("alg")
    ia.add_argument("source")
    ia.add_argument("target")
    ia.add_argument("--limit", type=int)
    ii = isub.add_parser("induced")
    ii.add_argument("source")
    ii.add_argument("target")
    ii.add_argument("--psi", help="JSON file with a relation mapping")

    k = sub.add_parser("classify", help="arithmetic classification")
    ksub = k.add_subparsers(dest="pipeline", required=True)
    kt = ksub.add_parser("thm2")
    kt.add_argument("--spec")
    kt.add_argument("--cyclic")
    kt.add_argument("--scalar")
    kw = ksub.add_parser("wl")
    kw.add_argument("--n", type=int, required=True)
    kw.add_argument("--conn")
    kw.add_argument("--units")
    kw.add_argument("--reps")

    sub.add_parser("verify-paper", help="run the nine verification criteria")
    return p


def run(config: RunConfig, args) -> int:
    table = {
        ("gen", ""): cmd_gen,
        ("check", "axioms"): cmd_check_axioms,
        ("check", "tcond"): cmd_check_tcond,
        ("check", "parabolics"): cmd_check_parabolics,
        ("check", "separability"): cmd_check_separability,
        ("check", "schurity"): cmd_check_schurity,
        ("iso", "alg"): cmd_iso_alg,
        ("iso", "induced"): cmd_iso_induced,
        ("classify", "thm2"): cmd_classify_thm2,
        ("classify", "wl"): cmd_classify_wl,
        ("verify-paper", ""): cmd_verify,
    }
    handler = table[(config.subcommand, config.action)]
    return handler(args)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    action = getattr(args, "what", None) or getattr(args, "level", None) \
        or getattr(args, "pipeline", None) or ""
    if args.command == "gen":
        action = ""
    config = RunConfig(subcommand=args.command, action=action,
                       threads=args.threads, fmt=args.format, seed=args.seed)
    try:
        return run(config, args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
