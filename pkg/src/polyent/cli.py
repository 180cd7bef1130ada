"""Command line interface.

Every subcommand is deterministic for fixed inputs and seed, re-verifies
exact results by substitution before printing, and uses exit code 0 for
success, 1 for a negative verdict of a decision query, 2 for input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io as pio
from .apps.ces import ces_check, hermitian_complement, vz_family
from .apps.compression import DegenerateSpectrum, compression
from .apps.gbrun import run_gb
from .apps.honr import honr2
from .apps.maxent import maxent_search
from .apps.mub import mub3
from .apps.pnr import pnr_bound, grid_maximum
from .apps.schmidt import schmidt_length_demo
from .apps.sic import sic3
from .gupb import (CanonicalForm, Infeasible, canonicalize_five, invariants,
                   orthogonal_equivalence, reconstruct_ppt_state,
                   sixth_product_vector, validate_sign_tables,
                   verify_main_theorem)
from .poly import ParseError, parse_scalar
from .scalars import format_scalar


def _emit(args, payload, exit_code=0):
    if args.format == "json":
        text = json.dumps(payload, indent=2, default=_jsonify) + "\n"
    else:
        text = payload.get("text", json.dumps(payload, default=_jsonify,
                                              indent=2)) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return exit_code


def _jsonify(obj):
    if hasattr(obj, "coords"):
        return format_scalar(obj)
    if hasattr(obj, "format"):
        return obj.format()
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, Fraction):
        return str(obj)
    return str(obj)


def _scalar_arg(text):
    try:
        return parse_scalar(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _vectors_text(vs):
    return ["[" + ", ".join(format_scalar(x) for x in v) + "]" for v in vs]


def cmd_gb(args):
    with open(args.system) as fh:
        ring, polys = pio.read_system(fh.read())
    res = run_gb(ring, polys, args.order, args.eliminate)
    basis_strs = [g.format(res["order"]) for g in res["basis"]]
    lines = ["reduced basis:"] + ["  " + s for s in basis_strs]
    lines.append("consistent: %s" % res["consistent"])
    payload = {
        "subcommand": "gb",
        "inputs": {"system": args.system, "order": args.order,
                   "eliminate": args.eliminate},
        "verdict": "consistent" if res["consistent"] else "inconsistent",
        "data": {"basis": basis_strs},
        "provenance": {"method": "buchberger-reduced-basis"},
    }
    if res["elimination"] is not None:
        elim_strs = [g.format(res["order"]) for g in res["elimination"]]
        payload["data"]["elimination"] = elim_strs
        lines.append("elimination ideal:")
        lines += ["  " + s for s in elim_strs]
    payload["text"] = "\n".join(lines)
    return _emit(args, payload, 0 if res["consistent"] else 1)


def cmd_ces(args):
    if args.family_z is not None:
        basis, (n, m) = vz_family(args.family_z)
        source = "family z=%s" % format_scalar(args.family_z)
    else:
        if not args.subspace:
            print("error: need a subspace file or --family-z", file=sys.stderr)
            return 2
        with open(args.subspace) as fh:
            text = fh.read()
        basis, n, m = _read_subspace(text, args.param)
        source = args.subspace
    if args.orth_complement:
        basis = hermitian_complement(basis)
    res = ces_check(basis, n, m, four_pattern=args.four_pattern,
                    allow_numeric=(args.backend == "float"), tol=args.tol)
    verdict = "ces" if res["is_ces"] else "not-ces"
    lines = ["subspace: %s" % source, "verdict: %s" % verdict]
    data = {"product_vector_count":
            ("infinite" if res["infinite"] else len(res["product_vectors"]))}
    if res["product_vectors"]:
        data["product_vectors"] = [
            {"a": _vectors_text([a])[0], "b": _vectors_text([b])[0]}
            for a, b in res["product_vectors"]]
        lines.append("product vectors:")
        for a, b in res["product_vectors"]:
            lines.append("  %s (x) %s" % (_vectors_text([a])[0],
                                          _vectors_text([b])[0]))
    payload = {
        "subcommand": "ces-check",
        "inputs": {"source": source, "four_pattern": args.four_pattern},
        "verdict": verdict,
        "data": data,
        "provenance": {"method": "dehomogenized-membership-bases"},
        "text": "\n".join(lines),
    }
    return _emit(args, payload, 0 if res["is_ces"] else 1)


def _read_subspace(text, params):
    from .poly import parse_polynomial
    import re as _re
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    dims = _re.match(r"dims:\s*(\d+)\s*x\s*(\d+)", lines[0], _re.I)
    if not dims:
        raise ParseError("subspace file needs a dims: n x m header")
    n, m = int(dims.group(1)), int(dims.group(2))
    param_names = ()
    body = lines[1:]
    if body and body[0].lower().startswith("params:"):
        param_names = tuple(v.strip() for v in body[0][7:].split(","))
        body = body[1:]
    assignment = {}
    for spec in params or []:
        name, _, value = spec.partition("=")
        assignment[name.strip()] = parse_scalar(value)
    basis = []
    for ln in body:
        entries = [parse_polynomial(tok, param_names) for tok in ln.split()]
        if len(entries) != n * m:
            raise ParseError("basis vector needs %d entries" % (n * m))
        row = []
        for e in entries:
            e = e.substitute(assignment) if assignment else e
            row.append(e.constant_value())
        basis.append(tuple(row))
    return basis, n, m


def cmd_maxent(args):
    with open(args.upb) as fh:
        pvs = pio.read_gupb(fh.read())
    res = maxent_search(pvs, tol=args.tol)
    found = res["verdict"] == "found"
    lines = ["verdict: %s" % res["verdict"]]
    data = {"count": len(res["states"]), "verdict": res["verdict"]}
    mats = []
    for st in res["states"]:
        rows = [[format_scalar(st[i, j]) for j in range(3)]
                for i in range(3)]
        mats.append(rows)
        lines.append("state coordinate matrix:")
        for r in rows:
            lines.append("  [" + ", ".join(r) + "]")
    data["states"] = mats
    payload = {
        "subcommand": "maxent",
        "inputs": {"upb": args.upb},
        "verdict": res["verdict"],
        "data": data,
        "provenance": {"method": "adjugate-membership-quadrics"},
        "text": "\n".join(lines),
    }
    return _emit(args, payload, 0 if found else 1)


def cmd_mub3(args):
    res = mub3()
    lines = ["unbiased vectors:"]
    for v in res["vectors"]:
        lines.append("  " + _vectors_text([v])[0])
    lines.append("groups: %s" % res["groups"])
    lines.append("bases: %d (all pairwise squared overlaps equal 1/3)"
                 % len(res["bases"]))
    payload = {
        "subcommand": "mub3",
        "inputs": {},
        "verdict": "found-%d-bases" % len(res["bases"]),
        "data": {
            "vectors": _vectors_text(res["vectors"]),
            "groups": res["groups"],
        },
        "provenance": {"method": "lex-basis-back-substitution"},
        "text": "\n".join(lines),
    }
    return _emit(args, payload, 0)


def cmd_sic3(args):
    a = args.a if args.a is not None else None
    res = sic3(a, tol=max(args.tol, 1e-12))
    lines = ["first coordinate: %s" % format_scalar(res["a"])]
    lines.append("eliminant: %s" % res["eliminant"][0].format())
    lines.append("fiducials (t, z, y, x):")
    fids = []
    for _, vals in res["fiducials"]:
        tup = tuple(format_scalar(vals[k]) for k in ("t", "z", "y", "x"))
        fids.append(tup)
        lines.append("  (%s, %s, %s, %s)" % tup)
    lines.append("orbit overlap deviation: %.2e" % res["overlap_error"])
    payload = {
        "subcommand": "sic3",
        "inputs": {"a": format_scalar(res["a"])},
        "verdict": "found-%d-fiducials" % len(res["fiducials"]),
        "data": {"fiducials": fids,
                 "overlap_error": res["overlap_error"]},
        "provenance": {"method": "heisenberg-orbit-elimination"},
        "text": "\n".join(lines),
    }
    return _emit(args, payload, 0)


def cmd_compression(args):
    try:
        res = compression(args.lambdas, args.chis, tol=args.tol)
    except DegenerateSpectrum as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if res["family"]:
        payload = {
            "subcommand": "compression",
            "inputs": {"lambdas": args.lambdas, "chis": args.chis},
            "verdict": "solution-family",
            "data": {},
            "provenance": {"method": "lex-basis-back-substitution"},
            "text": "continuous solution family (degenerate spectra pair)",
        }
        return _emit(args, payload, 0)
    lines = ["raw solutions: %d" % len(res["raw"])]
    adm = []
    for e in res["admissible"]:
        xi = format_scalar(e["xi"]) if e["exact"] else repr(e["xi"])
        zeta = format_scalar(e["zeta"]) if e["exact"] else repr(e["zeta"])
        weights = {k: (format_scalar(v) if e["exact"] else repr(v))
                   for k, v in e["weights"].items()}
        adm.append({"xi": xi, "zeta": zeta, "weights": weights,
                    "exact": e["exact"]})
        lines.append("admissible: xi=%s zeta=%s weights=%s" %
                     (xi, zeta, weights))
    payload = {
        "subcommand": "compression",
        "inputs": {"lambdas": args.lambdas, "chis": args.chis},
        "verdict": "%d-admissible" % len(res["admissible"]),
        "data": {"raw_count": len(res["raw"]), "admissible": adm},
        "provenance": {"method": "lex-basis-back-substitution"},
        "text": "\n".join(lines),
    }
    return _emit(args, payload, 0 if res["admissible"] else 1)


def cmd_pnr(args):
    res = pnr_bound(args.a, args.b, args.c, grid=args.grid)
    lo, hi = res["interval"]
    text = "M = %.12g  interval = [%.12g, %.12g]  (%s)" % (
        res["m"], lo, hi, res["method"])
    if res["method"] != "grid":
        check = grid_maximum(args.a, args.b, args.c, args.grid or 10000)
        text += "\ngrid cross-check: %.12g" % check
    payload = {
        "subcommand": "pnr",
        "inputs": {"a": str(args.a), "b": str(args.b), "c": str(args.c)},
        "verdict": res["method"],
        "data": {"m": res["m"], "interval": [lo, hi]},
        "provenance": {"method": "closed-form-or-grid"},
        "text": text,
    }
    return _emit(args, payload, 0)


def cmd_honr2(args):
    with open(args.matrix) as fh:
        m = pio.read_matrix(fh.read())
    if m.backend != "exact":
        m9 = m
        print("error: honr2 needs an exact matrix", file=sys.stderr)
        return 2
    res = honr2(m)
    lines = ["second-order range: %s" %
             ([format_scalar(x) for x in res["range"]] or "empty")]
    if isinstance(res["carrier"], str):
        lines.append("carrier: %s" % res["carrier"])
        carrier_repr = res["carrier"]
    elif hasattr(res["carrier"], "kind"):
        lines.append("carrier: circle family (kappa=%s, eta=%s)" % (
            format_scalar(res["carrier"].kappa),
            format_scalar(res["carrier"].eta)))
        carrier_repr = "circle-family"
    else:
        carrier_repr = []
        for pair in res["carrier"]:
            sub = [_vectors_text([v])[0] for v in pair]
            carrier_repr.append(sub)
            lines.append("carrier subspace: span{%s, %s}" % tuple(sub))
    payload = {
        "subcommand": "honr2",
        "inputs": {"matrix": args.matrix},
        "verdict": "nonempty" if res["range"] else "empty",
        "data": {"range": [format_scalar(x) for x in res["range"]],
                 "carrier": carrier_repr},
        "provenance": {"method": "hermitian-split-carrier-intersection"},
        "text": "\n".join(lines),
    }
    return _emit(args, payload, 0 if res["range"] else 1)


def cmd_schmidt_demo(args):
    res = schmidt_length_demo()
    text = ("operator Schmidt rank: %d\nfour-term product decomposition "
            "valid: %s\nthree-term decomposition feasible: %s"
            % (res["schmidt_rank"], res["four_term_psd"],
               res["three_term_feasible"]))
    payload = {
        "subcommand": "schmidt-demo",
        "inputs": {},
        "verdict": "rank-%d-length-4" % res["schmidt_rank"],
        "data": res,
        "provenance": {"method": "realignment-and-support-scan"},
        "text": text,
    }
    return _emit(args, payload, 0)


def _load_pvs(path):
    with open(path) as fh:
        return pio.read_gupb(fh.read())


def cmd_upb(args):
    from .gupb import ProductVectorSet, is_gupb, is_minimal_gupb
    if args.action == "signs":
        rep = validate_sign_tables(samples=args.samples, seed=args.seed)
        text = ("samples: %d\nforbidden patterns realized: %d\n"
                "admissible rows realized: %d of 12\nsign split: +%d / -%d"
                % (rep.samples, len(rep.forbidden_hits),
                   len(rep.witnesses), *rep.plus_minus_split))
        payload = {
            "subcommand": "upb-signs",
            "inputs": {"samples": args.samples, "seed": args.seed},
            "verdict": "ok" if rep.ok() else "violation",
            "data": {
                "forbidden_hits": len(rep.forbidden_hits),
                "witnesses": {str(k + 1): [str(x) for x in v]
                              for k, v in rep.witnesses.items()},
                "signs": {str(k + 1): v
                          for k, v in rep.witness_signs.items()},
                "split": list(rep.plus_minus_split),
            },
            "provenance": {"method": "randomized-sign-audit"},
            "text": text,
        }
        return _emit(args, payload, 0 if rep.ok() else 1)

    pvs = _load_pvs(args.vectors)
    if args.action == "check":
        if len(pvs) == 5:
            ok = is_minimal_gupb(pvs)
            kind = "minimal"
        else:
            ok = is_gupb(pvs)
            kind = "general"
        payload = {
            "subcommand": "upb-check",
            "inputs": {"vectors": args.vectors, "count": len(pvs)},
            "verdict": "gupb" if ok else "not-gupb",
            "data": {"kind": kind},
            "provenance": {"method": "triple-independence-or-partition-scan"},
            "text": "verdict: %s (%s test)" % (
                "gupb" if ok else "not-gupb", kind),
        }
        return _emit(args, payload, 0 if ok else 1)
    if args.action == "invariants":
        quad = invariants(pvs)
        hit = orthogonal_equivalence(pvs)
        lines = ["invariants: (%s)" % ", ".join(format_scalar(x)
                                                for x in quad)]
        if hit is None:
            lines.append("orthogonal equivalence: none")
        else:
            k, perm, pquad = hit
            lines.append("orthogonal equivalence: permutation %d, quad (%s)"
                         % (k + 1, ", ".join(format_scalar(x)
                                             for x in pquad)))
        payload = {
            "subcommand": "upb-invariants",
            "inputs": {"vectors": args.vectors},
            "verdict": "equivalent" if hit else "not-equivalent",
            "data": {"quad": [format_scalar(x) for x in quad],
                     "permutation": (hit[0] + 1) if hit else None},
            "provenance": {"method": "determinant-ratio-invariants"},
            "text": "\n".join(lines),
        }
        return _emit(args, payload, 0 if hit else 1)
    if args.action == "reconstruct":
        cf = canonicalize_five(pvs)
        try:
            state, sign = reconstruct_ppt_state(cf)
        except Infeasible as exc:
            payload = {
                "subcommand": "upb-reconstruct",
                "inputs": {"vectors": args.vectors},
                "verdict": "infeasible",
                "data": {"reason": str(exc),
                         "parameters": [format_scalar(x)
                                        for x in cf.parameters()]},
                "provenance": {"method": "kernel-line-reconstruction"},
                "text": "infeasible: %s" % exc,
            }
            return _emit(args, payload, 1)
        phi6, psi6 = sixth_product_vector(cf, state)
        lines = ["parameters (p,q,r,s): (%s)" % ", ".join(
            format_scalar(x) for x in cf.parameters())]
        lines.append("sign: %+d" % sign)
        lines.append("state (canonical coordinates):")
        for i in range(9):
            lines.append("  [" + ", ".join(format_scalar(state[i, j])
                                           for j in range(9)) + "]")
        lines.append("sixth kernel product vector: %s (x) %s"
                     % (_vectors_text([phi6])[0], _vectors_text([psi6])[0]))
        payload = {
            "subcommand": "upb-reconstruct",
            "inputs": {"vectors": args.vectors},
            "verdict": "reconstructed",
            "data": {
                "parameters": [format_scalar(x) for x in cf.parameters()],
                "sign": sign,
                "state": [[format_scalar(state[i, j]) for j in range(9)]
                          for i in range(9)],
                "sixth": {"phi": _vectors_text([phi6])[0],
                          "psi": _vectors_text([psi6])[0]},
            },
            "provenance": {"method": "kernel-line-reconstruction"},
            "text": "\n".join(lines),
        }
        return _emit(args, payload, 0)
    if args.action == "verify":
        with open(args.vectors) as fh:
            rho = pio.read_matrix(fh.read())
        cert = verify_main_theorem(rho, realize=not args.no_realization)
        lines = ["stage: %s" % cert.stage]
        data = {"matched": cert.matched, "stage": cert.stage}
        if cert.matched:
            lines.append("permutation: %d" % (cert.permutation_index + 1))
            lines.append("invariants: (%s)" % ", ".join(
                format_scalar(x) for x in cert.quad))
            lines.append("scale: %s" % format_scalar(cert.scale))
            data.update({
                "permutation": cert.permutation_index + 1,
                "quad": [format_scalar(x) for x in cert.quad],
                "scale": format_scalar(cert.scale),
                "parameters": [format_scalar(x) for x in
                               cert.canonical_form.parameters()],
            })
            if cert.realization is not None:
                data["realization_exact"] = cert.realization.exact
                lines.append("orthogonal realization exact: %s"
                             % cert.realization.exact)
                for v, w in cert.realization.upb:
                    if cert.realization.exact:
                        lines.append("  %s (x) %s" % (_vectors_text([v])[0],
                                                      _vectors_text([w])[0]))
        payload = {
            "subcommand": "upb-verify",
            "inputs": {"state": args.vectors},
            "verdict": "matched" if cert.matched else "unmatched",
            "data": data,
            "provenance": {"method": "kernel-gupb-reconstruction-pipeline"},
            "text": "\n".join(lines),
        }
        return _emit(args, payload, 0 if cert.matched else 1)
    print("error: unknown upb action %r" % args.action, file=sys.stderr)
    return 2


def build_parser():
    ap = argparse.ArgumentParser(
        prog="polyent",
        description="Exact polynomial-system tools for two-qutrit "
                    "entanglement analysis")
    ap.add_argument("--backend", choices=("exact", "float"), default="exact")
    ap.add_argument("--tol", type=float, default=1e-9)
    ap.add_argument("--seed", type=int, default=20110913)
    ap.add_argument("--out", default=None)
    ap.add_argument("--format", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="reduced basis of a polynomial system")
    p.add_argument("system")
    p.add_argument("--order", choices=("lex", "grlex", "grevlex"),
                   default="lex")
    p.add_argument("--eliminate", nargs="*", default=None)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("ces-check", help="completely entangled subspace test")
    p.add_argument("subspace", nargs="?")
    p.add_argument("--family-z", type=_scalar_arg, default=None)
    p.add_argument("--param", action="append", default=[])
    p.add_argument("--orth-complement", action="store_true")
    p.add_argument("--four-pattern", action="store_true")
    p.set_defaults(func=cmd_ces)

    p = sub.add_parser("maxent", help="maximally entangled states in a "
                       "product-vector complement")
    p.add_argument("upb")
    p.set_defaults(func=cmd_maxent)

    p = sub.add_parser("mub3", help="full set of mutually unbiased bases "
                       "in dimension three")
    p.set_defaults(func=cmd_mub3)

    p = sub.add_parser("sic3", help="symmetric informationally complete "
                       "fiducials in dimension three")
    p.add_argument("--a", type=_scalar_arg, default=None)
    p.set_defaults(func=cmd_sic3)

    p = sub.add_parser("compression", help="common rank-2 compression "
                       "subspaces of two commuting Hermitians")
    p.add_argument("--lambdas", nargs=4, type=Fraction, required=True)
    p.add_argument("--chis", nargs=4, type=Fraction, required=True)
    p.set_defaults(func=cmd_compression)

    p = sub.add_parser("pnr", help="product numerical range of the "
                       "tridiagonal two-qubit family")
    p.add_argument("--a", type=complex, required=True)
    p.add_argument("--b", type=complex, required=True)
    p.add_argument("--c", type=complex, required=True)
    p.add_argument("--grid", type=int, default=10000)
    p.set_defaults(func=cmd_pnr)

    p = sub.add_parser("honr2", help="second-order numerical range of a "
                       "3x3 matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_honr2)

    p = sub.add_parser("upb", help="generalized product-basis toolbox")
    p.add_argument("action", choices=("check", "invariants", "reconstruct",
                                      "verify", "signs"))
    p.add_argument("vectors", nargs="?")
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--no-realization", action="store_true")
    p.set_defaults(func=cmd_upb)

    p = sub.add_parser("schmidt-demo", help="rank-three length-four "
                       "separable state demonstration")
    p.set_defaults(func=cmd_schmidt_demo)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
