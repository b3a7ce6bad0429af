"""Command-line front end.

Data goes to standard output (JSON by default, CSV with ``--format csv``);
diagnostics go to standard error.  Exit codes: 0 success, 1 failed
verification, 2 invalid parameters or input.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from .bijection import phi, psi, sweep_zeta
from .dyck import DyckPath, InvalidPath, dinv, enumerate_dyck
from .genfun import hmot, l_function, verify_cdp
from .parallel import pmap
from .paving import hilb_cells
from .polynomial import BivarPoly
from .selftest import run_selftest
from .semigroup import InvalidParameters, Params, make_params
from .semimodule import (
    CMatrix,
    NotAdmissible,
    dim_gaps,
    enumerate_admissible,
    from_cmatrix,
    to_cmatrix,
)

SCHEMA = "springer-comb/1"

COMMANDS = (
    "params", "enumerate-dyck", "enumerate-adm", "psi", "phi", "lfunction",
    "hmot", "verify-cdp", "cells", "sweep", "selftest",
)


class UsageError(Exception):
    pass


def poly_json(f: BivarPoly) -> list:
    return [[a, b, str(c)] for a, b, c in f.triples()]


def _rows(c) -> list:
    return [list(r) for r in c]


def _parse_ints(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise UsageError(f"--input must be comma-separated integers, got {text!r}")


# workers are module level so that they can be sent to other processes

def _path_record(D: DyckPath) -> dict:
    dv = dinv(D)
    return {"y": list(D.y), "size": D.size(), "dinv": dv, "codinv": D.params.delta - dv}


def _matrix_record(c: CMatrix) -> dict:
    s = from_cmatrix(c)
    return {"c": _rows(c.c), "gens": list(s.gens), "e": s.e, "dim": dim_gaps(s)}


def _psi_record(D: DyckPath) -> dict:
    c, data = psi(D)
    s = from_cmatrix(c)
    return {
        "y": list(D.y),
        "c": _rows(c.c),
        "p": list(data.p),
        "s": [list(perm) for perm in data.sj],
        "gens": list(s.gens),
    }


def _phi_record(c: CMatrix) -> dict:
    D, data = phi(c)
    return {"c": _rows(c.c), "y": list(D.y), "p_tilde": list(data.p_tilde)}


def _sweep_record(D: DyckPath) -> dict:
    return {"y": list(D.y), "zeta": list(sweep_zeta(D))}


def _read_path(p: Params, values) -> DyckPath:
    try:
        return DyckPath(tuple(values), p)
    except InvalidPath as exc:
        raise UsageError(f"invalid path: {exc}")


def _read_matrix(p: Params, values) -> CMatrix:
    try:
        c = CMatrix.from_flat(values, p)
        from_cmatrix(c)
    except NotAdmissible as exc:
        raise UsageError(f"invalid matrix: {exc}")
    return c


def _flat(rows) -> list:
    return [x for r in rows for x in r]


class Emitter:
    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out

    def emit(self, doc: dict, header: list, rows: list) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(doc) + "\n")
        else:
            w = csv.writer(self.out, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)


def _base(command: str, p: Params | None) -> dict:
    doc = {"schema": SCHEMA, "command": command}
    if p is not None:
        doc["params"] = {"n": p.n, "m": p.m, "d": p.d}
    return doc


def cmd_params(p, args, em):
    doc = _base("params", p)
    doc["params"] = p.as_dict()
    keys = ["n", "m", "d", "dn", "dm", "dmn1", "delta", "u", "v"]
    d = p.as_dict()
    em.emit(doc, keys, [[d[k] for k in keys]])
    return 0


def cmd_enumerate_dyck(p, args, em):
    recs = pmap(_path_record, enumerate_dyck(p), args.jobs)
    doc = _base("enumerate-dyck", p)
    doc.update(count=len(recs), paths=recs)
    header = ["n", "m", "d"] + [f"y_{x}" for x in range(p.dn)] + ["size", "dinv", "codinv"]
    rows = [[p.n, p.m, p.d] + r["y"] + [r["size"], r["dinv"], r["codinv"]] for r in recs]
    em.emit(doc, header, rows)
    return 0


def cmd_enumerate_adm(p, args, em):
    recs = pmap(_matrix_record, enumerate_admissible(p), args.jobs)
    doc = _base("enumerate-adm", p)
    doc.update(count=len(recs), matrices=recs)
    header = ["n", "m", "d"] + [f"c_{x}" for x in range(p.dn)] + ["e", "dim"]
    rows = [[p.n, p.m, p.d] + _flat(r["c"]) + [r["e"], r["dim"]] for r in recs]
    em.emit(doc, header, rows)
    return 0


def cmd_psi(p, args, em):
    if args.input is not None:
        paths = [_read_path(p, _parse_ints(args.input))]
    else:
        paths = enumerate_dyck(p)
    recs = pmap(_psi_record, paths, args.jobs)
    doc = _base("psi", p)
    if args.input is not None:
        doc.update(recs[0])
    else:
        doc.update(count=len(recs), results=recs)
    header = (["n", "m", "d"] + [f"y_{x}" for x in range(p.dn)]
              + [f"c_{x}" for x in range(p.dn)] + [f"p_{u}" for u in range(1, p.d)])
    rows = [[p.n, p.m, p.d] + r["y"] + _flat(r["c"]) + r["p"] for r in recs]
    em.emit(doc, header, rows)
    return 0


def cmd_phi(p, args, em):
    if args.input is not None:
        mats = [_read_matrix(p, _parse_ints(args.input))]
    else:
        mats = enumerate_admissible(p)
    recs = pmap(_phi_record, mats, args.jobs)
    doc = _base("phi", p)
    if args.input is not None:
        doc.update(recs[0])
    else:
        doc.update(count=len(recs), results=recs)
    header = (["n", "m", "d"] + [f"c_{x}" for x in range(p.dn)]
              + [f"y_{x}" for x in range(p.dn)] + [f"p_{u}" for u in range(1, p.d)])
    rows = [[p.n, p.m, p.d] + _flat(r["c"]) + r["y"] + r["p_tilde"] for r in recs]
    em.emit(doc, header, rows)
    return 0


def _cmd_poly(name, func):
    def run(p, args, em):
        f = func(p, args.jobs)
        doc = _base(name, p)
        doc["delta"] = p.delta
        doc["polynomial"] = poly_json(f)
        em.emit(doc, ["q_exp", "t_exp", "coeff"], poly_json(f))
        return 0
    return run


def cmd_verify_cdp(p, args, em):
    rep = verify_cdp(p, args.jobs)
    doc = _base("verify-cdp", p)
    doc.update(
        equal=rep.equal,
        difference=poly_json(rep.difference),
        L=poly_json(rep.l),
        Hmot=poly_json(rep.h),
    )
    em.emit(doc, ["n", "m", "d", "equal", "difference"],
            [[p.n, p.m, p.d, str(rep.equal).lower(), str(rep.difference)]])
    if not rep.equal:
        print(f"L - Hmot = {rep.difference}", file=sys.stderr)
        return 1
    return 0


def cmd_cells(p, args, em):
    if args.tau is None:
        raise UsageError("cells needs --tau")
    if args.tau < 0:
        raise UsageError("--tau must be nonnegative")
    mods = pmap(from_cmatrix, enumerate_admissible(p), args.jobs)
    cells = hilb_cells(p, args.tau, mods)
    recs = [{
        "c": _rows(to_cmatrix(r.delta).c),
        "gens": list(r.delta.gens),
        "e": r.delta.e,
        "tau0": r.tau0,
        "dim": r.dim,
    } for r in cells]
    doc = _base("cells", p)
    doc.update(tau=args.tau, count=len(recs), cells=recs)
    header = ["n", "m", "d", "tau", "tau0", "e", "dim"] + [f"c_{x}" for x in range(p.dn)]
    rows = [[p.n, p.m, p.d, args.tau, r["tau0"], r["e"], r["dim"]] + _flat(r["c"]) for r in recs]
    em.emit(doc, header, rows)
    return 0


def cmd_sweep(p, args, em):
    if args.input is not None:
        paths = [_read_path(p, _parse_ints(args.input))]
    else:
        paths = enumerate_dyck(p)
    recs = pmap(_sweep_record, paths, args.jobs)
    doc = _base("sweep", p)
    if args.input is not None:
        doc.update(recs[0])
    else:
        doc.update(count=len(recs), results=recs)
    header = (["n", "m", "d"] + [f"y_{x}" for x in range(p.dn)]
              + [f"zeta_{x}" for x in range(p.dn)])
    rows = [[p.n, p.m, p.d] + r["y"] + r["zeta"] for r in recs]
    em.emit(doc, header, rows)
    return 0


def cmd_selftest(p, args, em):
    checks = run_selftest()
    ok = all(c[1] for c in checks)
    doc = _base("selftest", None)
    doc.update(ok=ok, checks=[{"name": name, "ok": passed} for name, passed in checks])
    em.emit(doc, ["name", "ok"], [[name, str(passed).lower()] for name, passed in checks])
    for name, passed in checks:
        if not passed:
            print(f"FAILED: {name}", file=sys.stderr)
    return 0 if ok else 1


HANDLERS = {
    "params": cmd_params,
    "enumerate-dyck": cmd_enumerate_dyck,
    "enumerate-adm": cmd_enumerate_adm,
    "psi": cmd_psi,
    "phi": cmd_phi,
    "lfunction": _cmd_poly("lfunction", l_function),
    "hmot": _cmd_poly("hmot", hmot),
    "verify-cdp": cmd_verify_cdp,
    "cells": cmd_cells,
    "sweep": cmd_sweep,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="springer-comb",
        description="Dyck paths, admissible semimodules and q,t-generating functions "
                    "for generic singularities of type (n, m, d).",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in COMMANDS:
        sp = sub.add_parser(name)
        need = name != "selftest"
        sp.add_argument("--n", type=int, required=need)
        sp.add_argument("--m", type=int, required=need)
        sp.add_argument("--d", type=int, required=need)
        sp.add_argument("--tau", type=int, default=None)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: all cores)")
        sp.add_argument("--input", default=None,
                        help="comma-separated path heights or row-major matrix entries")
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs is not None and args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 2
    p = None
    try:
        if args.command != "selftest" or args.n is not None:
            p = make_params(args.n, args.m, args.d)
        return HANDLERS[args.command](p, args, Emitter(args.format, out))
    except (InvalidParameters, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
