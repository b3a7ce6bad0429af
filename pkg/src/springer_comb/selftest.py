"""Invariant suite run by ``springer-comb selftest``."""
from __future__ import annotations

from .bijection import gc_vector, phi, psi, sweep_zeta
from .dyck import codinv, enumerate_dyck
from .genfun import check_functional_equation, verify_cdp
from .oracle import dim_bruteforce, enumerate_admissible_bruteforce, l_function_bruteforce
from .paving import cell_dim_via_dyck, hilb_cell_dim, tau0_in_delta_via_rank
from .semigroup import gap_set, make_params
from .semimodule import (
    contains,
    dim_floor_sum,
    dim_gaps,
    dim_gc,
    enumerate_admissible,
    from_cmatrix,
    is_admissible_definition,
)

DEFAULT_TRIPLES = ((2, 3, 1), (2, 3, 2), (2, 3, 3))


def check_triple(n: int, m: int, d: int) -> list:
    p = make_params(n, m, d)
    paths = enumerate_dyck(p)
    mats = enumerate_admissible(p)
    mods = [from_cmatrix(c) for c in mats]
    checks = []

    def add(name, ok):
        checks.append((f"({n},{m},{d}) {name}", bool(ok)))

    add("gap count equals delta", len(gap_set(p)) == p.delta)
    add("path and matrix counts agree", len(paths) == len(mats))
    images = []
    round_trip = stats = sweep = True
    for D in paths:
        c, _ = psi(D)
        images.append(c.c)
        round_trip &= phi(c)[0] == D
        s = from_cmatrix(c)
        stats &= s.e == D.size() and dim_gaps(s) == codinv(D)
        z = sweep_zeta(D)
        sweep &= z == gc_vector(s) and sum(z) == codinv(D)
    add("psi is onto the admissible matrices", sorted(images) == [c.c for c in mats])
    add("phi inverts psi", round_trip)
    add("psi psi-of-phi is the identity", all(psi(phi(c)[0])[0] == c for c in mats))
    add("e equals size and dim equals codinv", stats)
    add("sweep equals generator-cogenerator vector", sweep)
    add("definitional admissibility", all(is_admissible_definition(s) for s in mods))
    add("three dimension formulas agree",
        all(dim_gaps(s) == dim_gc(s) == dim_floor_sum(s) for s in mods))

    paving_ok = True
    for D in paths:
        c, data = psi(D)
        s = from_cmatrix(c)
        for tau0 in range(2 * p.delta + 1):
            inside = contains(s, tau0)
            paving_ok &= inside == tau0_in_delta_via_rank(D, tau0, data)
            if inside:
                paving_ok &= hilb_cell_dim(s, tau0 + s.e) == cell_dim_via_dyck(D, tau0, data)
    add("cell dimensions agree on both sides", paving_ok)

    report = verify_cdp(p)
    add("L equals H^mot", report.equal)
    add("functional equation", check_functional_equation(report.l, p.delta))
    brute = enumerate_admissible_bruteforce(p)
    add("brute-force semimodule search agrees", [s.gens for s in brute] == [s.gens for s in mods])
    add("brute-force dimensions agree", all(dim_bruteforce(s) == dim_gaps(s) for s in mods))
    add("brute-force L-function agrees", l_function_bruteforce(p) == report.l)
    return checks


def run_selftest(triples=DEFAULT_TRIPLES) -> list:
    out = []
    for t in triples:
        out.extend(check_triple(*t))
    return out
