"""Generating functions L(q,t,0) and H^mot(q,t,0) and the identity between them.

Per path D the Hilbert-side contribution is the finite sum

    L_D = q^codinv t^(|D|+z0)
          + (1-t) * sum_{v in Delta, v < z0} q^(|D|-dinv+eps_hat(v)) t^(|D|+v)

where Delta is the image of D-bar under the enhanced rank and z0 is any
cutoff at least the conductor; the motivic side is the single monomial
q^codinv t^(codinv+delta-|D|).
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .bijection import enhanced_rank_table, psi_data
from .dyck import DyckPath, dinv, enumerate_dyck
from .parallel import pmap
from .polynomial import ONE_MINUS_T, BivarPoly
from .semigroup import Params


def _rank_data(D: DyckPath):
    """Lowest enhanced rank in D-bar per residue mod dn, and the sorted
    enhanced ranks of the boxes outside D."""
    p = D.params
    dn = p.dn
    base = enhanced_rank_table(D, psi_data(D))
    a = p.a_flat()
    lowest = {}
    outside = []
    for x, b in enumerate(base):
        h = D.y[x]
        # column x of D-bar has enhanced ranks b - dn*y for y <= y_x
        lowest[b % dn] = b - dn * h
        outside.extend(b - dn * yy for yy in range(h + 1, a[x] + 1))
    return lowest, sorted(outside)


def path_conductor(D: DyckPath) -> int:
    """max over columns of rhat(x, y_x) - dn + 1, floored at 0."""
    lowest, _ = _rank_data(D)
    return max(0, max(lowest.values()) - D.params.dn + 1)


def l_poly_per_path(D: DyckPath, z0: int | None = None) -> BivarPoly:
    p = D.params
    dn = p.dn
    lowest, outside = _rank_data(D)
    conductor = max(0, max(lowest.values()) - dn + 1)
    if z0 is None:
        z0 = conductor
    elif z0 < conductor:
        raise ValueError(f"cutoff {z0} below the conductor {conductor}")
    size, dv = D.size(), dinv(D)
    codinv = p.delta - dv
    terms: dict = {}
    for v in range(z0):
        if v >= lowest[v % dn]:
            key = (size - dv + bisect_left(outside, v), size + v)
            terms[key] = terms.get(key, 0) + 1
    return BivarPoly(terms) * ONE_MINUS_T + BivarPoly.monomial(codinv, size + z0)


def hmot_per_path(D: DyckPath) -> BivarPoly:
    cd = D.params.delta - dinv(D)
    return BivarPoly.monomial(cd, cd + D.params.delta - D.size())


def _total(polys) -> BivarPoly:
    acc: dict = {}
    for f in polys:
        for k, c in f.terms().items():
            acc[k] = acc.get(k, 0) + c
    return BivarPoly(acc)


def l_function(p: Params, jobs: int | None = 1, paths=None) -> BivarPoly:
    if paths is None:
        paths = enumerate_dyck(p)
    return _total(pmap(l_poly_per_path, paths, jobs))


def hmot(p: Params, jobs: int | None = 1, paths=None) -> BivarPoly:
    if paths is None:
        paths = enumerate_dyck(p)
    return _total(pmap(hmot_per_path, paths, jobs))


@dataclass(frozen=True)
class CdpReport:
    equal: bool
    difference: BivarPoly
    l: BivarPoly
    h: BivarPoly


def verify_cdp(p: Params, jobs: int | None = 1) -> CdpReport:
    """Compare L(q,t,0) with H^mot(q,t,0); difference = L - H^mot."""
    paths = enumerate_dyck(p)
    L = l_function(p, jobs, paths)
    H = hmot(p, jobs, paths)
    diff = L - H
    return CdpReport(diff.is_zero(), diff, L, H)


def check_functional_equation(f: BivarPoly, delta: int) -> bool:
    """Coefficient form of q^delta t^(2 delta) f(q, 1/(qt)) = f(q, t)."""
    for (i, j), c in f.terms().items():
        qi, tj = delta + i - j, 2 * delta - j
        if qi < 0 or tj < 0 or f.coefficient(qi, tj) != c:
            return False
    return True
