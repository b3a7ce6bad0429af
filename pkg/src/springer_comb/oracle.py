"""Slow, definition-literal recomputations used as ground truth in tests.

Nothing here reuses the arithmetic of the fast modules: semimodules are
materialized as explicit finite sets, closure is checked element by
element, and statistics are counted box by box.  Only ``Params`` and the
result types are shared.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import product

from .dyck import DyckPath
from .polynomial import BivarPoly
from .semigroup import Params
from .semimodule import Semimodule


def semigroup_bruteforce(p: Params, bound: int) -> set:
    """Elements of <dn, dm, dmn+1> in [0, bound], by breadth-first closure."""
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in (p.dn, p.dm, p.dmns):
            y = x + g
            if y <= bound and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _horizon(p: Params) -> int:
    # everything at or above 2 delta is in every admissible Delta; the extra
    # room lets closure be checked for all elements up to 4 delta
    return 4 * p.delta + p.dmns + p.dn


def _materialize(gens, dn: int, bound: int) -> set:
    out = set()
    for g in gens:
        out.update(range(g, bound + 1, dn))
    return out


def _closed(S: set, p: Params, upto: int, bound: int) -> bool:
    for x in S:
        if x > upto:
            continue
        for g in (p.dn, p.dm, p.dmns):
            if x + g <= bound and x + g not in S:
                return False
    return True


def enumerate_admissible_bruteforce(p: Params) -> list:
    """Every 0-normalized admissible semimodule, found by exhaustive search.

    Candidates are all generator vectors ahat[i][j] - dn c with
    0 <= c <= a[i][j]; a candidate is kept when its explicit element set is
    closed under dn, dm, dmn+1 up to 4 delta and every residue i mod d has
    a generator g with g + dm + 1 in the set.
    """
    ahat = [x for row in p.ahat for x in row]
    amax = [x for row in p.amat for x in row]
    bound = _horizon(p)
    out = []
    for cs in product(*(range(a + 1) for a in amax)):
        gens = [h - p.dn * c for h, c in zip(ahat, cs)]
        if 0 not in gens:
            continue
        S = _materialize(gens, p.dn, bound)
        if not _closed(S, p, 4 * p.delta, bound):
            continue
        residues = {g % p.d for g in gens if g + p.dm + 1 in S}
        if len(residues) != p.d:
            continue
        out.append(Semimodule.from_generators(p, gens))
    return out


def _explicit(s: Semimodule) -> tuple[set, int]:
    bound = _horizon(s.params)
    return _materialize(s.gens, s.params.dn, bound), bound


def conductor_literal(s: Semimodule) -> int:
    S, bound = _explicit(s)
    gaps = [x for x in range(bound) if x not in S]
    return gaps[-1] + 1 if gaps else 0


def gaps_literal(s: Semimodule, b: int) -> list:
    S, bound = _explicit(s)
    return [x for x in range(b, bound) if x not in S]


def dim_bruteforce(s: Semimodule) -> int:
    """Count pairs (a, b): a a generator, b > a, b not in Delta, b + dm in Delta."""
    S, bound = _explicit(s)
    dm, dn = s.params.dm, s.params.dn
    cond = conductor_literal(s)
    gens = [a for a in S if a - dn not in S]
    total = 0
    for b in range(0, cond + dm + 1):
        if b not in S and b + dm in S:
            total += sum(1 for a in gens if a < b)
    return total


def l_function_bruteforce(p: Params) -> BivarPoly:
    """(1-t) sum_tau t^tau sum_{cells of Hilb^[tau]} q^dim, closed at tau = 2 delta."""
    delta = p.delta
    weights = [dict() for _ in range(2 * delta + 2)]
    for s in enumerate_admissible_bruteforce(p):
        S, bound = _explicit(s)
        e = delta - sum(1 for x in range(bound) if x not in S)
        dim = dim_bruteforce(s)
        for tau in range(2 * delta + 2):
            tau0 = tau - e
            if tau0 < 0 or tau0 not in S:
                continue
            cell = dim - sum(1 for x in range(tau0, bound) if x not in S)
            weights[tau][cell] = weights[tau].get(cell, 0) + 1
    if weights[2 * delta] != weights[2 * delta + 1]:
        raise AssertionError("cell counts did not stabilize at tau = 2 delta")
    terms: dict = {}
    for tau in range(2 * delta):
        for dim, cnt in weights[tau].items():
            terms[(dim, tau)] = terms.get((dim, tau), 0) + cnt
            terms[(dim, tau + 1)] = terms.get((dim, tau + 1), 0) - cnt
    for dim, cnt in weights[2 * delta].items():
        terms[(dim, 2 * delta)] = terms.get((dim, 2 * delta), 0) + cnt
    return BivarPoly(terms)


def enumerate_dyck_bruteforce(p: Params) -> list:
    amax = [x for row in p.amat for x in row]
    out = []
    for ys in product(*(range(a + 1) for a in amax)):
        if all(ys[k] <= ys[k + 1] for k in range(len(ys) - 1)):
            out.append(DyckPath(ys, p))
    return out


def dinv_rational(D: DyckPath) -> int:
    """dinv with the slope test done in exact rationals."""
    slope = Fraction(D.params.m, D.params.n)
    total = 0
    for x, h in enumerate(D.y):
        for y in range(1, h + 1):
            leg = h - y
            arm = sum(1 for xp in range(x) if D.y[xp] >= y)
            left = Fraction(leg, arm + 1) <= slope
            right = arm == 0 or slope < Fraction(leg + 1, arm)
            total += left and right
    return total


def sweep_zeta_literal(D: DyckPath) -> tuple:
    """Sweep statistic from the index functions as differences of column counts."""
    p = D.params
    y = list(D.y) + [p.dm]

    def rk(x, yy):
        return p.m * x - p.n * yy

    vals = []
    for q in range(p.dn):
        R = rk(q, y[q])
        total = 0
        for x in range(p.dn):
            eps = (sum(1 for yy in range(1, y[x + 1] + 1) if rk(x, yy) > R)
                   - sum(1 for yy in range(1, y[x] + 1) if rk(x, yy) > R))
            eta = 0
            if x >= q:
                eta = (sum(1 for yy in range(1, y[x + 1] + 1) if rk(x, yy) == R)
                       - sum(1 for yy in range(1, y[x] + 1) if rk(x, yy) == R))
            total += eps + eta
        vals.append(total)
    return tuple(sorted(vals))
