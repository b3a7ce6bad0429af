"""The bijection between Dyck paths and admissible c-matrices.

``psi`` sends a path to a c-matrix by repeatedly lifting one n-block of
the rank vector (one entry per column class j) to the row being fixed;
``phi`` undoes this by reinserting the blocks.  Both store every stage so
that tests can inspect the intermediate rank vectors.

Permutations of [0, d-1] are stored as tuples ``s`` with ``s[i]`` the
image of i.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dyck import DyckPath
from .semigroup import Params
from .semimodule import CMatrix, NotAdmissible, Semimodule, check_cmatrix, to_cmatrix


def cycle(d: int, i: int, u: int) -> tuple:
    """The cycle (i i+1 ... u) on [0, d-1]: k -> k+1 for i <= k < u, u -> i."""
    s = list(range(d))
    for k in range(i, u):
        s[k] = k + 1
    s[u] = i
    return tuple(s)


def compose(f: tuple, g: tuple) -> tuple:
    """(f o g)(i) = f(g(i))."""
    return tuple(f[g[i]] for i in range(len(g)))


def inverse(f: tuple) -> tuple:
    out = [0] * len(f)
    for i, fi in enumerate(f):
        out[fi] = i
    return tuple(out)


def cycle_notation(perm: tuple) -> str:
    """Cycle notation, (a b c) meaning a -> b -> c -> a; fixed points omitted.

    A cycle is written as an increasing run when some rotation is one,
    otherwise as a decreasing run when possible, otherwise from its least
    element.

    EXAMPLES::

        >>> cycle_notation((2, 0, 1))
        '(2 1 0)'
        >>> cycle_notation((1, 0))
        '(0 1)'
        >>> cycle_notation((0, 1, 2))
        'id'
    """
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        while perm[cyc[-1]] != start:
            cyc.append(perm[cyc[-1]])
            seen.add(cyc[-1])
        rotations = [cyc[k:] + cyc[:k] for k in range(len(cyc))]
        best = next((r for r in rotations if r == sorted(r)), None)
        if best is None:
            best = next((r for r in rotations if r == sorted(r, reverse=True)), cyc)
        parts.append("(" + " ".join(map(str, best)) + ")")
    return "".join(parts) or "id"


def _permute_rows(vec: list, p: Params, perms: list) -> list:
    # new[i][j] = old[perms[j][i]][j]
    n = p.n
    return [vec[perms[x % n][x // n] * n + x % n] for x in range(p.dn)]


@dataclass(frozen=True)
class PsiData:
    p: tuple            # move indices p_1 < ... < p_{d-1}
    ij: dict            # (j, u) -> permutation index i_{j,u}
    sju: dict           # (j, u) -> cycle s_{j,u}
    sj: tuple           # s_j = s_{j,d-1} o ... o s_{j,1}
    sj_inv: tuple
    rk_stages: tuple    # rk^[0], ..., rk^[d-1]


@dataclass(frozen=True)
class PhiData:
    p_tilde: tuple
    ij: dict
    sju: dict
    sj: tuple
    rk_stages: tuple
    c_stages: tuple


def _identity_perms(p: Params) -> tuple:
    return tuple(tuple(range(p.d)) for _ in range(p.n))


def psi_data(D: DyckPath) -> PsiData:
    p = D.params
    n, m, d = p.n, p.m, p.d
    rk = list(D.rank_vector())
    stages = [tuple(rk)]
    moves = {}
    ij, sju = {}, {}
    sj = list(_identity_perms(p))
    for u in range(d - 1, 0, -1):
        pu = max(x for x in range(u * n + 1) if rk[x] <= rk[x + n - 1] + m)
        moves[u] = pu
        perms = []
        for j in range(n):
            i0 = min(i for i in range(u + 1) if i * n + j >= pu)
            s = cycle(d, i0, u)
            ij[(j, u)], sju[(j, u)] = i0, s
            perms.append(s)
            # u runs downward, so the newest cycle acts first
            sj[j] = compose(sj[j], s)
        rk = _permute_rows(rk, p, perms)
        stages.append(tuple(rk))
    return PsiData(
        p=tuple(moves[u] for u in range(1, d)),
        ij=ij,
        sju=sju,
        sj=tuple(sj),
        sj_inv=tuple(inverse(s) for s in sj),
        rk_stages=tuple(stages),
    )


def psi(D: DyckPath) -> tuple[CMatrix, PsiData]:
    """Apply the path-to-semimodule bijection.

    c[i][j] = y_{s_j(i), j} - (s_j(i) - i) m.
    """
    p = D.params
    data = psi_data(D)
    n, m = p.n, p.m
    c = tuple(
        tuple(D.y[data.sj[j][i] * n + j] - (data.sj[j][i] - i) * m for j in range(n))
        for i in range(p.d)
    )
    return CMatrix(c, p), data


def phi(c: CMatrix) -> tuple[DyckPath, PhiData]:
    """Inverse of :func:`psi`; raises NotAdmissible on invalid input."""
    check_cmatrix(c)
    p = c.params
    n, m, d = p.n, p.m, p.d
    cur = [x for row in c.c for x in row]
    rk = [m * x - n * cur[x] for x in range(p.dn)]
    rk_stages, c_stages = [tuple(rk)], [tuple(cur)]
    moves = []
    ij, sju = {}, {}
    sj = list(_identity_perms(p))
    for u in range(1, d):
        cands = [
            i * n + j + 1
            for i in range(u)
            for j in range(n)
            if rk[u * n + (j + 1) % n] <= rk[i * n + j] + m
        ]
        if not cands:
            raise NotAdmissible(f"no move index at stage {u}")
        pu = max(cands)
        moves.append(pu)
        inv_perms = []
        for j in range(n):
            i0 = min(i for i in range(u + 1) if i * n + j >= pu)
            s = cycle(d, i0, u)
            ij[(j, u)], sju[(j, u)] = i0, s
            inv_perms.append(inverse(s))
            sj[j] = compose(s, sj[j])
        new_c = [0] * p.dn
        for x in range(p.dn):
            i, j = divmod(x, n)
            k = inv_perms[j][i]
            new_c[x] = cur[k * n + j] - (k - i) * m
        cur = new_c
        rk = _permute_rows(rk, p, inv_perms)
        rk_stages.append(tuple(rk))
        c_stages.append(tuple(cur))
    D = DyckPath(tuple(cur), p)
    return D, PhiData(tuple(moves), ij, sju, tuple(sj), tuple(rk_stages), tuple(c_stages))


def enhanced_rank(D: DyckPath, x: int, y: int, data: PsiData | None = None) -> int:
    """d * rk(x, y) + s_j^{-1}(i) for x = in + j."""
    p = D.params
    if not 0 <= x < p.dn:
        raise ValueError(f"column {x} outside [0, {p.dn})")
    if data is None:
        data = psi_data(D)
    i, j = divmod(x, p.n)
    return p.d * (p.m * x - p.n * y) + data.sj_inv[j][i]


def enhanced_rank_table(D: DyckPath, data: PsiData | None = None) -> tuple:
    """Values of the enhanced rank at height 0, one per column."""
    if data is None:
        data = psi_data(D)
    return tuple(enhanced_rank(D, x, 0, data) for x in range(D.params.dn))


def enhanced_rank_inverse(D: DyckPath, v: int, data: PsiData | None = None) -> tuple[int, int]:
    """The unique box (x, y) with y <= floor(mx/n) and enhanced rank v >= 0."""
    if v < 0:
        raise ValueError("enhanced rank values are nonnegative")
    dn = D.params.dn
    base = enhanced_rank_table(D, data)
    for x, b in enumerate(base):
        if (b - v) % dn == 0:
            return x, (b - v) // dn
    raise AssertionError("enhanced ranks at height 0 must cover all residues")


def sweep_zeta(D: DyckPath) -> tuple:
    """Sorted sweep statistic, counting boxes between consecutive columns.

    For the box (p, y_p) with R = rk(p, y_p) the entry counts boxes (x, y)
    with y_x < y <= y_{x+1} and rk(x, y) > R, plus those with rk(x, y) = R
    and x >= p.  Heights are padded with y_{dn} = dm.
    """
    pr = D.params
    n, m, dn = pr.n, pr.m, pr.dn
    y = list(D.y) + [pr.dm]
    out = []
    for q in range(dn):
        R = m * q - n * y[q]
        total = 0
        for x in range(dn):
            lo, hi = y[x], y[x + 1]
            if hi <= lo:
                continue
            # rk(x, yy) > R  <=>  yy <= floor((m x - R - 1) / n)
            top = min(hi, (m * x - R - 1) // n)
            if top > lo:
                total += top - lo
            if x >= q and (m * x - R) % n == 0 and lo < (m * x - R) // n <= hi:
                total += 1
        out.append(total)
    return tuple(sorted(out))


def gc_vector(s: Semimodule) -> tuple:
    """Sorted generator-cogenerator statistic of Delta.

    For the generator indexed by (k, l) the entry counts boxes (x, y),
    x = in + j, with c[i][j] < y <= c[i][j+1] (c[i][n] = c[i][0] + m) whose
    rank exceeds rk(kn + l, c[k][l]), or equals it with i > k.
    """
    pr = s.params
    n, m, d = pr.n, pr.m, pr.d
    c = to_cmatrix(s).c
    spans = []
    for i in range(d):
        for j in range(n):
            top = c[i][j + 1] if j + 1 < n else c[i][0] + m
            spans.append((i, i * n + j, c[i][j], top))
    out = []
    for k in range(d):
        for l in range(n):
            R = m * (k * n + l) - n * c[k][l]
            total = 0
            for i, x, lo, hi in spans:
                for yy in range(lo + 1, hi + 1):
                    r = m * x - n * yy
                    if r > R or (r == R and i > k):
                        total += 1
            out.append(total)
    return tuple(sorted(out))
