"""Cell dimensions of the affine pavings of punctual Hilbert schemes.

Two independent routes are provided.  The semimodule side uses generator
arithmetic: the cell of Delta in Hilb^[tau] exists iff tau0 = tau - e(Delta)
lies in Delta and then has dimension dim Delta - |Gaps(tau0)|.  The path
side uses only the rank vector of D and the permutations s_j produced by
``psi``, never the generators of Delta.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bijection import PsiData, psi_data
from .dyck import DyckPath, dinv
from .semigroup import Params
from .semimodule import (
    NotInSemimodule,
    Semimodule,
    contains,
    dim_gaps,
    enumerate_admissible,
    from_cmatrix,
    gap_count,
)


@dataclass(frozen=True)
class CellRecord:
    delta: Semimodule
    tau: int
    tau0: int
    dim: int


def hilb_cell_dim(s: Semimodule, tau: int, dim: int | None = None):
    """Dimension of the cell of Delta in Hilb^[tau], or None if it is empty."""
    tau0 = tau - s.e
    if not contains(s, tau0):
        return None
    if dim is None:
        dim = dim_gaps(s)
    return dim - gap_count(s, tau0)


def hilb_cells(p: Params, tau: int, modules=None) -> list:
    """One record per admissible Delta whose cell in Hilb^[tau] is nonempty.

    Records follow the lexicographic order of the c-matrices.
    """
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    if modules is None:
        modules = [from_cmatrix(c) for c in enumerate_admissible(p)]
    out = []
    for s in modules:
        dim = hilb_cell_dim(s, tau)
        if dim is not None:
            out.append(CellRecord(s, tau, tau - s.e, dim))
    return out


def _locate(D: DyckPath, tau0: int, data: PsiData):
    # tau0 = d r + k; the box of rank r and enhanced rank tau0 sits in
    # column s_l(k) n + l where m l = r mod n
    p = D.params
    r, k = divmod(tau0, p.d)
    l = (r * p.u) % p.n
    return r, k, l


def tau0_in_delta_via_rank(D: DyckPath, tau0: int, data: PsiData | None = None) -> bool:
    """tau0 in psi(D), decided from the rank vector of D."""
    if tau0 < 0:
        return False
    if data is None:
        data = psi_data(D)
    p = D.params
    r, k, l = _locate(D, tau0, data)
    x = data.sj[l][k] * p.n + l
    return r >= p.m * x - p.n * D.y[x]


def _check_member(D, tau0, data):
    if not tau0_in_delta_via_rank(D, tau0, data):
        raise NotInSemimodule(f"{tau0} is not in the semimodule of {D.y}")


def eps(D: DyckPath, tau0: int, data: PsiData | None = None) -> int:
    """#{0 <= i < k : rk_{D, s_l(i), l} > r} for tau0 = d r + k."""
    if data is None:
        data = psi_data(D)
    _check_member(D, tau0, data)
    p = D.params
    r, k, l = _locate(D, tau0, data)
    rk = D.rank_vector()
    return sum(1 for i in range(k) if rk[data.sj[l][i] * p.n + l] > r)


def eps_hat(D: DyckPath, tau0: int, data: PsiData | None = None) -> int:
    """#{z outside D : rk(z) < r} + eps(D, tau0)."""
    if data is None:
        data = psi_data(D)
    e = eps(D, tau0, data)
    p = D.params
    r = tau0 // p.d
    a = p.a_flat()
    below = 0
    for x, h in enumerate(D.y):
        # complement boxes h < y <= a_x with m x - n y < r
        lo = max(h, (p.m * x - r) // p.n)
        if a[x] > lo:
            below += a[x] - lo
    return below + e


def cell_dim_via_dyck(D: DyckPath, tau0: int, data: PsiData | None = None) -> int:
    """(|D| - dinv(D)) + eps_hat(D, tau0)."""
    return D.size() - dinv(D) + eps_hat(D, tau0, data)
