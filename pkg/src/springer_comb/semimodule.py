"""Semimodules over the semigroup <dn, dm, dmn+1> and their c-matrices.

A 0-normalized semimodule Delta is stored through its dn-generators: one
minimal element per residue class mod dn.  Writing the generator in the
class of ahat[i][j] as ahat[i][j] - dn*c[i][j] gives the d x n matrix c,
which is the coordinate system used for enumeration.

Generators are kept in row-major (i, j) order, matching the c-matrix, so
that ``gens[i*n + j] == ahat[i][j] - dn*c[i][j]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .semigroup import Params


class NotAdmissible(ValueError):
    """Raised for a matrix or generator set that is not an admissible semimodule."""


class NotInSemimodule(ValueError):
    """Raised when an operation needs an element of Delta and got a gap."""


def _ext(c, p: Params, i: int, j: int) -> int:
    # c[i][j] for arbitrary j >= 0, using c[i][j+n] = c[i][j] + m
    q, r = divmod(j, p.n)
    return c[i][r] + q * p.m


def cmatrix_violations(c, p: Params) -> list:
    """List the conditions a candidate c-matrix fails (empty when valid)."""
    n, d, m = p.n, p.d, p.m
    out = []
    if len(c) != d or any(len(row) != n for row in c):
        return [f"shape must be {d}x{n}"]
    for i in range(d):
        for j in range(n):
            if not 0 <= c[i][j] <= p.amat[i][j]:
                out.append(f"bound 0 <= c[{i}][{j}] <= {p.amat[i][j]}")
    if out:
        return out
    for i in range(d):
        for j in range(n - 1):
            if c[i][j] > c[i][j + 1]:
                out.append(f"row {i} not monotone at column {j}")
        if c[i][n - 1] > c[i][0] + m:
            out.append(f"row {i} wrap condition")
    for j in range(n):
        for i in range(d - 1):
            if c[i][j] > c[i + 1][j]:
                out.append(f"column {j} not monotone at row {i}")
        if c[d - 1][j] > _ext(c, p, 0, j + p.u) + p.dm - p.v:
            out.append(f"column {j} wrap condition")
    for i in range(d - 1):
        if not _rows_admissible(c, p, i):
            out.append(f"rows {i},{i + 1} not admissible")
    return out


def _rows_admissible(c, p: Params, i: int) -> bool:
    return any(_ext(c, p, i + 1, j + 1) >= c[i][j] + p.m for j in range(p.n))


@dataclass(frozen=True)
class CMatrix:
    """A d x n matrix (c[i][j]) describing an admissible semimodule."""

    c: tuple
    params: Params = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(tuple(int(x) for x in row) for row in self.c))

    def flat(self) -> tuple:
        return tuple(x for row in self.c for x in row)

    def size(self) -> int:
        return sum(self.flat())

    def rank(self, i: int, j: int) -> int:
        """rk_{Delta,i,j} = m(in+j) - n c[i][j]."""
        p = self.params
        return p.m * (i * p.n + j) - p.n * self.c[i][j]

    @classmethod
    def from_flat(cls, values, p: Params) -> "CMatrix":
        values = list(values)
        if len(values) != p.dn:
            raise NotAdmissible(f"expected {p.dn} entries, got {len(values)}")
        return cls(tuple(tuple(values[i * p.n:(i + 1) * p.n]) for i in range(p.d)), p)


def check_cmatrix(c: CMatrix) -> CMatrix:
    bad = cmatrix_violations(c.c, c.params)
    if bad:
        raise NotAdmissible("; ".join(bad))
    return c


@dataclass(frozen=True)
class Semimodule:
    """Delta in generator form.

    ``gens`` lists A(Delta) in row-major (i, j) order; ``by_residue[r]`` is
    the generator congruent to r mod dn.
    """

    params: Params = field(compare=False)
    gens: tuple
    by_residue: tuple = field(repr=False, compare=False)
    delta_inv: int = field(compare=False)
    e: int = field(compare=False)
    conductor: int = field(compare=False)

    @classmethod
    def from_generators(cls, p: Params, gens) -> "Semimodule":
        gens = list(gens)
        if len(gens) != p.dn:
            raise NotAdmissible(f"need {p.dn} generators, got {len(gens)}")
        by_res: list = [None] * p.dn
        for g in gens:
            r = g % p.dn
            if by_res[r] is not None:
                raise NotAdmissible("generators must be distinct mod dn")
            by_res[r] = g
        if 0 not in gens:
            raise NotAdmissible("semimodule must be 0-normalized")
        ordered = []
        for i in range(p.d):
            for j in range(p.n):
                a = p.ahat[i][j]
                g = by_res[a % p.dn]
                if g < 0 or g > a:
                    raise NotAdmissible(f"generator {g} outside [0, {a}]")
                ordered.append(g)
        delta_inv = sum(g // p.dn for g in ordered)
        return cls(
            params=p,
            gens=tuple(ordered),
            by_residue=tuple(by_res),
            delta_inv=delta_inv,
            e=p.delta - delta_inv,
            conductor=max(ordered) - p.dn + 1,
        )

    def generator_matrix(self) -> tuple:
        n = self.params.n
        return tuple(self.gens[i * n:(i + 1) * n] for i in range(self.params.d))

    def gap_list(self) -> list:
        return [x for x in range(self.conductor) if not contains(self, x)]


def from_cmatrix(c: CMatrix) -> Semimodule:
    """Semimodule with A(Delta) = {ahat[i][j] - dn c[i][j]}.

    EXAMPLES::

        >>> from springer_comb.semigroup import make_params
        >>> p = make_params(2, 3, 3)
        >>> from_cmatrix(CMatrix(((0, 1), (0, 3), (2, 4)), p)).gens
        (0, 3, 19, 10, 26, 23)
    """
    check_cmatrix(c)
    p = c.params
    gens = [p.ahat[i][j] - p.dn * c.c[i][j] for i in range(p.d) for j in range(p.n)]
    return Semimodule.from_generators(p, gens)


def to_cmatrix(s: Semimodule) -> CMatrix:
    p = s.params
    ah = p.ahat_flat()
    return CMatrix.from_flat([(ah[k] - s.gens[k]) // p.dn for k in range(p.dn)], p)


def contains(s: Semimodule, x: int) -> bool:
    return x >= s.by_residue[x % s.params.dn]


def is_admissible_definition(s: Semimodule) -> bool:
    """Each residue i mod d has a generator a = i mod d with a + dm + 1 in Delta."""
    p = s.params
    ok = [False] * p.d
    for a in s.gens:
        if contains(s, a + p.dm + 1):
            ok[a % p.d] = True
    return all(ok)


def gap_count(s: Semimodule, b: int) -> int:
    """|[b, oo) minus Delta| for b in Delta, by the floor-sum formula."""
    dn = s.params.dn
    return sum((a - b) // dn for a in s.gens if a > b)


def gaps_from(s: Semimodule, b: int) -> tuple[int, tuple]:
    """Return (|Gaps(b)|, Gaps(b)) where Gaps(b) = [b, oo) minus Delta."""
    if not contains(s, b):
        raise NotInSemimodule(f"{b} is not in Delta")
    count = gap_count(s, b)
    gaps = tuple(x for x in range(b, s.conductor) if not contains(s, x))
    if len(gaps) != count:
        raise AssertionError("gap count disagrees with gap set")
    return count, gaps


def dim_gaps(s: Semimodule) -> int:
    """dim Delta = sum_a |Gaps(a)| - sum_a |Gaps(a + dm)|."""
    dm = s.params.dm
    return sum(gap_count(s, a) for a in s.gens) - sum(gap_count(s, a + dm) for a in s.gens)


def cogenerators(s: Semimodule) -> list:
    """All dm-cogenerators b (b not in Delta, b + dm in Delta), possibly negative.

    In the class of ahat[i][j] these are ahat[i][j] - dn z with
    c[i][j] < z <= c[i][j+1], where c[i][n] = c[i][0] + m.
    """
    p = s.params
    c = to_cmatrix(s).c
    out = []
    for i in range(p.d):
        for j in range(p.n):
            top = c[i][j + 1] if j + 1 < p.n else c[i][0] + p.m
            out.extend(p.ahat[i][j] - p.dn * z for z in range(c[i][j] + 1, top + 1))
    return out


def dim_gc(s: Semimodule) -> int:
    """Number of pairs (a, b) with a a generator, b > a a dm-cogenerator."""
    cog = cogenerators(s)
    return sum(1 for b in cog for a in s.gens if b > a)


def dim_floor_sum(s: Semimodule) -> int:
    """dim Delta as a double floor sum over pairs of generators."""
    dn, dm = s.params.dn, s.params.dm
    total = 0
    for a in s.gens:
        for b in s.gens:
            if a > b:
                total += (a - b) // dn
            if a > b + dm:
                total -= (a - b - dm) // dn
    return total


def enumerate_admissible(p: Params) -> list:
    """All admissible c-matrices, in lexicographic row-major order.

    Entries are filled in row-major order with ascending values, which
    yields the sorted order directly.  Bounds, both monotonicity conditions
    and their wrap-around forms prune as soon as the relevant entries are
    known; admissibility of rows (i-1, i) is checked when row i is complete.
    """
    n, d, m, dm, v, u = p.n, p.d, p.m, p.dm, p.v, p.u
    dn = p.dn
    a = p.a_flat()
    c = [[0] * n for _ in range(d)]
    out = []

    def rec(k: int) -> None:
        if k == dn:
            out.append(CMatrix(tuple(tuple(r) for r in c), p))
            return
        i, j = divmod(k, n)
        lo = 0
        if j > 0:
            lo = c[i][j - 1]
        if i > 0:
            lo = max(lo, c[i - 1][j])
        hi = a[k]
        if j == n - 1:
            hi = min(hi, c[i][0] + m)
        if i == d - 1:
            q, r = divmod(j + u, n)
            hi = min(hi, c[0][r] + q * m + dm - v)
        for val in range(lo, hi + 1):
            c[i][j] = val
            if j == n - 1 and i > 0 and not _rows_admissible(c, p, i - 1):
                continue
            rec(k + 1)
        c[i][j] = 0

    rec(0)
    return out
