"""Singularity parameters and the numerical semigroup <dn, dm, dmn+1>.

A generic singularity of type (n, m, d) has value semigroup generated by
dn, dm and dmn+1.  Every residue class mod dn contains exactly one minimal
element of the semigroup, namely one of the numbers

    ahat[i][j] = j*dm + (dmn+1)*i,    0 <= i < d, 0 <= j < n,

so membership reduces to a single comparison after a residue lookup.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

# Upper bound on dn*dm accepted by make_params; enumeration becomes
# infeasible long before this, so larger inputs are treated as mistakes.
MAX_BOX = 10**6


class InvalidParameters(ValueError):
    """Raised when (n, m, d) does not describe a generic singularity."""


def bezout(n: int, m: int) -> tuple[int, int]:
    """Return the unique (u, v) with 0 < u < n, 0 < v < m and u*m - v*n = 1.

    EXAMPLES::

        >>> bezout(2, 3)
        (1, 1)
        >>> bezout(3, 5)
        (2, 3)
    """
    if n < 2 or m <= n or gcd(n, m) != 1:
        raise InvalidParameters(f"bezout needs gcd(n,m)=1 and m>n>=2, got n={n}, m={m}")
    u = pow(m, -1, n)
    v = (u * m - 1) // n
    return u, v


@dataclass(frozen=True)
class Params:
    """The triple (n, m, d) together with its derived semigroup constants.

    Build instances with :func:`make_params`; the constructor does no
    validation of its own.
    """

    n: int
    m: int
    d: int
    dn: int
    dm: int
    dmns: int
    delta: int
    u: int
    v: int
    ahat: tuple
    amat: tuple
    # residue r mod dn -> (i, j) with ahat[i][j] congruent to r
    _cell_of_residue: tuple = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        """Number of columns dn of the ambient rectangle."""
        return self.dn

    def ahat_flat(self) -> tuple:
        return tuple(x for row in self.ahat for x in row)

    def a_flat(self) -> tuple:
        """Column bounds a_x = floor(m x / n) for x = in + j."""
        return tuple(x for row in self.amat for x in row)

    def cell_of_residue(self, r: int) -> tuple[int, int]:
        """The index (i, j) whose ahat lies in residue class r mod dn."""
        return self._cell_of_residue[r % self.dn]

    def minimal_in_residue(self, x: int) -> int:
        i, j = self._cell_of_residue[x % self.dn]
        return self.ahat[i][j]

    def as_dict(self) -> dict:
        return {
            "n": self.n, "m": self.m, "d": self.d,
            "dn": self.dn, "dm": self.dm, "dmn1": self.dmns,
            "delta": self.delta, "u": self.u, "v": self.v,
            "ahat": [list(r) for r in self.ahat],
            "a": [list(r) for r in self.amat],
        }


def _count_gaps(dn: int, ahat_by_residue: list, bound: int) -> int:
    # direct scan of [0, bound) using residue membership
    return sum(1 for x in range(bound) if x < ahat_by_residue[x % dn])


def make_params(n: int, m: int, d: int) -> Params:
    """Validate (n, m, d) and compute all derived constants.

    EXAMPLES::

        >>> p = make_params(2, 3, 2)
        >>> p.delta, p.ahat_flat(), p.a_flat()
        (8, (0, 6, 13, 19), (0, 1, 3, 4))
    """
    for name, val in (("n", n), ("m", m), ("d", d)):
        if not isinstance(val, int) or isinstance(val, bool):
            raise InvalidParameters(f"{name} must be an integer, got {val!r}")
    if n < 2 or d < 1:
        raise InvalidParameters(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    if m <= n:
        raise InvalidParameters(f"need m > n, got n={n}, m={m}")
    if gcd(n, m) != 1:
        raise InvalidParameters(f"need gcd(n, m) = 1, got gcd({n}, {m}) = {gcd(n, m)}")
    dn, dm = d * n, d * m
    if dn * dm > MAX_BOX:
        raise InvalidParameters(f"dn*dm = {dn * dm} exceeds the supported bound {MAX_BOX}")
    dmns = dm * n + 1
    u, v = bezout(n, m)

    ahat = tuple(tuple(j * dm + dmns * i for j in range(n)) for i in range(d))
    amat = tuple(tuple(m * i + (j * m) // n for j in range(n)) for i in range(d))

    by_residue: list = [None] * dn
    cell: list = [None] * dn
    for i in range(d):
        for j in range(n):
            r = ahat[i][j] % dn
            if by_residue[r] is not None:
                raise AssertionError("ahat values are not distinct mod dn")
            by_residue[r] = ahat[i][j]
            cell[r] = (i, j)

    delta = d * (dm * n - m - n + 1) // 2
    delta_sum = sum(sum(r) for r in amat)
    delta_scan = _count_gaps(dn, by_residue, 2 * delta + 1)
    if not (delta == delta_sum == delta_scan):
        raise AssertionError(f"delta mismatch: {delta}, {delta_sum}, {delta_scan}")

    return Params(n, m, d, dn, dm, dmns, delta, u, v, ahat, amat, tuple(cell))


def semigroup_contains(p: Params, x: int) -> bool:
    """Membership in the semigroup; negative x is never a member."""
    return x >= p.minimal_in_residue(x)


def gap_set(p: Params) -> list:
    """Sorted list of the gaps of the semigroup; its length is delta."""
    return [x for x in range(2 * p.delta) if not semigroup_contains(p, x)]
