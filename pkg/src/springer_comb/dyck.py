"""(dn, dm)-Dyck paths as weakly increasing column heights.

A path is the vector y = (y_0, ..., y_{dn-1}) with 0 <= y_x <= floor(mx/n)
and y_0 <= y_1 <= ...; the cells (x, y) with 1 <= y <= y_x form the
diagram D.  Boxes are always addressed by column x and height y.

All slope comparisons are done with cross-multiplied integers.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .semigroup import Params


class InvalidPath(ValueError):
    pass


@dataclass(frozen=True)
class DyckPath:
    y: tuple
    params: Params = field(compare=False)

    def __post_init__(self):
        y = tuple(int(v) for v in self.y)
        object.__setattr__(self, "y", y)
        p = self.params
        if len(y) != p.dn:
            raise InvalidPath(f"path needs {p.dn} heights, got {len(y)}")
        a = p.a_flat()
        for x, h in enumerate(y):
            if not 0 <= h <= a[x]:
                raise InvalidPath(f"height y_{x}={h} outside [0, {a[x]}]")
            if x and h < y[x - 1]:
                raise InvalidPath(f"heights decrease at column {x}")

    def size(self) -> int:
        """Number of boxes |D|."""
        return sum(self.y)

    def rank_vector(self) -> tuple:
        """rk_{D,x} = m x - n y_x."""
        m, n = self.params.m, self.params.n
        return tuple(m * x - n * h for x, h in enumerate(self.y))

    def boxes(self):
        for x, h in enumerate(self.y):
            for yy in range(1, h + 1):
                yield x, yy

    def complement_boxes(self):
        """Boxes of R+ outside D: y_x < y <= floor(mx/n)."""
        a = self.params.a_flat()
        for x, h in enumerate(self.y):
            for yy in range(h + 1, a[x] + 1):
                yield x, yy

    def matrix(self) -> tuple:
        n = self.params.n
        return tuple(self.y[i * n:(i + 1) * n] for i in range(self.params.d))


def rank(p: Params, x: int, y: int) -> int:
    return p.m * x - p.n * y


def enumerate_dyck(p: Params) -> list:
    """All paths in lexicographic order of the height vector."""
    a = p.a_flat()
    dn = p.dn
    out = []
    y = [0] * dn

    def rec(x: int, lo: int) -> None:
        if x == dn:
            out.append(DyckPath(tuple(y), p))
            return
        for h in range(lo, a[x] + 1):
            y[x] = h
            rec(x + 1, h)

    rec(0, 0)
    return out


def arm_leg(D: DyckPath, x: int, y: int) -> tuple[int, int]:
    """(arm, leg) of the box (x, y) of D.

    The leg counts boxes above in column x, the arm counts columns to the
    left reaching at least height y.
    """
    if not (0 <= x < len(D.y) and 1 <= y <= D.y[x]):
        raise InvalidPath(f"box ({x}, {y}) is not in D")
    leg = D.y[x] - y
    arm = sum(1 for xp in range(x) if D.y[xp] >= y)
    return arm, leg


def _dinv_box(n: int, m: int, arm: int, leg: int) -> bool:
    # l/(a+1) <= m/n < (l+1)/a, with (l+1)/0 read as +infinity
    return n * leg <= m * (arm + 1) and m * arm < n * (leg + 1)


def dinv(D: DyckPath) -> int:
    n, m = D.params.n, D.params.m
    return sum(1 for x, y in D.boxes() if _dinv_box(n, m, *arm_leg(D, x, y)))


def codinv(D: DyckPath) -> int:
    return D.params.delta - dinv(D)
