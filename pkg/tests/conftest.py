import json
from functools import lru_cache
from math import gcd
from pathlib import Path

import sympy

from hypothesis import strategies as st

from springer_comb.dyck import DyckPath, enumerate_dyck
from springer_comb.polynomial import BivarPoly
from springer_comb.semigroup import make_params
from springer_comb.semimodule import enumerate_admissible, from_cmatrix

# parameter triples used across property tests
SMALL = [(2, 3, 1), (2, 3, 2), (2, 3, 3), (2, 5, 1), (2, 5, 2), (3, 4, 1), (3, 4, 2), (3, 5, 2)]
TINY = [(n, m, d) for n in range(2, 8) for m in range(n + 1, 31) for d in range(1, 4)
        if gcd(n, m) == 1 and d * d * n * m <= 60]


@lru_cache(maxsize=None)
def params(n, m, d):
    return make_params(n, m, d)


@lru_cache(maxsize=None)
def paths(n, m, d):
    return tuple(enumerate_dyck(params(n, m, d)))


@lru_cache(maxsize=None)
def matrices(n, m, d):
    return tuple(enumerate_admissible(params(n, m, d)))


@lru_cache(maxsize=None)
def modules(n, m, d):
    return tuple(from_cmatrix(c) for c in matrices(n, m, d))


triples = st.sampled_from(SMALL)


@st.composite
def dyck_paths(draw, pool=SMALL):
    """A random Dyck path built column by column, not drawn from the enumeration."""
    n, m, d = draw(st.sampled_from(pool))
    p = params(n, m, d)
    y, lo = [], 0
    for a in p.a_flat():
        h = draw(st.integers(min_value=lo, max_value=a))
        y.append(h)
        lo = h
    return DyckPath(tuple(y), p)


@st.composite
def admissible_modules(draw, pool=SMALL):
    t = draw(st.sampled_from(pool))
    return draw(st.sampled_from(modules(*t)))


GOLDEN_DIR = Path(__file__).parent / "golden"
_q, _t = sympy.symbols("q t")


def load_golden(name):
    return json.loads((GOLDEN_DIR / name).read_text())


def parse_poly(expr: str) -> BivarPoly:
    """Expand a q,t expression written in Python syntax."""
    poly = sympy.Poly(sympy.expand(sympy.sympify(expr)), _q, _t)
    return BivarPoly({k: int(v) for k, v in poly.terms()})
