"""Sparse bivariate polynomials in q, t with integer coefficients."""
from __future__ import annotations


class BivarPoly:
    """Immutable map (q exponent, t exponent) -> nonzero int coefficient.

    EXAMPLES::

        >>> one_minus_t = BivarPoly({(0, 0): 1, (0, 1): -1})
        >>> (one_minus_t * BivarPoly.monomial(2, 3)).triples()
        [(2, 3, 1), (2, 4, -1)]
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (a, b), c in items:
                if a < 0 or b < 0:
                    raise ValueError(f"negative exponent ({a}, {b})")
                c = clean.get((a, b), 0) + int(c)
                if c:
                    clean[(a, b)] = c
                else:
                    clean.pop((a, b), None)
        self._terms = clean

    @classmethod
    def monomial(cls, qexp: int, texp: int, coeff: int = 1) -> "BivarPoly":
        return cls({(qexp, texp): coeff})

    @classmethod
    def from_triples(cls, triples) -> "BivarPoly":
        return cls([((int(a), int(b)), int(c)) for a, b, c in triples])

    def __getstate__(self):
        # wrapped so that the zero polynomial still round-trips through pickle
        return (self._terms,)

    def __setstate__(self, state):
        self._terms = state[0]

    def terms(self) -> dict:
        return dict(self._terms)

    def triples(self) -> list:
        """Terms sorted by (t exponent, q exponent)."""
        return [(a, b, self._terms[(a, b)]) for a, b in sorted(self._terms, key=lambda k: (k[1], k[0]))]

    def coefficient(self, qexp: int, texp: int) -> int:
        return self._terms.get((qexp, texp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def t_degree(self) -> int:
        return max((b for _, b in self._terms), default=-1)

    def q_degree(self) -> int:
        return max((a for a, _ in self._terms), default=-1)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, BivarPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return _raw({k: c * other for k, c in self._terms.items()} if other else {})
        out: dict = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def series_over_one_minus_t(self, max_t: int) -> "BivarPoly":
        """Truncation to t-degree <= max_t of self / (1 - t)."""
        out: dict = {}
        for (a, b), c in self._terms.items():
            for k in range(b, max_t + 1):
                out[(a, k)] = out.get((a, k), 0) + c
        return BivarPoly(out)

    def __repr__(self):
        return f"BivarPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for a, b, c in self.triples():
            mono = "*".join(
                s for s in (
                    "" if a == 0 else ("q" if a == 1 else f"q^{a}"),
                    "" if b == 0 else ("t" if b == 1 else f"t^{b}"),
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _raw(terms: dict) -> BivarPoly:
    # terms already canonical
    p = BivarPoly.__new__(BivarPoly)
    p._terms = terms
    return p


ONE = BivarPoly.monomial(0, 0)
ONE_MINUS_T = BivarPoly({(0, 0): 1, (0, 1): -1})
