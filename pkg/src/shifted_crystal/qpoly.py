"""Sparse integer polynomials keyed by exponent vectors.

Just enough multivariate arithmetic for tableau generating functions and
Schur-Q expansions: addition, multiplication, variable permutation, symmetry.
"""

from itertools import permutations
from typing import Dict, Iterable, Mapping, Tuple

Expt = Tuple[int, ...]


class QPolynomial:
    __slots__ = ("nvars", "coeffs")

    def __init__(self, coeffs: Mapping[Expt, int] = (), nvars: int = 0):
        items = dict(coeffs)
        self.nvars = max([nvars] + [len(e) for e in items])
        self.coeffs: Dict[Expt, int] = {}
        for e, c in items.items():
            if c:
                self.coeffs[self._pad(e)] = c

    def _pad(self, e: Iterable[int]) -> Expt:
        e = tuple(e)
        return e + (0,) * (self.nvars - len(e))

    @staticmethod
    def zero(nvars: int = 0) -> "QPolynomial":
        return QPolynomial({}, nvars)

    @staticmethod
    def one(nvars: int = 0) -> "QPolynomial":
        return QPolynomial({(0,) * nvars: 1}, nvars)

    @staticmethod
    def monomial(e: Expt, c: int = 1) -> "QPolynomial":
        return QPolynomial({tuple(e): c}, len(e))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        n = max(self.nvars, other.nvars)
        a = {e + (0,) * (n - len(e)): c for e, c in self.coeffs.items()}
        b = {e + (0,) * (n - len(e)): c for e, c in other.coeffs.items()}
        return a == b

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        n = max(self.nvars, other.nvars)
        out: Dict[Expt, int] = {}
        for src in (self, other):
            for e, c in src.coeffs.items():
                e = e + (0,) * (n - len(e))
                out[e] = out.get(e, 0) + c
        return QPolynomial(out, n)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial({e: c * other for e, c in self.coeffs.items()},
                               self.nvars)
        n = max(self.nvars, other.nvars)
        out: Dict[Expt, int] = {}
        for e1, c1 in self.coeffs.items():
            e1 = e1 + (0,) * (n - len(e1))
            for e2, c2 in other.coeffs.items():
                e2 = e2 + (0,) * (n - len(e2))
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return QPolynomial(out, n)

    __rmul__ = __mul__

    def permuted(self, perm: Tuple[int, ...]) -> "QPolynomial":
        """Apply x_j -> x_{perm[j]} (perm is 0-based onto 0..nvars-1)."""
        out: Dict[Expt, int] = {}
        for e, c in self.coeffs.items():
            p = [0] * self.nvars
            for j, exp in enumerate(e):
                p[perm[j]] = exp
            out[tuple(p)] = c
        return QPolynomial(out, self.nvars)

    def is_symmetric(self) -> bool:
        return all(self.permuted(p) == self
                   for p in permutations(range(self.nvars)))

    def items(self):
        return sorted(self.coeffs.items(), reverse=True)

    def to_doc(self) -> dict:
        return {",".join(map(str, e)): c for e, c in self.items()}

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in self.items():
            vars_ = "*".join(f"x{j + 1}" + (f"^{k}" if k > 1 else "")
                             for j, k in enumerate(e) if k)
            if not vars_:
                terms.append(str(c))
            elif c == 1:
                terms.append(vars_)
            elif c == -1:
                terms.append("-" + vars_)
            else:
                terms.append(f"{c}*{vars_}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"QPolynomial({self})"
