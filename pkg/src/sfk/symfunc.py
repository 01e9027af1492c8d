"""Partitions and the symmetric-function layer.

Elementary symmetric functions are built from power sums through the
generating function

    sum_m e_m t^m = exp( sum_{n>=1} (-1)^(n-1) p_n t^n / n ),

whose logarithmic derivative gives the recurrence
m e_m = sum_{n=1}^{m} (-1)^(n-1) p_n e_{m-n}.

The default Schur determinant here is the e-determinant

    schur(lam) = det( e_{lam_a + b - a} )_{1<=a,b<=k},

which equals the ordinary Schur function of the conjugate partition; the
usual s_lam is schur(conjugate(lam)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .superalgebra import COORD_R, SuperMonomial, SuperPolynomial, poly_mul


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of non-negative integers.

    Trailing zeros are accepted on input and stripped to canonical form.
    """

    parts: tuple

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError("parts must be >= 0")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse comma-separated weakly decreasing integers, e.g. '3,2,1'."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(piece) for piece in text.split(",")))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self, k: int) -> tuple:
        """Parts padded with zeros to length k (k >= len required)."""
        if k < len(self.parts):
            raise ValueError(f"cannot pad {self} to length {k} < {len(self.parts)}")
        return self.parts + (0,) * (k - len(self.parts))

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam.parts:
        return Partition(())
    cols = [sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])]
    return Partition(tuple(cols))


def rectangle(p: int, q: int) -> Partition:
    """The rectangular partition (p^q)."""
    return Partition((p,) * q)


@lru_cache(maxsize=None)
def elementary_polynomial(m: int) -> SuperPolynomial:
    """e_m as a purely bosonic polynomial in the p_n (R coordinates)."""
    if m < 0:
        raise ValueError("index must be >= 0")
    if m == 0:
        return SuperPolynomial.one(COORD_R)
    acc = SuperPolynomial.zero(COORD_R)
    for n in range(1, m + 1):
        p_n = SuperPolynomial.monomial(SuperMonomial.bosonic(n, COORD_R))
        term = poly_mul(p_n, elementary_polynomial(m - n))
        acc = acc + (term if (n - 1) % 2 == 0 else -term)
    return acc.scale(Fraction(1, m))


def poly_det(matrix) -> SuperPolynomial:
    """Exact determinant of a square matrix of commuting SuperPolynomials."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix must be square")
    coords = {entry.coord for row in matrix for entry in row}
    if len(coords) > 1:
        raise ValueError("determinant entries mix coordinate systems")
    for row in matrix:
        for entry in row:
            if not entry.is_bosonic:
                raise ValueError("determinant entries must be purely bosonic")
    if size == 0:
        return SuperPolynomial.one(COORD_R if not coords else coords.pop())
    return det_expansion(matrix)


def det_expansion(matrix):
    """Cofactor expansion with memoization on column subsets.

    Works for any entries supporting +, -, * and a 'one' obtained by
    slicing; charclass reuses it for Chern-symbol determinants.
    """
    size = len(matrix)
    memo = {}

    def minor(cols):
        if not cols:
            return None  # empty product handled by caller
        key = cols
        if key in memo:
            return memo[key]
        row = size - len(cols)
        acc = None
        for pos, col in enumerate(cols):
            rest = cols[:pos] + cols[pos + 1:]
            entry = matrix[row][col]
            sub = minor(rest)
            piece = entry if sub is None else entry * sub
            if pos % 2:
                piece = -piece
            acc = piece if acc is None else acc + piece
        memo[key] = acc
        return acc

    return minor(tuple(range(size)))


def schur_paper(lam: Partition) -> SuperPolynomial:
    """The e-determinant Schur polynomial det(e_{lam_a+b-a}), in p-coordinates.

    Homogeneous of weight |lam|; the empty partition gives 1.  Entries with
    negative index contribute 0.
    """
    k = len(lam)
    if k == 0:
        return SuperPolynomial.one(COORD_R)
    zero = SuperPolynomial.zero(COORD_R)
    matrix = []
    for a in range(1, k + 1):
        row = []
        for b in range(1, k + 1):
            idx = lam[a - 1] + b - a
            row.append(elementary_polynomial(idx) if idx >= 0 else zero)
        matrix.append(row)
    return poly_det(matrix)
