"""Mode operators on the super Fock space.

Heisenberg modes a_n and Clifford modes b_r act, for n > 0 and r = m + 1/2
with m >= 0, by

  F coordinates:
    a_n     = (-1)^(n-1) (beta/(n-1)!) d/dx_n      a_{-n} = (-1)^(n-1) (n!/beta) x_n
    b_r     = ((-1)^m / m!) d/dy_{m+1/2}           b_{-r} = (-1)^m m! y_{m+1/2}
  R coordinates:
    a_n     = (-1)^(n-1) beta n d/dp_n             a_{-n} = (-1)^(n-1) (1/beta) p_n
    b_r     = (-1)^m d/dpt_m                       b_{-r} = (-1)^m pt_m

with beta = sqrt(2), a_0 = 0, odd derivatives taken as left derivatives and
odd multiplications acting on the left of the odd factor list.  These give
[a_m, a_n] = m delta_{m+n,0} and {b_r, b_s} = delta_{r+s,0}.

From these,

    L_n = 1/2 sum_m :a_m a_{n-m}:  +  1/4 sum_r (n - 2r) :b_r b_{n-r}:
    G_r = sum_m a_m b_{r-m}

where normal ordering moves creation modes (negative index) to the left of
annihilation modes, with a sign when two odd modes are swapped.  On any
polynomial only finitely many summands act nontrivially: for input of
weight w, an annihilation factor of mode > w kills the input outright, so
the mode sums below run over |m| <= w + |n| + 2 and everything omitted acts
as zero.

L_n matrix entries are rational: each a carries one factor of beta, so a
pair carries beta^2 = 2 or beta/beta, and b modes carry none.  This is
asserted at runtime; a violation raises :class:`ConsistencyError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import ConsistencyError, CoordinateMismatchError
from .exactnum import QSqrt2, SQRT2
from .superalgebra import (
    COORD_F,
    COORD_R,
    HalfInt,
    SuperMonomial,
    SuperPolynomial,
    even_derivative,
    odd_left_derivative,
    odd_left_multiply,
    weight_basis,
)

EVEN_VIRASORO = "even_virasoro"
NS = "ns"

BETA = SQRT2
INV_BETA = SQRT2.inverse()  # sqrt2 / 2


@dataclass(frozen=True)
class ModeOp:
    """A mode operator: kind 'a'/'L' with integer index, 'b'/'G' half-odd."""

    kind: str
    index: HalfInt
    context: str = NS

    def __post_init__(self):
        if self.kind not in ("a", "b", "L", "G"):
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if self.kind in ("a", "L") and not self.index.is_integer:
            raise ValueError(f"{self.kind} index must be an integer, got {self.index}")
        if self.kind in ("b", "G") and self.index.is_integer:
            raise ValueError(f"{self.kind} index must be half-odd, got {self.index}")
        if self.context not in (EVEN_VIRASORO, NS):
            raise ValueError(f"unknown algebra context {self.context!r}")

    @classmethod
    def parse(cls, text: str, context: str = NS) -> "ModeOp":
        """Parse operator syntax 'a[-2]', 'b[3/2]', 'L[1]', 'G[-1/2]'."""
        text = text.strip()
        if len(text) < 4 or text[1] != "[" or not text.endswith("]"):
            raise ValueError(f"bad operator syntax {text!r}")
        return cls(text[0], HalfInt.parse(text[2:-1]), context)

    def weight_shift(self) -> HalfInt:
        """Operators of mode index d lower weight by d."""
        return -self.index

    def __str__(self):
        return f"{self.kind}[{self.index}]"


def _integer_mode(n, kind: str) -> int:
    n = HalfInt.coerce(n)
    if not n.is_integer:
        raise ValueError(f"{kind} index must be an integer, got {n}")
    return n.twice // 2


def apply_a(n, v: SuperPolynomial) -> SuperPolynomial:
    """Heisenberg mode a_n; a_0 = 0; lowers weight by n."""
    n = _integer_mode(n, "a")
    if n == 0:
        return SuperPolynomial.zero(v.coord)
    k = abs(n)
    sign = 1 if (k - 1) % 2 == 0 else -1
    if v.coord == COORD_F:
        if n > 0:
            scalar = BETA * Fraction(sign, factorial(k - 1))
            return even_derivative(n, v).scale(scalar)
        scalar = INV_BETA * Fraction(sign * factorial(k))
        gen = SuperPolynomial.monomial(SuperMonomial.bosonic(k, COORD_F))
        return (gen * v).scale(scalar)
    if n > 0:
        scalar = BETA * Fraction(sign * k)
        return even_derivative(n, v).scale(scalar)
    scalar = INV_BETA * Fraction(sign)
    gen = SuperPolynomial.monomial(SuperMonomial.bosonic(k, COORD_R))
    return (gen * v).scale(scalar)


def apply_b(r, v: SuperPolynomial) -> SuperPolynomial:
    """Clifford mode b_r for half-odd r; lowers weight by r."""
    r = HalfInt.coerce(r)
    if r.is_integer:
        raise ValueError(f"b index must be half-odd, got {r}")
    m = (abs(r.twice) - 1) // 2
    sign = 1 if m % 2 == 0 else -1
    if r.twice > 0:
        scalar = Fraction(sign, factorial(m)) if v.coord == COORD_F else Fraction(sign)
        return odd_left_derivative(m, v).scale(scalar)
    scalar = Fraction(sign * factorial(m)) if v.coord == COORD_F else Fraction(sign)
    return odd_left_multiply(m, v).scale(scalar)


def _bosonic_pair(m: int, n_minus_m: int, v: SuperPolynomial) -> SuperPolynomial:
    """Normal-ordered :a_m a_{n-m}: applied to v."""
    if m <= 0:
        return apply_a(m, apply_a(n_minus_m, v))
    return apply_a(n_minus_m, apply_a(m, v))


def _fermionic_pair(r: HalfInt, s: HalfInt, v: SuperPolynomial) -> SuperPolynomial:
    """Normal-ordered :b_r b_s: applied to v (with the odd swap sign)."""
    if r.twice < 0:
        return apply_b(r, apply_b(s, v))
    return -apply_b(s, apply_b(r, v))


def apply_L(n, v: SuperPolynomial, context: str = NS) -> SuperPolynomial:
    """Virasoro mode L_n: Sugawara sum, plus the fermionic part in NS context.

    The even_virasoro context is the central charge 1 representation on the
    bosonic sector and rejects vectors with fermionic content.
    """
    n = _integer_mode(n, "L")
    if context not in (EVEN_VIRASORO, NS):
        raise ValueError(f"unknown algebra context {context!r}")
    if context == EVEN_VIRASORO and not v.is_bosonic:
        raise ValueError("even_virasoro context requires a purely bosonic vector")
    result = SuperPolynomial.zero(v.coord)
    for mono, coeff in v.terms.items():
        result = result + _apply_L_monomial(n, mono, context).scale(coeff)
    return result


@lru_cache(maxsize=None)
def _apply_L_monomial(n: int, mono: SuperMonomial, context: str) -> SuperPolynomial:
    v = SuperPolynomial.monomial(mono)
    w = mono.weight()
    bound = w.floor() + abs(n) + 2
    acc = SuperPolynomial.zero(v.coord)
    half = Fraction(1, 2)
    for m in range(-bound, bound + 1):
        if m == 0 or n - m == 0:
            continue
        term = _bosonic_pair(m, n - m, v)
        if term:
            acc = acc + term.scale(half)
    if context == NS:
        quarter = Fraction(1, 4)
        for twice_r in range(-2 * bound - 1, 2 * bound + 2, 2):
            r = HalfInt(twice_r)
            s = HalfInt(2 * n - twice_r)
            term = _fermionic_pair(r, s, v)
            if term:
                acc = acc + term.scale(quarter * (n - twice_r))
    for coeff in acc.terms.values():
        if not coeff.is_rational():
            raise ConsistencyError(
                f"L_{n} produced a sqrt2 coefficient {coeff} on {mono}"
            )
    return acc


def apply_G(r, v: SuperPolynomial) -> SuperPolynomial:
    """Supercurrent mode G_r = sum_m a_m b_{r-m} for half-odd r."""
    r = HalfInt.coerce(r)
    if r.is_integer:
        raise ValueError(f"G index must be half-odd, got {r}")
    result = SuperPolynomial.zero(v.coord)
    for mono, coeff in v.terms.items():
        result = result + _apply_G_monomial(r, mono).scale(coeff)
    return result


@lru_cache(maxsize=None)
def _apply_G_monomial(r: HalfInt, mono: SuperMonomial) -> SuperPolynomial:
    v = SuperPolynomial.monomial(mono)
    bound = mono.weight().floor() + (abs(r.twice) + 1) // 2 + 2
    acc = SuperPolynomial.zero(v.coord)
    for m in range(-bound, bound + 1):
        if m == 0:
            continue
        term = apply_a(m, apply_b(r - m, v))
        if term:
            acc = acc + term
    return acc


def apply_mode(op: ModeOp, v: SuperPolynomial) -> SuperPolynomial:
    if op.kind == "a":
        return apply_a(op.index.twice // 2, v)
    if op.kind == "b":
        return apply_b(op.index, v)
    if op.kind == "L":
        return apply_L(op.index.twice // 2, v, op.context)
    return apply_G(op.index, v)


@dataclass(frozen=True)
class OperatorMatrix:
    """Exact matrix of a mode operator between two weight-space bases.

    Column j holds the coordinates of the operator applied to
    source_basis[j] in target_basis; entries[i][j] is row i, column j.
    When the target weight is negative both target_basis and entries are
    empty (a zero-column matrix).
    """

    op: ModeOp
    coord: str
    source_weight: HalfInt
    target_weight: HalfInt
    source_basis: tuple
    target_basis: tuple
    entries: tuple

    @property
    def shape(self):
        return (len(self.target_basis), len(self.source_basis))


def vector_coordinates(v: SuperPolynomial, basis) -> list:
    """Coordinates of v in an ordered monomial basis (error if unsupported)."""
    index = {mono: i for i, mono in enumerate(basis)}
    coords = [QSqrt2(0)] * len(basis)
    for mono, coeff in v.terms.items():
        if mono not in index:
            raise ValueError(f"monomial {mono} outside the given basis")
        coords[index[mono]] = coeff
    return coords


def operator_matrix(op: ModeOp, w, coord: str = COORD_F,
                    even_only: bool = False) -> OperatorMatrix:
    """Matrix of op from the weight-w basis to the weight-(w - index) basis."""
    w = HalfInt.coerce(w)
    source = weight_basis(coord, w, even_only=even_only)
    target_w = w - op.index
    if target_w.twice < 0:
        target = []
    else:
        target = weight_basis(coord, target_w, even_only=even_only)
    columns = []
    for mono in source:
        image = apply_mode(op, SuperPolynomial.monomial(mono))
        columns.append(vector_coordinates(image, target))
    entries = tuple(
        tuple(columns[j][i] for j in range(len(source)))
        for i in range(len(target))
    )
    return OperatorMatrix(op, coord, w, target_w, tuple(source), tuple(target), entries)


def phi(v: SuperPolynomial) -> SuperPolynomial:
    """The coordinate isomorphism p_n -> n! x_n, pt_m -> m! y_{m+1/2}."""
    if v.coord != COORD_R:
        raise CoordinateMismatchError("phi expects R coordinates")
    return _rescale_monomials(v, COORD_F, invert=False)


def phi_inv(v: SuperPolynomial) -> SuperPolynomial:
    """Inverse substitution x_n -> p_n / n!, y_{m+1/2} -> pt_m / m!."""
    if v.coord != COORD_F:
        raise CoordinateMismatchError("phi_inv expects F coordinates")
    return _rescale_monomials(v, COORD_R, invert=True)


def _rescale_monomials(v: SuperPolynomial, coord: str, invert: bool) -> SuperPolynomial:
    # Generators map to single generators in the same order, so the odd
    # Koszul bookkeeping is untouched and only coefficients rescale.
    terms = {}
    for mono, coeff in v.terms.items():
        scale = Fraction(1)
        for n, e in mono.even:
            scale *= Fraction(factorial(n)) ** e
        for m in mono.odd:
            scale *= factorial(m)
        if invert:
            scale = 1 / scale
        new = SuperMonomial(mono.even, mono.odd, coord)
        terms[new] = coeff * scale
    result = SuperPolynomial(coord)
    result.terms = terms
    return result
