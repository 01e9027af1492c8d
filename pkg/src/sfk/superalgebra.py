"""Sparse super-commutative polynomial engine over Q(sqrt 2).

The algebra has one bosonic generator family and one fermionic family, in
either of two coordinate systems:

* ``F``: bosonic x_n of weight n (n >= 1) and fermionic y_{m+1/2} of weight
  m + 1/2 (m >= 0);
* ``R``: bosonic p_n and fermionic pt_m with the same weights.

Fermionic generators are keyed by the integer m of y_{m+1/2} (resp. pt_m),
so monomial data stays integral; the half-integer weight is derived.  The
two coordinate systems never mix implicitly: the rescaling between them is
a non-identity homomorphism, so mixed arithmetic raises
:class:`CoordinateMismatchError`.

Sign conventions.  Odd generators anticommute and square to zero.  A
monomial stores its odd labels as a strictly increasing tuple; a product
picks up the Koszul sign of the merge that re-sorts the concatenated odd
lists (one factor of -1 per transposition).  The derivative with respect
to an odd generator is the left derivative: on a monomial containing the
label at 0-based position k in the odd list, it removes the label and
multiplies by (-1)^k.

Canonical monomial order.  Monomials are ordered by ascending

    (weight, total factor count, odd factor count,
     even part as a weakly decreasing tuple, odd label tuple),

comparing the last two componentwise.  This pins the order of
weight-space bases, matrices, and JSON output across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .exactnum import QSqrt2
from .errors import CoordinateMismatchError

COORD_F = "F"
COORD_R = "R"
COORDS = (COORD_F, COORD_R)


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """A half-integer r stored as the integer 2r."""

    twice: int

    @classmethod
    def coerce(cls, value) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, Fraction):
            if value.denominator in (1, 2):
                return cls(int(value * 2))
            raise ValueError(f"{value} is not a half-integer")
        raise TypeError(f"cannot coerce {value!r} to HalfInt")

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        """Parse 'a' or 'a/2' (odd a) command-line syntax."""
        text = text.strip()
        if text.endswith("/2"):
            return cls(int(text[:-2]))
        return cls(2 * int(text))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def floor(self) -> int:
        return self.twice // 2

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.coerce(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.coerce(other).twice)

    def __rsub__(self, other):
        return HalfInt(HalfInt.coerce(other).twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __lt__(self, other):
        return self.twice < HalfInt.coerce(other).twice

    def __eq__(self, other):
        if isinstance(other, (HalfInt, int, Fraction)):
            return self.twice == HalfInt.coerce(other).twice
        return NotImplemented

    def __hash__(self):
        return hash(self.twice)

    def __str__(self):
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({self.twice})"


def _check_coord(coord: str) -> None:
    if coord not in COORDS:
        raise ValueError(f"unknown coordinate system {coord!r}")


@dataclass(frozen=True)
class SuperMonomial:
    """A monomial x^alpha * y_S (or p^alpha * pt_S in R coordinates).

    ``even`` is a tuple of (index, exponent) pairs sorted by index with
    exponents >= 1; ``odd`` is a strictly increasing tuple of fermionic
    labels m >= 0.
    """

    even: tuple
    odd: tuple
    coord: str

    def __post_init__(self):
        _check_coord(self.coord)
        for n, e in self.even:
            if n < 1 or e < 1:
                raise ValueError(f"bad bosonic factor x_{n}^{e}")
        if any(self.even[i][0] >= self.even[i + 1][0] for i in range(len(self.even) - 1)):
            raise ValueError("bosonic indices must be strictly increasing")
        if any(self.odd[i] >= self.odd[i + 1] for i in range(len(self.odd) - 1)):
            raise ValueError("odd labels must be strictly increasing")
        if any(m < 0 for m in self.odd):
            raise ValueError("odd labels must be >= 0")

    @classmethod
    def unit(cls, coord: str) -> "SuperMonomial":
        return cls((), (), coord)

    @classmethod
    def bosonic(cls, n: int, coord: str, exponent: int = 1) -> "SuperMonomial":
        return cls(((n, exponent),), (), coord)

    @classmethod
    def fermionic(cls, m: int, coord: str) -> "SuperMonomial":
        return cls((), (m,), coord)

    def weight(self) -> HalfInt:
        twice = sum(2 * n * e for n, e in self.even) + sum(2 * m + 1 for m in self.odd)
        return HalfInt(twice)

    @property
    def is_bosonic(self) -> bool:
        return not self.odd

    @property
    def parity(self) -> int:
        """0 for even, 1 for odd (number of fermionic factors mod 2)."""
        return len(self.odd) % 2

    def factor_count(self) -> int:
        return sum(e for _, e in self.even) + len(self.odd)

    def even_parts(self) -> tuple:
        """The bosonic part as a weakly decreasing tuple of indices."""
        parts = []
        for n, e in reversed(self.even):
            parts.extend([n] * e)
        return tuple(parts)

    def sort_key(self):
        return (
            self.weight().twice,
            self.factor_count(),
            len(self.odd),
            self.even_parts(),
            self.odd,
        )

    def to_json(self) -> dict:
        return {
            "even": {str(n): e for n, e in self.even},
            "odd": list(self.odd),
            "coord": self.coord,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SuperMonomial":
        even = tuple(sorted((int(n), int(e)) for n, e in data["even"].items()))
        return cls(even, tuple(data["odd"]), data["coord"])

    def __str__(self):
        if not self.even and not self.odd:
            return "1"
        names = ("x", "y") if self.coord == COORD_F else ("p", "pt")
        parts = []
        for n, e in self.even:
            parts.append(f"{names[0]}{n}" + (f"^{e}" if e > 1 else ""))
        for m in self.odd:
            if self.coord == COORD_F:
                parts.append(f"y{2 * m + 1}/2")
            else:
                parts.append(f"pt{m}")
        return "*".join(parts)


def mono_mul(m1: SuperMonomial, m2: SuperMonomial):
    """Multiply two monomials; returns (sign, product) with sign in {-1,0,1}.

    Sign 0 (and product None) when the odd label sets overlap; otherwise
    the Koszul sign of interleaving m2's odd labels past m1's into sorted
    order.
    """
    if m1.coord != m2.coord:
        raise CoordinateMismatchError(f"cannot multiply {m1.coord} by {m2.coord}")
    sign = 1
    if m1.odd and m2.odd:
        merged = []
        i = j = 0
        a, b = m1.odd, m2.odd
        while i < len(a) and j < len(b):
            if a[i] == b[j]:
                return 0, None
            if a[i] < b[j]:
                merged.append(a[i])
                i += 1
            else:
                # b[j] jumps past the remaining len(a)-i labels of a
                if (len(a) - i) % 2:
                    sign = -sign
                merged.append(b[j])
                j += 1
        merged.extend(a[i:])
        merged.extend(b[j:])
        odd = tuple(merged)
    else:
        odd = m1.odd or m2.odd
    exps = dict(m1.even)
    for n, e in m2.even:
        exps[n] = exps.get(n, 0) + e
    even = tuple(sorted(exps.items()))
    return sign, SuperMonomial(even, odd, m1.coord)


class SuperPolynomial:
    """A finite Q(sqrt2)-linear combination of super monomials.

    Stored sparsely as monomial -> coefficient with no zero coefficients.
    Supports +, -, * (by polynomial or scalar) and is immutable by
    convention: operations return new objects.
    """

    __slots__ = ("coord", "terms")

    def __init__(self, coord: str, terms=None):
        _check_coord(coord)
        self.coord = coord
        clean = {}
        if terms:
            for mono, coeff in (terms.items() if isinstance(terms, dict) else terms):
                if mono.coord != coord:
                    raise CoordinateMismatchError(
                        f"monomial {mono} has coord {mono.coord}, polynomial {coord}"
                    )
                coeff = QSqrt2.coerce(coeff)
                if coeff:
                    acc = clean.get(mono)
                    total = coeff if acc is None else acc + coeff
                    if total:
                        clean[mono] = total
                    elif mono in clean:
                        del clean[mono]
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, coord: str) -> "SuperPolynomial":
        return cls(coord)

    @classmethod
    def one(cls, coord: str) -> "SuperPolynomial":
        return cls(coord, {SuperMonomial.unit(coord): QSqrt2(1)})

    @classmethod
    def monomial(cls, mono: SuperMonomial, coeff=1) -> "SuperPolynomial":
        return cls(mono.coord, {mono: QSqrt2.coerce(coeff)})

    @classmethod
    def generator(cls, coord: str, kind: str, index: int) -> "SuperPolynomial":
        """kind 'even' gives x_n / p_n, kind 'odd' gives y_{m+1/2} / pt_m."""
        if kind == "even":
            return cls.monomial(SuperMonomial.bosonic(index, coord))
        if kind == "odd":
            return cls.monomial(SuperMonomial.fermionic(index, coord))
        raise ValueError(f"unknown generator kind {kind!r}")

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_bosonic(self) -> bool:
        return all(m.is_bosonic for m in self.terms)

    def is_homogeneous(self):
        """Return the common weight, or None if weights differ (zero: weight None)."""
        weights = {m.weight() for m in self.terms}
        if len(weights) == 1:
            return weights.pop()
        return None

    def max_weight(self) -> HalfInt:
        if not self.terms:
            return HalfInt(0)
        return max(m.weight() for m in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, mono: SuperMonomial) -> QSqrt2:
        return self.terms.get(mono, QSqrt2(0))

    # -- arithmetic -------------------------------------------------------

    def _require_same_coord(self, other: "SuperPolynomial"):
        if self.coord != other.coord:
            raise CoordinateMismatchError(
                f"coordinate mismatch: {self.coord} vs {other.coord}"
            )

    def __add__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        self._require_same_coord(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = terms.get(mono)
            total = coeff if acc is None else acc + coeff
            if total:
                terms[mono] = total
            elif mono in terms:
                del terms[mono]
        result = SuperPolynomial(self.coord)
        result.terms = terms
        return result

    def __neg__(self):
        result = SuperPolynomial(self.coord)
        result.terms = {m: -c for m, c in self.terms.items()}
        return result

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar) -> "SuperPolynomial":
        scalar = QSqrt2.coerce(scalar)
        result = SuperPolynomial(self.coord)
        if scalar:
            result.terms = {m: c * scalar for m, c in self.terms.items()}
        return result

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QSqrt2)):
            return self.scale(other)
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return poly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QSqrt2)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.coord == other.coord and self.terms == other.terms

    def __hash__(self):
        return hash((self.coord, frozenset(self.terms.items())))

    # -- rendering / serialization -----------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in self.sorted_terms():
            mono_str = str(mono)
            if mono_str == "1":
                text = str(coeff)
            elif coeff == QSqrt2(1):
                text = mono_str
            elif coeff == QSqrt2(-1):
                text = f"-{mono_str}"
            else:
                text = f"{coeff}*{mono_str}"
            pieces.append(text)
        out = pieces[0]
        for text in pieces[1:]:
            if text.startswith("-"):
                out += f" - {text[1:]}"
            else:
                out += f" + {text}"
        return out

    def __repr__(self):
        return f"<SuperPolynomial {self.coord}: {self}>"

    def to_json(self) -> dict:
        return {
            "coord": self.coord,
            "terms": [
                {"monomial": mono.to_json(), "coeff": coeff.to_json()}
                for mono, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SuperPolynomial":
        terms = {}
        for entry in data["terms"]:
            mono = SuperMonomial.from_json(entry["monomial"])
            terms[mono] = QSqrt2.from_json(entry["coeff"])
        return cls(data["coord"], terms)


def poly_mul(p: SuperPolynomial, q: SuperPolynomial) -> SuperPolynomial:
    """Bilinear extension of mono_mul, in canonical form."""
    p._require_same_coord(q)
    terms = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            sign, prod = mono_mul(m1, m2)
            if sign == 0:
                continue
            coeff = c1 * c2
            if sign < 0:
                coeff = -coeff
            acc = terms.get(prod)
            total = coeff if acc is None else acc + coeff
            if total:
                terms[prod] = total
            elif prod in terms:
                del terms[prod]
    result = SuperPolynomial(p.coord)
    result.terms = terms
    return result


def even_derivative(n: int, p: SuperPolynomial) -> SuperPolynomial:
    """Partial derivative with respect to the bosonic generator of index n."""
    terms = {}
    for mono, coeff in p.terms.items():
        exps = dict(mono.even)
        e = exps.get(n)
        if not e:
            continue
        if e == 1:
            del exps[n]
        else:
            exps[n] = e - 1
        new = SuperMonomial(tuple(sorted(exps.items())), mono.odd, mono.coord)
        scaled = coeff * e
        acc = terms.get(new)
        total = scaled if acc is None else acc + scaled
        if total:
            terms[new] = total
        elif new in terms:
            del terms[new]
    result = SuperPolynomial(p.coord)
    result.terms = terms
    return result


def odd_left_derivative(label: int, p: SuperPolynomial) -> SuperPolynomial:
    """Left derivative with respect to the fermionic generator of label m.

    On a monomial with the label at 0-based position k of the odd tuple the
    result is (-1)^k times the monomial with the label removed; zero on
    monomials without the label.
    """
    terms = {}
    for mono, coeff in p.terms.items():
        try:
            k = mono.odd.index(label)
        except ValueError:
            continue
        new = SuperMonomial(mono.even, mono.odd[:k] + mono.odd[k + 1:], mono.coord)
        signed = -coeff if k % 2 else coeff
        acc = terms.get(new)
        total = signed if acc is None else acc + signed
        if total:
            terms[new] = total
        elif new in terms:
            del terms[new]
    result = SuperPolynomial(p.coord)
    result.terms = terms
    return result


def odd_left_multiply(label: int, p: SuperPolynomial) -> SuperPolynomial:
    """Multiply by the fermionic generator of label m on the left."""
    gen = SuperPolynomial.generator(p.coord, "odd", label)
    return poly_mul(gen, p)


@dataclass(frozen=True)
class DerivationRule:
    """Images of the generators under a derivation, extended by Leibniz.

    ``even_images`` maps bosonic index -> image polynomial, ``odd_images``
    maps fermionic label -> image polynomial; absent generators map to 0.
    Only even-parity rules are used here (both derivations in play lower
    weight by 1 and preserve parity).
    """

    even_images: dict
    odd_images: dict
    parity: str = "even"

    def __post_init__(self):
        coords = {p.coord for p in self.even_images.values()}
        coords |= {p.coord for p in self.odd_images.values()}
        if len(coords) > 1:
            raise CoordinateMismatchError("derivation images mix coordinate systems")
        if self.parity != "even":
            raise ValueError("only even-parity derivations are supported")


def apply_derivation(rule: DerivationRule, p: SuperPolynomial) -> SuperPolynomial:
    """Leibniz extension of a derivation rule.

    For an even-parity rule, D = sum_n D(x_n) d/dx_n + sum_m D(y_m) d/dy_m
    with odd derivatives taken as left derivatives and images multiplied
    back on the left; this reproduces D(ab) = D(a)b + aD(b) on monomials.
    """
    result = SuperPolynomial.zero(p.coord)
    for n, image in rule.even_images.items():
        if image.coord != p.coord:
            raise CoordinateMismatchError("derivation images in wrong coordinates")
        partial = even_derivative(n, p)
        if partial:
            result = result + poly_mul(image, partial)
    for m, image in rule.odd_images.items():
        if image.coord != p.coord:
            raise CoordinateMismatchError("derivation images in wrong coordinates")
        partial = odd_left_derivative(m, p)
        if partial:
            result = result + poly_mul(image, partial)
    return result


def lowering_derivation(coord: str, max_weight) -> DerivationRule:
    """The weight-lowering derivation sending each generator to its predecessor.

    On F coordinates this is sum_n x_n d/dx_{n+1} + sum_m y_{m+1/2} d/dy_{m+3/2};
    generator images are supplied up to ``max_weight``, which must cover the
    weight support of any argument.
    """
    w = HalfInt.coerce(max_weight).floor() + 2
    even = {n: SuperPolynomial.generator(coord, "even", n - 1) for n in range(2, w + 1)}
    odd = {m: SuperPolynomial.generator(coord, "odd", m - 1) for m in range(1, w + 1)}
    return DerivationRule(even, odd)


def _strict_odd_subsets(target_twice: int, min_label: int):
    """Strictly increasing label tuples S with sum of (2m+1) = target_twice."""
    if target_twice == 0:
        yield ()
        return
    m = min_label
    while 2 * m + 1 <= target_twice:
        for rest in _strict_odd_subsets(target_twice - (2 * m + 1), m + 1):
            yield (m,) + rest
        m += 1


def _partitions(n: int, max_part=None):
    """Weakly decreasing integer partitions of n, descending-lex order."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions(n: int):
    """Public enumeration of partitions of n (descending-lex order)."""
    return _partitions(n)


def weight_basis(coord: str, w, even_only: bool = False):
    """All monomials of exact weight w, in the canonical monomial order.

    With even_only=True, restrict to the purely bosonic sector (w must then
    be an integer weight to produce anything).
    """
    _check_coord(coord)
    w = HalfInt.coerce(w)
    if w.twice < 0:
        raise ValueError("weight must be >= 0")
    monos = []
    for u in range(w.floor() + 1):
        odd_twice = w.twice - 2 * u
        if even_only and odd_twice:
            continue
        for odd in _strict_odd_subsets(odd_twice, 0):
            for parts in _partitions(u):
                exps = {}
                for part in parts:
                    exps[part] = exps.get(part, 0) + 1
                monos.append(SuperMonomial(tuple(sorted(exps.items())), odd, coord))
    monos.sort(key=SuperMonomial.sort_key)
    return monos


def weight_component(p: SuperPolynomial, w) -> SuperPolynomial:
    """The sum of terms of weight exactly w."""
    w = HalfInt.coerce(w)
    result = SuperPolynomial(p.coord)
    result.terms = {m: c for m, c in p.terms.items() if m.weight() == w}
    return result


def weight_support(p: SuperPolynomial):
    """Sorted list of weights occurring in p."""
    return sorted({m.weight() for m in p.terms}, key=lambda h: h.twice)
