"""Symbolic Koschorke-class calculus in Chern symbols.

Classes live in the integer polynomial ring on commuting even symbols c_i
(degree 2i, i >= 1) and anticommuting odd symbols c_{m+1/2} (degree 2m+1,
m >= 0), with c_0 = 1 and c_i = 0 for i < 0 at determinant-construction
time.

The four class constructors:

  * even_koschorke(p, q)     = det(c_{p-i+j})_{1<=i,j<=q},  degree 2pq
  * generalized_koschorke    = det(c_{lam_a+b-a})_{1<=a,b<=k}, degree 2|lam|,
                               independent of k >= len(lam)
  * odd_koschorke(p)         = c_{1/2} c_{3/2} ... c_{(2p-1)/2}, degree p^2
  * odd_sigma_class(J)       = c_{j_0+1/2} ... c_{j_{k-1}+1/2} in order

The degree-(-2) derivation on odd symbols sends c_{1/2} to 0 and c_{m+1/2}
to c_{m-1/2} for m >= 1, extended by the parity-even Leibniz rule; every
odd Koschorke class lies in its kernel.  The even-sector kernel condition
is checked through the Fock picture, where the corresponding derivation is
minus the Virasoro mode L_1.
"""

from __future__ import annotations

from math import factorial

from .exactnum import QSqrt2
from .oscillator import NS, apply_L, phi
from .superalgebra import COORD_F, HalfInt, SuperPolynomial
from .symfunc import Partition, det_expansion, elementary_polynomial


class ClassPolynomial:
    """Integer polynomial in Chern symbols; odd symbols anticommute.

    Terms map (even, odd) -> coefficient, where even is a sorted tuple of
    (index, exponent) pairs and odd is a strictly increasing tuple of the
    integers m labelling c_{m+1/2}.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coeff in (terms.items() if isinstance(terms, dict) else terms):
                coeff = int(coeff)
                if coeff:
                    total = clean.get(key, 0) + coeff
                    if total:
                        clean[key] = total
                    elif key in clean:
                        del clean[key]
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "ClassPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "ClassPolynomial":
        return cls({((), ()): 1})

    @classmethod
    def even_symbol(cls, i: int) -> "ClassPolynomial":
        """c_i for i >= 1; c_0 is the unit and negative indices are zero."""
        if i < 0:
            return cls.zero()
        if i == 0:
            return cls.one()
        return cls({(((i, 1),), ()): 1})

    @classmethod
    def odd_symbol(cls, m: int) -> "ClassPolynomial":
        """The odd symbol c_{m+1/2} for m >= 0."""
        if m < 0:
            raise ValueError("odd symbol label must be >= 0")
        return cls({((), (m,)): 1})

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_even(self) -> bool:
        return all(not odd for _, odd in self.terms)

    def degree(self):
        """Cohomological degree if homogeneous, else None (zero: None)."""
        degrees = {
            sum(2 * i * e for i, e in even) + sum(2 * m + 1 for m in odd)
            for even, odd in self.terms
        }
        if len(degrees) == 1:
            return degrees.pop()
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ClassPolynomial):
            return NotImplemented
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            total = terms.get(key, 0) + coeff
            if total:
                terms[key] = total
            elif key in terms:
                del terms[key]
        result = ClassPolynomial()
        result.terms = terms
        return result

    def __neg__(self):
        result = ClassPolynomial()
        result.terms = {k: -c for k, c in self.terms.items()}
        return result

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            result = ClassPolynomial()
            if other:
                result.terms = {k: c * other for k, c in self.terms.items()}
            return result
        if not isinstance(other, ClassPolynomial):
            return NotImplemented
        terms = {}
        for (even1, odd1), c1 in self.terms.items():
            for (even2, odd2), c2 in other.terms.items():
                sign, odd = _merge_odd(odd1, odd2)
                if sign == 0:
                    continue
                exps = dict(even1)
                for i, e in even2:
                    exps[i] = exps.get(i, 0) + e
                key = (tuple(sorted(exps.items())), odd)
                total = terms.get(key, 0) + sign * c1 * c2
                if total:
                    terms[key] = total
                elif key in terms:
                    del terms[key]
        result = ClassPolynomial()
        result.terms = terms
        return result

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- rendering ----------------------------------------------------------

    @staticmethod
    def _term_key(key):
        even, odd = key
        degree = sum(2 * i * e for i, e in even) + sum(2 * m + 1 for m in odd)
        count = sum(e for _, e in even) + len(odd)
        parts = []
        for i, e in reversed(even):
            parts.extend([i] * e)
        return (degree, -count, tuple(parts), odd)

    def sorted_terms(self):
        """Terms by ascending degree, then descending factor count, then
        ascending lex on the even index multiset; pins text output such as
        'c2^2 - c1*c3' and 'c1*c2 - c3'."""
        return sorted(self.terms.items(), key=lambda kv: self._term_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (even, odd), coeff in self.sorted_terms():
            factors = []
            for i, e in even:
                factors.append(f"c{i}" + (f"^{e}" if e > 1 else ""))
            for m in odd:
                factors.append(f"c{2 * m + 1}/2")
            body = "*".join(factors) if factors else "1"
            if body == "1":
                text = str(coeff)
            elif coeff == 1:
                text = body
            elif coeff == -1:
                text = f"-{body}"
            else:
                text = f"{coeff}*{body}"
            pieces.append(text)
        out = pieces[0]
        for text in pieces[1:]:
            if text.startswith("-"):
                out += f" - {text[1:]}"
            else:
                out += f" + {text}"
        return out

    def __repr__(self):
        return f"<ClassPolynomial {self}>"

    def to_json(self) -> list:
        return [
            {
                "monomial": {
                    "even": {str(i): e for i, e in even},
                    "odd": [f"{2 * m + 1}/2" for m in odd],
                },
                "coeff": coeff,
            }
            for (even, odd), coeff in self.sorted_terms()
        ]


def _merge_odd(a, b):
    """Koszul merge of two strictly increasing odd label tuples."""
    if not a or not b:
        return 1, a or b
    sign = 1
    merged = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return 0, None
        if a[i] < b[j]:
            merged.append(a[i])
            i += 1
        else:
            if (len(a) - i) % 2:
                sign = -sign
            merged.append(b[j])
            j += 1
    merged.extend(a[i:])
    merged.extend(b[j:])
    return sign, tuple(merged)


def even_koschorke(p: int, q: int) -> ClassPolynomial:
    """The q x q Hankel determinant det(c_{p-i+j}); degree 2pq."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be >= 1")
    matrix = [
        [ClassPolynomial.even_symbol(p - i + j) for j in range(1, q + 1)]
        for i in range(1, q + 1)
    ]
    return det_expansion(matrix)


def generalized_koschorke(lam: Partition, k: int) -> ClassPolynomial:
    """The k x k Giambelli determinant det(c_{lam_a+b-a}); degree 2|lam|.

    Equal for every admissible k (adding a row appends a unitriangular
    corner), and reduces to even_koschorke(p, q) on the rectangle (p^q).
    """
    if k < len(lam):
        raise ValueError(f"k={k} is smaller than the length of {lam}")
    if k == 0:
        return ClassPolynomial.one()
    padded = lam.padded(k)
    matrix = [
        [ClassPolynomial.even_symbol(padded[a - 1] + b - a) for b in range(1, k + 1)]
        for a in range(1, k + 1)
    ]
    return det_expansion(matrix)


def odd_koschorke(p: int) -> ClassPolynomial:
    """The ordered product c_{1/2} c_{3/2} ... c_{(2p-1)/2}; degree p^2."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return odd_sigma_class(tuple(range(p)))


def odd_sigma_class(J) -> ClassPolynomial:
    """The ordered product of odd symbols over a strictly increasing J."""
    J = tuple(J)
    if any(J[i] >= J[i + 1] for i in range(len(J) - 1)):
        raise ValueError("J must be strictly increasing")
    acc = ClassPolynomial.one()
    for j in J:
        acc = acc * ClassPolynomial.odd_symbol(j)
    return acc


def d_odd(cls: ClassPolynomial) -> ClassPolynomial:
    """Degree-(-2) derivation: c_{1/2} -> 0, c_{m+1/2} -> c_{m-1/2} (m >= 1).

    Parity-even Leibniz extension; substituting in place never reorders the
    label list, and a collision with the neighbouring label kills the term.
    """
    terms = {}
    for (even, odd), coeff in cls.terms.items():
        for pos, m in enumerate(odd):
            if m == 0:
                continue
            if m - 1 in odd:
                continue
            new_odd = odd[:pos] + (m - 1,) + odd[pos + 1:]
            key = (even, new_odd)
            total = terms.get(key, 0) + coeff
            if total:
                terms[key] = total
            elif key in terms:
                del terms[key]
    result = ClassPolynomial()
    result.terms = terms
    return result


def class_to_fock(cls: ClassPolynomial) -> SuperPolynomial:
    """Substitute c_i -> e_i(p)|_{p_n = n! x_n} and c_{m+1/2} -> m! y_{m+1/2}.

    A ring homomorphism into the F-coordinate Fock space; even images have
    rational coefficients.
    """
    acc = SuperPolynomial.zero(COORD_F)
    for (even, odd), coeff in cls.terms.items():
        piece = SuperPolynomial.one(COORD_F)
        for i, e in even:
            image = phi(elementary_polynomial(i))
            for _ in range(e):
                piece = piece * image
        for m in odd:
            gen = SuperPolynomial.generator(COORD_F, "odd", m).scale(factorial(m))
            piece = piece * gen
        acc = acc + piece.scale(coeff)
    return acc


class EvenKernelReport:
    """Result of the even twisted-condition check on a purely even class."""

    __slots__ = ("ok", "image")

    def __init__(self, ok: bool, image: SuperPolynomial):
        self.ok = ok
        self.image = image


def d_ev_kernel_check(cls: ClassPolynomial) -> EvenKernelReport:
    """Whether the Fock image of a purely even class is killed by L_1.

    L_1 acts as minus the even lowering derivation, so success means the
    class satisfies the even twisted-theory kernel condition.
    """
    if not cls.is_even:
        raise ValueError("d_ev_kernel_check requires a purely even class")
    image = apply_L(1, class_to_fock(cls), NS)
    return EvenKernelReport(image.is_zero(), image)
