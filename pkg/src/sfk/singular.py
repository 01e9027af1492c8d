"""Singular vectors and the Koschorke tensor-basis expansion.

A vector is singular when every positive mode kills it: L_n (n > 0) for the
bosonic Virasoro action, and additionally G_r (r > 0) for the Neveu-Schwarz
action.  The search uses the generating sets {L_1, L_2} (Virasoro) and
{G_1/2, G_3/2} (NS) for the positive part; sufficiency is not assumed but
re-checked by :func:`verify_singular`, which sweeps every positive mode up
to the weight.

Expansions are taken in the tensor basis schur(lam) * q_J of R, where q_J
is the ordered product of the pt_j over J.  Each weight space of R has as
many basis pairs (lam, J) as monomials, and the transition matrix is
exactly invertible, so expansion coefficients are unique and the residual
is zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError
from .exactnum import QSqrt2
from .oscillator import (
    EVEN_VIRASORO,
    NS,
    ModeOp,
    apply_mode,
    operator_matrix,
    phi,
)
from .superalgebra import (
    COORD_F,
    COORD_R,
    HalfInt,
    SuperPolynomial,
    poly_mul,
    weight_basis,
)
from .symfunc import Partition, schur_paper

VIRASORO_EVEN = "virasoro_even"
ALGEBRAS = (VIRASORO_EVEN, NS)


def _check_algebra(alg: str):
    if alg not in ALGEBRAS:
        raise ValueError(f"unknown algebra {alg!r}")


def positive_generators(alg: str):
    """The generating set of the positive part used by the search."""
    _check_algebra(alg)
    if alg == VIRASORO_EVEN:
        return (ModeOp("L", HalfInt(2), EVEN_VIRASORO), ModeOp("L", HalfInt(4), EVEN_VIRASORO))
    return (ModeOp("G", HalfInt(1), NS), ModeOp("G", HalfInt(3), NS))


@dataclass(frozen=True)
class AnnihilatorMatrix:
    """Stack of positive-generator matrices at one source weight."""

    algebra: str
    weight: HalfInt
    source_basis: tuple
    blocks: tuple  # of OperatorMatrix

    def stacked_rows(self):
        rows = []
        for block in self.blocks:
            rows.extend(list(row) for row in block.entries)
        return rows


def annihilator_matrix(alg: str, w) -> AnnihilatorMatrix:
    """Stack the generating positive modes from weight w downwards."""
    _check_algebra(alg)
    w = HalfInt.coerce(w)
    even_only = alg == VIRASORO_EVEN
    blocks = []
    source = None
    for op in positive_generators(alg):
        if (w - op.index).twice < 0:
            continue
        block = operator_matrix(op, w, COORD_F, even_only=even_only)
        blocks.append(block)
        source = block.source_basis
    if source is None:
        source = tuple(weight_basis(COORD_F, w, even_only=even_only))
    return AnnihilatorMatrix(alg, w, source, tuple(blocks))


def rref(matrix, ncols: int):
    """Reduced row echelon form over Q(sqrt2); returns (rows, pivot_cols).

    Deterministic: pivots are chosen at the leftmost viable column, using
    the first row with a nonzero entry there.  Pivoting is restricted to
    the first ``ncols`` columns so callers can append augmented columns.
    """
    rows = [list(row) for row in matrix]
    width = len(rows[0]) if rows else ncols
    pivots = []
    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for i in range(pivot_row, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = rows[pivot_row][col].inverse()
        rows[pivot_row] = [entry * inv for entry in rows[pivot_row]]
        for i in range(len(rows)):
            if i != pivot_row and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [
                    rows[i][j] - factor * rows[pivot_row][j] for j in range(width)
                ]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return rows, pivots


def kernel_basis(matrix, ncols=None):
    """Exact null-space basis, first nonzero entry of each vector scaled to 1.

    ``ncols`` is required when the matrix has no rows (the kernel is then
    the whole space).
    """
    rows = list(matrix)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for a matrix with no rows")
        ncols = len(rows[0])
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [QSqrt2(0)] * ncols
        vec[free] = QSqrt2(1)
        for row_idx, col in enumerate(pivots):
            vec[col] = -reduced[row_idx][free]
        first = next(v for v in vec if v)
        inv = first.inverse()
        basis.append([v * inv for v in vec])
    return basis


def solve_exact(matrix, rhs):
    """Solve a square exact system; raises ConsistencyError when singular."""
    n = len(matrix)
    augmented = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    reduced, pivots = rref(augmented, n)
    if len(pivots) != n:
        raise ConsistencyError("basis matrix is singular")
    solution = [QSqrt2(0)] * n
    for row_idx, col in enumerate(pivots):
        solution[col] = reduced[row_idx][n]
    return solution


def exact_determinant_nonzero(matrix) -> bool:
    """Whether a square exact matrix is invertible (via elimination)."""
    n = len(matrix)
    if n == 0:
        return True
    _, pivots = rref([list(r) for r in matrix], n)
    return len(pivots) == n


def find_singular(alg: str, w):
    """Basis of homogeneous singular vectors of weight w, in F coordinates.

    Vectors are normalized so the first nonzero coordinate in the canonical
    monomial order is 1.
    """
    _check_algebra(alg)
    w = HalfInt.coerce(w)
    ann = annihilator_matrix(alg, w)
    dim = len(ann.source_basis)
    if dim == 0:
        return []
    vectors = kernel_basis(ann.stacked_rows(), ncols=dim)
    found = []
    for vec in vectors:
        terms = {
            mono: coeff
            for mono, coeff in zip(ann.source_basis, vec)
            if coeff
        }
        poly = SuperPolynomial(COORD_F)
        poly.terms = terms
        found.append(poly)
    return found


@dataclass(frozen=True)
class SingularReport:
    """Outcome of a full positive-mode sweep on one homogeneous vector."""

    algebra: str
    weight: HalfInt
    ok: bool
    images: tuple  # of (ModeOp, SuperPolynomial)

    def failures(self):
        return [(op, image) for op, image in self.images if image]


def verify_singular(alg: str, v: SuperPolynomial) -> SingularReport:
    """Apply every positive mode of weight <= wt(v); success iff all vanish.

    Modes of weight above wt(v) land in negative weight and are zero
    automatically, so the sweep is complete.
    """
    _check_algebra(alg)
    w = v.is_homogeneous()
    if w is None and v.terms:
        raise ValueError("verify_singular requires a homogeneous vector")
    if w is None:
        w = HalfInt(0)
    images = []
    for n in range(1, w.floor() + 1):
        op = ModeOp("L", HalfInt(2 * n), EVEN_VIRASORO if alg == VIRASORO_EVEN else NS)
        images.append((op, apply_mode(op, v)))
    if alg == NS:
        for twice in range(1, w.twice + 1, 2):
            op = ModeOp("G", HalfInt(twice), NS)
            images.append((op, apply_mode(op, v)))
    ok = all(image.is_zero() for _, image in images)
    return SingularReport(alg, w, ok, tuple(images))


def rectangular_singular(r: int) -> SuperPolynomial:
    """The weight r^2 bosonic singular vector: the (r^r) Schur determinant
    pushed to F coordinates.  Rectangles are self-conjugate, so both Schur
    conventions agree here."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return phi(schur_paper(Partition((r,) * r)))


@dataclass(frozen=True)
class KoschorkePair:
    """An index (lam, J) of the tensor basis schur(lam) * q_J."""

    lam: Partition
    J: tuple

    def __post_init__(self):
        if any(self.J[i] >= self.J[i + 1] for i in range(len(self.J) - 1)):
            raise ValueError("J must be strictly increasing")

    def weight(self) -> HalfInt:
        return HalfInt(2 * self.lam.size + sum(2 * j + 1 for j in self.J))

    def __str__(self):
        return f"(lam=({self.lam}), J=({','.join(str(j) for j in self.J)}))"


def q_polynomial(J, coord: str = COORD_R) -> SuperPolynomial:
    """The ordered product of the odd generators over J (1 for empty J)."""
    acc = SuperPolynomial.one(coord)
    for j in J:
        acc = poly_mul(acc, SuperPolynomial.generator(coord, "odd", j))
    return acc


def koschorke_pairs(w):
    """All pairs (lam, J) of weight w, ordered like the weight-w monomials.

    The bijection pairing (lam, J) with the monomial p_lam * pt_J makes the
    count equal to the weight-space dimension and fixes a deterministic
    order.
    """
    w = HalfInt.coerce(w)
    pairs = []
    for mono in weight_basis(COORD_R, w):
        pairs.append(KoschorkePair(Partition(mono.even_parts()), mono.odd))
    return pairs


def basis_element(pair: KoschorkePair) -> SuperPolynomial:
    """The tensor-basis element schur(lam) * q_J in R coordinates."""
    return poly_mul(schur_paper(pair.lam), q_polynomial(pair.J))


def basis_matrix(w):
    """Columns = tensor-basis elements expanded over the weight-w monomials."""
    w = HalfInt.coerce(w)
    monos = weight_basis(COORD_R, w)
    index = {mono: i for i, mono in enumerate(monos)}
    pairs = koschorke_pairs(w)
    cols = []
    for pair in pairs:
        column = [QSqrt2(0)] * len(monos)
        for mono, coeff in basis_element(pair).terms.items():
            column[index[mono]] = coeff
        cols.append(column)
    matrix = [[cols[j][i] for j in range(len(pairs))] for i in range(len(monos))]
    return pairs, monos, matrix


@dataclass(frozen=True)
class ExpansionResult:
    """Coefficients of a vector in the tensor basis; residual is 0 on success."""

    coefficients: dict  # KoschorkePair -> QSqrt2, nonzero values only
    residual: SuperPolynomial

    def synthesize(self) -> SuperPolynomial:
        acc = SuperPolynomial.zero(COORD_R)
        for pair, coeff in self.coefficients.items():
            acc = acc + basis_element(pair).scale(coeff)
        return acc + self.residual


def koschorke_expand(v: SuperPolynomial) -> ExpansionResult:
    """Expand an R-coordinate vector in the tensor basis, weight by weight.

    The defining linear system is solved exactly; a singular basis matrix
    would contradict the basis property and raises ConsistencyError.
    """
    if v.coord != COORD_R:
        raise ValueError("koschorke_expand works in R coordinates; apply phi_inv first")
    coefficients = {}
    weights = sorted({mono.weight().twice for mono in v.terms})
    for twice in weights:
        w = HalfInt(twice)
        pairs, monos, matrix = basis_matrix(w)
        index = {mono: i for i, mono in enumerate(monos)}
        rhs = [QSqrt2(0)] * len(monos)
        for mono, coeff in v.terms.items():
            if mono.weight() == w:
                rhs[index[mono]] = coeff
        solution = solve_exact(matrix, rhs)
        for pair, coeff in zip(pairs, solution):
            if coeff:
                coefficients[pair] = coeff
    result = ExpansionResult(coefficients, SuperPolynomial.zero(COORD_R))
    check = result.synthesize()
    if check != v:
        raise ConsistencyError("tensor-basis expansion failed to re-synthesize")
    return result


def singular_scan(alg: str, max_weight, step_twice: int = 1):
    """Kernel data for every weight 0..max_weight in half-integer steps.

    Returns a list of (weight, vectors); for the bosonic algebra only
    integer weights carry nonzero spaces, so the step is 2 there.
    """
    _check_algebra(alg)
    max_weight = HalfInt.coerce(max_weight)
    if alg == VIRASORO_EVEN:
        step_twice = 2
    results = []
    for twice in range(0, max_weight.twice + 1, step_twice):
        w = HalfInt(twice)
        results.append((w, find_singular(alg, w)))
    return results
