"""Degeneracy-stratum combinatorics relative to the standard flag.

The ambient space is Q^N with the flag W_m = {v : v_0 = ... = v_{m-1} = 0},
so W_m has codimension m.  Every subspace V has a unique exact type: the
strictly increasing sequence J of positions where d_m = dim(V cap W_m)
drops by one.  All dimension counts reduce to exact ranks over Q, so subspaces
carry rational coordinates.

The codimension function

    N_k(J) = r(r-k) + sum_q (j_q - q)        (r = len(J) >= k)

grades the strata: over all J k-dominating a partition lam it is minimized
exactly once, at J_min(lam, k) = (lam_k, lam_{k-1}+1, ..., lam_1+k-1), with
value |lam|, and it strictly increases along closure domination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .symfunc import Partition


@dataclass(frozen=True)
class IndexSeq:
    """A strictly increasing sequence of non-negative integers."""

    entries: tuple

    def __init__(self, entries=()):
        entries = tuple(int(j) for j in entries)
        if any(entries[i] >= entries[i + 1] for i in range(len(entries) - 1)):
            raise ValueError(f"entries must be strictly increasing: {entries}")
        if entries and entries[0] < 0:
            raise ValueError("entries must be >= 0")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "IndexSeq":
        """Parse comma-separated strictly increasing integers, e.g. '0,2,5'."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(piece) for piece in text.split(",")))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return ",".join(str(j) for j in self.entries)


def rank(rows) -> int:
    """Exact rank of a rational matrix given as a list of rows."""
    matrix = [list(map(Fraction, row)) for row in rows]
    if not matrix:
        return 0
    ncols = len(matrix[0])
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(matrix)):
            if matrix[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][col]
        for i in range(r + 1, len(matrix)):
            if matrix[i][col]:
                factor = matrix[i][col] / lead
                matrix[i] = [
                    matrix[i][j] - factor * matrix[r][j] for j in range(ncols)
                ]
        r += 1
        if r == len(matrix):
            break
    return r


@dataclass(frozen=True)
class RationalSubspace:
    """A subspace of Q^N spanned by independent rational basis vectors."""

    ambient_dim: int
    basis: tuple

    def __init__(self, ambient_dim: int, basis):
        basis = tuple(tuple(Fraction(x) for x in row) for row in basis)
        for row in basis:
            if len(row) != ambient_dim:
                raise ValueError("basis vector length differs from ambient dimension")
        if rank(basis) != len(basis):
            raise ValueError("basis vectors are linearly dependent")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return len(self.basis)


def exact_type(V: RationalSubspace) -> IndexSeq:
    """Jump positions of m -> dim(V cap W_m).

    d_m = dim V - rank(first m coordinates of the basis); the type J lists
    the r positions where d drops by one and satisfies
    d_m = #{q : j_q >= m}.
    """
    r = V.dim
    jumps = []
    prev = r
    for m in range(1, V.ambient_dim + 1):
        truncated = [row[:m] for row in V.basis]
        d_m = r - rank(truncated)
        if d_m < prev:
            jumps.append(m - 1)
            prev = d_m
        if d_m == 0:
            break
    return IndexSeq(tuple(jumps))


def intersection_dim(V: RationalSubspace, m: int) -> int:
    """dim(V cap W_m) computed through dim(V + W_m); an independent route
    from the rank-of-projection used by exact_type."""
    n = V.ambient_dim
    rows = list(V.basis)
    for j in range(m, n):
        unit = [Fraction(0)] * n
        unit[j] = Fraction(1)
        rows.append(tuple(unit))
    dim_sum = rank(rows)
    return V.dim + (n - m) - dim_sum


def n_k(J: IndexSeq, k: int) -> int:
    """The codimension value r(r-k) + sum (j_q - q); requires len(J) >= k."""
    r = len(J)
    if r < k:
        raise ValueError(f"length of J is {r} < k = {k}")
    return r * (r - k) + sum(j - q for q, j in enumerate(J))


def n_odd(J: IndexSeq) -> int:
    """sum of (2 j + 1) over J; the degree of the matching odd class."""
    return sum(2 * j + 1 for j in J)


def j_min(lam: Partition, k: int) -> IndexSeq:
    """The minimizing type (lam_k, lam_{k-1}+1, ..., lam_1+k-1)."""
    padded = lam.padded(k)
    return IndexSeq(tuple(padded[k - 1 - i] + i for i in range(k)))


def k_dominates(J: IndexSeq, lam: Partition, k: int) -> bool:
    """The incidence condition j_{r-i} >= lam_i + k - i for i = 1..k."""
    r = len(J)
    if r < k:
        raise ValueError(f"length of J is {r} < k = {k}")
    padded = lam.padded(k)
    return all(J[r - i] >= padded[i - 1] + k - i for i in range(1, k + 1))


def closure_dominates(K: IndexSeq, J: IndexSeq) -> bool:
    """Entrywise tail domination: k_{t-s+p} >= j_p for p = 0..s-1."""
    t, s = len(K), len(J)
    if t < s:
        raise ValueError("first sequence must be at least as long")
    shift = t - s
    return all(K[shift + p] >= J[p] for p in range(s))


def enumerate_strata(lam: Partition, k: int, max_excess: int,
                     max_entry: int, max_len: int):
    """Group dominating types by excess level within the search bounds.

    Returns {level l: [J, ...]} for 0 <= l <= max_excess with
    l = N_k(J) - |lam|; sequences are in ascending lex order.  Level 0 is
    bound-independent once the bounds exceed j_min(lam, k).
    """
    if max_excess < 0 or max_entry < 0 or max_len < k:
        raise ValueError("bounds must cover at least length-k sequences")
    size = lam.size
    levels = {level: [] for level in range(max_excess + 1)}
    universe = range(max_entry + 1)
    for length in range(k, max_len + 1):
        for combo in combinations(universe, length):
            J = IndexSeq(combo)
            if not k_dominates(J, lam, k):
                continue
            level = n_k(J, k) - size
            if 0 <= level <= max_excess:
                levels[level].append(J)
    for seqs in levels.values():
        seqs.sort(key=lambda J: J.entries)
    return levels


def stratum_codim(kind: str, *params) -> int:
    """Real codimension of a degeneracy stratum: 2pq (even) or p^2 (odd)."""
    if kind == "even_pq":
        p, q = params
        if p < 1 or q < 1:
            raise ValueError("p, q must be >= 1")
        return 2 * p * q
    if kind == "odd_p":
        (p,) = params
        if p < 1:
            raise ValueError("p must be >= 1")
        return p * p
    raise ValueError(f"unknown stratum kind {kind!r}")
