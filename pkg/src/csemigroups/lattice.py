"""Exact integer and rational lattice primitives.

Points are plain tuples of arbitrary-precision integers.  All arithmetic in
this module (and in the rest of the package) is exact: monomial-order
comparisons, cone membership and ray extremality are decided with integer
and ``fractions.Fraction`` computations, never with floating point.

Every object defined here is immutable after construction and all functions
are pure, so values can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd

from .errors import DimensionMismatch, NonSimplicialCone, ZeroCone

Point = tuple[int, ...]

#: results of :meth:`MonomialOrder.compare`
LT, EQ, GT = -1, 0, 1

_ORDER_KINDS = ("lex", "deglex", "degrevlex")


def vadd(a: Point, b: Point) -> Point:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Point, b: Point) -> tuple[int, ...]:
    """Componentwise difference; coordinates may be negative."""
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a: Point) -> Point:
    return tuple(k * x for x in a)


def zero(dim: int) -> Point:
    return (0,) * dim


def primitive(a) -> Point:
    """Divide a nonzero integer vector by the gcd of its coordinates."""
    g = reduce(gcd, a, 0)
    if g == 0:
        raise ZeroCone("the zero vector has no primitive direction")
    return tuple(x // g for x in a)


def _check_dim(a, dim):
    if len(a) != dim:
        raise DimensionMismatch(f"expected dimension {dim}, got {len(a)}: {a}")


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on the lattice compatible with addition and with 0 minimal.

    ``kind`` is one of ``lex``, ``deglex`` or ``degrevlex``; ``priority`` is
    the coordinate permutation used for tie breaking, strongest coordinate
    first (identity when omitted).  Degree means coordinate sum.
    """

    kind: str = "deglex"
    priority: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in _ORDER_KINDS:
            raise ValueError(f"unknown monomial order kind {self.kind!r}")
        if self.priority is not None:
            object.__setattr__(self, "priority", tuple(self.priority))
            if sorted(self.priority) != list(range(len(self.priority))):
                raise ValueError("priority must be a permutation of the coordinates")

    @property
    def degree_compatible(self) -> bool:
        """True when greater degree always means greater element."""
        return self.kind != "lex"

    def _perm(self, dim):
        if self.priority is None:
            return range(dim)
        if len(self.priority) != dim:
            raise DimensionMismatch(
                f"order priority has length {len(self.priority)}, point has {dim}"
            )
        return self.priority

    def key(self, a: Point):
        """Sort key realizing the order: ``key(a) < key(b)`` iff ``a`` precedes ``b``."""
        perm = self._perm(len(a))
        if self.kind == "lex":
            return tuple(a[i] for i in perm)
        if self.kind == "deglex":
            return (sum(a), tuple(a[i] for i in perm))
        # degrevlex: on equal degree the smaller point carries the larger
        # entry at the lowest-priority coordinate where they differ
        return (sum(a), tuple(-a[i] for i in reversed(list(perm))))

    def compare(self, a: Point, b: Point) -> int:
        if len(a) != len(b):
            raise DimensionMismatch(f"cannot compare {a} with {b}")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LT
        if ka > kb:
            return GT
        return EQ

    def max(self, points):
        return max(points, key=self.key)

    def min(self, points):
        return min(points, key=self.key)


@dataclass(frozen=True)
class Grading:
    """Positive integer weight functional used as a termination measure."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.weights or min(self.weights) <= 0:
            raise ValueError("grading weights must be positive")

    @classmethod
    def standard(cls, dim: int) -> "Grading":
        """Coordinate sum; strictly positive on every nonzero lattice point."""
        return cls((1,) * dim)

    def of(self, a: Point) -> int:
        _check_dim(a, len(self.weights))
        return sum(w * x for w, x in zip(self.weights, a))


def _fraction_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def _rank(rows) -> int:
    """Rank of an integer matrix via exact Gaussian elimination."""
    m = _fraction_rows(rows)
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [inv * x for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def _invert(matrix):
    """Inverse of a square Fraction matrix, or None if singular."""
    n = len(matrix)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [inv * x for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def _nonneg_combination_exists(columns, target) -> bool:
    """Exact feasibility of ``sum λ_i c_i = target`` with rational ``λ ≥ 0``.

    Phase-one simplex over Fractions with Bland's rule; ``target`` must have
    non-negative coordinates, which makes the all-artificial basis feasible.
    """
    if not any(target):
        return True
    if not columns:
        return False
    m, n = len(target), len(columns)
    # tableau rows: [original vars | artificial vars | rhs]
    tab = [
        [Fraction(columns[j][i]) for j in range(n)]
        + [Fraction(int(k == i)) for k in range(m)]
        + [Fraction(target[i])]
        for i in range(m)
    ]
    basis = list(range(n, n + m))
    while True:
        # reduced costs for the "minimize artificial sum" objective
        costs = [
            (Fraction(int(j >= n)) - sum(tab[i][j] for i in range(m) if basis[i] >= n))
            for j in range(n + m)
        ]
        entering = next((j for j, c in enumerate(costs) if c < 0), None)
        if entering is None:
            break
        ratios = [
            (tab[i][-1] / tab[i][entering], basis[i], i)
            for i in range(m)
            if tab[i][entering] > 0
        ]
        if not ratios:  # unbounded; cannot happen for this objective
            return False
        _, _, row = min(ratios)
        piv = tab[row][entering]
        tab[row] = [x / piv for x in tab[row]]
        for i in range(m):
            if i != row and tab[i][entering]:
                f = tab[i][entering]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[row])]
        basis[row] = entering
    objective = sum(tab[i][-1] for i in range(m) if basis[i] >= n)
    return objective == 0


@dataclass(frozen=True)
class Cone:
    """Pointed rational cone spanned by primitive extremal ray directions.

    ``rays`` are lexicographically sorted primitive integer vectors, which
    fixes the ray indexing used across the package.  Membership and rational
    coordinates are only supported for simplicial cones (linearly
    independent rays); non-simplicial cones can be constructed but reject
    those operations with :class:`NonSimplicialCone`.
    """

    dim: int
    rays: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(r) for r in self.rays))
        for r in self.rays:
            _check_dim(r, self.dim)

    @classmethod
    def from_generators(cls, points) -> "Cone":
        """Cone spanned by ``points``; keeps only primitive extremal directions."""
        points = [tuple(p) for p in points]
        if not points:
            raise ZeroCone("no generators given")
        dim = len(points[0])
        for p in points:
            _check_dim(p, dim)
        dirs = sorted({primitive(p) for p in points if any(p)})
        if not dirs:
            raise ZeroCone("all generators are zero")
        extremal = [
            d
            for d in dirs
            if not _nonneg_combination_exists([e for e in dirs if e != d], d)
        ]
        return cls(dim, tuple(extremal))

    @cached_property
    def simplicial(self) -> bool:
        """True when the ray directions are linearly independent."""
        return _rank(self.rays) == len(self.rays)

    def _require_simplicial(self):
        if not self.simplicial:
            raise NonSimplicialCone(
                "operation supports only simplicial cones "
                f"(got {len(self.rays)} dependent rays in dimension {self.dim})"
            )

    @cached_property
    def _solver(self):
        """Exact solver data for `x = D α`, columns of D being the rays."""
        self._require_simplicial()
        t = len(self.rays)
        if t == self.dim:
            # integer scaled inverse: α_i = (adj·x)_i / det with det > 0
            mat = [[Fraction(self.rays[j][i]) for j in range(t)] for i in range(self.dim)]
            det = abs(_det(mat))
            inv = _invert(mat)
            adj_rows = [tuple(int(x * det) for x in row) for row in inv]
            return ("square", adj_rows, int(det))
        # t < dim: pseudo-inverse (DᵀD)⁻¹Dᵀ plus a residual check
        d_cols = self.rays
        gram = [
            [Fraction(sum(a * b for a, b in zip(d_cols[i], d_cols[j]))) for j in range(t)]
            for i in range(t)
        ]
        gram_inv = _invert(gram)
        pseudo = [
            [sum(gram_inv[i][k] * d_cols[k][c] for k in range(t)) for c in range(self.dim)]
            for i in range(t)
        ]
        return ("rect", pseudo, None)

    def coordinates(self, x) -> tuple[Fraction, ...] | None:
        """Rational ray coordinates of ``x``, or None when ``x`` is outside.

        Only simplicial cones are supported; the coordinates are then unique.
        Negative integer coordinates in ``x`` are allowed and simply yield
        None.
        """
        _check_dim(x, self.dim)
        kind, data, det = self._solver
        if kind == "square":
            nums = [sum(a * c for a, c in zip(row, x)) for row in data]
            if any(n < 0 for n in nums):
                return None
            return tuple(Fraction(n, det) for n in nums)
        alphas = [sum(m * c for m, c in zip(row, x)) for row in data]
        if any(a < 0 for a in alphas):
            return None
        # consistency: the candidate combination must reproduce x exactly
        for c in range(self.dim):
            if sum(alphas[i] * self.rays[i][c] for i in range(len(self.rays))) != x[c]:
                return None
        return tuple(alphas)

    def contains(self, x) -> bool:
        """Exact membership of an integer vector in the cone (within ℕ^p)."""
        _check_dim(x, self.dim)
        if min(x) < 0:
            return False
        return self.coordinates(x) is not None

    @cached_property
    def _graded_cache(self):
        return {}

    def graded_points(self, grade: int) -> tuple[Point, ...]:
        """Cone points of the given coordinate sum, lexicographically sorted.

        Cached per cone; the standard grading is used.  Shared by every
        semigroup built over this cone object.
        """
        cache = self._graded_cache
        if grade not in cache:
            cache[grade] = tuple(
                x for x in _graded_tuples((1,) * self.dim, grade) if self.contains(x)
            )
        return cache[grade]

    def points_upto(self, max_grade: int):
        for g in range(max_grade + 1):
            yield from self.graded_points(g)


def _det(matrix) -> Fraction:
    """Determinant of a square Fraction matrix by exact elimination."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def _graded_tuples(weights, total):
    """Lattice points with the given weighted sum, in ascending lex order."""
    if len(weights) == 1:
        if total % weights[0] == 0:
            yield (total // weights[0],)
        return
    head = weights[0]
    for x0 in range(total // head + 1):
        for rest in _graded_tuples(weights[1:], total - head * x0):
            yield (x0,) + rest


def cone_from_generators(points) -> Cone:
    """Extremal primitive ray directions of the cone spanned by ``points``."""
    return Cone.from_generators(points)


def cone_contains(cone: Cone, x):
    """Membership plus the rational ray coordinates (simplicial cones only)."""
    coords = cone.coordinates(tuple(x))
    return (coords is not None), coords


def enumerate_cone_points(cone: Cone, grading: Grading, max_grade: int):
    """Yield the cone points of grade at most ``max_grade``.

    Points come out in non-decreasing grade and, within a grade, in
    ascending lexicographic order.
    """
    if grading.weights == (1,) * cone.dim:
        yield from cone.points_upto(max_grade)
        return
    for g in range(max_grade + 1):
        for x in _graded_tuples(grading.weights, g):
            if cone.contains(x):
                yield x
