"""Affine semigroup calculus over exact lattice arithmetic.

Two interchangeable representations are provided.  :class:`GenSemigroup`
holds a finite minimal generating set and answers membership through a
memoized descent on the coordinate-sum grading (every generator has
positive grade, so the descent terminates).  :class:`GapSemigroup`
represents a C-semigroup as its cone plus the finite, explicitly listed gap
set, making membership an O(1) lookup.

The translation ``gaps()`` from the generated form to the gap form is the
delicate step: the gap set has no a-priori size bound, so the scan is
stopped by a certificate.  Writing ``n_1 .. n_t`` for the ray
multiplicities and ``w`` for the coordinate sum, any gap ``x`` with
``w(x) >= sum_i w(n_i)`` has some simplicial coordinate at least 1, hence
``x - n_i`` stays in the cone and must itself be a gap (otherwise ``x``
would be an element).  Iterating descends through every grade window of
width ``max_i w(n_i)``, so once every grade in ``[W, W + max_i w(n_i))`` is
free of gaps for some ``W >= sum_i w(n_i)`` exceeding all gaps found, no
gap can exist above the window and the scan is complete.

All values are immutable after construction; the only mutable state is the
internal membership memo of :class:`GenSemigroup`, which is append-only and
safe to share between threads.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd

from .errors import (
    BudgetExceeded,
    EmptyGaps,
    NotCSemigroup,
    NotInSemigroup,
    NotOnRays,
    RayNotMet,
)
from .lattice import (
    Cone,
    MonomialOrder,
    Point,
    primitive,
    scale,
    vadd,
    vsub,
    zero,
)

#: default number of cone points a certified scan may visit
DEFAULT_BUDGET = 500_000

#: default cap for the incremental multiplier search in ``apery_context``
DEFAULT_MULTIPLIER_CAP = 10_000


def _ray_multiple(g: Point, d: Point) -> int | None:
    """Return k >= 1 with g == k*d (d primitive), or None if g is off the ray."""
    if not any(g):
        return None
    k = None
    for gi, di in zip(g, d):
        if di:
            if gi % di:
                return None
            k = gi // di
            break
    if k is None or k <= 0 or scale(k, d) != g:
        return None
    return k


class GenSemigroup:
    """Affine semigroup given by its (reduced) finite generating set.

    Redundant input generators are removed so that the stored tuple is the
    unique minimal generating set; by default a warning reports each
    removal.  The cone and the per-ray multiplicities are derived from the
    generators.
    """

    def __init__(self, generators, *, warn_redundant=True):
        gens = sorted({tuple(g) for g in generators})
        if not gens:
            raise ValueError("a semigroup needs at least one generator")
        dim = len(gens[0])
        for g in gens:
            if len(g) != dim:
                raise ValueError(f"mixed dimensions in generators: {gens}")
            if min(g) < 0:
                raise ValueError(f"generator {g} has a negative coordinate")
        gens = [g for g in gens if any(g)]
        if not gens:
            raise ValueError("the zero vector generates nothing")
        self.dim = dim
        # removing redundant generators does not change the cone
        self.cone = Cone.from_generators(gens)
        self._prune = self.cone.contains if self.cone.simplicial else None
        self._memo: dict[Point, int | None] = {zero(dim): -1}
        self.generators = self._reduce(gens, warn_redundant)

    def _reduce(self, gens, warn):
        minimal = []
        for g in gens:
            others = [h for h in gens if h != g]
            if others and _combination_index(
                g, others, {zero(self.dim): -1}, self._prune
            ) is not None:
                if warn:
                    warnings.warn(f"redundant generator {g} removed", stacklevel=4)
                continue
            minimal.append(g)
        return tuple(minimal)

    def __eq__(self, other):
        return isinstance(other, GenSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"GenSemigroup({list(self.generators)})"

    def contains(self, x) -> bool:
        x = tuple(x)
        if len(x) != self.dim:
            return False
        if min(x) < 0:
            return False
        if self._prune is not None and not self._prune(x):
            return False
        return _combination_index(x, self.generators, self._memo, self._prune) is not None

    __contains__ = contains

    def witness(self, x) -> tuple[int, ...] | None:
        """Coefficients λ with ``x = Σ λ_i g_i``, or None when x is outside."""
        x = tuple(x)
        if not self.contains(x):
            return None
        counts = [0] * len(self.generators)
        y = x
        while any(y):
            idx = self._memo[y]
            counts[idx] += 1
            y = vsub(y, self.generators[idx])
        return tuple(counts)

    def minimal_generators(self) -> frozenset[Point]:
        return frozenset(self.generators)

    @cached_property
    def _ray_data(self):
        """Per ray: the multiples k with k*d realized by an on-ray generator.

        Every extremal ray of the generated cone contains a generator, and
        any semigroup element on an extremal ray is a sum of on-ray
        generators, so these multiples determine the full ray sections.
        """
        data = []
        for d in self.cone.rays:
            ks = sorted(k for g in self.generators if (k := _ray_multiple(g, d)))
            data.append(tuple(ks))
        return tuple(data)

    def multiplicities(self) -> tuple[Point, ...]:
        """Least on-ray element for each extremal ray, in canonical ray order."""
        mults = []
        for d, ks in zip(self.cone.rays, self._ray_data):
            if not ks:
                raise RayNotMet(d)
            mults.append(scale(ks[0], d))
        return tuple(mults)


def _combination_index(x, gens, memo, prune=None):
    """Index of a generator usable as the last step of a decomposition of x.

    ``memo`` maps points to the chosen generator index (-1 at the origin,
    None for non-members).  ``prune`` is an optional superset test (cone
    membership): points failing it are non-members outright.  Iterative so
    that far-away query points cannot overflow the recursion limit.
    """
    if x in memo:
        return memo[x]
    stack = [x]
    while stack:
        y = stack[-1]
        if y in memo:
            stack.pop()
            continue
        unresolved = None
        found = None
        for idx, g in enumerate(gens):
            z = vsub(y, g)
            if min(z) < 0:
                continue
            state = memo.get(z, "?")
            if state == "?":
                if prune is not None and not prune(z):
                    memo[z] = None
                    continue
                unresolved = z
                break
            if state is not None:
                found = idx
                break
        if unresolved is not None:
            stack.append(unresolved)
            continue
        memo[y] = found
        stack.pop()
    return memo[x]


def oracle_member(S, x) -> bool:
    """Reference membership decision (exhaustive memoized descent)."""
    return S.contains(tuple(x))


class GapSemigroup:
    """C-semigroup as (cone, finite sorted gap set); O(1) membership."""

    def __init__(self, cone: Cone, gap_set):
        self.cone = cone
        self.gaps = frozenset(tuple(h) for h in gap_set)
        for h in self.gaps:
            if len(h) != cone.dim:
                raise ValueError(f"gap {h} does not match dimension {cone.dim}")
            if not any(h):
                raise ValueError("0 cannot be a gap")
            if not cone.contains(h):
                raise ValueError(f"gap {h} lies outside the cone")

    @property
    def dim(self):
        return self.cone.dim

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @cached_property
    def max_gap_grade(self) -> int:
        return max((sum(h) for h in self.gaps), default=-1)

    def __eq__(self, other):
        return (
            isinstance(other, GapSemigroup)
            and self.cone == other.cone
            and self.gaps == other.gaps
        )

    def __hash__(self):
        return hash((self.cone, self.gaps))

    def __repr__(self):
        return f"GapSemigroup(rays={list(self.cone.rays)}, genus={self.genus})"

    def contains(self, x) -> bool:
        x = tuple(x)
        if len(x) != self.dim or min(x) < 0:
            return False
        return x not in self.gaps and self.cone.contains(x)

    __contains__ = contains

    def multiplicities(self) -> tuple[Point, ...]:
        mults = []
        for d in self.cone.rays:
            k = 1
            while scale(k, d) in self.gaps:
                k += 1
            mults.append(scale(k, d))
        return tuple(mults)

    @cached_property
    def _msg(self) -> frozenset[Point]:
        # Any element above sum_i w(n_i) + (largest gap grade) splits off a
        # ray multiplicity, so the generator scan below is complete.
        mults = self.multiplicities()
        bound = sum(sum(n) for n in mults) + max(self.max_gap_grade, 0)
        found: list[Point] = []
        for g in range(1, bound + 1):
            for x in self.cone.graded_points(g):
                if x in self.gaps:
                    continue
                for m in found:
                    y = vsub(x, m)
                    if min(y) >= 0 and any(y) and self.contains(y):
                        break
                else:
                    found.append(x)
        return frozenset(found)

    def minimal_generators(self) -> frozenset[Point]:
        return self._msg

    @cached_property
    def _generated(self) -> GenSemigroup:
        return GenSemigroup(sorted(self._msg), warn_redundant=False)

    def as_generated(self) -> GenSemigroup:
        return self._generated

    def validate_closure(self):
        """Check that cone minus gaps is closed under addition.

        A violation is a gap expressible as a sum of two nonzero elements;
        both summands then have smaller grade than the gap, so scanning the
        points below each gap is exhaustive.  Raises ValueError on the first
        violation.
        """
        for h in sorted(self.gaps):
            hg = sum(h)
            for g in range(1, hg):
                for x in self.cone.graded_points(g):
                    if x in self.gaps:
                        continue
                    y = vsub(h, x)
                    if min(y) >= 0 and any(y) and self.contains(y):
                        raise ValueError(
                            f"gap {h} is the sum of elements {x} and {y}"
                        )


def _as_generated(S) -> GenSemigroup:
    return S if isinstance(S, GenSemigroup) else S.as_generated()


def multiplicities(S) -> tuple[Point, ...]:
    """Per-ray least elements, canonical ray order."""
    return S.multiplicities()


def minimal_generators(S) -> frozenset[Point]:
    """The unique minimal generating set of either representation."""
    return S.minimal_generators()


def certified_gap_scan(cone, member, ray_elements, budget=DEFAULT_BUDGET):
    """Gap set of a cofinite submonoid/ideal-with-zero of the cone.

    ``member`` must contain every ``ray_elements[i]`` and be closed under
    adding each of them; those are exactly the hypotheses of the window
    certificate described in the module docstring.  Raises
    :class:`BudgetExceeded` after visiting ``budget`` cone points without
    reaching the certificate.
    """
    wsum = sum(sum(n) for n in ray_elements)
    wmax = max(sum(n) for n in ray_elements)
    gap_list: list[Point] = []
    max_gap_grade = -1
    visited = 0
    g = 0
    while True:
        window_start = max(wsum, max_gap_grade + 1)
        if g >= window_start + wmax:
            return frozenset(gap_list)
        for x in cone.graded_points(g):
            visited += 1
            if visited > budget:
                raise BudgetExceeded(
                    f"no termination certificate within {budget} points "
                    f"(grade {g}, {len(gap_list)} gaps so far)"
                )
            if not member(x):
                gap_list.append(x)
                max_gap_grade = g
        g += 1


def gaps(S: GenSemigroup, budget=DEFAULT_BUDGET) -> GapSemigroup:
    """Complete gap set of a generated semigroup, certified finite.

    Raises :class:`NotCSemigroup` when some extremal ray provably misses
    cofinitely many of its lattice points (the realized multiples on the
    ray have gcd > 1), and :class:`BudgetExceeded` when the certificate was
    not reached within the budget (inconclusive).
    """
    S.cone._require_simplicial()
    mults = S.multiplicities()
    for d, ks in zip(S.cone.rays, S._ray_data):
        div = reduce(gcd, ks, 0)
        if div != 1:
            raise NotCSemigroup(
                f"on ray {d} only multiples of {div} occur, "
                "so infinitely many ray points are gaps",
                ray=d,
                gcd=div,
            )
    gap_set = certified_gap_scan(S.cone, S.contains, mults, budget)
    return GapSemigroup(S.cone, gap_set)


def frobenius(S: GapSemigroup, order: MonomialOrder) -> Point:
    """Largest gap under the given monomial order."""
    if not S.gaps:
        raise EmptyGaps("the semigroup fills its cone; no Frobenius element")
    return order.max(S.gaps)


def pseudo_frobenius(S: GapSemigroup) -> frozenset[Point]:
    """Gaps that land inside S when translated by any nonzero element.

    By additivity it suffices to test translation by the minimal
    generators.
    """
    msg = S.minimal_generators()
    return frozenset(h for h in S.gaps if all(S.contains(vadd(h, n)) for n in msg))


@dataclass(frozen=True)
class AperyContext:
    """Finite data describing ``∩_i Ap(S, m_i)`` for on-ray elements m_i.

    ``multipliers[j]`` is the least positive q with ``q * generator_j``
    expressible as a non-negative integer combination of the ray elements;
    ``sum_box`` collects every combination of generators with coefficients
    below those multipliers.  The Apery core is the subset of the box whose
    elements stay outside S after subtracting any ray element; it always
    contains 0 and it is finite even though each individual Apery set is
    not.
    """

    base: GenSemigroup
    ray_elements: tuple[Point, ...]
    multipliers: tuple[int, ...]
    sum_box: frozenset[Point]
    core: frozenset[Point]


def _match_rays(cone: Cone, M) -> tuple[Point, ...]:
    """Arrange M as one nonzero element per extremal ray, canonical order."""
    by_ray: dict[Point, Point] = {}
    for m in M:
        m = tuple(m)
        if len(m) != cone.dim or not any(m) or min(m) < 0:
            raise NotOnRays(f"{m} is not a nonzero point of the ambient lattice")
        d = primitive(m)
        if d not in cone.rays:
            raise NotOnRays(f"{m} does not lie on an extremal ray")
        if d in by_ray:
            raise NotOnRays(f"two elements given on ray {d}")
        by_ray[d] = m
    missing = [d for d in cone.rays if d not in by_ray]
    if missing:
        raise NotOnRays(f"no element given on ray(s) {missing}")
    return tuple(by_ray[d] for d in cone.rays)


def apery_context(S, M, multiplier_cap=DEFAULT_MULTIPLIER_CAP) -> AperyContext:
    """Build the finite Apery-core context for ray elements ``M``.

    ``S`` may be either representation; membership tests use the generated
    form.  Each multiplier is found by a plain incremental search, capped by
    ``multiplier_cap`` (raises :class:`BudgetExceeded` beyond it).
    """
    S = _as_generated(S)
    S.cone._require_simplicial()
    ray_elements = _match_rays(S.cone, M)
    for m in ray_elements:
        if not S.contains(m):
            raise NotInSemigroup(m)
    # per ray, the multiple of the primitive direction realized by m_i
    ray_mult = [_ray_multiple(m, d) for m, d in zip(ray_elements, S.cone.rays)]
    multipliers = []
    for n in S.generators:
        coords = S.cone.coordinates(n)
        fracs = [a / c for a, c in zip(coords, ray_mult)]
        for q in range(1, multiplier_cap + 1):
            if all((q * f).denominator == 1 for f in fracs):
                multipliers.append(q)
                break
        else:
            raise BudgetExceeded(
                f"no multiplier for generator {n} up to {multiplier_cap}"
            )
    # layered sums with deduplication: the raw combination count is the
    # product of the multipliers, but the distinct sums stay confined to a
    # bounded cone region
    box = {zero(S.dim)}
    for q, n in zip(multipliers, S.generators):
        if q == 1:
            continue
        box = {vadd(s, scale(lam, n)) for s in box for lam in range(q)}
        if len(box) > 2_000_000:
            raise BudgetExceeded(
                f"sum box exceeded {2_000_000} distinct points"
            )
    core = frozenset(
        s
        for s in box
        if all(not S.contains(vsub(s, m)) for m in ray_elements)
    )
    return AperyContext(
        base=S,
        ray_elements=ray_elements,
        multipliers=tuple(multipliers),
        sum_box=frozenset(box),
        core=core,
    )
