"""Ideals of affine semigroups and the semigroups they induce.

An ideal of S is a subset P with P + S ⊆ P; every ideal is X + S for a
unique "incomparable" finite X ⊂ S (no difference of two members lies in
S), which therefore serves as a canonical form: two ideals are equal
exactly when their canonical generating sets are.  Adjoining 0 to an ideal
yields a new affine semigroup whenever the ideal still meets every extremal
ray, and for C-semigroup bases the result is again a C-semigroup whose gap
set extends the base's by the lost elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import ConeMismatch, NotCSemigroup, NotInSemigroup
from .lattice import Point, primitive, scale, vadd, vsub, zero
from .semigroups import (
    DEFAULT_BUDGET,
    GapSemigroup,
    _ray_multiple,
    certified_gap_scan,
)


def minimal_elements(S, X) -> frozenset[Point]:
    """Minimal members of X under "y divides x in S" (x - y ∈ S).

    The result is incomparable: no difference of two members lies in S.
    Every element of X must itself belong to S.
    """
    pts = frozenset(tuple(x) for x in X)
    for x in pts:
        if not S.contains(x):
            raise NotInSemigroup(x)
    return frozenset(
        x
        for x in pts
        if not any(
            y != x and min(d := vsub(x, y)) >= 0 and S.contains(d) for y in pts
        )
    )


@dataclass(frozen=True)
class Ideal:
    """An ideal X + S in canonical form.

    ``gens`` is the unique incomparable generating set; it doubles as the
    equality and hashing key (together with the base semigroup).
    """

    base: object
    gens: frozenset[Point]

    def contains(self, x) -> bool:
        x = tuple(x)
        for y in self.gens:
            d = vsub(x, y)
            if min(d) >= 0 and self.base.contains(d):
                return True
        return False

    __contains__ = contains

    @property
    def is_whole_semigroup(self) -> bool:
        """0 belongs to an ideal exactly when the ideal is all of S."""
        return zero(self.base.dim) in self.gens

    def sorted_gens(self) -> tuple[Point, ...]:
        return tuple(sorted(self.gens))


def ideal_from_set(S, X) -> Ideal:
    """Canonical ideal generated by a finite nonempty subset of S.

    Two inputs produce equal ideals exactly when their canonical
    generating sets coincide.
    """
    pts = frozenset(tuple(x) for x in X)
    if not pts:
        raise ValueError("an ideal needs a nonempty generating set")
    return Ideal(S, minimal_elements(S, pts))


def ideal_is_csemigroup(P: Ideal) -> bool:
    """Does P ∪ {0} stay a C-semigroup over the same cone?

    Equivalent to the ideal meeting every extremal ray.  Points of X + S on
    an extremal ray decompose entirely along that ray (rays are faces of
    the simplicial cone), so the test reduces to the canonical generators:
    each ray must carry one.
    """
    base = P.base
    if not isinstance(base, GapSemigroup):
        raise NotCSemigroup("the base semigroup is not a verified C-semigroup")
    if P.is_whole_semigroup:
        return True
    on_ray = {primitive(x) for x in P.gens}
    return all(d in on_ray for d in base.cone.rays)


@dataclass(frozen=True)
class IdealSemigroup:
    """The affine semigroup P ∪ {0} for an ideal P of the base, as a gap set.

    ``gens`` is the canonical generating set of the ideal part (P itself
    when proper, otherwise of base minus zero).  Equality and hashing use
    the base and the gap set only; ``gens`` and the optional ``msg`` hint
    are derived data.
    """

    base: GapSemigroup
    gaps: frozenset[Point]
    gens: frozenset[Point] = field(compare=False)
    msg: frozenset[Point] | None = field(default=None, compare=False, repr=False)

    @property
    def cone(self):
        return self.base.cone

    @property
    def dim(self):
        return self.base.dim

    @property
    def genus(self) -> int:
        return len(self.gaps)

    def contains(self, x) -> bool:
        x = tuple(x)
        if len(x) != self.dim or min(x) < 0:
            return False
        return x not in self.gaps and self.cone.contains(x)

    __contains__ = contains

    @cached_property
    def _gap_semigroup(self) -> GapSemigroup:
        return GapSemigroup(self.cone, self.gaps)

    def as_gap_semigroup(self) -> GapSemigroup:
        return self._gap_semigroup

    def minimal_generators(self) -> frozenset[Point]:
        if self.msg is not None:
            return self.msg
        return self.as_gap_semigroup().minimal_generators()


def isemigroup_from_ideal(P: Ideal, budget=DEFAULT_BUDGET) -> IdealSemigroup:
    """Gap representation of P ∪ {0} over a C-semigroup base.

    The gap set is the base's plus every base element the ideal dropped;
    the latter difference is finite exactly when the ideal meets all rays,
    which is required up front.
    """
    base = P.base
    if not ideal_is_csemigroup(P):
        raise NotCSemigroup("the ideal misses an extremal ray; gaps are infinite")
    if P.is_whole_semigroup:
        return IdealSemigroup(
            base,
            base.gaps,
            minimal_elements(base, base.minimal_generators()),
            msg=base.minimal_generators(),
        )
    origin = zero(base.dim)
    mults = []
    for d in base.cone.rays:
        ks = [k for x in P.gens if (k := _ray_multiple(x, d))]
        mults.append(scale(min(ks), d))

    def member(x):
        return x == origin or P.contains(x)

    gap_set = certified_gap_scan(base.cone, member, mults, budget)
    return IdealSemigroup(base, gap_set, P.gens)


def imsg_of_isemigroup(T: IdealSemigroup) -> frozenset[Point]:
    """Canonical generating set of the ideal part, recovered from T itself.

    Equals the minimal elements, under division in the base, of T's own
    minimal generating set.
    """
    return minimal_elements(T.base, T.minimal_generators())


def _gap_view(T):
    if isinstance(T, (IdealSemigroup, GapSemigroup)):
        return T.cone, T.gaps, T
    raise TypeError(f"expected a gap representation, got {type(T).__name__}")


def verify_isemigroup(S: GapSemigroup, T) -> bool:
    """Decide whether the candidate's nonzero part is an ideal of S.

    Checks containment (gaps of S persist in T) and the ideal axiom
    against the minimal generators of S; translating any element by a
    generator can only fall into a gap of T when the element's grade is
    below the largest gap grade, so the scan is finite and complete.  When
    the answer is positive the sandwich T ⊆ S ⊆ T ∪ PF(T) is asserted as a
    cross-check.
    """
    cone, gaps_t, t_obj = _gap_view(T)
    if cone != S.cone:
        raise ConeMismatch(f"candidate cone {cone.rays} differs from {S.cone.rays}")
    if not S.gaps <= gaps_t:
        return False
    msg_s = S.minimal_generators()
    max_grade = max((sum(h) for h in gaps_t), default=-1)
    for g in range(1, max_grade + 1):
        for x in cone.graded_points(g):
            if x in gaps_t:
                continue
            for n in msg_s:
                if vadd(x, n) in gaps_t:
                    return False
    # sandwich cross-check: every element S lost must be pseudo-Frobenius in T
    lost = gaps_t - S.gaps
    if lost:
        t_gap = (
            t_obj.as_gap_semigroup()
            if isinstance(t_obj, IdealSemigroup)
            else t_obj
        )
        msg_t = t_obj.minimal_generators()
        assert all(
            all(t_gap.contains(vadd(h, n)) for n in msg_t) for h in lost
        ), "sandwich property violated by a verified ideal"
    return True
