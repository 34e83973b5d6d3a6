import pytest

from csemigroups import (
    GenSemigroup,
    TriState,
    apery_context,
    decompose,
    gaps,
    ideal_from_set,
    is_med_definition,
    is_med_pairwise,
    isemigroup_from_ideal,
    med_construct,
    med_type2_check,
    med_via_translates,
    minimal_elements,
    verify_isemigroup,
)
from bruteforce import (
    brute_apery_core,
    closure_member,
    fixture_cone_points,
    sum_closure,
)
from conftest import S1_GENS

EXPECTED_MSG_T = frozenset(
    [(5, 1), (6, 2), (13, 3), (14, 3), (14, 4), (15, 4), (17, 4), (18, 5)]
)


def test_is_med_definition_s2(s2_gen):
    report = is_med_definition(s2_gen)
    assert report.is_med
    assert report.apery_core == {(0, 0), (8, 2), (9, 2), (12, 3)}
    assert report.non_ray_generators == {(8, 2), (9, 2), (12, 3)}
    assert report.witness is None


def test_is_med_definition_s1_against_bruteforce(s1_gen):
    """The running genus-4 semigroup is itself of maximal embedding dimension.

    Frozen from the independent scan below: the common Apery core of the two
    multiplicities consists precisely of zero and the six non-ray generators
    (every sum of two of them sheds the multiplicity (5,1) or (6,2) inside
    the semigroup, e.g. (9,2)+(9,2)-(5,1) = (13,3), a generator).
    """
    member = closure_member(list(S1_GENS), 210)
    elems = [p for p in sum_closure(list(S1_GENS), 200)]
    expected_core = brute_apery_core(member, elems, [(5, 1), (6, 2)])
    report = is_med_definition(s1_gen)
    assert report.apery_core == expected_core
    assert expected_core == {(0, 0)} | report.non_ray_generators
    assert report.is_med


def test_is_med_definition_full_cone(n2):
    report = is_med_definition(n2)
    assert report.is_med
    assert report.apery_core == {(0, 0)}
    assert report.non_ray_generators == frozenset()


def test_is_med_negative_case_has_witness():
    # without (13,3), the sum (9,2)+(9,2) sheds neither multiplicity:
    # minus (5,1) gives (13,3), now absent; minus (6,2) leaves the cone
    s = GenSemigroup([g for g in S1_GENS if g != (13, 3)])
    assert not s.contains((13, 3))
    report = is_med_definition(s)
    assert not report.is_med
    assert report.witness is not None
    a, b = report.witness
    for n in s.multiplicities():
        d = tuple(x + y - z for x, y, z in zip(a, b, n))
        assert not (min(d) >= 0 and s.contains(d))
    assert not is_med_pairwise(s)
    assert not med_via_translates(s)


def test_is_med_pairwise(s1_gen, s2_gen, n2):
    assert is_med_pairwise(s2_gen)
    assert is_med_pairwise(s1_gen)
    assert is_med_pairwise(n2)


def test_pairwise_example_witness(s2_gen):
    # (8,2)+(9,2)-(5,1) = (12,3) inside the semigroup
    assert s2_gen.contains((12, 3))


def test_med_construct_s2(s2_gen):
    built = med_construct(s2_gen, [(5, 1), (6, 2)])
    assert built.msg == EXPECTED_MSG_T
    assert built.isemigroup is None  # base not a verified C-semigroup
    assert is_med_definition(built.semigroup).is_med


def test_med_construct_gap_law_s1(s1, s1_gen):
    built = med_construct(s1, s1.multiplicities())
    ctx = apery_context(s1_gen, s1.multiplicities())
    assert built.isemigroup is not None
    assert built.isemigroup.gaps == s1.gaps | (ctx.core - {(0, 0)})
    assert built.isemigroup.genus == s1.genus + len(ctx.core) - 1
    # independent route: certified scan over the translated ideal
    scan = isemigroup_from_ideal(ideal_from_set(s1, s1.multiplicities()))
    assert scan.gaps == built.isemigroup.gaps
    assert verify_isemigroup(s1, built.isemigroup)


def test_med_construct_full_cone(n2):
    built = med_construct(n2, [(1, 0), (0, 1)])
    # translating by the two unit rays only removes the origin; frozen from
    # the reduction of the translate pool
    assert built.msg == {(1, 0), (0, 1)}
    assert built.isemigroup.gaps == frozenset()
    assert is_med_definition(built.semigroup).is_med


def test_med_construct_outputs_are_med(s1, s2_gen):
    fixtures = [
        (s1, [(5, 1), (6, 2)]),
        (s1, [(10, 2), (6, 2)]),
        (s1, [(5, 1), (9, 3)]),
        (s2_gen, [(10, 2), (6, 2)]),
    ]
    for base, m in fixtures:
        built = med_construct(base, m)
        assert is_med_definition(built.semigroup).is_med
        assert is_med_pairwise(built.semigroup)
        assert med_via_translates(built.semigroup)


def test_med_criteria_agree(s1_gen, s2_gen, n2):
    for s in (s1_gen, s2_gen, n2):
        a = is_med_definition(s).is_med
        b = is_med_pairwise(s)
        c = med_via_translates(s)
        assert a == b == c


def test_csemigroup_preserved_by_construction(s1, s2_gen):
    # C-semigroup base gives a C-semigroup translate, and vice versa
    built = med_construct(s1, [(5, 1), (6, 2)])
    assert built.isemigroup is not None
    gap_form = built.isemigroup.as_gap_semigroup()
    gap_form.validate_closure()
    # non-C base: the translated semigroup cannot have finite gaps either
    built2 = med_construct(s2_gen, [(5, 1), (6, 2)])
    from csemigroups import NotCSemigroup
    with pytest.raises(NotCSemigroup):
        gaps(built2.semigroup)


def test_decompose_examples(s1_gen, s2_gen, n2):
    for s in (s1_gen, s2_gen, n2):
        dec = decompose(s)
        assert dec.verify_on_box(40)
    assert decompose(n2).head == {(0, 0)}


def test_decompose_ray_sections(s2_gen):
    dec = decompose(s2_gen)
    # the (5,1)-section is the whole cone: adding (5,1) stays inside
    i = dec.ray_elements.index((5, 1))
    for p in fixture_cone_points(20):
        assert dec.in_ray_part(i, p)


def test_decompose_head_plus_ideal_form(s1):
    # nonzero part of the cover splits as head plus an ideal
    dec = decompose(s1.as_generated())
    box = fixture_cone_points(40)
    tail = [
        p for p in box
        if any(p) and s1.contains(p) and p not in dec.head
    ]
    X = minimal_elements(s1, tail)
    P = ideal_from_set(s1, X)
    for p in box:
        if s1.contains(p):
            assert p in dec.head or P.contains(p)


def test_med_type2(s1_gen, s2_gen, n2):
    assert med_type2_check(s2_gen) is TriState.TRUE
    # the two-ray reductions of the non-ray generators need different
    # multiplicities, so no single section certifies the criterion
    assert med_type2_check(s1_gen) is TriState.INCONCLUSIVE
    assert med_type2_check(n2) is TriState.TRUE


def test_med_type2_implies_med(s1, s2_gen, n2):
    fixtures = [s2_gen, n2, s1.as_generated(),
                med_construct(s1, [(5, 1), (6, 2)]).semigroup]
    for s in fixtures:
        if med_type2_check(s) is TriState.TRUE:
            assert is_med_definition(s).is_med


def test_med_type2_false_when_hypothesis_fails():
    # generators sitting tight on the rays: (7,2)-(5,1)=(2,1) and
    # (7,2)-(3,1)=(4,1) both leave the cone <(3,1),(5,1)> after one step?
    s = GenSemigroup([(3, 1), (5, 1), (7, 2)])
    mults = s.multiplicities()
    m = (7, 2)
    outside = [
        n for n in mults
        if not s.cone.contains(tuple(a - b for a, b in zip(m, n)))
    ]
    if len(outside) == len(mults):
        assert med_type2_check(s) is TriState.FALSE
