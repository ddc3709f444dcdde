import random

import pytest

from skewsimple import (CapacityError, Caps, DomainError, FunctionRing, GroupTable,
                        MatrixRing, ModularRing, PreconditionError)
from skewsimple.actions import ActionMap, RingAutomorphism, trivial_action
from skewsimple.closure import abelian_span
from skewsimple.skew import (SkewContext, augmentation, central_witness,
                             centralizer_components, centralizer_of_A, coeff_at_e,
                             commuting_witness_outside_A, is_central,
                             is_max_commutative_A, is_simple, skew_center,
                             skew_ideal_closure, support, support_reduce)

from conftest import (conj_f3_context, natural_s3_context, rotation_z3_context,
                      swap_context, trivial_f2_z2_context, two_two_cycles_context)


def test_unit_monomials_invert_each_other():
    ctx = rotation_z3_context()
    for g in ctx.group.elements():
        ginv = ctx.group.inv(g)
        assert ctx.unit_monomial(g) * ctx.unit_monomial(ginv) == ctx.one
        assert ctx.unit_monomial(ginv) * ctx.unit_monomial(g) == ctx.one


def test_trivial_group_multiplication_is_ring_multiplication():
    ring = MatrixRing(2, 2)
    grp = GroupTable.cyclic_product([1])
    ctx = SkewContext(ring, grp, trivial_action(grp, ring))
    for i in range(ring.size):
        for j in range(0, ring.size, 3):
            a, b = ring.unrank(i), ring.unrank(j)
            prod = ctx.monomial(a, 0) * ctx.monomial(b, 0)
            assert prod == ctx.monomial(ring.mul(a, b), 0)


def test_swap_context_nilpotent_product(swap_ctx):
    r = swap_ctx.monomial((1, 0), 1)
    assert (r * r).is_zero()


def test_context_mismatch_rejected(swap_ctx):
    other = swap_context()
    with pytest.raises(DomainError):
        swap_ctx.one + other.one
    with pytest.raises(DomainError):
        swap_ctx.one * other.one


def test_conjugation_implemented_by_unit_monomials(conj_f3_ctx):
    ctx = conj_f3_ctx
    for g in ctx.group.elements():
        u = ctx.unit_monomial(g)
        uinv = ctx.unit_monomial(ctx.group.inv(g))
        for a in ctx.ring.payloads():
            lhs = u * ctx.monomial(a, 0) * uinv
            assert lhs == ctx.monomial(ctx.action.apply(g, a), 0)


def test_augmentation_and_identity_coefficient(swap_ctx):
    ctx = trivial_f2_z2_context()
    r = ctx.one - ctx.unit_monomial(1)
    assert augmentation(r).is_zero()  # kernel member difference dies under eps
    s = swap_ctx.one + swap_ctx.monomial((1, 1), 1)
    assert coeff_at_e(s).payload == (1, 1)
    assert support(s) == {0, 1}


def test_support_example_modular():
    ring = ModularRing(6)
    grp = GroupTable.cyclic_product([2])
    ctx = SkewContext(ring, grp, trivial_action(grp, ring))
    r = ctx.monomial(3, 0) + ctx.monomial(2, 1)
    assert support(r) == {0, 1}
    assert augmentation(r).payload == 5


def test_augmentation_additive_always(conj_f3_ctx):
    rng = random.Random(5)
    ctx = conj_f3_ctx
    for _ in range(200):
        r = ctx.element_of_rank(rng.randrange(ctx.size))
        s = ctx.element_of_rank(rng.randrange(ctx.size))
        assert augmentation(r + s) == augmentation(r) + augmentation(s)


def test_augmentation_multiplicative_iff_kernel_everything():
    trivial = trivial_f2_z2_context()
    rng = random.Random(6)
    for _ in range(100):
        r = trivial.element_of_rank(rng.randrange(trivial.size))
        s = trivial.element_of_rank(rng.randrange(trivial.size))
        assert augmentation(r * s) == augmentation(r) * augmentation(s)
    swap = swap_context()
    found = any(
        augmentation(r * s) != augmentation(r) * augmentation(s)
        for r in swap.elements() for s in swap.elements())
    assert found


def test_augmentation_kills_kernel_difference_ideal():
    ctx = trivial_f2_z2_context()
    ideal = skew_ideal_closure(ctx, [ctx.one - ctx.unit_monomial(1)])
    assert not ideal.is_full
    for r in ideal.elements():
        assert augmentation(r).is_zero()


def test_associativity_exhaustive_tiny(swap_ctx):
    elems = list(swap_ctx.elements())
    for r in elems:
        for s in elems:
            for t in elems:
                assert (r * s) * t == r * (s * t)


@pytest.mark.parametrize("make", [conj_f3_context, natural_s3_context, rotation_z3_context])
def test_associativity_random_triples(make):
    ctx = make()
    rng = random.Random(13)
    coeff_count = min(ctx.size, 1 << 30)
    for _ in range(10_000):
        r = ctx.element_of_rank(rng.randrange(coeff_count))
        s = ctx.element_of_rank(rng.randrange(coeff_count))
        t = ctx.element_of_rank(rng.randrange(coeff_count))
        assert (r * s) * t == r * (s * t)


def test_distributivity_random(conj_f2_ctx):
    rng = random.Random(14)
    ctx = conj_f2_ctx
    for _ in range(2000):
        r, s, t = (ctx.element_of_rank(rng.randrange(ctx.size)) for _ in range(3))
        assert r * (s + t) == r * s + r * t
        assert (r + s) * t == r * t + s * t


# centralizer and centre ------------------------------------------------------

def test_centralizer_trivial_action_is_everything():
    ring = ModularRing(4)
    grp = GroupTable.cyclic_product([2])
    ctx = SkewContext(ring, grp, trivial_action(grp, ring))
    assert len(centralizer_of_A(ctx)) == ctx.size


def test_centralizer_swap_is_exactly_A(swap_ctx):
    cent = centralizer_of_A(swap_ctx)
    assert len(cent) == swap_ctx.ring.size
    assert all(r.support <= {0} for r in cent)
    assert is_max_commutative_A(swap_ctx)


def test_centralizer_s3_contains_fixed_point_indicator(s3_ctx):
    witness = commuting_witness_outside_A(s3_ctx)
    assert witness is not None
    g = next(iter(witness.support))
    perm = s3_ctx.group.permutations[g]
    fixed_points = [x for x in range(3) if perm[x] == x]
    payload = witness.coeffs[g]
    assert all(payload[x] == 0 for x in range(3) if x not in fixed_points)
    assert not is_max_commutative_A(s3_ctx)
    # and it does commute with the whole coefficient ring
    for a in s3_ctx.ring.payloads():
        mono = s3_ctx.monomial(a, 0)
        assert mono * witness == witness * mono


def test_max_commutativity_requires_commutative_ring(conj_f3_ctx):
    with pytest.raises(DomainError):
        is_max_commutative_A(conj_f3_ctx)


def test_trivial_action_never_max_commutative():
    ctx = trivial_f2_z2_context()
    assert not is_max_commutative_A(ctx)


def test_center_of_trivial_group_is_ring_center():
    ring = MatrixRing(2, 2)
    grp = GroupTable.cyclic_product([1])
    ctx = SkewContext(ring, grp, trivial_action(grp, ring))
    centre = skew_center(ctx)
    assert {coeff_at_e(z).payload for z in centre} == {(0, 0, 0, 0), (1, 0, 0, 1)}


def test_center_structure_conj_f3(conj_f3_ctx):
    centre = skew_center(conj_f3_ctx)
    assert len(centre) == 9
    M = (0, 1, 2, 0)
    ring = conj_f3_ctx.ring
    scalars = [(c, 0, 0, c) for c in range(3)]
    expected = set()
    for c0 in range(3):
        for c1 in range(3):
            coeffs = {}
            if c0:
                coeffs[0] = scalars[c0]
            if c1:
                coeffs[1] = ring.mul(scalars[c1], M)
            expected.add(conj_f3_ctx.element(coeffs))
    assert set(centre) == expected


def test_center_swap_is_prime_field(swap_ctx):
    centre = skew_center(swap_ctx)
    assert set(centre) == {swap_ctx.zero, swap_ctx.one}


def test_center_brute_force_agreement():
    ctx = rotation_z3_context()
    centre = set(skew_center(ctx))
    brute = {r for r in ctx.elements()
             if all(r * s == s * r for s in ctx.elements())}
    assert centre == brute


def test_center_coefficient_laws(conj_f3_ctx):
    ctx = conj_f3_ctx
    ring, action = ctx.ring, ctx.action
    fixed = {a for a in ring.payloads()
             if all(auto.apply(a) == a for auto in action.autos)}
    for z in skew_center(ctx):
        for g, a in z.coeffs.items():
            assert a in fixed  # abelian group: coefficients are action-fixed
            for b in ring.additive_generators():
                assert ring.mul(b, a) == ring.mul(a, action.apply(g, b))
            for h in ctx.group.elements():
                tgt = ctx.group.mul(ctx.group.mul(h, g), ctx.group.inv(h))
                assert z.coeffs.get(tgt, ring.zero) == action.apply(h, a)


def test_centralizer_equals_kernel_support_under_hypotheses():
    # abelian group, commutative coefficients, action-simple: centralizer is
    # exactly the subring supported on the kernel
    ring = FunctionRing(2, 2)
    z4 = GroupTable.cyclic_product([4])
    through_quotient = ActionMap(z4, ring, [
        RingAutomorphism.coordinate_permutation(ring, tuple((x + g) % 2 for x in range(2)))
        for g in range(4)])
    ctx = SkewContext(ring, z4, through_quotient)
    comps = centralizer_components(ctx)
    kernel_members = {0, 2}
    for g in z4.elements():
        if g in kernel_members:
            assert len(comps[g]) == ring.size
        else:
            assert comps[g] == [ring.zero]


# ideals and the oracle -----------------------------------------------------------

def test_trivial_group_simple_iff_ring_simple():
    ring = MatrixRing(2, 2)
    grp = GroupTable.cyclic_product([1])
    ctx = SkewContext(ring, grp, trivial_action(grp, ring))
    assert is_simple(ctx).value is True


def test_group_ring_augmentation_witness():
    ctx = trivial_f2_z2_context()
    verdict = is_simple(ctx)
    assert verdict.value is False
    assert verdict.witness == ctx.one + ctx.unit_monomial(1)
    assert not verdict.witness_ideal.is_full


def test_swap_is_simple(swap_ctx):
    assert is_simple(swap_ctx).value is True


def test_two_two_cycles_not_simple():
    ctx = two_two_cycles_context()
    verdict = is_simple(ctx)
    assert verdict.value is False
    ideal = verdict.witness_ideal
    assert ideal.contains(verdict.witness)
    assert ideal.validate_closed()


def test_skew_ideal_closure_full_for_units(conj_f2_ctx):
    ideal = skew_ideal_closure(conj_f2_ctx, [conj_f2_ctx.unit_monomial(1)])
    assert ideal.is_full


def test_skew_ideal_closure_cross_engine(swap_ctx):
    # echelon engine against the generic span on the same generators
    gen = swap_ctx.one + swap_ctx.monomial((1, 0), 1)
    ideal = skew_ideal_closure(swap_ctx, [gen])
    span = abelian_span([swap_ctx.vec_of(gen)], swap_ctx._set_operators(),
                        swap_ctx._vec_add, (0,) * swap_ctx.dim)
    assert {tuple(v) for v in ideal.iter_vectors()} == span


def test_composite_characteristic_oracle():
    ring = ModularRing(6)
    grp = GroupTable.cyclic_product([2])
    ctx = SkewContext(ring, grp, trivial_action(grp, ring))
    verdict = is_simple(ctx)
    assert verdict.value is False
    assert not verdict.witness_ideal.is_full
    assert verdict.witness_ideal.validate_closed()


def test_oracle_refuses_over_cap_without_flag():
    caps = Caps.from_env().with_enumeration(64)
    ctx = swap_context(caps)
    assert ctx.size <= 64  # still within: use a bigger context instead
    ctx2 = natural_s3_context(caps=caps)
    ctx2.witness_search = False
    with pytest.raises(CapacityError):
        is_simple(ctx2)
    assert is_simple(ctx2, witness_search=True).value is False


def test_witness_search_never_claims_simplicity():
    # the regular rotation context is simple, but above a tiny cap the search
    # must come back undetermined rather than claim anything
    caps = Caps(enumeration=16, witness_candidates=50)
    ctx = rotation_z3_context(caps=caps)
    verdict = is_simple(ctx)
    assert verdict.value is None
    assert verdict.method == "witness_search"
    assert "undetermined" in verdict.note


def test_witness_search_finds_invariant_ideal_witness():
    caps = Caps(enumeration=16)
    ctx = two_two_cycles_context(caps)
    verdict = is_simple(ctx)
    assert verdict.value is False
    assert verdict.witness_ideal.basis.rank < ctx.dim


# constructive procedures ----------------------------------------------------------

def test_support_reduce_unit_monomial(conj_f3_ctx):
    r = conj_f3_ctx.unit_monomial(1)
    reduced = support_reduce(conj_f3_ctx, r)
    assert coeff_at_e(reduced).payload == conj_f3_ctx.ring.one
    assert len(reduced.support) <= 1


def test_support_reduce_two_term(swap_ctx):
    r = swap_ctx.one + swap_ctx.monomial((1, 0), 1)
    ideal = skew_ideal_closure(swap_ctx, [r])
    reduced = support_reduce(swap_ctx, r)
    assert ideal.contains(reduced)
    assert coeff_at_e(reduced).payload == swap_ctx.ring.one
    assert len(reduced.support) <= len(r.support)


def test_support_reduce_checks_hypotheses(s3_ctx):
    with pytest.raises(PreconditionError) as err:
        support_reduce(s3_ctx, s3_ctx.one)
    assert "abelian" in str(err.value)
    ctx = two_two_cycles_context()
    with pytest.raises(PreconditionError) as err:
        support_reduce(ctx, ctx.one)
    assert "G-simple" in str(err.value)
    good = swap_context()
    with pytest.raises(DomainError):
        support_reduce(good, good.zero)


def test_central_witness_full_ideal(swap_ctx):
    ideal = skew_ideal_closure(swap_ctx, [swap_ctx.one])
    witness = central_witness(swap_ctx, ideal)
    assert witness == swap_ctx.one


def test_central_witness_conj_f3(conj_f3_ctx):
    ideal = skew_ideal_closure(conj_f3_ctx, [conj_f3_ctx.monomial((0, 1, 2, 0), 1)])
    witness = central_witness(conj_f3_ctx, ideal)
    assert ideal.contains(witness)
    assert is_central(witness)
    assert coeff_at_e(witness).payload == conj_f3_ctx.ring.one
    assert witness in set(skew_center(conj_f3_ctx))


def test_central_witness_proper_ideal_conj_f2(conj_f2_ctx):
    # a proper nonzero ideal in a non-simple ring satisfying the hypotheses
    verdict = is_simple(conj_f2_ctx)
    assert verdict.value is False
    witness = central_witness(conj_f2_ctx, verdict.witness_ideal)
    assert verdict.witness_ideal.contains(witness)
    assert is_central(witness)
    assert coeff_at_e(witness).payload == conj_f2_ctx.ring.one


def test_central_witness_rejects_zero_ideal(swap_ctx):
    zero_ideal = skew_ideal_closure(swap_ctx, [])
    with pytest.raises(DomainError):
        central_witness(swap_ctx, zero_ideal)


# ranks and enumeration -------------------------------------------------------------

def test_rank_roundtrip(conj_f2_ctx):
    for i in range(0, conj_f2_ctx.size, 7):
        r = conj_f2_ctx.element_of_rank(i)
        assert conj_f2_ctx.rank_of(r) == i
        assert conj_f2_ctx.element_of_vec(conj_f2_ctx.vec_of(r)) == r


def test_elements_iteration_cap():
    caps = Caps.from_env().with_enumeration(8)
    ctx = swap_context(caps)
    with pytest.raises(CapacityError):
        list(ctx.elements())


def test_prime_power_coefficient_field_context():
    # GF(4) multiplication is not digitwise over F2, but multiplication by a
    # fixed element is still F2-linear, so both engines must agree
    ring = FunctionRing(2, 4)
    grp = GroupTable.cyclic_product([2])
    ctx = SkewContext(ring, grp, ActionMap(grp, ring, [
        RingAutomorphism.identity(ring),
        RingAutomorphism.coordinate_permutation(ring, [1, 0])]))
    gen = ctx.one + ctx.monomial((2, 3), 1)
    ideal = skew_ideal_closure(ctx, [gen])
    span = abelian_span([ctx.vec_of(gen)], ctx._set_operators(), ctx._vec_add,
                        (0,) * ctx.dim)
    assert {tuple(v) for v in ideal.iter_vectors()} == span
    assert is_simple(ctx).value is True
    centre = skew_center(ctx)
    assert len(centre) == 4  # the constants: a copy of GF(4)


def test_composite_prime_power_modulus_context():
    ring = ModularRing(4)
    grp = GroupTable.cyclic_product([2])
    ctx = SkewContext(ring, grp, trivial_action(grp, ring))
    verdict = is_simple(ctx)
    assert verdict.value is False
    assert verdict.witness == ctx.monomial(2, 1)
    assert verdict.witness_ideal.size == 4


@pytest.mark.parametrize("ring_factory", [
    lambda: MatrixRing(2, 2), lambda: ModularRing(6), lambda: ModularRing(5),
    lambda: FunctionRing(2, 2)])
def test_trivial_group_oracle_matches_ring_oracle(ring_factory):
    from skewsimple import is_simple_ring
    ring = ring_factory()
    grp = GroupTable.cyclic_product([1])
    ctx = SkewContext(ring, grp, trivial_action(grp, ring))
    assert is_simple(ctx).value == is_simple_ring(ring).simple


def test_associativity_exhaustive_64_element_ring():
    # every triple in a 64-element skew ring over a non-abelian group
    ring = ModularRing(2)
    grp = GroupTable.symmetric(3)
    ctx = SkewContext(ring, grp, trivial_action(grp, ring))
    assert ctx.size == 64
    elems = list(ctx.elements())
    for r in elems:
        for s in elems:
            rs = r * s
            for t in elems:
                assert rs * t == r * (s * t)
