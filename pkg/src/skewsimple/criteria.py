"""Executable simplicity criteria, each cross-checked against the oracle.

Every check returns a CheckReport whose ``conclusions`` map records each
asserted implication as True (holds), False (violated: the criterion and the
oracle disagree) or None (not applicable, or undecidable because simplicity is
undetermined at this size). Violations are hard failures for the suite runner.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

from .actions import (ActionMap, RingAutomorphism, fixed_payloads, is_G_simple,
                      is_outer_action, kernel, trivial_action)
from .errors import DomainError, PreconditionError
from .groups import GroupTable
from .rings import FunctionRing, MatrixRing, ModularRing, RingSpec, center
from .skew import (SkewContext, SkewElement, _payload_json, augmentation,
                   centralizer_components, coeff_at_e, commuting_witness_outside_A,
                   is_max_commutative_A, is_simple, skew_center)


@dataclass
class CriterionVerdict:
    """One evaluated assertion with an optional revalidatable witness."""

    assertion: str
    value: bool | None
    method: str = "criterion"
    witness: object = None
    note: str = ""

    def as_json(self) -> dict:
        out = {"assertion": self.assertion, "value": self.value, "method": self.method}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class CheckReport:
    name: str
    verdicts: dict[str, CriterionVerdict] = field(default_factory=dict)
    conclusions: dict[str, bool | None] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def violations(self) -> list[str]:
        return [key for key, value in self.conclusions.items() if value is False]

    def as_json(self) -> dict:
        return {
            "name": self.name,
            "verdicts": {k: v.as_json() for k, v in self.verdicts.items()},
            "conclusions": dict(self.conclusions),
            "violations": self.violations,
            "notes": list(self.notes),
        }


def field_obstruction(elements, *, zero, one):
    """A nonzero member with no inverse in the set, or None when it is a field."""
    members = set(elements)
    for a in members:
        if a == zero:
            continue
        if not any(a * b == one for b in members):
            return a
    return None


class InstanceEvaluation:
    """Lazily computed, shared facts about one skew ring instance."""

    def __init__(self, ctx: SkewContext) -> None:
        self.ctx = ctx

    @cached_property
    def simplicity(self):
        return is_simple(self.ctx)

    @cached_property
    def g_simplicity(self):
        return is_G_simple(self.ctx.action)

    @cached_property
    def center(self) -> list[SkewElement]:
        return skew_center(self.ctx)

    @cached_property
    def center_obstruction(self) -> SkewElement | None:
        return field_obstruction(self.center, zero=self.ctx.zero, one=self.ctx.one)

    @property
    def center_is_field(self) -> bool:
        return self.center_obstruction is None

    @cached_property
    def kernel(self):
        return kernel(self.ctx.action)

    @property
    def sigma_injective(self) -> bool:
        return self.kernel.is_trivial

    @cached_property
    def outer(self) -> bool:
        return is_outer_action(self.ctx.action)

    @cached_property
    def max_commutative(self) -> bool | None:
        if not self.ctx.ring.is_commutative:
            return None
        return is_max_commutative_A(self.ctx)


def _element_json(r: SkewElement) -> dict:
    return {"element": r.serialize()}


def necessary_conditions(ev: InstanceEvaluation | SkewContext, *, oracle: bool = True) -> CheckReport:
    """The three conditions forced by simplicity: centre a field, coefficient
    ring G-simple, action injective. With the oracle enabled, simplicity of R
    is computed and the implication is asserted."""
    ev = _as_evaluation(ev)
    report = CheckReport("necessary_conditions")
    obstruction = ev.center_obstruction
    report.verdicts["center_is_field"] = CriterionVerdict(
        "center_is_field", obstruction is None,
        witness=None if obstruction is None else _element_json(obstruction))
    gs = ev.g_simplicity
    report.verdicts["g_simple"] = CriterionVerdict(
        "g_simple", gs.value,
        witness=None if gs.value else {
            "coefficient": _payload_json(ev.ctx.ring, gs.witness.payload)})
    report.verdicts["sigma_injective"] = CriterionVerdict(
        "sigma_injective", ev.sigma_injective,
        witness=None if ev.sigma_injective else {"group_element": ev.ctx.group.name(
            min(g for g in ev.kernel.members if g != 0))})
    if not oracle:
        report.conclusions["simple_implies_necessary"] = None
        report.notes.append("criterion-only mode: oracle not consulted")
        return report
    simple = ev.simplicity.value
    report.verdicts["simple"] = CriterionVerdict("simple", simple, method="oracle",
                                                 note=ev.simplicity.note)
    if simple is None:
        report.conclusions["simple_implies_necessary"] = None
        report.notes.append("simplicity undetermined at this size")
    elif simple:
        report.conclusions["simple_implies_necessary"] = (
            obstruction is None and bool(gs.value) and ev.sigma_injective)
    else:
        report.conclusions["simple_implies_necessary"] = True
        report.notes.append("vacuous: the ring is not simple")
    return report


def abelian_simplicity_check(ev: InstanceEvaluation | SkewContext) -> CheckReport:
    """Simplicity against the centre-field and injectivity conditions.

    Asserted: simple implies both conditions; for abelian groups, simple iff
    (G-simple and centre a field); with a commutative coefficient ring as
    well, simple iff (G-simple and injective).
    """
    ev = _as_evaluation(ev)
    ctx = ev.ctx
    report = CheckReport("abelian_simplicity")
    simple = ev.simplicity.value
    cond_field = bool(ev.g_simplicity.value) and ev.center_is_field
    cond_inj = bool(ev.g_simplicity.value) and ev.sigma_injective
    report.verdicts["simple"] = CriterionVerdict(
        "simple", simple, method="oracle",
        witness=None if not ev.simplicity.witness else _element_json(ev.simplicity.witness),
        note=ev.simplicity.note)
    report.verdicts["g_simple_and_center_field"] = CriterionVerdict(
        "g_simple_and_center_field", cond_field)
    report.verdicts["g_simple_and_injective"] = CriterionVerdict(
        "g_simple_and_injective", cond_inj)
    if simple is None:
        report.conclusions["simple_implies_conditions"] = None
        report.notes.append("simplicity undetermined at this size")
    else:
        report.conclusions["simple_implies_conditions"] = (
            True if not simple else (cond_field and cond_inj))
    if ctx.group.is_abelian and simple is not None:
        report.conclusions["abelian_equivalence"] = simple == cond_field
        if ctx.ring.is_commutative:
            report.conclusions["abelian_commutative_equivalence"] = (
                simple == cond_field == cond_inj)
        else:
            report.conclusions["abelian_commutative_equivalence"] = None
    else:
        report.conclusions["abelian_equivalence"] = None
        report.conclusions["abelian_commutative_equivalence"] = None
    if simple is False and cond_inj:
        report.notes.append(
            "injectivity plus G-simplicity without simplicity: the general "
            "converse fails here (non-abelian group)")
    if simple is False and cond_field:
        report.notes.append(
            "centre-field condition without simplicity exhibited")
    return report


def commutative_simplicity_check(ev: InstanceEvaluation | SkewContext) -> CheckReport:
    """For commutative coefficients: simple iff G-simple and A maximal
    commutative in R. Both sides computed independently."""
    ev = _as_evaluation(ev)
    ctx = ev.ctx
    if not ctx.ring.is_commutative:
        raise DomainError("commutative simplicity check requires a commutative coefficient ring")
    report = CheckReport("commutative_simplicity")
    simple = ev.simplicity.value
    maxc = ev.max_commutative
    witness = None if maxc else commuting_witness_outside_A(ctx)
    report.verdicts["simple"] = CriterionVerdict(
        "simple", simple, method="oracle", note=ev.simplicity.note)
    report.verdicts["g_simple"] = CriterionVerdict("g_simple", ev.g_simplicity.value)
    report.verdicts["max_commutative"] = CriterionVerdict(
        "max_commutative", maxc,
        witness=None if witness is None else _element_json(witness))
    if simple is None:
        report.conclusions["commutative_equivalence"] = None
        report.notes.append("simplicity undetermined at this size")
    else:
        report.conclusions["commutative_equivalence"] = (
            simple == (bool(ev.g_simplicity.value) and bool(maxc)))
    return report


def outer_simplicity_check(ev: InstanceEvaluation | SkewContext) -> CheckReport:
    """For abelian outer actions: simple iff G-simple."""
    ev = _as_evaluation(ev)
    ctx = ev.ctx
    if not ctx.group.is_abelian:
        raise PreconditionError("G abelian", f"{ctx.group!r} is not abelian")
    if not ev.outer:
        raise PreconditionError("action outer",
                                "some non-identity element acts by an inner automorphism")
    report = CheckReport("outer_simplicity")
    simple = ev.simplicity.value
    report.verdicts["simple"] = CriterionVerdict("simple", simple, method="oracle",
                                                 note=ev.simplicity.note)
    report.verdicts["g_simple"] = CriterionVerdict("g_simple", ev.g_simplicity.value)
    if simple is None:
        report.conclusions["outer_equivalence"] = None
        report.notes.append("simplicity undetermined at this size")
    else:
        report.conclusions["outer_equivalence"] = simple == bool(ev.g_simplicity.value)
    return report


def center_containment_check(ev: InstanceEvaluation | SkewContext) -> CheckReport:
    """Structure of the centre against the fixed subring.

    Asserted: Z(R) lies inside the identity component iff it equals
    (A^G intersect Z(A)) u_e; and when A is G-simple and the containment
    holds, the centre is a field. The orderable-group converse has no finite
    instance and is reported as out of scope.
    """
    ev = _as_evaluation(ev)
    ctx = ev.ctx
    report = CheckReport("center_containment")
    contained = all(z.support <= {0} for z in ev.center)
    fixed_central = fixed_payloads(ctx.action) & {e.payload for e in center(ctx.ring)}
    center_payloads = {coeff_at_e(z).payload for z in ev.center if z.support <= {0}}
    equals_fixed_central = contained and center_payloads == fixed_central
    report.verdicts["center_in_identity_component"] = CriterionVerdict(
        "center_in_identity_component", contained,
        witness=None if contained else _element_json(
            next(z for z in ev.center if not z.support <= {0})))
    report.verdicts["center_equals_fixed_central"] = CriterionVerdict(
        "center_equals_fixed_central", equals_fixed_central)
    report.verdicts["center_is_field"] = CriterionVerdict("center_is_field", ev.center_is_field)
    report.conclusions["containment_equivalence"] = contained == equals_fixed_central
    if bool(ev.g_simplicity.value) and contained:
        report.conclusions["containment_gives_field"] = ev.center_is_field
    else:
        report.conclusions["containment_gives_field"] = None
    report.notes.append("orderable-group converse: out of finite scope "
                        "(the only finite orderable group is trivial)")
    return report


def centralizer_kernel_check(ev: InstanceEvaluation | SkewContext) -> CheckReport:
    """Centralizer of the coefficient ring against the kernel subring.

    Under (G abelian, A commutative, A G-simple), the centralizer of A in R
    must be exactly the elements supported on the kernel of the action. The
    centralizer is computed from commutation alone; the kernel side comes from
    the action tables.
    """
    ev = _as_evaluation(ev)
    ctx = ev.ctx
    report = CheckReport("centralizer_kernel")
    hypotheses = {
        "G abelian": ctx.group.is_abelian,
        "A commutative": ctx.ring.is_commutative,
        "A G-simple": bool(ev.g_simplicity.value),
    }
    failed = [name for name, ok in hypotheses.items() if not ok]
    report.verdicts["hypotheses"] = CriterionVerdict(
        "hypotheses", not failed, note=("fails: " + ", ".join(failed)) if failed else "")
    if failed:
        report.conclusions["centralizer_matches_kernel"] = None
        report.notes.append("hypotheses not met; equality not asserted")
        return report
    comps = centralizer_components(ctx)
    members = ev.kernel.members
    ok = True
    for g in range(ctx.group.order):
        expected = ctx.ring.size if g in members else 1
        if len(comps[g]) != expected:
            ok = False
            break
    report.verdicts["kernel_order"] = CriterionVerdict("kernel_order", True,
                                                       witness=ev.kernel.order)
    report.conclusions["centralizer_matches_kernel"] = ok
    return report


def center_structure_check(ev: InstanceEvaluation | SkewContext) -> CheckReport:
    """Coefficientwise laws of central elements, plus augmentation behaviour.

    Every central coefficient must twist-commute with the whole coefficient
    ring and satisfy the conjugation-transport law; for abelian groups the
    transport law collapses to fixed-ring membership, which is then asserted
    separately (non-abelian instances have genuine counterexamples, so there
    it is reported but not asserted). The augmentation map must be
    multiplicative exactly when the kernel is all of G.
    """
    ev = _as_evaluation(ev)
    ctx = ev.ctx
    ring, group, action = ctx.ring, ctx.group, ctx.action
    report = CheckReport("center_structure")
    gens = ring.additive_generators()
    fixed = fixed_payloads(action)
    laws_ok = True
    fixed_ok = True
    for z in ev.center:
        for g, a in z.coeffs.items():
            if a not in fixed:
                fixed_ok = False
            if any(ring.mul(b, a) != ring.mul(a, action.apply(g, b)) for b in gens):
                laws_ok = False
            for h in range(group.order):
                tgt = group.mul_table[group.mul_table[h][g]][group.inv_table[h]]
                if z.coeffs.get(tgt, ring.zero) != action.apply(h, a):
                    laws_ok = False
    report.conclusions["center_coefficient_laws"] = laws_ok
    report.verdicts["coefficients_in_fixed_ring"] = CriterionVerdict(
        "coefficients_in_fixed_ring", fixed_ok,
        note="" if group.is_abelian else "asserted for abelian groups only")
    if group.is_abelian:
        report.conclusions["abelian_coefficients_fixed"] = fixed_ok
    else:
        report.conclusions["abelian_coefficients_fixed"] = None
        if not fixed_ok:
            report.notes.append(
                "central coefficients escape the fixed ring here: fixed-ring "
                "membership is an abelian-group consequence of the "
                "conjugation-transport law")
    trivial_kernel_is_G = ev.kernel.order == group.order
    if trivial_kernel_is_G:
        violation = _augmentation_violation(ctx, samples=64)
        report.conclusions["augmentation_multiplicativity_exact"] = violation is None
        report.verdicts["augmentation_multiplicative"] = CriterionVerdict(
            "augmentation_multiplicative", violation is None, method="oracle")
    else:
        violation = _augmentation_violation(ctx, samples=256)
        report.conclusions["augmentation_multiplicativity_exact"] = violation is not None
        report.verdicts["augmentation_multiplicative"] = CriterionVerdict(
            "augmentation_multiplicative", False, method="oracle",
            witness=None if violation is None else {
            "pair": [violation[0].serialize(), violation[1].serialize()]})
    return report


def _augmentation_violation(ctx: SkewContext, samples: int) -> tuple | None:
    """A pair (r, s) with eps(rs) != eps(r)eps(s), searched constructively."""
    ring = ctx.ring
    for g in range(1, ctx.group.order):
        for b in ring.additive_generators():
            r = ctx.unit_monomial(g)
            s = ctx.monomial(b, 0)
            if augmentation(r * s) != augmentation(r) * augmentation(s):
                return (r, s)
    rng = random.Random(0x5EED)
    size = min(ctx.size, ctx.caps.enumeration)
    for _ in range(samples):
        r = ctx.element_of_rank(rng.randrange(size))
        s = ctx.element_of_rank(rng.randrange(size))
        if augmentation(r * s) != augmentation(r) * augmentation(s):
            return (r, s)
    return None


def _as_evaluation(ev) -> InstanceEvaluation:
    if isinstance(ev, InstanceEvaluation):
        return ev
    return InstanceEvaluation(ev)


def catalogue_notes(kind: str) -> list[str]:
    """Disclosure notes attached to every report."""
    notes = [
        "coefficients live in finite rings; real or complex scalars are "
        "replaced by finite fields so every brute-force oracle terminates",
    ]
    if kind == "dynamics":
        notes.append(
            "finite discrete point sets stand in for compact Hausdorff spaces; "
            "ideals of the function ring are exactly vanishing ideals of point "
            "subsets, so the dynamical equivalences transfer verbatim")
        notes.append(
            "non-simple minimal faithful instances over non-abelian groups are "
            "finite analogues exhibiting the same implication failure as the "
            "classical infinite examples")
    return notes


# randomized instance generation ------------------------------------------------

@dataclass
class AlgebraInstance:
    name: str
    ctx: SkewContext

    @cached_property
    def evaluation(self) -> InstanceEvaluation:
        return InstanceEvaluation(self.ctx)


_GROUP_CATALOGUE = (
    ("Z2", lambda: GroupTable.cyclic_product([2])),
    ("Z3", lambda: GroupTable.cyclic_product([3])),
    ("Z4", lambda: GroupTable.cyclic_product([4])),
    ("Z2xZ2", lambda: GroupTable.cyclic_product([2, 2])),
    ("Z6", lambda: GroupTable.cyclic_product([6])),
    ("S3", lambda: GroupTable.symmetric(3)),
)


class InstanceSampler:
    """Seeded, reproducible random instances over a fixed catalogue.

    Draws a group, a coefficient ring and a compatible action constructor,
    rejecting instances whose skew ring exceeds ``max_size`` so the oracle
    stays fast. All draws validate before being returned.
    """

    def __init__(self, seed: int, max_size: int = 4096) -> None:
        self.rng = random.Random(seed)
        self.max_size = max_size
        self._groups = [(tag, build()) for tag, build in _GROUP_CATALOGUE]
        self._counter = 0

    def draw(self, predicate=None, attempts: int = 800) -> AlgebraInstance:
        for _ in range(attempts):
            inst = self._draw_once()
            if inst is None:
                continue
            if predicate is None or predicate(inst):
                return inst
        raise RuntimeError("instance sampler exhausted its attempt budget")

    def draw_many(self, count: int, predicate=None) -> list[AlgebraInstance]:
        return [self.draw(predicate) for _ in range(count)]

    def _draw_once(self) -> AlgebraInstance | None:
        rng = self.rng
        self._counter += 1
        tag, group = rng.choice(self._groups)
        family = rng.choice(["modular", "matrix", "function", "function"])
        if family == "modular":
            ring: RingSpec = ModularRing(rng.randint(2, 6))
        elif family == "matrix":
            k, p = rng.choice([(1, 2), (1, 3), (2, 2), (2, 3)])
            ring = MatrixRing(k, p)
        else:
            npts = rng.randint(1, 4)
            q = rng.choice([2, 2, 3, 4])
            ring = FunctionRing(npts, q)
        if ring.size**group.order > self.max_size:
            return None
        action = self._draw_action(group, ring)
        if action is None:
            return None
        if action.validate() is not None:
            return None
        ctx = SkewContext(ring, group, action)
        name = f"{tag}_{_ring_tag(ring)}_{_action_tag(action)}_{self._counter}"
        return AlgebraInstance(name, ctx)

    def _draw_action(self, group: GroupTable, ring: RingSpec):
        rng = self.rng
        choices = ["trivial"]
        if isinstance(ring, FunctionRing):
            choices += ["permutation", "permutation"]
        if isinstance(ring, MatrixRing) and not ring.is_commutative:
            choices += ["conjugation"]
        kind = rng.choice(choices)
        if kind == "trivial":
            return trivial_action(group, ring)
        if kind == "permutation":
            return self._permutation_action(group, ring)
        return self._conjugation_action(group, ring)

    def _permutation_action(self, group: GroupTable, ring: FunctionRing):
        rng = self.rng
        npts = len(ring.points)
        if hasattr(group, "permutations"):
            degree = len(group.permutations[0])
            if degree > npts:
                return None
            perms = []
            for g in group.elements():
                base = group.permutations[group.inv_table[g]]
                perms.append(tuple(base[x] if x < degree else x for x in range(npts)))
        else:
            factors = getattr(group, "factors", None)
            if factors is None:
                return None
            # each cyclic factor rotates the points; its step must have
            # rotation order dividing the factor order
            def rot_order(k: int) -> int:
                return npts // _gcd(npts, k) if k else 1

            steps = []
            for n in factors:
                options = [k for k in range(npts) if n % rot_order(k) == 0]
                steps.append(rng.choice(options))
            perms = []
            for tup in group.tuples:
                shift = sum(j * k for j, k in zip(tup, steps)) % npts
                perms.append(tuple((x - shift) % npts for x in range(npts)))
        autos = [RingAutomorphism.coordinate_permutation(ring, p) for p in perms]
        return ActionMap(group, ring, autos)

    def _conjugation_action(self, group: GroupTable, ring: MatrixRing):
        rng = self.rng
        factors = getattr(group, "factors", None)
        if factors is None:
            return None
        units = list(ring.units)
        for _ in range(12):
            picks = [rng.choice(units) for _ in factors]
            table = []
            ok = True
            for tup in group.tuples:
                v = ring.one
                for j, u in zip(tup, picks):
                    for _ in range(j):
                        v = ring.mul(v, u)
                table.append(v)
            autos = [RingAutomorphism.conjugation(ring, v) for v in table]
            action = ActionMap(group, ring, autos)
            if action.validate() is None:
                return action
        return None


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _ring_tag(ring: RingSpec) -> str:
    kind = ring.descriptor[0]
    if kind == "modular":
        return f"Zmod{ring.n}"
    if kind == "matrix":
        return f"M{ring.k}F{ring.p}"
    return f"F{ring.q}x{len(ring.points)}"


def _action_tag(action) -> str:
    kinds = {a.kind for a in action.autos}
    if kinds == {"identity"}:
        return "trivial"
    kinds.discard("identity")
    return "-".join(sorted(kinds))
