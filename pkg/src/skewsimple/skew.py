"""The skew product ring R = A x| G: elements, multiplication, centre and
centralizer structure, ideal closures, the brute-force simplicity oracle, and
the constructive support-reduction / central-witness procedures.

Elements are finite-support maps from group indices to nonzero coefficient
payloads. |R| = |A|^|G| is finite, and every element has a canonical rank
(mixed radix over coefficient ranks, identity slot most significant), which
fixes sweep order, witness choice and report determinism.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .actions import ActionMap, is_G_simple
from .closure import PrimeClosureEngine, SubmoduleBasis, abelian_span, gauss_solve
from .config import Caps
from .errors import CapacityError, DomainError, PreconditionError
from .groups import GroupTable
from .rings import RingElement, RingSpec, _is_prime


class SkewContext:
    """Bundles (ring, group, validated action) plus cached sweep machinery."""

    def __init__(self, ring: RingSpec, group: GroupTable, action: ActionMap,
                 caps: Caps | None = None) -> None:
        if action.ring != ring or action.group is not group:
            raise DomainError("action does not match the given ring and group")
        action.ensure_valid()
        self.ring = ring
        self.group = group
        self.action = action
        self.caps = caps or ring.caps
        self.size = ring.size**group.order
        self.dim = group.order * ring.dim
        self.char = ring.char
        # None: witness search is an automatic fallback above the cap;
        # False: refuse above the cap (instance files must opt in)
        self.witness_search: bool | None = None

    # element constructors --------------------------------------------------
    def element(self, coeffs: dict) -> "SkewElement":
        return SkewElement(self, {g: a for g, a in coeffs.items() if a != self.ring.zero})

    def monomial(self, payload, g: int) -> "SkewElement":
        self.group._check_index(g)
        if payload == self.ring.zero:
            return self.zero
        return SkewElement(self, {g: payload})

    def unit_monomial(self, g: int) -> "SkewElement":
        return self.monomial(self.ring.one, g)

    @cached_property
    def zero(self) -> "SkewElement":
        return SkewElement(self, {})

    @cached_property
    def one(self) -> "SkewElement":
        return SkewElement(self, {0: self.ring.one})

    # vector coordinates ------------------------------------------------------
    def vec_of(self, r: "SkewElement") -> tuple[int, ...]:
        d = self.ring.dim
        out = [0] * self.dim
        for g, a in r.coeffs.items():
            out[g * d:(g + 1) * d] = self.ring.to_vec(a)
        return tuple(out)

    def element_of_vec(self, vec: Sequence[int]) -> "SkewElement":
        d = self.ring.dim
        coeffs = {}
        for g in range(self.group.order):
            a = self.ring.from_vec(tuple(int(x) for x in vec[g * d:(g + 1) * d]))
            if a != self.ring.zero:
                coeffs[g] = a
        return SkewElement(self, coeffs)

    def rank_of(self, r: "SkewElement") -> int:
        size_a = self.ring.size
        value = 0
        for g in range(self.group.order):
            a = r.coeffs.get(g, self.ring.zero)
            value = value * size_a + self.ring.rank(a)
        return value

    def element_of_rank(self, i: int) -> "SkewElement":
        size_a = self.ring.size
        coeffs = {}
        for g in range(self.group.order - 1, -1, -1):
            digit = i % size_a
            i //= size_a
            if digit:
                coeffs[g] = self.ring.unrank(digit)
        return SkewElement(self, coeffs)

    def elements(self) -> Iterator["SkewElement"]:
        """Every element of R in canonical rank order; cap-checked."""
        self.check_within_cap("skew ring enumeration")
        for i in range(self.size):
            yield self.element_of_rank(i)

    def check_within_cap(self, what: str) -> None:
        if self.size > self.caps.enumeration:
            raise CapacityError("enumeration", self.caps.enumeration, self.size, what)

    # cached machinery ---------------------------------------------------------
    @cached_property
    def module_generators(self) -> list[tuple]:
        """(payload, group index) monomials spanning R additively."""
        return [(b, h) for h in range(self.group.order)
                for b in self.ring.additive_generators()]

    @cached_property
    def _basis_payloads(self) -> list:
        return self.ring.additive_generators()

    @cached_property
    def ideal_operator_matrices(self) -> list[np.ndarray]:
        """Left/right multiplication by each module generator, over Z/char."""
        ring, group = self.ring, self.group
        d = ring.dim
        mats = []
        for b, h in self.module_generators:
            left = np.zeros((self.dim, self.dim), dtype=np.int64)
            right = np.zeros((self.dim, self.dim), dtype=np.int64)
            for g in range(group.order):
                hg = group.mul_table[h][g]
                gh = group.mul_table[g][h]
                for t, beta in enumerate(self._basis_payloads):
                    col = g * d + t
                    left[hg * d:(hg + 1) * d, col] = ring.to_vec(
                        ring.mul(b, self.action.apply(h, beta)))
                    right[gh * d:(gh + 1) * d, col] = ring.to_vec(
                        ring.mul(beta, self.action.apply(g, b)))
            mats.append(left)
            mats.append(right)
        return mats

    @cached_property
    def prime_engine(self) -> PrimeClosureEngine | None:
        if not _is_prime(self.char):
            return None
        return PrimeClosureEngine(self.char, self.dim, self.ideal_operator_matrices)

    @cached_property
    def unit_monomial_matrices(self) -> tuple[list[np.ndarray], list[np.ndarray]]:
        """Matrices of r -> u_g r and r -> r u_h (used to mark unit orbits)."""
        ring, group = self.ring, self.group
        d = ring.dim
        lefts, rights = [], []
        for k in range(group.order):
            left = np.zeros((self.dim, self.dim), dtype=np.int64)
            right = np.zeros((self.dim, self.dim), dtype=np.int64)
            for g in range(group.order):
                kg = group.mul_table[k][g]
                gk = group.mul_table[g][k]
                for t, beta in enumerate(self._basis_payloads):
                    col = g * d + t
                    left[kg * d:(kg + 1) * d, col] = ring.to_vec(self.action.apply(k, beta))
                    right[gk * d:(gk + 1) * d, col] = ring.to_vec(beta)
            lefts.append(left % self.char)
            rights.append(right % self.char)
        return lefts, rights

    @cached_property
    def _payload_rank_by_vec(self) -> dict:
        return {self.ring.to_vec(self.ring.unrank(i)): i for i in range(self.ring.size)}

    def rank_of_vec(self, vec: Sequence[int]) -> int:
        d = self.ring.dim
        lookup = self._payload_rank_by_vec
        size_a = self.ring.size
        value = 0
        for g in range(self.group.order):
            value = value * size_a + lookup[tuple(int(x) for x in vec[g * d:(g + 1) * d])]
        return value

    # set-engine helpers (composite characteristic) ----------------------------
    def _vec_add(self, u: tuple, v: tuple) -> tuple:
        n = self.char
        return tuple((x + y) % n for x, y in zip(u, v))

    def _set_operators(self):
        ops = []
        for b, h in self.module_generators:
            ops.append(lambda vec, b=b, h=h: self.vec_of(
                self.monomial(b, h) * self.element_of_vec(vec)))
            ops.append(lambda vec, b=b, h=h: self.vec_of(
                self.element_of_vec(vec) * self.monomial(b, h)))
        return ops

    def __repr__(self) -> str:
        return f"SkewContext({self.ring!r} x| {self.group!r}, size={self.size})"


class SkewElement:
    """Finite-support coefficient map; zero coefficients are never stored."""

    __slots__ = ("ctx", "coeffs", "_key")

    def __init__(self, ctx: SkewContext, coeffs: dict) -> None:
        self.ctx = ctx
        self.coeffs = coeffs
        self._key = None

    def _check_ctx(self, other: "SkewElement") -> None:
        if not isinstance(other, SkewElement):
            raise DomainError(f"cannot combine SkewElement with {type(other).__name__}")
        if other.ctx is not self.ctx:
            raise DomainError("operands live in different skew ring contexts")

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(sorted(self.coeffs.items()))
        return self._key

    def __add__(self, other: "SkewElement") -> "SkewElement":
        self._check_ctx(other)
        ring = self.ctx.ring
        out = dict(self.coeffs)
        for g, b in other.coeffs.items():
            s = ring.add(out.get(g, ring.zero), b)
            if s == ring.zero:
                out.pop(g, None)
            else:
                out[g] = s
        return SkewElement(self.ctx, out)

    def __neg__(self) -> "SkewElement":
        ring = self.ctx.ring
        return SkewElement(self.ctx, {g: ring.neg(a) for g, a in self.coeffs.items()})

    def __sub__(self, other: "SkewElement") -> "SkewElement":
        return self + (-other)

    def __mul__(self, other: "SkewElement") -> "SkewElement":
        """Bilinear extension of (a u_g)(b u_h) = a sigma_g(b) u_{gh}."""
        self._check_ctx(other)
        ctx = self.ctx
        ring, group, action = ctx.ring, ctx.group, ctx.action
        out: dict = {}
        for g, a in self.coeffs.items():
            row = group.mul_table[g]
            for h, b in other.coeffs.items():
                gh = row[h]
                c = ring.mul(a, action.apply(g, b))
                s = ring.add(out.get(gh, ring.zero), c)
                if s == ring.zero:
                    out.pop(gh, None)
                else:
                    out[gh] = s
        return SkewElement(ctx, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SkewElement) and other.ctx is self.ctx
                and other.key() == self.key())

    def __hash__(self) -> int:
        return hash(self.key())

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.coeffs)

    def serialize(self) -> list:
        group, ring = self.ctx.group, self.ctx.ring
        return [[group.name(g), _payload_json(ring, a)] for g, a in sorted(self.coeffs.items())]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        ring, group = self.ctx.ring, self.ctx.group
        return " + ".join(f"{ring.label(a)}*u[{group.name(g)}]"
                          for g, a in sorted(self.coeffs.items()))


def _payload_json(ring: RingSpec, payload):
    kind = ring.descriptor[0]
    if kind == "modular":
        return payload
    if kind == "matrix":
        k = ring.k
        return [[payload[i * k + j] for j in range(k)] for i in range(k)]
    return list(payload)


# elementary maps -------------------------------------------------------------

def augmentation(r: SkewElement) -> RingElement:
    """Sum of all coefficients (a ring morphism exactly when the kernel is G)."""
    ring = r.ctx.ring
    total = ring.zero
    for a in r.coeffs.values():
        total = ring.add(total, a)
    return ring.element(total)


def coeff_at_e(r: SkewElement) -> RingElement:
    ring = r.ctx.ring
    return ring.element(r.coeffs.get(0, ring.zero))


def support(r: SkewElement) -> frozenset[int]:
    return r.support


# centralizer and centre ------------------------------------------------------

def centralizer_components(ctx: SkewContext) -> list[list]:
    """Per-slot payload sets C_g = {a : a sigma_g(b) = b a for all b}.

    The centralizer of the coefficient ring inside R is exactly the set of
    elements whose g-coefficient lies in C_g for every g.
    """
    ring = ctx.ring
    ring.check_enumerable("centralizer components")
    gens = ring.additive_generators()
    comps = []
    for g in range(ctx.group.order):
        auto = ctx.action.autos[g]
        comps.append([a for a in ring.payloads()
                      if all(ring.mul(a, auto.apply(b)) == ring.mul(b, a) for b in gens)])
    return comps


def centralizer_size(ctx: SkewContext) -> int:
    size = 1
    for comp in centralizer_components(ctx):
        size *= len(comp)
    return size


def centralizer_of_A(ctx: SkewContext) -> list[SkewElement]:
    """All elements of R commuting with the coefficient ring, materialized."""
    comps = centralizer_components(ctx)
    total = 1
    for comp in comps:
        total *= len(comp)
    if total > ctx.caps.enumeration:
        raise CapacityError("enumeration", ctx.caps.enumeration, total,
                            "centralizer materialization")
    out = [ctx.zero]
    for g, comp in enumerate(comps):
        new = []
        for r in out:
            for a in comp:
                coeffs = dict(r.coeffs)
                if a != ctx.ring.zero:
                    coeffs[g] = a
                new.append(SkewElement(ctx, coeffs))
        out = new
    out.sort(key=ctx.rank_of)
    return out


def is_max_commutative_A(ctx: SkewContext) -> bool:
    """Whether A u_e is its own centralizer (A must be commutative)."""
    if not ctx.ring.is_commutative:
        raise DomainError("maximal commutativity test requires a commutative coefficient ring")
    comps = centralizer_components(ctx)
    return all(len(comp) == 1 for comp in comps[1:])


def commuting_witness_outside_A(ctx: SkewContext) -> SkewElement | None:
    """A nonzero a u_g (g != e) commuting with A, when one exists."""
    comps = centralizer_components(ctx)
    for g in range(1, ctx.group.order):
        for a in comps[g]:
            if a != ctx.ring.zero:
                return ctx.monomial(a, g)
    return None


def skew_center(ctx: SkewContext) -> list[SkewElement]:
    """The centre of R, solved coefficientwise.

    r is central iff it commutes with every coefficient (forcing each a_g to
    satisfy b a_g = a_g sigma_g(b)) and with every u_h (forcing the twisted
    conjugacy law a_{hgh^-1} = sigma_h(a_g)); R is generated by those two
    families, so the conditions are also sufficient. Solutions are assembled
    per conjugacy class of the group.
    """
    ring, group, action = ctx.ring, ctx.group, ctx.action
    comps = centralizer_components(ctx)
    comp_sets = [set(c) for c in comps]
    class_choices: list[list[dict]] = []
    for cls in group.conjugacy_classes:
        rep = min(cls)
        choices = []
        for a in comps[rep]:
            assignment: dict[int, object] = {}
            ok = True
            for h in range(group.order):
                target = group.mul_table[group.mul_table[h][rep]][group.inv_table[h]]
                image = action.apply(h, a)
                if assignment.get(target, image) != image:
                    ok = False
                    break
                assignment[target] = image
            if ok and all(val in comp_sets[g] for g, val in assignment.items()):
                choices.append(assignment)
        class_choices.append(choices)
    total = 1
    for choices in class_choices:
        total *= len(choices)
    if total > ctx.caps.enumeration:
        raise CapacityError("enumeration", ctx.caps.enumeration, total,
                            "centre materialization")
    out: list[dict] = [{}]
    for choices in class_choices:
        out = [{**base, **extra} for base in out for extra in choices]
    elements = [ctx.element(coeffs) for coeffs in out]
    elements.sort(key=ctx.rank_of)
    return elements


# ideals and the simplicity oracle ---------------------------------------------

@dataclass(frozen=True)
class SkewIdeal:
    """A two-sided ideal of R, held as an F_p basis or an explicit set."""

    ctx: SkewContext
    generators: tuple
    basis: SubmoduleBasis | None = None
    vec_set: frozenset | None = None

    @property
    def size(self) -> int:
        if self.basis is not None:
            return self.basis.size
        return len(self.vec_set)

    @property
    def is_full(self) -> bool:
        return self.size == self.ctx.size

    @property
    def is_zero(self) -> bool:
        return self.size == 1

    def contains(self, r: SkewElement) -> bool:
        vec = self.ctx.vec_of(r)
        if self.basis is not None:
            return self.basis.contains(vec)
        return vec in self.vec_set

    def iter_vectors(self) -> Iterator[tuple]:
        if self.basis is not None:
            yield from self.basis.iter_vectors()
        else:
            yield from sorted(self.vec_set)

    def elements(self) -> list[SkewElement]:
        if self.size > self.ctx.caps.enumeration:
            raise CapacityError("enumeration", self.ctx.caps.enumeration, self.size,
                                "ideal materialization")
        out = [self.ctx.element_of_vec(v) for v in self.iter_vectors()]
        out.sort(key=self.ctx.rank_of)
        return out

    def validate_closed(self) -> bool:
        """Recheck stability under +/- and monomial multiplication (tests)."""
        members = [self.ctx.element_of_vec(v) for v in self.iter_vectors()]
        sample = members if len(members) <= 64 else members[:64]
        for r in sample:
            if not self.contains(-r):
                return False
            for s in sample:
                if not self.contains(r + s):
                    return False
            for b, h in self.ctx.module_generators:
                mono = self.ctx.monomial(b, h)
                if not self.contains(mono * r) or not self.contains(r * mono):
                    return False
        return True


def skew_ideal_closure(ctx: SkewContext, generators: Iterable[SkewElement]) -> SkewIdeal:
    """Two-sided ideal generated by the given elements.

    Prime characteristic uses the echelon engine (no materialization needed),
    composite characteristic falls back to the generic span within the cap.
    """
    gens = tuple(generators)
    for r in gens:
        if r.ctx is not ctx:
            raise DomainError("generator belongs to a different context")
    vecs = [ctx.vec_of(r) for r in gens]
    if ctx.prime_engine is not None:
        basis = ctx.prime_engine.closure(vecs)
        return SkewIdeal(ctx, gens, basis=basis)
    ctx.check_within_cap("ideal closure over composite characteristic")
    span = abelian_span(vecs, ctx._set_operators(), ctx._vec_add, (0,) * ctx.dim)
    return SkewIdeal(ctx, gens, vec_set=frozenset(span))


@dataclass(frozen=True)
class SkewSimplicity:
    """Simplicity verdict. value None means undetermined (witness search only)."""

    value: bool | None
    method: str
    witness: SkewElement | None = None
    witness_ideal: SkewIdeal | None = None
    note: str = ""


def _scalar_units(char: int) -> list[int]:
    from math import gcd
    return [c for c in range(1, char) if gcd(c, char) == 1]


def is_simple(ctx: SkewContext, *, witness_search: bool | None = None) -> SkewSimplicity:
    """Brute-force oracle: R is simple iff every nonzero element generates R.

    Within the enumeration cap this sweeps all nonzero elements in canonical
    rank order, skipping unit-monomial multiples of elements already seen to
    generate everything. Above the cap, ``witness_search`` must be enabled
    (or left as None for automatic fallback): only generators of support
    size <= 2 are searched and simplicity is never claimed.
    """
    if ctx.size <= ctx.caps.enumeration:
        if ctx.prime_engine is not None:
            return _sweep_prime(ctx)
        return _sweep_generic(ctx)
    allowed = witness_search if witness_search is not None else ctx.witness_search
    if allowed is False:
        raise CapacityError("enumeration", ctx.caps.enumeration, ctx.size,
                            "simplicity sweep (witness-search mode not enabled)")
    return _witness_search(ctx)


def _sweep_prime(ctx: SkewContext) -> SkewSimplicity:
    engine = ctx.prime_engine
    size = ctx.size
    skip = bytearray(size)
    skip[0] = 1
    p = ctx.char
    lefts, rights = ctx.unit_monomial_matrices
    scalars = _scalar_units(p)
    transforms = [(c * (lg @ rh)) % p for lg in lefts for rh in rights for c in scalars]
    for i in range(1, size):
        if skip[i]:
            continue
        r = ctx.element_of_rank(i)
        vec = np.asarray(ctx.vec_of(r), dtype=np.int64)
        basis = engine.closure([vec])
        if not basis.is_full:
            ideal = SkewIdeal(ctx, (r,), basis=basis)
            return SkewSimplicity(False, "full_sweep", r, ideal)
        for t in transforms:
            skip[ctx.rank_of_vec((t @ vec) % p)] = 1
    return SkewSimplicity(True, "full_sweep")


def _sweep_generic(ctx: SkewContext) -> SkewSimplicity:
    ctx.check_within_cap("simplicity sweep")
    ops = ctx._set_operators()
    zero = (0,) * ctx.dim
    size = ctx.size
    skip: set[int] = {0}
    group_order = ctx.group.order
    scalars = _scalar_units(ctx.char)
    for i in range(1, size):
        if i in skip:
            continue
        r = ctx.element_of_rank(i)
        span = abelian_span([ctx.vec_of(r)], ops, ctx._vec_add, zero)
        if len(span) != size:
            ideal = SkewIdeal(ctx, (r,), vec_set=frozenset(span))
            return SkewSimplicity(False, "full_sweep", r, ideal)
        for g in range(group_order):
            for h in range(group_order):
                moved = ctx.unit_monomial(g) * r * ctx.unit_monomial(h)
                for c in scalars:
                    scaled = ctx.element({k: _int_scale(ctx.ring, c, a)
                                          for k, a in moved.coeffs.items()})
                    skip.add(ctx.rank_of(scaled))
    return SkewSimplicity(True, "full_sweep")


def _int_scale(ring: RingSpec, c: int, a):
    out = ring.zero
    for _ in range(c):
        out = ring.add(out, a)
    return out


def _witness_search(ctx: SkewContext) -> SkewSimplicity:
    """Search support-<=2 generators for a proper ideal; never claims simplicity.

    Any support-<=2 element is a unit-monomial translate of one supported on
    {e, g}, so only those are tried: structured candidates first (one for each
    kernel member, one for each nonzero commuting component), then the
    exhaustive {e,g} pairs under the candidate budget.
    """
    if ctx.prime_engine is None:
        raise CapacityError("enumeration", ctx.caps.enumeration, ctx.size,
                            "witness search needs prime characteristic above the cap")
    engine = ctx.prime_engine
    ring, group = ctx.ring, ctx.group
    budget = ctx.caps.witness_candidates
    tried = 0

    def check(r: SkewElement) -> SkewIdeal | None:
        vec = ctx.vec_of(r)
        basis = engine.closure([vec])
        if not basis.is_full:
            return SkewIdeal(ctx, (r,), basis=basis)
        return None

    candidates: list[SkewElement] = []
    try:
        # invariant-ideal witnesses: a proper action-stable ideal J of A gives
        # the proper ideal of R generated by any nonzero member of J
        g_simple = is_G_simple(ctx.action)
        if not g_simple.value:
            candidates.append(ctx.monomial(g_simple.witness.payload, 0))
        # augmentation-style witnesses for kernel members
        for g in range(1, group.order):
            if ctx.action.autos[g].is_identity():
                candidates.append(ctx.one - ctx.unit_monomial(g))
        # commuting-coefficient candidates
        comps = centralizer_components(ctx)
        for g in range(1, group.order):
            for a in comps[g]:
                if a != ring.zero:
                    candidates.append(ctx.monomial(a, 0) - ctx.monomial(a, g))
    except CapacityError:
        pass  # coefficient ring too large to enumerate; fall through to pairs
    for r in candidates:
        if tried >= budget:
            break
        if r.is_zero():
            continue
        tried += 1
        ideal = check(r)
        if ideal is not None:
            return SkewSimplicity(False, "witness_search", r, ideal)
    # exhaustive support {e, g} pairs, canonical order, budget-limited
    ring.check_enumerable("witness search coefficient sweep")
    for i in range(1, ring.size):
        a = ring.unrank(i)
        if tried >= budget:
            break
        tried += 1
        ideal = check(ctx.monomial(a, 0))
        if ideal is not None:
            return SkewSimplicity(False, "witness_search", ctx.monomial(a, 0), ideal)
        for g in range(1, group.order):
            for j in range(1, ring.size):
                if tried >= budget:
                    break
                tried += 1
                r = ctx.monomial(a, 0) + ctx.monomial(ring.unrank(j), g)
                ideal = check(r)
                if ideal is not None:
                    return SkewSimplicity(False, "witness_search", r, ideal)
    return SkewSimplicity(None, "witness_search", note=(
        f"no proper ideal found among {tried} support-<=2 generators; "
        "simplicity undetermined"))


# constructive procedures -------------------------------------------------------

def _require_reduction_hypotheses(ctx: SkewContext) -> None:
    if not ctx.group.is_abelian:
        raise PreconditionError("G abelian", f"{ctx.group!r} is not abelian")
    verdict = is_G_simple(ctx.action)
    if not verdict.value:
        raise PreconditionError(
            "A G-simple", f"invariant ideal generated by "
            f"{ctx.ring.label(verdict.witness.payload)} is proper")


def support_reduce(ctx: SkewContext, r: SkewElement) -> SkewElement:
    """Inside the ideal of r, find r' with identity coefficient 1 and support
    no larger than r's.

    Mirrors the constructive argument: right-translate r so the identity
    coefficient is nonzero, then extract from the ideal an element supported
    inside Supp(r) whose identity coefficient is 1 (one exists because the
    identity-coefficient slice of such elements is an action-stable nonzero
    ideal of A, hence everything).
    """
    _require_reduction_hypotheses(ctx)
    if r.is_zero():
        raise DomainError("support reduction needs a nonzero element")
    ctx.check_within_cap("support reduction")
    h = min(r.support)
    r1 = r * ctx.unit_monomial(ctx.group.inv_table[h])
    ideal = skew_ideal_closure(ctx, [r])
    target_support = r1.support
    reduced = _find_support_slice(ctx, ideal, target_support)
    assert reduced is not None, "reduction element must exist under the hypotheses"
    assert ideal.contains(reduced)
    assert coeff_at_e(reduced).payload == ctx.ring.one
    assert len(reduced.support) <= len(r.support)
    return reduced


def _find_support_slice(ctx: SkewContext, ideal: SkewIdeal,
                        allowed_support: frozenset[int]) -> SkewElement | None:
    """First element of the ideal with support inside the allowed set and
    identity coefficient equal to 1."""
    d = ctx.ring.dim
    if ideal.basis is not None:
        # solve linearly: coefficients c with c.B zero outside the allowed
        # blocks and equal to vec(1) on the identity block
        rows = ideal.basis.rows
        if not rows:
            return None
        B = np.stack(rows)
        cols = []
        target = []
        one_vec = ctx.ring.to_vec(ctx.ring.one)
        for g in range(ctx.group.order):
            block = range(g * d, (g + 1) * d)
            if g == 0:
                cols.extend(block)
                target.extend(one_vec)
            elif g not in allowed_support:
                cols.extend(block)
                target.extend([0] * d)
        A = B[:, cols].T % ctx.char
        sol = gauss_solve(ctx.char, A, np.array(target, dtype=np.int64))
        if sol is None:
            return None
        vec = (sol @ B) % ctx.char
        return ctx.element_of_vec(tuple(int(x) for x in vec))
    for vec in ideal.iter_vectors():
        cand = ctx.element_of_vec(vec)
        if cand.support <= allowed_support and cand.coeffs.get(0) == ctx.ring.one:
            return cand
    return None


def central_witness(ctx: SkewContext, ideal: SkewIdeal) -> SkewElement:
    """A central element of the ideal with identity coefficient 1.

    Takes the canonically smallest minimal-support member of the ideal,
    support-reduces it, and verifies membership, centrality and the identity
    coefficient before returning.
    """
    _require_reduction_hypotheses(ctx)
    if ideal.ctx is not ctx:
        raise DomainError("ideal belongs to a different context")
    if ideal.is_zero:
        raise DomainError("central witness needs a nonzero ideal")
    if ideal.size > ctx.caps.enumeration:
        raise CapacityError("enumeration", ctx.caps.enumeration, ideal.size,
                            "central witness search")
    best = None
    best_key = None
    for vec in ideal.iter_vectors():
        r = ctx.element_of_vec(vec)
        if r.is_zero():
            continue
        key = (len(r.support), ctx.rank_of(r))
        if best_key is None or key < best_key:
            best, best_key = r, key
    reduced = support_reduce(ctx, best)
    assert ideal.contains(reduced)
    assert coeff_at_e(reduced).payload == ctx.ring.one
    assert is_central(reduced)
    return reduced


def is_central(r: SkewElement) -> bool:
    """Commutation against the coefficient generators and all unit monomials."""
    ctx = r.ctx
    for b in ctx.ring.additive_generators():
        mono = ctx.monomial(b, 0)
        if mono * r != r * mono:
            return False
    for g in range(1, ctx.group.order):
        u = ctx.unit_monomial(g)
        if u * r != r * u:
            return False
    return True
