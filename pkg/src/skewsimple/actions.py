"""Group actions on coefficient rings by automorphisms.

An ActionMap stores one RingAutomorphism per group element and exposes the
kernel, fixed ring, invariant-ideal (G-simplicity) oracle and the inner/outer
classification. Validation is lazy and cached; anything that relies on the
homomorphism law revalidates first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .closure import abelian_span
from .errors import ActionValidationError, DomainError
from .groups import GroupTable, Subgroup
from .rings import (FunctionRing, ModularRing, RingElement, RingSpec, TwoSidedIdeal,
                    _ideal_operators)

_TABLE_CACHE_LIMIT = 4096
_PAIR_SAMPLE = 10_000
_EXHAUSTIVE_PAIR_LIMIT = 256


class RingAutomorphism:
    """A ring automorphism given structurally or as a full image table.

    Structural kinds (identity, conjugation by a unit, coordinate permutation)
    are automorphisms by construction; table and scaling kinds get their
    morphism properties checked during action validation.
    """

    def __init__(self, ring: RingSpec, kind: str, params: tuple, apply_fn) -> None:
        self.ring = ring
        self.kind = kind
        self.params = params
        self._apply = apply_fn
        self._table: dict | None = None

    # constructors --------------------------------------------------------
    @classmethod
    def identity(cls, ring: RingSpec) -> "RingAutomorphism":
        return cls(ring, "identity", (), lambda a: a)

    @classmethod
    def conjugation(cls, ring: RingSpec, unit_payload) -> "RingAutomorphism":
        inv = ring.try_invert_payload(unit_payload)
        if inv is None:
            raise DomainError(
                f"conjugation element {ring.label(unit_payload)} is not a unit")

        def apply(a, v=unit_payload, w=inv, mul=ring.mul):
            return mul(mul(v, a), w)

        return cls(ring, "conjugation", (unit_payload,), apply)

    @classmethod
    def coordinate_permutation(cls, ring: FunctionRing, perm: Sequence[int]) -> "RingAutomorphism":
        if not isinstance(ring, FunctionRing):
            raise DomainError("coordinate permutations require a function ring")
        perm = tuple(int(x) for x in perm)
        if sorted(perm) != list(range(len(ring.points))):
            raise DomainError(f"{perm} is not a permutation of the point set")

        def apply(a, perm=perm):
            return tuple(a[p] for p in perm)

        return cls(ring, "permutation", (perm,), apply)

    @classmethod
    def unit_scaling(cls, ring: ModularRing, unit: int) -> "RingAutomorphism":
        if not isinstance(ring, ModularRing):
            raise DomainError("unit scaling is defined for residue rings only")
        if ring.try_invert_payload(unit % ring.n) is None:
            raise DomainError(f"{unit} is not a unit modulo {ring.n}")

        def apply(a, u=unit % ring.n, n=ring.n):
            return (u * a) % n

        return cls(ring, "scaling", (unit % ring.n,), apply)

    @classmethod
    def from_table(cls, ring: RingSpec, images: Sequence) -> "RingAutomorphism":
        ring.check_enumerable("automorphism table")
        if len(images) != ring.size:
            raise DomainError(
                f"automorphism table has {len(images)} entries, ring has {ring.size}")
        table = {ring.unrank(i): img for i, img in enumerate(images)}

        def apply(a, table=table):
            return table[a]

        auto = cls(ring, "table", (tuple(images),), apply)
        auto._table = table
        return auto

    # application ----------------------------------------------------------
    def apply(self, a):
        if self._table is not None:
            return self._table[a]
        return self._apply(a)

    def materialize(self) -> None:
        """Cache the full image table for small rings (speeds hot loops)."""
        if self._table is None and self.ring.size <= _TABLE_CACHE_LIMIT:
            self._table = {a: self._apply(a) for a in self.ring.payloads()}

    @property
    def structural(self) -> bool:
        return self.kind in ("identity", "conjugation", "permutation")

    def is_identity(self) -> bool:
        """Identity test; sound on additive maps via the generator check."""
        return all(self.apply(b) == b for b in self.ring.additive_generators())

    def matrix(self) -> np.ndarray:
        """The map as a dim x dim matrix over Z/char (automorphisms are additive)."""
        ring = self.ring
        cols = []
        for i in range(ring.dim):
            e = ring.from_vec(tuple(1 if j == i else 0 for j in range(ring.dim)))
            cols.append(ring.to_vec(self.apply(e)))
        return np.array(cols, dtype=np.int64).T % ring.char

    def __repr__(self) -> str:
        return f"RingAutomorphism({self.kind}{self.params!r} on {self.ring!r})"


@dataclass(frozen=True)
class ActionViolation:
    """Witness that an action table breaks a law."""

    law: str
    g: int | None = None
    h: int | None = None
    payload: object = None

    def describe(self, group: GroupTable | None = None, ring: RingSpec | None = None) -> str:
        parts = [self.law]
        if group is not None and self.g is not None:
            parts.append(f"g={group.name(self.g)}")
        if group is not None and self.h is not None:
            parts.append(f"h={group.name(self.h)}")
        if ring is not None and self.payload is not None:
            parts.append(f"a={ring.label(self.payload)}")
        return ", ".join(parts)


class ActionMap:
    """The homomorphism sending each group element to a ring automorphism."""

    def __init__(self, group: GroupTable, ring: RingSpec,
                 autos: Sequence[RingAutomorphism]) -> None:
        if len(autos) != group.order:
            raise DomainError(f"need {group.order} automorphisms, got {len(autos)}")
        for auto in autos:
            if auto.ring != ring:
                raise DomainError("automorphism ring does not match the action ring")
        self.group = group
        self.ring = ring
        self.autos = tuple(autos)
        self._violation: ActionViolation | None = None
        self._validated = False
        for auto in self.autos:
            auto.materialize()

    def apply(self, g: int, a):
        return self.autos[g].apply(a)

    @property
    def is_trivial(self) -> bool:
        return all(auto.is_identity() for auto in self.autos)

    # validation -----------------------------------------------------------
    def validate(self) -> ActionViolation | None:
        """Check the automorphism and homomorphism laws; None means valid."""
        if self._validated:
            return self._violation
        self._violation = self._find_violation()
        self._validated = True
        return self._violation

    def ensure_valid(self) -> None:
        violation = self.validate()
        if violation is not None:
            raise ActionValidationError(
                "invalid action: " + violation.describe(self.group, self.ring), violation)

    def _find_violation(self) -> ActionViolation | None:
        ring, group = self.ring, self.group
        gens = ring.additive_generators()
        for g, auto in enumerate(self.autos):
            bad = self._check_automorphism(g, auto)
            if bad is not None:
                return bad
        # sigma_e = identity
        if not self.autos[0].is_identity():
            witness = next(b for b in gens if self.autos[0].apply(b) != b)
            return ActionViolation("identity automorphism expected at e", 0, None, witness)
        # homomorphism law on additive generators (additivity covers the rest)
        for g in range(group.order):
            for h in range(group.order):
                gh = group.mul_table[g][h]
                for b in gens:
                    if self.autos[gh].apply(b) != self.autos[g].apply(self.autos[h].apply(b)):
                        return ActionViolation("homomorphism law fails", g, h, b)
        return None

    def _check_automorphism(self, g: int, auto: RingAutomorphism) -> ActionViolation | None:
        ring = self.ring
        if auto.structural:
            return None
        ring.check_enumerable("automorphism validation")
        images = set()
        for a in ring.payloads():
            images.add(auto.apply(a))
        if len(images) != ring.size:
            return ActionViolation("automorphism not bijective", g)
        if auto.apply(ring.one) != ring.one:
            return ActionViolation("automorphism does not fix 1", g, None, ring.one)
        pairs = self._pair_sample()
        for a, b in pairs:
            if auto.apply(ring.add(a, b)) != ring.add(auto.apply(a), auto.apply(b)):
                return ActionViolation("automorphism not additive", g, None, (a, b))
            if auto.apply(ring.mul(a, b)) != ring.mul(auto.apply(a), auto.apply(b)):
                return ActionViolation("automorphism not multiplicative", g, None, (a, b))
        return None

    def _pair_sample(self):
        ring = self.ring
        if ring.size <= _EXHAUSTIVE_PAIR_LIMIT:
            payloads = list(ring.payloads())
            return [(a, b) for a in payloads for b in payloads]
        rng = random.Random(0xACE)
        return [(ring.unrank(rng.randrange(ring.size)), ring.unrank(rng.randrange(ring.size)))
                for _ in range(_PAIR_SAMPLE)]

    @cached_property
    def descriptor(self) -> tuple:
        return tuple((a.kind, a.params) for a in self.autos)

    def __repr__(self) -> str:
        kinds = {a.kind for a in self.autos}
        return f"ActionMap({self.group!r} on {self.ring!r}, kinds={sorted(kinds)})"


# ring automorphism / action level queries ---------------------------------

def kernel(action: ActionMap) -> Subgroup:
    """Elements acting as the identity automorphism; a normal subgroup."""
    action.ensure_valid()
    members = frozenset(g for g in action.group.elements() if action.autos[g].is_identity())
    return Subgroup(action.group, members)


def fixed_ring(action: ActionMap) -> list[RingElement]:
    """Payloads fixed by every automorphism of the action, as elements."""
    action.ensure_valid()
    ring = action.ring
    ring.check_enumerable("fixed ring")
    nontrivial = [auto for auto in action.autos if not auto.is_identity()]
    out = []
    for a in ring.payloads():
        if all(auto.apply(a) == a for auto in nontrivial):
            out.append(ring.element(a))
    return out


def fixed_payloads(action: ActionMap) -> set:
    return {e.payload for e in fixed_ring(action)}


@dataclass(frozen=True)
class GSimplicity:
    """Invariant-ideal oracle verdict with a witness on failure."""

    value: bool
    witness: RingElement | None = None
    witness_ideal: TwoSidedIdeal | None = None


def invariant_ideal_closure(action: ActionMap, generators) -> TwoSidedIdeal:
    """Smallest ideal containing the generators and stable under the action."""
    action.ensure_valid()
    ring = action.ring
    ring.check_enumerable("invariant ideal closure")
    gens = tuple(g.payload if isinstance(g, RingElement) else g for g in generators)
    sigma_ops = [auto.apply for auto in action.autos[1:]]
    span = abelian_span(gens, _ideal_operators(ring, sigma_ops), ring.add, ring.zero)
    return TwoSidedIdeal(ring, frozenset(span), gens)


def is_G_simple(action: ActionMap) -> GSimplicity:
    """Whether the only action-stable ideals are zero and the whole ring.

    Sweeps every nonzero element and closes it under the ring operations and
    all automorphisms; the ring is G-simple iff each closure is everything.
    """
    action.ensure_valid()
    ring = action.ring
    ring.check_enumerable("G-simplicity sweep")
    sigma_ops = [auto.apply for auto in action.autos[1:]]
    ops = _ideal_operators(ring, sigma_ops)
    for i in range(1, ring.size):
        a = ring.unrank(i)
        span = abelian_span((a,), ops, ring.add, ring.zero)
        if len(span) != ring.size:
            ideal = TwoSidedIdeal(ring, frozenset(span), (a,))
            return GSimplicity(False, ring.element(a), ideal)
    return GSimplicity(True)


def is_inner(auto: RingAutomorphism) -> RingElement | None:
    """First unit (canonical order) implementing the map by conjugation, else None."""
    ring = auto.ring
    gens = ring.additive_generators()
    for v in ring.units:
        w = ring.try_invert_payload(v)
        if all(auto.apply(b) == ring.mul(ring.mul(v, b), w) for b in gens):
            return ring.element(v)
    return None


def is_outer_action(action: ActionMap) -> bool:
    """True when no non-identity group element acts by an inner automorphism."""
    action.ensure_valid()
    return all(is_inner(action.autos[g]) is None for g in range(1, action.group.order))


def trivial_action(group: GroupTable, ring: RingSpec) -> ActionMap:
    return ActionMap(group, ring, [RingAutomorphism.identity(ring)] * group.order)


def action_from_descriptor(group: GroupTable, ring: RingSpec, desc: dict) -> ActionMap:
    """Instance-file action constructors."""
    kind = desc.get("kind")
    if kind == "trivial":
        return trivial_action(group, ring)
    if kind == "conjugation":
        units = desc["units"]
        if len(units) != group.order:
            raise DomainError(f"conjugation needs {group.order} units, got {len(units)}")
        autos = [RingAutomorphism.conjugation(ring, _payload(ring, u)) for u in units]
        return ActionMap(group, ring, autos)
    if kind == "permutation":
        perms = desc["perms"]
        if len(perms) != group.order:
            raise DomainError(f"permutation action needs {group.order} rows, got {len(perms)}")
        autos = [RingAutomorphism.coordinate_permutation(ring, p) for p in perms]
        return ActionMap(group, ring, autos)
    if kind == "unit_power":
        if not isinstance(ring, ModularRing):
            raise DomainError("unit_power actions require a residue ring")
        if group.tag.startswith("Z") and "x" not in group.tag:
            base = int(desc["unit"])
            autos = [RingAutomorphism.unit_scaling(ring, pow(base, g, ring.n))
                     for g in group.elements()]
            return ActionMap(group, ring, autos)
        raise DomainError("unit_power actions are defined for cyclic groups only")
    if kind == "table":
        tables = desc["tables"]
        if len(tables) != group.order:
            raise DomainError(f"table action needs {group.order} tables, got {len(tables)}")
        autos = [RingAutomorphism.from_table(ring, [_payload(ring, x) for x in tbl])
                 for tbl in tables]
        return ActionMap(group, ring, autos)
    raise DomainError(f"unknown action kind {kind!r}")


def _payload(ring: RingSpec, raw):
    """Decode a JSON-level payload (int or nested list) for the given ring."""
    if isinstance(ring, ModularRing):
        return int(raw) % ring.n
    if ring.descriptor[0] == "matrix":
        k = ring.k
        if isinstance(raw, (list, tuple)) and len(raw) == k and all(
                isinstance(r, (list, tuple)) for r in raw):
            flat = [int(x) % ring.p for row in raw for x in row]
        else:
            flat = [int(x) % ring.p for x in raw]
        if len(flat) != k * k:
            raise DomainError(f"matrix payload needs {k * k} entries, got {len(flat)}")
        return tuple(flat)
    if ring.descriptor[0] == "function":
        vals = [int(x) for x in raw]
        if len(vals) != len(ring.points):
            raise DomainError(
                f"function payload needs {len(ring.points)} values, got {len(vals)}")
        if any(not 0 <= v < ring.q for v in vals):
            raise DomainError(f"function payload values must lie in 0..{ring.q - 1}")
        return tuple(vals)
    raise DomainError(f"cannot decode payload for {ring!r}")
