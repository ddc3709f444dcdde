"""Finite unital coefficient rings: residues Z/n, matrix rings over F_p, and
function rings F_q^X, with exact payload arithmetic, enumeration, units,
ideals, centre and a brute-force simplicity oracle.

Payload encodings are canonical (ints for residues, flat row-major tuples for
matrices, per-point code tuples for functions), so element equality is payload
equality and enumeration order is lexicographic on payloads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .closure import abelian_span
from .config import Caps
from .errors import CapacityError, DomainError
from .gf import GaloisField, field, prime_power


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class RingSpec:
    """Common interface of the three coefficient ring families.

    Subclasses provide payload-level arithmetic plus the additive coordinate
    maps (``to_vec``/``from_vec`` over Z/char) that the closure engines use.
    """

    size: int
    char: int           # additive exponent: payload vectors live over Z/char
    dim: int            # length of the additive coordinate vector
    is_commutative: bool
    descriptor: tuple

    def __init__(self, caps: Caps | None = None) -> None:
        self.caps = caps or Caps.from_env()

    # payload arithmetic -------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def try_invert_payload(self, a):
        """Two-sided inverse payload, or None when a is not a unit."""
        raise NotImplementedError

    # enumeration --------------------------------------------------------
    def check_enumerable(self, what: str = "ring enumeration") -> None:
        if self.size > self.caps.enumeration:
            raise CapacityError("enumeration", self.caps.enumeration, self.size, what)

    def payloads(self) -> Iterator:
        """All payloads in canonical (lexicographic) order; cap-checked."""
        self.check_enumerable()
        for i in range(self.size):
            yield self.unrank(i)

    def rank(self, a) -> int:
        raise NotImplementedError

    def unrank(self, i: int):
        raise NotImplementedError

    # additive coordinates -----------------------------------------------
    def to_vec(self, a) -> tuple[int, ...]:
        raise NotImplementedError

    def from_vec(self, vec: Sequence[int]):
        raise NotImplementedError

    def additive_generators(self) -> list:
        """Canonical additive generating payloads (a Z/char module basis)."""
        return [self.from_vec(tuple(1 if j == i else 0 for j in range(self.dim)))
                for i in range(self.dim)]

    # presentation --------------------------------------------------------
    def label(self, a) -> str:
        raise NotImplementedError

    def element(self, payload) -> "RingElement":
        return RingElement(self, payload)

    @property
    def zero_element(self) -> "RingElement":
        return RingElement(self, self.zero)

    @property
    def one_element(self) -> "RingElement":
        return RingElement(self, self.one)

    @cached_property
    def units(self) -> tuple:
        """All unit payloads in canonical order; cap-checked."""
        self.check_enumerable("unit enumeration")
        return tuple(a for a in self.payloads() if self.try_invert_payload(a) is not None)

    def __eq__(self, other) -> bool:
        return isinstance(other, RingSpec) and self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self.descriptor[1:]}"


class ModularRing(RingSpec):
    """Z/n with integer payloads 0..n-1."""

    def __init__(self, n: int, caps: Caps | None = None) -> None:
        if n < 2:
            raise DomainError(f"modulus must be at least 2, got {n}")
        super().__init__(caps)
        self.n = n
        self.size = n
        self.char = n
        self.dim = 1
        self.is_commutative = True
        self.descriptor = ("modular", n)

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def try_invert_payload(self, a):
        try:
            return pow(a, -1, self.n)
        except ValueError:
            return None

    def rank(self, a) -> int:
        return a

    def unrank(self, i: int):
        return i

    def to_vec(self, a):
        return (a,)

    def from_vec(self, vec):
        return vec[0] % self.n

    def label(self, a) -> str:
        return str(a)


class MatrixRing(RingSpec):
    """k-by-k matrices over F_p, payloads as flat row-major tuples."""

    def __init__(self, k: int, p: int, caps: Caps | None = None) -> None:
        if k < 1:
            raise DomainError(f"matrix size must be at least 1, got {k}")
        if not _is_prime(p):
            raise DomainError(f"matrix ring base must be prime, got {p}")
        super().__init__(caps)
        self.k = k
        self.p = p
        self.size = p ** (k * k)
        self.char = p
        self.dim = k * k
        self.is_commutative = k == 1
        self.descriptor = ("matrix", k, p)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        k, p = self.k, self.p
        out = [0] * (k * k)
        for i in range(k):
            for j in range(k):
                s = 0
                for t in range(k):
                    s += a[i * k + t] * b[t * k + j]
                out[i * k + j] = s % p
        return tuple(out)

    @property
    def zero(self):
        return (0,) * (self.k * self.k)

    @cached_property
    def one(self):
        k = self.k
        return tuple(1 if i % (k + 1) == 0 else 0 for i in range(k * k))

    def try_invert_payload(self, a):
        # Gauss-Jordan on [a | I] over F_p.
        k, p = self.k, self.p
        aug = [[a[i * k + j] for j in range(k)] + [1 if j == i else 0 for j in range(k)]
               for i in range(k)]
        for col in range(k):
            pivot = next((r for r in range(col, k) if aug[r][col]), None)
            if pivot is None:
                return None
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = pow(aug[col][col], -1, p)
            aug[col] = [(x * inv) % p for x in aug[col]]
            for r in range(k):
                if r != col and aug[r][col]:
                    c = aug[r][col]
                    aug[r] = [(x - c * y) % p for x, y in zip(aug[r], aug[col])]
        return tuple(aug[i][k + j] for i in range(k) for j in range(k))

    def rank(self, a) -> int:
        value = 0
        for x in a:
            value = value * self.p + x
        return value

    def unrank(self, i: int):
        out = []
        for _ in range(self.k * self.k):
            out.append(i % self.p)
            i //= self.p
        return tuple(reversed(out))

    def to_vec(self, a):
        return a

    def from_vec(self, vec):
        return tuple(x % self.p for x in vec)

    def label(self, a) -> str:
        k = self.k
        rows = ["[" + ",".join(str(a[i * k + j]) for j in range(k)) + "]" for i in range(k)]
        return "[" + ",".join(rows) + "]"


class FunctionRing(RingSpec):
    """F_q-valued functions on a finite point set, pointwise operations.

    Payloads are tuples of GF(q) element codes indexed by the points.
    """

    def __init__(self, points: int | Sequence[str], q: int, caps: Caps | None = None) -> None:
        prime_power(q)  # validates q
        if isinstance(points, int):
            if points < 1:
                raise DomainError(f"point set must be non-empty, got {points} points")
            point_labels = tuple(f"x{i}" for i in range(points))
        else:
            point_labels = tuple(str(s) for s in points)
            if not point_labels:
                raise DomainError("point set must be non-empty")
            if len(set(point_labels)) != len(point_labels):
                raise DomainError("point labels must be distinct")
        super().__init__(caps)
        self.points = point_labels
        self.gf: GaloisField = field(q)
        self.q = q
        npts = len(point_labels)
        self.size = q**npts
        self.char = self.gf.p
        self.dim = npts * self.gf.degree
        self.is_commutative = True
        self.descriptor = ("function", point_labels, q)

    def add(self, a, b):
        g = self.gf
        return tuple(g.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        g = self.gf
        return tuple(g.neg(x) for x in a)

    def mul(self, a, b):
        g = self.gf
        return tuple(g.mul(x, y) for x, y in zip(a, b))

    @property
    def zero(self):
        return (0,) * len(self.points)

    @property
    def one(self):
        return (1,) * len(self.points)

    def try_invert_payload(self, a):
        if any(x == 0 for x in a):
            return None
        g = self.gf
        return tuple(g.inv(x) for x in a)

    def rank(self, a) -> int:
        value = 0
        for x in a:
            value = value * self.q + x
        return value

    def unrank(self, i: int):
        out = []
        for _ in range(len(self.points)):
            out.append(i % self.q)
            i //= self.q
        return tuple(reversed(out))

    def to_vec(self, a):
        out: list[int] = []
        for x in a:
            out.extend(self.gf.to_digits(x))
        return tuple(out)

    def from_vec(self, vec):
        m = self.gf.degree
        return tuple(self.gf.from_digits(vec[i * m:(i + 1) * m]) for i in range(len(self.points)))

    def indicator(self, point_index: int):
        """The characteristic function of a single point."""
        return tuple(1 if i == point_index else 0 for i in range(len(self.points)))

    def label(self, a) -> str:
        return "(" + ",".join(str(x) for x in a) + ")"


def ring_from_descriptor(desc: dict, caps: Caps | None = None) -> RingSpec:
    """Build a ring from its instance-file descriptor."""
    kind = desc.get("kind")
    if kind == "modular":
        return ModularRing(int(desc["n"]), caps)
    if kind == "matrix":
        return MatrixRing(int(desc["size"]), int(desc["prime"]), caps)
    if kind == "function":
        return FunctionRing(desc["points"], int(desc["q"]), caps)
    raise DomainError(f"unknown ring kind {kind!r}")


class RingElement:
    """A payload tagged with its ring; supports +, -, * and unary negation."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring: RingSpec, payload) -> None:
        self.ring = ring
        self.payload = payload

    def _coerce(self, other, op: str):
        if not isinstance(other, RingElement):
            raise DomainError(f"cannot {op} RingElement with {type(other).__name__}")
        if other.ring != self.ring:
            raise DomainError(f"cannot {op} elements of {self.ring!r} and {other.ring!r}")
        return other

    def __add__(self, other):
        other = self._coerce(other, "add")
        return RingElement(self.ring, self.ring.add(self.payload, other.payload))

    def __sub__(self, other):
        other = self._coerce(other, "subtract")
        return RingElement(self.ring, self.ring.sub(self.payload, other.payload))

    def __mul__(self, other):
        other = self._coerce(other, "multiply")
        return RingElement(self.ring, self.ring.mul(self.payload, other.payload))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.payload))

    def __eq__(self, other):
        return (isinstance(other, RingElement) and other.ring == self.ring
                and other.payload == self.payload)

    def __hash__(self):
        return hash((self.ring.descriptor, self.payload))

    def is_zero(self) -> bool:
        return self.payload == self.ring.zero

    def __repr__(self):
        return f"<{self.ring.label(self.payload)} in {self.ring!r}>"


def enumerate_elements(ring: RingSpec) -> list[RingElement]:
    """Every ring element exactly once, in canonical order (cap-checked)."""
    return [ring.element(a) for a in ring.payloads()]


def try_invert(a: RingElement) -> RingElement | None:
    """Inverse element, or None when a is not a unit; verified by multiplying."""
    inv = a.ring.try_invert_payload(a.payload)
    if inv is None:
        return None
    assert a.ring.mul(a.payload, inv) == a.ring.one
    assert a.ring.mul(inv, a.payload) == a.ring.one
    return a.ring.element(inv)


@dataclass(frozen=True)
class TwoSidedIdeal:
    """A two-sided ideal stored as its full payload set."""

    ring: RingSpec
    elements: frozenset
    generators: tuple

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def is_full(self) -> bool:
        return len(self.elements) == self.ring.size

    @property
    def is_zero(self) -> bool:
        return self.elements == {self.ring.zero}

    def contains(self, a) -> bool:
        payload = a.payload if isinstance(a, RingElement) else a
        return payload in self.elements

    def element_list(self) -> list[RingElement]:
        return [self.ring.element(a) for a in sorted(self.elements, key=self.ring.rank)]


def _ideal_operators(ring: RingSpec, extra=()):
    ops = []
    for b in ring.additive_generators():
        ops.append(lambda x, b=b: ring.mul(b, x))
        ops.append(lambda x, b=b: ring.mul(x, b))
    ops.extend(extra)
    return ops


def ideal_closure(ring: RingSpec, generators: Iterable, extra_operators=()) -> TwoSidedIdeal:
    """Smallest two-sided ideal containing the generators.

    Worklist fixed point: additive span closed under left/right multiplication
    by the ring's canonical additive generators, which suffices by
    distributivity. ``extra_operators`` lets callers close under additional
    additive maps (the G-invariant closure passes the action here).
    """
    ring.check_enumerable("ideal closure")
    gens = tuple(g.payload if isinstance(g, RingElement) else g for g in generators)
    span = abelian_span(gens, _ideal_operators(ring, extra_operators), ring.add, ring.zero)
    return TwoSidedIdeal(ring, frozenset(span), gens)


def center(ring: RingSpec) -> list[RingElement]:
    """Elements commuting with the whole ring (checked against generators)."""
    ring.check_enumerable("centre computation")
    gens = ring.additive_generators()
    out = []
    for a in ring.payloads():
        if all(ring.mul(a, b) == ring.mul(b, a) for b in gens):
            out.append(ring.element(a))
    return out


def is_field(elements, *, zero, one) -> bool:
    """Whether a finite commutative unital closed set is a field.

    The input must be closed under + and * and contain 0 and 1; violations
    raise DomainError (non-commutativity included, per the contract).
    """
    members = set(elements)
    if one not in members or zero not in members:
        raise DomainError("input is not unital: missing 0 or 1")
    listed = list(members)
    for i, a in enumerate(listed):
        for b in listed[i:]:
            ab = a * b
            if ab != b * a:
                raise DomainError("input is not commutative")
            if ab not in members or (a + b) not in members:
                raise DomainError("input is not closed under ring operations")
    for a in members:
        if a == zero:
            continue
        if not any(a * b == one for b in members):
            return False
    return True


@dataclass(frozen=True)
class RingSimplicity:
    """Oracle verdict: simple, or a witness generator with its proper ideal."""

    simple: bool
    witness: RingElement | None = None
    witness_ideal: TwoSidedIdeal | None = None


def is_simple_ring(ring: RingSpec) -> RingSimplicity:
    """Brute-force oracle: every nonzero element must generate the full ring."""
    ring.check_enumerable("simplicity sweep")
    ops = _ideal_operators(ring)
    for i in range(1, ring.size):
        a = ring.unrank(i)
        span = abelian_span((a,), ops, ring.add, ring.zero)
        if len(span) != ring.size:
            ideal = TwoSidedIdeal(ring, frozenset(span), (a,))
            return RingSimplicity(False, ring.element(a), ideal)
    return RingSimplicity(True)
