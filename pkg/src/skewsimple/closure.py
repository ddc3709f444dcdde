"""Closure engines for additive spans stable under linear operators.

Two-sided ideals of the finite rings handled here are exactly the additive
subgroups closed under left/right multiplication by a module generating set,
so ideal closures reduce to "span + operator worklist" fixed points.

Two interchangeable engines:

* ``PrimeClosureEngine``: echelon bases over F_p with operators as matrices
  (numpy). Used whenever the additive characteristic is prime.
* ``abelian_span``: generic finite-abelian-group span over payload tuples with
  operator callables. Works for composite Z/n, and doubles as an independent
  cross-check for the linear engine.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

import numpy as np

Vector = tuple[int, ...]


def abelian_span(
    seeds: Iterable[Vector],
    operators: Sequence[Callable[[Vector], Vector]],
    add: Callable[[Vector, Vector], Vector],
    zero: Vector,
) -> set[Vector]:
    """Smallest additive subgroup containing seeds and stable under operators.

    Operators must be additive maps; stability on a generating set then
    extends to the whole span, so each operator is only ever applied to the
    generators actually inserted.
    """
    span = {zero}
    pending = list(seeds)
    while pending:
        x = pending.pop()
        if x in span:
            continue
        # Fold the new generator in: the enlarged span is the union of the
        # cosets span + k*x until the cycle closes.
        base = list(span)
        y = x
        while y not in span:
            span.update(add(b, y) for b in base)
            y = add(y, x)
        pending.extend(op(x) for op in operators)
    return span


class PrimeClosureEngine:
    """Echelonized submodule closures over F_p.

    Bases are kept in reduced row echelon form (pivot entries 1, pivot columns
    cleared), so membership tests and the basis itself are canonical.
    """

    def __init__(self, p: int, dim: int, operators: Sequence[np.ndarray]) -> None:
        self.p = p
        self.dim = dim
        self.operators = [np.asarray(op, dtype=np.int64) % p for op in operators]
        self._inv = [0] * p
        for a in range(1, p):
            self._inv[a] = pow(a, -1, p)

    def _reduce(self, vec: np.ndarray, rows: list[np.ndarray], pivots: list[int]) -> np.ndarray:
        v = vec % self.p
        for row, piv in zip(rows, pivots):
            c = v[piv]
            if c:
                v = (v - c * row) % self.p
        return v

    def _insert(self, vec: np.ndarray, rows: list[np.ndarray], pivots: list[int]) -> bool:
        v = self._reduce(vec, rows, pivots)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        piv = int(nz[0])
        v = (v * self._inv[int(v[piv])]) % self.p
        # clear the new pivot column in existing rows to stay in RREF
        for i, row in enumerate(rows):
            c = row[piv]
            if c:
                rows[i] = (row - c * v) % self.p
        pos = 0
        while pos < len(pivots) and pivots[pos] < piv:
            pos += 1
        rows.insert(pos, v)
        pivots.insert(pos, piv)
        return True

    def closure(self, seeds: Iterable[Sequence[int]], *, stop_at_full: bool = True):
        """RREF basis of the operator-stable span of the seed vectors."""
        rows: list[np.ndarray] = []
        pivots: list[int] = []
        pending = [np.asarray(s, dtype=np.int64) % self.p for s in seeds]
        while pending:
            vec = pending.pop()
            if not self._insert(vec, rows, pivots):
                continue
            if stop_at_full and len(rows) == self.dim:
                break
            # operators act on the raw inserted vector; linearity covers the rest
            pending.extend(op @ vec for op in self.operators)
        return SubmoduleBasis(self.p, self.dim, rows, pivots)


def gauss_solve(p: int, A: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One solution x of A x = b over F_p (free variables zero), or None."""
    A = np.asarray(A, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    m, n = A.shape
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, m) if aug[r, col]), None)
        if pivot is None:
            continue
        aug[[row, pivot]] = aug[[pivot, row]]
        aug[row] = (aug[row] * pow(int(aug[row, col]), -1, p)) % p
        for r in range(m):
            if r != row and aug[r, col]:
                aug[r] = (aug[r] - aug[r, col] * aug[row]) % p
        pivots.append((row, col))
        row += 1
        if row == m:
            break
    # inconsistent if a zero row has nonzero rhs
    if any(aug[r, n] and not aug[r, :n].any() for r in range(m)):
        return None
    x = np.zeros(n, dtype=np.int64)
    for r, c in pivots:
        x[c] = aug[r, n]
    return x if not ((A @ x - b) % p).any() else None


class SubmoduleBasis:
    """A canonical RREF basis of a submodule of (F_p)^dim."""

    def __init__(self, p: int, dim: int, rows: list[np.ndarray], pivots: list[int]) -> None:
        self.p = p
        self.dim = dim
        self.rows = rows
        self.pivots = pivots

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def is_full(self) -> bool:
        return len(self.rows) == self.dim

    @property
    def size(self) -> int:
        return self.p**len(self.rows)

    def contains(self, vec: Sequence[int]) -> bool:
        v = np.asarray(vec, dtype=np.int64) % self.p
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c:
                v = (v - c * row) % self.p
        return not np.any(v)

    def iter_vectors(self):
        """All members, deterministically (coefficient vectors in lex order)."""
        if not self.rows:
            yield (0,) * self.dim
            return
        mat = np.stack(self.rows)
        coeff = np.zeros(len(self.rows), dtype=np.int64)
        total = self.p ** len(self.rows)
        for idx in range(total):
            k = idx
            for i in range(len(self.rows) - 1, -1, -1):
                coeff[i] = k % self.p
                k //= self.p
            yield tuple(int(x) for x in (coeff @ mat) % self.p)

    def key(self) -> tuple:
        """Hashable canonical form (RREF rows)."""
        return tuple(tuple(int(x) for x in row) for row in self.rows)
