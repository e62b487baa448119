"""Frieze data model and mesh-relation machinery.

A frieze assigns a positive integer to every vertex ``(i, k)`` of the
repetition quiver so that for all ``i, k``

    F[i,k] * F[i,k+1] = 1 + prod_{j<i} F[j,k]^{-C[i,j]}
                          * prod_{j>i} F[j,k+1]^{-C[i,j]}

One column determines the whole frieze: solving the relation for
``F[i,k+1]`` and walking ``i = n..1`` only ever reads entries of the new
column that are already filled (the ``j < i`` factors live in the old
column).  Walking ``i = 1..n`` inverts the step.  All arithmetic is on
arbitrary-precision integers; division must be exact or the seed is not a
frieze column.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .catalog import DynkinType, cartan_matrix

__all__ = [
    "FriezeSlice",
    "FriezePattern",
    "MeshViolation",
    "IndivisibleError",
    "DeadEndError",
    "NoRecurrenceError",
    "mesh_product",
    "propagate_forward",
    "propagate_backward",
    "detect_period",
    "verify_pattern",
    "pattern_from_columns",
]


class IndivisibleError(ArithmeticError):
    """A propagation step required an inexact division at ``vertex`` (1-based)."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"inexact division at vertex {vertex}")


class DeadEndError(ValueError):
    """Orbit tracing hit an inexact division: the seed is not a frieze column."""

    def __init__(self, step: int, vertex: int):
        self.step = step
        self.vertex = vertex
        super().__init__(f"dead end at step {step}, vertex {vertex}")


class NoRecurrenceError(ValueError):
    """Orbit tracing exceeded the cap without returning to the seed column."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"no recurrence within {cap} steps")


@dataclass(frozen=True)
class FriezeSlice:
    """One column of values ``F[1,k] .. F[n,k]`` (``values`` is 0-indexed)."""

    dynkin: DynkinType
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.dynkin.rank:
            raise ValueError(
                f"expected {self.dynkin.rank} entries for {self.dynkin}, "
                f"got {len(self.values)}"
            )
        for i, v in enumerate(self.values):
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"entry {v!r} at vertex {i + 1} is not a positive integer")


@dataclass(frozen=True)
class FriezePattern:
    """A frieze on one fundamental domain: ``period`` consecutive columns,
    indices taken mod ``period``.  Construction does not verify the mesh
    relations; use :func:`verify_pattern`."""

    dynkin: DynkinType
    period: int
    columns: tuple[FriezeSlice, ...]

    def __post_init__(self) -> None:
        if self.period < 1 or len(self.columns) != self.period:
            raise ValueError(f"period {self.period} does not match {len(self.columns)} columns")
        for c in self.columns:
            if c.dynkin != self.dynkin:
                raise ValueError(f"column of type {c.dynkin} in a {self.dynkin} pattern")

    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Row-major view: ``rows()[i][k] = F[i+1, k]``."""
        return tuple(
            tuple(col.values[i] for col in self.columns) for i in range(self.dynkin.rank)
        )


@dataclass(frozen=True)
class MeshViolation:
    """One failed mesh relation: ``lhs = F[i,k] * F[i,k+1]`` against
    ``rhs = 1 + mesh product`` (vertex 1-based, column 0-based)."""

    vertex: int
    column: int
    lhs: int
    rhs: int


@lru_cache(maxsize=None)
def _neighbor_plan(t: DynkinType):
    """Per vertex (0-based): ``(lower, upper)`` neighbor lists with
    multiplicities ``m = -C[i,j]``."""
    entries = cartan_matrix(t).entries
    n = t.rank
    lower = tuple(
        tuple((j, -entries[i][j]) for j in range(i) if entries[i][j] < 0) for i in range(n)
    )
    upper = tuple(
        tuple((j, -entries[i][j]) for j in range(i + 1, n) if entries[i][j] < 0)
        for i in range(n)
    )
    return lower, upper


def _product(values_k, values_k1, lower, upper) -> int:
    prod = 1
    for j, m in lower:
        v = values_k[j]
        prod *= v if m == 1 else v**m
    for j, m in upper:
        v = values_k1[j]
        prod *= v if m == 1 else v**m
    return prod


def mesh_product(i: int, col_k: FriezeSlice, col_k1: FriezeSlice) -> int:
    """The neighbor product for vertex ``i`` (1-based) between consecutive
    columns; the empty product is 1."""
    if col_k.dynkin != col_k1.dynkin:
        raise ValueError("columns belong to different types")
    lower, upper = _neighbor_plan(col_k.dynkin)
    return _product(col_k.values, col_k1.values, lower[i - 1], upper[i - 1])


def forward_values(t: DynkinType, values: tuple[int, ...]) -> tuple[int, ...]:
    """Next column from ``values``, on raw tuples.  Walks ``i = n..1`` so
    that only already-filled entries of the new column are read.  Raises
    :class:`IndivisibleError` when a division is inexact."""
    lower, upper = _neighbor_plan(t)
    n = len(values)
    # None sentinels: touching a not-yet-computed entry is a bug and raises
    out: list = [None] * n
    for i in range(n - 1, -1, -1):
        num = 1 + _product(values, out, lower[i], upper[i])
        q, r = divmod(num, values[i])
        if r:
            raise IndivisibleError(i + 1)
        out[i] = q
    return tuple(out)


def backward_values(t: DynkinType, values: tuple[int, ...]) -> tuple[int, ...]:
    """Previous column from ``values``; walks ``i = 1..n``."""
    lower, upper = _neighbor_plan(t)
    n = len(values)
    out: list = [None] * n
    for i in range(n):
        num = 1 + _product(out, values, lower[i], upper[i])
        q, r = divmod(num, values[i])
        if r:
            raise IndivisibleError(i + 1)
        out[i] = q
    return tuple(out)


def propagate_forward(s: FriezeSlice) -> FriezeSlice:
    """Column ``k+1`` from column ``k``."""
    return FriezeSlice(s.dynkin, forward_values(s.dynkin, s.values))


def propagate_backward(s: FriezeSlice) -> FriezeSlice:
    """Column ``k`` from column ``k+1``; inverse of :func:`propagate_forward`."""
    return FriezeSlice(s.dynkin, backward_values(s.dynkin, s.values))


def detect_period(seed: FriezeSlice, cap: int) -> tuple[int, list[FriezeSlice]]:
    """Propagate forward until the seed column recurs.

    Returns ``(q, columns)`` where ``q <= cap`` is minimal with
    ``column_q = column_0`` and ``columns`` holds columns ``0 .. q-1``.
    Because propagation is invertible, the first repeat of any column is
    necessarily a repeat of the seed, so the returned columns are pairwise
    distinct.  Raises :class:`DeadEndError` if propagation dies (the seed
    is not a frieze column) and :class:`NoRecurrenceError` if ``cap`` is
    exhausted.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    t = seed.dynkin
    first = seed.values
    cols = [first]
    cur = first
    for step in range(1, cap + 1):
        try:
            cur = forward_values(t, cur)
        except IndivisibleError as exc:
            raise DeadEndError(step, exc.vertex) from exc
        if cur == first:
            return step, [FriezeSlice(t, v) for v in cols]
        cols.append(cur)
    raise NoRecurrenceError(cap)


def verify_pattern(f: FriezePattern) -> list[MeshViolation]:
    """Check every mesh relation cyclically; an empty list means the
    pattern is a frieze."""
    lower, upper = _neighbor_plan(f.dynkin)
    p = f.period
    violations = []
    for k in range(p):
        vk = f.columns[k].values
        vk1 = f.columns[(k + 1) % p].values
        for i in range(f.dynkin.rank):
            lhs = vk[i] * vk1[i]
            rhs = 1 + _product(vk, vk1, lower[i], upper[i])
            if lhs != rhs:
                violations.append(MeshViolation(i + 1, k, lhs, rhs))
    return violations


def pattern_from_columns(t: DynkinType, columns) -> FriezePattern:
    """Build a pattern from raw value tuples (or slices)."""
    slices = tuple(
        c if isinstance(c, FriezeSlice) else FriezeSlice(t, tuple(c)) for c in columns
    )
    return FriezePattern(t, len(slices), slices)
