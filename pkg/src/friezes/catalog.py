"""Finite-type Dynkin diagram catalog.

Cartan matrices under a fixed vertex numbering, their exact rational
inverses, the derived bound vectors used elsewhere, and repetition-quiver
arrow generation.

Vertex numbering (1-based, fixed per family):

* ``A_n``  path ``1 - 2 - ... - n``
* ``B_n``  same path, ``C[n-1,n] = -2`` (short root last)
* ``C_n``  transpose convention, ``C[n,n-1] = -2``
* ``D_n``  path ``1 - ... - (n-2)`` with ``n-1`` and ``n`` attached to ``n-2``
* ``E_n``  chain ``1 - 3 - 4 - 5 - ... - n`` with ``2`` attached to ``4``
* ``F_4``  path with ``C[2,3] = -2``
* ``G_2``  ``C[1,2] = -1``, ``C[2,1] = -3``

Everything here is exact (integers and ``fractions.Fraction``), immutable
after construction, and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "DynkinType",
    "CartanMatrix",
    "InverseCartan",
    "TypeProfile",
    "cartan_matrix",
    "inverse_cartan",
    "type_profile",
    "repetition_arrows",
    "leading_principal_minors",
    "CATALOG_SAMPLE",
]

_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_RANK_TEXT = {
    "A": "rank >= 1",
    "B": "rank >= 2",
    "C": "rank >= 2",
    "D": "rank >= 4",
    "E": "rank in {6, 7, 8}",
    "F": "rank = 4",
    "G": "rank = 2",
}


@dataclass(frozen=True)
class DynkinType:
    """A family letter plus rank naming one finite-type diagram."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _RANK_RULES:
            raise ValueError(f"unknown family {self.family!r}; expected one of A-G")
        if not isinstance(self.rank, int) or not _RANK_RULES[self.family](self.rank):
            raise ValueError(
                f"inadmissible type {self.family}{self.rank}: "
                f"family {self.family} requires {_RANK_TEXT[self.family]}"
            )

    @classmethod
    def from_name(cls, name: str) -> "DynkinType":
        """Parse a token like ``"E8"`` or ``"A12"``."""
        token = name.strip()
        if len(token) < 2 or token[0] not in _RANK_RULES or not token[1:].isdigit():
            raise ValueError(f"unknown type token {name!r}; expected e.g. A3, D5, E8")
        return cls(token[0], int(token[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CartanMatrix:
    """Exact integer Cartan matrix; ``entries[i][j]`` is 0-indexed."""

    rank: int
    entries: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class InverseCartan:
    """Exact rational inverse of a Cartan matrix (0-indexed entries)."""

    rank: int
    entries: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class TypeProfile:
    """Per-type derived data: row sums of the inverse, weighted degrees,
    and the period cap used to stop orbit tracing."""

    dynkin: DynkinType
    b: tuple[Fraction, ...]
    d: tuple[int, ...]
    period_cap: int


def _edges(t: DynkinType) -> tuple[tuple[int, int, int, int], ...]:
    """Weighted edges ``(i, j, mij, mji)`` with ``i < j`` (1-based), meaning
    ``C[i,j] = -mij`` and ``C[j,i] = -mji``."""
    n = t.rank
    fam = t.family
    if fam == "A":
        return tuple((i, i + 1, 1, 1) for i in range(1, n))
    if fam == "B":
        path = [(i, i + 1, 1, 1) for i in range(1, n - 1)]
        path.append((n - 1, n, 2, 1))
        return tuple(path)
    if fam == "C":
        path = [(i, i + 1, 1, 1) for i in range(1, n - 1)]
        path.append((n - 1, n, 1, 2))
        return tuple(path)
    if fam == "D":
        path = [(i, i + 1, 1, 1) for i in range(1, n - 2)]
        path.append((n - 2, n - 1, 1, 1))
        path.append((n - 2, n, 1, 1))
        return tuple(path)
    if fam == "E":
        chain = [(1, 3), (2, 4), (3, 4)] + [(i, i + 1) for i in range(4, n)]
        return tuple(sorted((i, j, 1, 1) for i, j in chain))
    if fam == "F":
        return ((1, 2, 1, 1), (2, 3, 2, 1), (3, 4, 1, 1))
    return ((1, 2, 1, 3),)  # G2


_COXETER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n,
    "C": lambda n: 2 * n,
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
    "F": lambda n: 12,
    "G": lambda n: 6,
}


def coxeter_number(t: DynkinType) -> int:
    return _COXETER[t.family](t.rank)


@lru_cache(maxsize=None)
def cartan_matrix(t: DynkinType) -> CartanMatrix:
    """Cartan matrix of ``t`` under the fixed numbering above."""
    n = t.rank
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, mij, mji in _edges(t):
        rows[i - 1][j - 1] = -mij
        rows[j - 1][i - 1] = -mji
    return CartanMatrix(n, tuple(tuple(r) for r in rows))


def _invert_exact(entries: tuple[tuple[int, ...], ...]) -> tuple[tuple[Fraction, ...], ...]:
    """Gauss-Jordan over Fraction; raises if singular."""
    n = len(entries)
    a = [[Fraction(x) for x in row] for row in entries]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv)


@lru_cache(maxsize=None)
def inverse_cartan(t: DynkinType) -> InverseCartan:
    """Exact rational inverse; the product with the Cartan matrix is
    re-checked entry by entry before returning."""
    cm = cartan_matrix(t)
    inv = _invert_exact(cm.entries)
    n = t.rank
    for i in range(n):
        for j in range(n):
            acc = sum(cm.entries[i][k] * inv[k][j] for k in range(n))
            if acc != (1 if i == j else 0):
                raise ArithmeticError(f"inverse check failed at ({i}, {j})")
    return InverseCartan(n, inv)


@lru_cache(maxsize=None)
def type_profile(t: DynkinType) -> TypeProfile:
    """Row sums ``b`` of the inverse, weighted degrees ``d``, and the
    period cap ``h + 2`` (Coxeter number plus two)."""
    cm = cartan_matrix(t)
    inv = inverse_cartan(t)
    b = tuple(sum(row, Fraction(0)) for row in inv.entries)
    d = tuple(sum(-x for x in row if x < 0) for row in cm.entries)
    return TypeProfile(t, b, d, coxeter_number(t) + 2)


def repetition_arrows(
    t: DynkinType, k_lo: int, k_hi: int
) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Arrows ``(i,k) -> (j,k)`` and ``(j,k) -> (i,k+1)`` for every diagram
    edge ``i < j`` and every ``k`` in ``[k_lo, k_hi]``, ordered by ``k``
    then ``(i, j)``."""
    if k_lo > k_hi:
        raise ValueError(f"empty column range: {k_lo} > {k_hi}")
    pairs = sorted((i, j) for i, j, _, _ in _edges(t))
    arrows = []
    for k in range(k_lo, k_hi + 1):
        for i, j in pairs:
            arrows.append(((i, k), (j, k)))
            arrows.append(((j, k), (i, k + 1)))
    return arrows


def leading_principal_minors(cm: CartanMatrix) -> tuple[Fraction, ...]:
    """Determinants of the leading principal submatrices, exactly."""
    minors = []
    for m in range(1, cm.rank + 1):
        sub = [[Fraction(cm.entries[i][j]) for j in range(m)] for i in range(m)]
        det = Fraction(1)
        for col in range(m):
            pivot = next((r for r in range(col, m) if sub[r][col] != 0), None)
            if pivot is None:
                det = Fraction(0)
                break
            if pivot != col:
                sub[col], sub[pivot] = sub[pivot], sub[col]
                det = -det
            det *= sub[col][col]
            inv_p = 1 / sub[col][col]
            for r in range(col + 1, m):
                if sub[r][col] != 0:
                    f = sub[r][col] * inv_p
                    sub[r] = [x - f * y for x, y in zip(sub[r], sub[col])]
        minors.append(det)
    return tuple(minors)


def _catalog_sample() -> tuple[DynkinType, ...]:
    """A finite slice of the infinite catalog, used by tests and the CLI
    to sweep "every type" style checks."""
    names = [
        "A1", "A2", "A3", "A4", "A5",
        "B2", "B3", "B4",
        "C2", "C3", "C4",
        "D4", "D5", "D6",
        "E6", "E7", "E8",
        "F4", "G2",
    ]
    return tuple(DynkinType.from_name(s) for s in names)


CATALOG_SAMPLE = _catalog_sample()
