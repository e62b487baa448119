"""Quantitative bounds for friezes: average-log vectors, the exact
interval certificate, per-type entry/count bounds, and the refined bounds
for friezes with all entries >= 2.

Everything decidable is decided in exact integer or rational arithmetic;
floats appear only as a reporting view, evaluated from exact quantities at
the last step (target precision 1e-9).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .catalog import DynkinType, cartan_matrix, inverse_cartan, type_profile
from .mesh import FriezePattern

__all__ = [
    "LogVector",
    "IntervalCertificate",
    "BoundsReport",
    "BoundsCheck",
    "row_products",
    "a_vector",
    "interval_certificate",
    "bounds_report",
    "check_pattern_against_bounds",
    "refined_min2_report",
    "floor_pow2",
    "integer_root",
]


def integer_root(x: int, k: int) -> int:
    """Largest ``r`` with ``r**k <= x`` (``x >= 0``, ``k >= 1``)."""
    if x < 0 or k < 1:
        raise ValueError("integer_root needs x >= 0 and k >= 1")
    if k == 1 or x < 2:
        return x
    if k == 2:
        return math.isqrt(x)
    r = 1 << -((-x.bit_length()) // k)  # >= true root
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r**k > x:
        r -= 1
    return r


def floor_pow2(e: Fraction) -> int:
    """``floor(2**e)`` for a positive rational exponent, exactly."""
    if e <= 0:
        raise ValueError("exponent must be positive")
    num, den = e.numerator, e.denominator
    if den == 1:
        return 1 << num
    return integer_root(1 << num, den)


@dataclass(frozen=True)
class LogVector:
    """Average base-2 logs per row (``a``) and their image under the
    Cartan matrix (``ca``); floats with documented 1e-9 precision."""

    a: tuple[float, ...]
    ca: tuple[float, ...]


@dataclass(frozen=True)
class IntervalCertificate:
    """Exact per-row interval test.

    For row ``i``: ``row_squares[i] = (prod_k F[i,k])**2`` and
    ``neighbor_products[i] = prod_{j != i} (prod_k F[j,k])**(-C[i,j])``,
    both over ``period`` columns.  The verdict is the exact comparison
    ``neighbor_products[i] < row_squares[i] <= 2**period * neighbor_products[i]``,
    equivalent to the ``i``-th entry of ``C a`` lying in ``(0, 1]``.
    """

    dynkin: DynkinType
    period: int
    row_squares: tuple[int, ...]
    neighbor_products: tuple[int, ...]
    verdicts: tuple[bool, ...]

    @property
    def passed(self) -> bool:
        return all(self.verdicts)


@dataclass(frozen=True)
class BoundsReport:
    """All per-type bounds for a nominal period ``p``.

    Rational fields are exact.  ``refined_rowwise_log2[i]`` is
    ``p * sum_j Cinv[i,j] * log2(1 + 2**-d[j])`` (the per-row formula);
    ``refined_base`` is the exact rational ``prod_j (1 + 2**-d[j])`` and
    ``refined_flat_log2`` the float ``log2`` of its ``p``-th power.
    """

    dynkin: DynkinType
    period: int
    b: tuple[Fraction, ...]
    entry_cap_exponents: tuple[Fraction, ...]
    count_bound_exponent: Fraction
    d: tuple[int, ...]
    refined_rowwise_log2: tuple[float, ...]
    refined_base: Fraction
    refined_flat_log2: float


@dataclass(frozen=True)
class BoundsCheck:
    """Exact per-row outcome of the row-product and per-entry caps."""

    row_product_ok: tuple[bool, ...]
    entry_ok: tuple[bool, ...]

    @property
    def passed(self) -> bool:
        return all(self.row_product_ok) and all(self.entry_ok)


def _resolve_period(f: FriezePattern, p: int | None) -> int:
    if p is None:
        return f.period
    if p < 1 or p % f.period != 0:
        raise ValueError(f"period {p} is not a positive multiple of the stored period {f.period}")
    return p


def row_products(f: FriezePattern, p: int | None = None) -> tuple[int, ...]:
    """``prod_k F[i,k]`` over ``p`` columns, computed exactly as the
    stored-period product raised to ``p // f.period``."""
    p = _resolve_period(f, p)
    e = p // f.period
    return tuple(math.prod(row) ** e for row in f.rows())


def _log2(x: int) -> float:
    return math.log2(x)


def a_vector(f: FriezePattern, p: int | None = None) -> LogVector:
    """Average base-2 log of each row and its Cartan image.

    Averaging over any multiple of the stored period gives the same value,
    so ``p`` only has to be a multiple of ``f.period``.
    """
    p = _resolve_period(f, p)
    prods = row_products(f, p)
    a = tuple(_log2(x) / p for x in prods)
    entries = cartan_matrix(f.dynkin).entries
    ca = tuple(
        math.fsum(entries[i][j] * a[j] for j in range(f.dynkin.rank) if entries[i][j])
        for i in range(f.dynkin.rank)
    )
    return LogVector(a, ca)


def interval_certificate(f: FriezePattern, p: int | None = None) -> IntervalCertificate:
    """Exact big-integer form of the interval test; passes on every frieze."""
    p = _resolve_period(f, p)
    prods = row_products(f, p)
    entries = cartan_matrix(f.dynkin).entries
    n = f.dynkin.rank
    squares = tuple(x * x for x in prods)
    neighbor = tuple(
        math.prod(prods[j] ** (-entries[i][j]) for j in range(n) if j != i and entries[i][j])
        for i in range(n)
    )
    shift = 1 << p
    verdicts = tuple(
        neighbor[i] < squares[i] <= shift * neighbor[i] for i in range(n)
    )
    return IntervalCertificate(f.dynkin, p, squares, neighbor, verdicts)


def bounds_report(t: DynkinType, p: int) -> BoundsReport:
    """Entry caps ``2**(p*b_i)``, the count bound exponent ``p**2 * sum b``,
    and both readings of the refined (all entries >= 2) bound."""
    if p < 1:
        raise ValueError("period must be positive")
    profile = type_profile(t)
    inv = inverse_cartan(t).entries
    n = t.rank
    b = profile.b
    d = profile.d
    log_terms = [_log2(2**dj + 1) - dj for dj in d]  # log2(1 + 2**-dj), exactly evaluated
    rowwise = tuple(
        p * math.fsum(float(inv[i][j]) * log_terms[j] for j in range(n)) for i in range(n)
    )
    base = math.prod((Fraction(2**dj + 1, 2**dj) for dj in d), start=Fraction(1))
    flat = p * (_log2(base.numerator) - _log2(base.denominator))
    return BoundsReport(
        dynkin=t,
        period=p,
        b=b,
        entry_cap_exponents=tuple(p * bi for bi in b),
        count_bound_exponent=p * p * sum(b, Fraction(0)),
        d=d,
        refined_rowwise_log2=rowwise,
        refined_base=base,
        refined_flat_log2=flat,
    )


def check_pattern_against_bounds(f: FriezePattern, p: int | None = None) -> BoundsCheck:
    """Exact caps test: per row, ``(prod_k F[i,k])**den(b_i) <= 2**(p*num(b_i))``
    over the ``p``-column unrolling, and the same comparison entrywise."""
    p = _resolve_period(f, p)
    b = type_profile(f.dynkin).b
    prods = row_products(f, p)
    rows = f.rows()
    row_ok = []
    entry_ok = []
    for i, bi in enumerate(b):
        cap = 1 << (p * bi.numerator)
        row_ok.append(prods[i] ** bi.denominator <= cap)
        entry_ok.append(all(v**bi.denominator <= cap for v in rows[i]))
    return BoundsCheck(tuple(row_ok), tuple(entry_ok))


def refined_min2_report(t: DynkinType, p: int) -> tuple[tuple[float, float], ...]:
    """Per-row pair ``(formula_bound_log2, flat_exponent_bound_log2)``.

    The first is the displayed per-row sum; the second reads the exponent
    as a plain ``p`` on the whole product, which is what the worked
    numeric value for E8 corresponds to.  Both are reported side by side;
    no attempt is made to pick one.
    """
    report = bounds_report(t, p)
    return tuple((fw, report.refined_flat_log2) for fw in report.refined_rowwise_log2)
