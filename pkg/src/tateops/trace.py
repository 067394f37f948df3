"""The exact trace on trace-class operators, via lattice factorization.

A trace-class operator maps some standard lattice N into itself and kills a
sublattice N'; the trace is the matrix trace of the induced map on N/N' and
is independent of the chosen pair.  An independent window oracle sums the
diagonal entries directly; geometry guarantees the sum is finite because
every line meets the main diagonal in at most one cell, except the main
diagonal itself, whose trace-class support is finite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Scalar
from .operators import (ANTI, DIAG, POS_INF, StandardLattice, TateOp,
                        ideal_membership)


class NotTraceClassError(ValueError):
    """The trace was requested for an operator outside the trace-class ideal."""


class InsufficientWindowError(ValueError):
    """The requested oracle window does not cover all diagonal support."""


@dataclass(frozen=True)
class TraceCertificate:
    """Witness for a trace value: N maps into itself, N' is killed."""

    N: StandardLattice
    N_prime: StandardLattice
    window_matrix: tuple

    def window_size(self) -> int:
        return self.N_prime.m - self.N.m


def _diagonal_cells(a: TateOp) -> list[int]:
    """Indices i with a possibly nonzero entry at (i, i); finite for trace-class."""
    cells: set[int] = set()
    seq = a.lines.get((DIAG, 0))
    if seq is not None:
        smin, smax = seq.support_min(), seq.support_max()
        if smin is not None:
            if smin == float("-inf") or smax == POS_INF:
                raise NotTraceClassError("main diagonal has infinite support")
            cells.update(range(int(smin), int(smax) + 1))
    for (orient, off), seq in a.lines.items():
        if orient == ANTI and off % 2 == 0:
            j = off // 2
            if not seq.value(j).is_zero():
                cells.add(j)
    for (i, j) in a.corr:
        if i == j:
            cells.add(i)
    return sorted(cells)


def certificate(a: TateOp, n_m: int | None = None,
                n_prime_m: int | None = None) -> TraceCertificate:
    """Build a (N, N') certificate; optional overrides must still certify.

    Default: N = t^min(bounding_row, kill_column, 0) * O and
    N' = t^kill_column * O, both computed from the line geometry.
    """
    mem = ideal_membership(a)
    if not mem.trace_class:
        raise NotTraceClassError("operator is not trace-class")
    bounding_row = mem.bounding_row if mem.bounding_row is not None else 0
    kill_column = mem.kill_column if mem.kill_column is not None else 0
    if n_m is None:
        n_m = min(bounding_row, kill_column, 0)
    if n_prime_m is None:
        n_prime_m = kill_column
    if n_m > n_prime_m:
        raise ValueError("N must contain N'")
    if mem.bounding_row is not None and n_m > mem.bounding_row:
        raise ValueError(f"t^{n_m}*O does not contain the image")
    if mem.kill_column is not None and n_prime_m < mem.kill_column:
        raise ValueError(f"t^{n_prime_m}*O is not killed")
    matrix = a.window_matrix(n_m, n_prime_m, n_m, n_prime_m)
    return TraceCertificate(StandardLattice(n_m), StandardLattice(n_prime_m), matrix)


def trace(a: TateOp, n_m: int | None = None, n_prime_m: int | None = None) -> Scalar:
    """Matrix trace of the induced map on N/N'; lattice choice never matters."""
    if a.level != 1:
        from .cubical import trace_n
        return trace_n(a)
    cert = certificate(a, n_m, n_prime_m)
    total = a.field.zero()
    for k in range(cert.window_size()):
        total = total + cert.window_matrix[k][k]
    return total


def trace_oracle(a: TateOp, half_width: int) -> Scalar:
    """Independent check: sum of entry(i, i) over |i| <= half_width.

    Validates from the line geometry that the window covers every diagonal
    crossing; reports rather than silently truncating.
    """
    if a.level != 1:
        raise NotTraceClassError("the window oracle is a level-1 check")
    mem = ideal_membership(a)
    if not mem.trace_class:
        raise NotTraceClassError("operator is not trace-class")
    cells = _diagonal_cells(a)
    if cells and (cells[0] < -half_width or cells[-1] > half_width):
        raise InsufficientWindowError(
            f"diagonal support spans [{cells[0]}, {cells[-1]}], "
            f"outside half-width {half_width}")
    total = a.field.zero()
    for i in range(-half_width, half_width + 1):
        total = total + a.entry(i, i)
    return total


@dataclass(frozen=True)
class RestrictQuotient:
    """Outcome of cutting along t^m * O: does the operator respect the lattice,
    and the two induced operators when it does."""

    sub_ok: bool
    restriction: TateOp | None
    quotient: TateOp | None


def restrict_and_quotient(a: TateOp, m: int) -> RestrictQuotient:
    """Split along t^m * O when a(t^m O) lies in t^m O.

    The restriction is reindexed to live on O (conjugated by t^-m); the
    quotient operator acts on the complement coordinates, masked in place.
    For trace-class a, trace(a) = trace(restriction) + trace(quotient).
    """
    if a.level != 1:
        raise NotTraceClassError("restriction along a standard lattice is level-1")
    sub_ok = True
    for (orient, off), seq in a.lines.items():
        if orient == DIAG:
            if off < 0 and not seq.is_zero_on(m, m - off):
                sub_ok = False
        else:
            smax = seq.support_max_at_least(max(m, off - m + 1))
            if smax is not None:
                sub_ok = False
    for (i, j) in a.corr:
        if j >= m and i < m:
            sub_ok = False
    if not sub_ok:
        return RestrictQuotient(False, None, None)
    p_plus = TateOp.proj_plus(0, 1, a.field)
    p_minus = TateOp.proj_minus(m, 1, a.field)
    conj = TateOp.shift(-m, 1, a.field) * a * TateOp.shift(m, 1, a.field)
    restriction = conj * p_plus
    quotient = p_minus * a * p_minus
    return RestrictQuotient(True, restriction, quotient)
