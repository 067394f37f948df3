"""Level-n operators: the cubical ideal family, good idempotents, the
iterated trace, and word factorization.

A level-n operator acts on k((t_1))...((t_n)), t_n outermost; its entries
are level-(n-1) operators.  For each variable index i (1 = innermost t_1,
n = outermost t_n) there is an ideal pair I_i^+/I_i^-:

* i = n: the line-limit test on the outer presentation, exactly as level 1;
* i < n: every entry reachable in the presentation (both limits of every
  line, every window value, every correction entry) lies in I_i^+/I_i^- of
  the level-(n-1) algebra, recursively.

This is equivalent to quantifying over induced maps on all standard-lattice
sandwiches, because every induced map is a finite matrix of entry operators
and every cell occurs in some valid sandwich.  Some references index the
family outermost-first; CubicalReport.outer_first() gives that view.

Word factorization: a product of >= 2 trace-class operators in this class
always normalizes to a finite correction at every level (each factor's lines
lose the tail that could sustain an infinite line in the product, and entry
products pair level-(n-1) trace-class operators, recursively finite).  The
2^n bound is therefore witnessed here by one-letter words - e.g. the flip,
or an outer anti-diagonal of flips at level 2 - which are trace-class with
infinite support.  No two-letter trace-class product can fail the
finiteness check; see stored_two_letter_pair for the strictest candidate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field, Scalar
from .operators import ANTI, DIAG, EvSeq, TateOp
from .trace import NotTraceClassError, trace as _trace_level1


@dataclass(frozen=True)
class CubicalReport:
    """Ideal flags per variable index (entry k = variable k+1, innermost first)."""

    in_plus: tuple[bool, ...]
    in_minus: tuple[bool, ...]
    trace_class: bool

    @property
    def n(self) -> int:
        return len(self.in_plus)

    def outer_first(self) -> "CubicalReport":
        """The same flags indexed outermost-first."""
        return CubicalReport(tuple(reversed(self.in_plus)),
                             tuple(reversed(self.in_minus)), self.trace_class)


def _reachable_entries(a: TateOp):
    for _, seq in a.lines.items():
        yield seq.left
        yield seq.right
        for v in seq.window:
            yield v
    for v in a.corr.values():
        yield v


def _inner_flags(a: TateOp, i: int) -> tuple[bool, bool]:
    """I_i^+/I_i^- membership for an inner variable index i < a.level."""
    plus = True
    minus = True
    for entry in _reachable_entries(a):
        ep, em = _flags(entry, i)
        plus = plus and ep
        minus = minus and em
        if not (plus or minus):
            break
    return plus, minus


def _flags(a: TateOp, i: int) -> tuple[bool, bool]:
    if i == a.level:
        return a.outer_flags()
    return _inner_flags(a, i)


def cubical_membership(a: TateOp) -> CubicalReport:
    """Decide membership in every I_i^+/I_i^-; trace-class iff all 2n hold."""
    plus = []
    minus = []
    for i in range(1, a.level + 1):
        p, m = _flags(a, i)
        plus.append(p)
        minus.append(m)
    return CubicalReport(tuple(plus), tuple(minus),
                         all(plus) and all(minus))


def good_idempotents(n: int, field: Field) -> list[TateOp]:
    """The standard commuting idempotents P_i^+ cutting off nonnegative
    exponents of variable i (innermost first)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return [TateOp.proj_plus(0, 1, field)]
    inner = good_idempotents(n - 1, field)
    lifted = [TateOp(n, field, {(DIAG, 0): EvSeq.constant(p)}) for p in inner]
    lifted.append(TateOp.proj_plus(0, n, field))
    return lifted


def split_i(a: TateOp, i: int) -> tuple[TateOp, TateOp]:
    """(P_i^+ a, P_i^- a): the I_i^+ and I_i^- parts, summing to a."""
    if not 1 <= i <= a.level:
        raise IndexError(f"variable index {i} out of range 1..{a.level}")
    p = good_idempotents(a.level, a.field)[i - 1]
    p_minus = TateOp.identity(a.level, a.field) - p
    return p * a, p_minus * a


def _outer_diagonal_entries(a: TateOp):
    """Entries on the outer main diagonal, finite for trace-class operators."""
    seq = a.lines.get((DIAG, 0))
    if seq is not None:
        for j in range(seq.window_start, seq.window_end()):
            yield seq.value(j)
    for (orient, off), seq in a.lines.items():
        if orient == ANTI and off % 2 == 0:
            yield seq.value(off // 2)
    for (i, j), v in a.corr.items():
        if i == j:
            yield v


def trace_n(a: TateOp, n_m: int | None = None, n_prime_m: int | None = None) -> Scalar:
    """Iterated trace: outer lattice factorization, then the trace of each
    diagonal entry one level down."""
    report = cubical_membership(a)
    if not report.trace_class:
        raise NotTraceClassError("operator is not trace-class")
    if a.level == 1:
        return _trace_level1(a, n_m, n_prime_m)
    if n_m is not None or n_prime_m is not None:
        row = a.bounding_row()
        kill = a.kill_column()
        lo = min(row if row is not None else 0, kill if kill is not None else 0, 0)
        hi = kill if kill is not None else 0
        use_lo = n_m if n_m is not None else lo
        use_hi = n_prime_m if n_prime_m is not None else hi
        if use_lo > lo or use_hi < hi:
            raise ValueError("outer window does not certify the factorization")
        total = a.field.zero()
        for i in range(use_lo, use_hi):
            e = a.entry(i, i)
            if isinstance(e, TateOp) and e.is_zero():
                continue
            total = total + trace_n(e)
        return total
    total = a.field.zero()
    for e in _outer_diagonal_entries(a):
        if not e.is_zero():
            total = total + trace_n(e)
    return total


def is_fully_finite(a: TateOp) -> bool:
    """True iff the canonical form is a finite correction at every level:
    the computable meaning of factoring through a finite-dimensional space."""
    if a.lines:
        return False
    if a.level == 1:
        return True
    return all(is_fully_finite(v) for v in a.corr.values())


@dataclass(frozen=True)
class WordFactorization:
    product: TateOp
    finite_at_all_levels: bool


def word_factorization(ops: list[TateOp]) -> WordFactorization:
    """Compose trace-class operators and report whether the product
    normalizes to a finite correction at every level."""
    if not ops:
        raise ValueError("empty word")
    level, field = ops[0].level, ops[0].field
    for op in ops:
        if op.level != level or op.field != field:
            raise ValueError("word letters must share level and field")
        if not cubical_membership(op).trace_class:
            raise NotTraceClassError("word letters must be trace-class")
    product = ops[0]
    for op in ops[1:]:
        product = product * op
    return WordFactorization(product, is_fully_finite(product))


def level2_flip(field: Field) -> TateOp:
    """Outer anti-diagonal of level-1 flips: trace-class at level 2 with
    infinite support at both levels.  A one-letter word that does not factor
    through a finite-dimensional space (1 < 2^2)."""
    flip = TateOp.ind_to_pro_flip(field)
    seq = EvSeq.step(flip, TateOp.zero(1, field), 0)
    return TateOp(2, field, {(ANTI, -1): seq})


def stored_two_letter_pair(field: Field) -> tuple[TateOp, TateOp]:
    """The strictest two-letter candidate witness: outer anti-diagonal
    trace-class lines whose entries are level-1 infinite-support flips,
    with offsets arranged so the product is nonzero.

    The product is necessarily finite at all levels: the outer composition
    window is finite because each factor's anti line has a vanishing right
    tail, and the entries pair two level-1 trace-class operators.
    """
    f1 = TateOp.from_line(field, ANTI, 5, EvSeq.step(field.one(), field.zero(), 6))
    f2 = TateOp.ind_to_pro_flip(field)
    z = TateOp.zero(1, field)
    w1 = TateOp(2, field, {(ANTI, -1): EvSeq.step(f1, z, 6)})
    w2 = TateOp(2, field, {(ANTI, 0): EvSeq.step(f2, z, 1)})
    return w1, w2
