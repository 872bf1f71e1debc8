"""Closed-form point counts for canonical supersingular curves.

The engine is the character sum over a trace fiber,

    S_d(a) = sum of chi(x) over x with Tr(x) = a,

whose value is an explicit signed power of 3 depending only on d mod 4
and a. Orders follow as q + 1 + 3*S_d(Tr(b)) for the type-I family and
q + 1 for the bijective-map types; everything is exact integer
arithmetic (the square roots of q and 3q are integer powers of 3).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import CurveClass, CurveType, INV_NONZERO, INV_ZERO
from .curve import GeneralCurve, ReductionResult, ShortCurve, _chi_sum_cubic, reduce_curve
from .errors import DParityError, NotSupersingularError, OracleTooLarge
from .field import (
    CHI_TABLE_LIMIT,
    FieldContext,
    FieldElement,
    chi,
    is_fourth_power,
    oracle_cap,
    sqrt,
    trace,
)


@dataclass(frozen=True)
class CountResult:
    """Group order plus the trace of Frobenius t = q + 1 - order."""

    q: int
    order: int
    frobenius_trace: int
    class_used: Optional[CurveClass]

    def to_json(self, beta: Optional[FieldElement] = None) -> dict:
        cls = None
        if self.class_used is not None and beta is not None:
            cls = self.class_used.to_json(beta)
        return {
            "q": str(self.q),
            "order": str(self.order),
            "trace": str(self.frobenius_trace),
            "class": cls,
        }


def _result(q: int, order: int, cls: Optional[CurveClass]) -> CountResult:
    return CountResult(q=q, order=order, frobenius_trace=q + 1 - order, class_used=cls)


def s_closed(d: int, a: int) -> int:
    """Closed form of the fiber character sum S_d(a), a in {0, 1, -1}."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if a not in (0, 1, -1):
        raise ValueError(f"a must be 0, 1 or -1, got {a}")
    if d % 2 == 1:
        if a == 0:
            return 0
        half = 3 ** ((d - 1) // 2)
        sign = -1 if ((d - 1) // 2) % 2 else 1  # (-1)^((d-1)/2)
        return sign * half if a == 1 else -sign * half
    half = 3 ** ((d - 2) // 2)
    sign = -1 if (d // 2) % 2 else 1  # (-1)^(d/2)
    if a == 0:
        return -2 * sign * half
    return sign * half


def s_brute(ctx: FieldContext, a: int, cap: Optional[int] = None) -> int:
    """Literal sum of chi(x) over the fiber Tr(x) = a."""
    limit = oracle_cap() if cap is None else cap
    if ctx.q > limit:
        raise OracleTooLarge(f"q = {ctx.q} exceeds the enumeration cap {limit}")
    if a not in (0, 1, -1):
        raise ValueError(f"a must be 0, 1 or -1, got {a}")
    table = ctx.chi_table() if ctx.q <= CHI_TABLE_LIMIT else None
    tb = ctx._trace_coeffs
    total = 0
    for enc in range(ctx.q):
        coeffs = ctx._decode(enc)
        t = 0
        for c, w in zip(coeffs, tb):
            t += c * w
        t %= 3
        if (-1 if t == 2 else t) == a:
            if table is not None:
                total += table[enc] - 1
            else:
                total += chi(FieldElement(ctx, coeffs))
    return total


def count_type_I(d: int, trace_b: int) -> CountResult:
    """Order of y^2 = x^3 - x + b from Tr(b); equals q + 1 + 3*S_d(Tr(b))."""
    if trace_b not in (0, 1, -1):
        raise ValueError(f"trace must be 0, 1 or -1, got {trace_b}")
    q = 3**d
    if d % 2 == 1:
        cls = CurveClass(CurveType.I, str(trace_b))
        if trace_b == 0:
            return _result(q, q + 1, cls)
        root = 3 ** ((d + 1) // 2)  # sqrt(3q), exact
        sign = -1 if ((d - 1) // 2) % 2 else 1
        return _result(q, q + 1 + sign * root * trace_b, cls)
    cls = CurveClass(CurveType.I, INV_ZERO if trace_b == 0 else INV_NONZERO)
    root = 3 ** (d // 2)  # sqrt(q), exact
    sign = -1 if (d // 2) % 2 else 1
    if trace_b == 0:
        return _result(q, q + 1 - 2 * sign * root, cls)
    return _result(q, q + 1 + sign * root, cls)


def count_type_II(d: int, trace_b_gamma: int) -> CountResult:
    """Order of the quadratic twist family; even d only.

    The invariant is Tr(b * gamma^-3) for the non-square gamma with
    gamma^2 = -a4. Together with the type-I count at the same invariant
    this sums to 2(q + 1).
    """
    if d % 2 == 1:
        raise DParityError("type II curves only exist for even d")
    if trace_b_gamma not in (0, 1, -1):
        raise ValueError(f"trace must be 0, 1 or -1, got {trace_b_gamma}")
    q = 3**d
    cls = CurveClass(CurveType.II, INV_ZERO if trace_b_gamma == 0 else INV_NONZERO)
    root = 3 ** (d // 2)
    sign = -1 if (d // 2) % 2 else 1
    if trace_b_gamma == 0:
        return _result(q, q + 1 + 2 * sign * root, cls)
    return _result(q, q + 1 - sign * root, cls)


def count_trivial(d: int, ctype: CurveType) -> CountResult:
    """Types with a bijective linearized map: order exactly q + 1."""
    if ctype not in (CurveType.I_PLUS, CurveType.IIIA, CurveType.IIIB):
        raise ValueError(f"{ctype} is not one of the order-(q+1) types")
    q = 3**d
    return _result(q, q + 1, CurveClass(ctype, None))


def count_supersingular(e: ShortCurve) -> CountResult:
    """Closed-form order of a canonical supersingular curve.

    Dispatch: for odd d, test whether -a4 has a fourth root v and key on
    Tr(a6 * v^-6); for even d, extract gamma with gamma^2 = -a4 and key on
    Tr(a6 * gamma^-3) and on whether gamma itself is a square. Curves whose
    -a4 is outside the relevant coset have order exactly q + 1. The result
    does not depend on which root the extraction yields.
    """
    ctx = e.ctx
    d = ctx.d
    if d % 2 == 1:
        s = sqrt(-e.a4)
        if s is None:
            return count_trivial(d, CurveType.I_PLUS)
        v = sqrt(s) if chi(s) == 1 else sqrt(-s)
        return count_type_I(d, trace(e.a6 * v ** -6))
    gamma = sqrt(-e.a4)
    if gamma is None:
        sub = CurveType.IIIA if is_fourth_power(-e.a4 / ctx.beta) else CurveType.IIIB
        return count_trivial(d, sub)
    t = trace(e.a6 * gamma ** -3)
    if chi(gamma) == 1:
        return count_type_I(d, t)
    return count_type_II(d, t)


def count_general(
    g: GeneralCurve,
    *,
    naive_fallback: bool = False,
    cap: Optional[int] = None,
) -> CountResult:
    """Reduce to canonical form and count.

    Ordinary inputs raise NotSupersingularError carrying the j-invariant,
    unless naive_fallback is set, in which case the character-sum oracle
    is used (subject to the enumeration cap).
    """
    red = reduce_curve(g)
    if red.short is not None:
        return count_supersingular(red.short)
    if naive_fallback:
        return char_sum_order(red, cap=cap)
    raise NotSupersingularError(j=red.j)


def char_sum_order(red: ReductionResult, cap: Optional[int] = None) -> CountResult:
    """Oracle order of a reduced model y^2 = x^3 + b2*x^2 - b4*x + b6."""
    ctx = red.b2.ctx
    order = _chi_sum_cubic(ctx, red.b2, -red.b4, red.b6, cap)
    return _result(ctx.q, order, None)
