"""Isomorphism classification of canonical-form curves over GF(3^d).

Curves y^2 = x^3 + a4*x + a6 (a4 != 0) are split by the fourth-power coset
of -a4 in the unit group, then within each type by a trace invariant. The
admissible change of variables between two such curves is
(x, y) = (u^2*x' + r, u^3*y') subject to

    u^4 * a4' = a4
    u^6 * a6' = a6 + r*a4 + r^3

and a witness is that pair (u, r). Types II, IIIa, IIIb only exist for
even d and their labels depend on the context's fixed primitive root.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .curve import Point, ShortCurve
from .errors import InvalidCurve, NotANonSquare
from .field import (
    FieldContext,
    FieldElement,
    chi,
    fourth_roots,
    is_fourth_power,
    solve_linearized,
    sqrt,
    trace,
)


class CurveType(str, enum.Enum):
    I = "I"
    I_PLUS = "I+"
    II = "II"
    IIIA = "IIIa"
    IIIB = "IIIb"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


INV_ZERO = "0"
INV_NONZERO = "nonzero"


@dataclass(frozen=True)
class CurveClass:
    """Type tag plus the trace invariant pinning the isomorphism class.

    invariant is "0", "1" or "-1" for odd-d type I, "0" or "nonzero" for
    even-d types I and II, and None for the single-class types.
    """

    ctype: CurveType
    invariant: Optional[str]

    def to_json(self, beta: FieldElement) -> dict:
        return {
            "type": self.ctype.value,
            "invariant": self.invariant,
            "beta": str(beta),
        }


@dataclass(frozen=True)
class IsomorphismWitness:
    """Parameters (u, r) of the change of variables between two curves.

    The induced point map sends target-model points to source-model
    points: (x', y') -> (u^2*x' + r, u^3*y').
    """

    u: FieldElement
    r: FieldElement

    def holds_between(self, source: ShortCurve, target: ShortCurve) -> bool:
        """Check both coefficient relations exactly."""
        u4 = self.u ** 4
        u6 = u4 * self.u * self.u
        lhs4 = u4 * target.a4 == source.a4
        lhs6 = u6 * target.a6 == source.a6 + self.r * source.a4 + self.r ** 3
        return lhs4 and lhs6

    def map_point(self, p: Point, source: ShortCurve) -> Point:
        """Carry a point of the target model onto the source model."""
        if p.is_infinity:
            return source.infinity()
        u2 = self.u * self.u
        x = u2 * p.x + self.r
        y = u2 * self.u * p.y
        return source.point(x, y)

    def inverted(self) -> "IsomorphismWitness":
        u_inv = self.u.inverse()
        return IsomorphismWitness(u_inv, -self.r * u_inv * u_inv)

    def compose(self, inner: "IsomorphismWitness") -> "IsomorphismWitness":
        """Witness for source -> far target given self: source -> mid
        and inner: mid -> far target."""
        u = self.u * inner.u
        r = self.r + self.u * self.u * inner.r
        return IsomorphismWitness(u, r)

    def to_json(self) -> dict:
        return {"u": str(self.u), "r": str(self.r)}


def curve_type(e: ShortCurve) -> CurveType:
    """Assign the fourth-power-coset type of -a4."""
    ctx = e.ctx
    neg_a4 = -e.a4
    if ctx.d % 2 == 1:
        return CurveType.I if chi(neg_a4) == 1 else CurveType.I_PLUS
    if is_fourth_power(neg_a4):
        return CurveType.I
    if chi(neg_a4) == 1:
        return CurveType.II
    # -a4 sits in the beta or beta^3 coset of the fourth powers
    if is_fourth_power(neg_a4 / ctx.beta):
        return CurveType.IIIA
    return CurveType.IIIB


def _fourth_root(x: FieldElement) -> FieldElement:
    """Deterministic v with v^4 = x; caller guarantees existence."""
    roots = fourth_roots(x)
    if not roots:
        raise InvalidCurve(f"{x} has no fourth root")
    return roots[0]


def class_representative(ctx: FieldContext, cls: CurveClass) -> ShortCurve:
    """The canonical curve for a class, exactly as the census lists them."""
    one = ctx.one
    alpha, beta = ctx.alpha, ctx.beta
    if cls.ctype == CurveType.I:
        a6_by_invariant = {
            "0": ctx.zero,
            "1": alpha,
            "-1": -alpha,
            INV_NONZERO: alpha,
        }
        return ShortCurve(-one, a6_by_invariant[cls.invariant])
    if cls.ctype == CurveType.I_PLUS:
        return ShortCurve(one, ctx.zero)
    if cls.ctype == CurveType.II:
        beta2 = beta * beta
        a6 = ctx.zero if cls.invariant == INV_ZERO else alpha * beta2 * beta
        return ShortCurve(-beta2, a6)
    if cls.ctype == CurveType.IIIA:
        return ShortCurve(-beta, ctx.zero)
    return ShortCurve(-beta * beta * beta, ctx.zero)


def _classify(e: ShortCurve) -> CurveClass:
    ctx = e.ctx
    ctype = curve_type(e)
    if ctype == CurveType.I:
        v = _fourth_root(-e.a4)
        b = e.a6 * v ** -6
        t = trace(b)
        if ctx.d % 2 == 1:
            return CurveClass(ctype, str(t))
        return CurveClass(ctype, INV_ZERO if t == 0 else INV_NONZERO)
    if ctype == CurveType.II:
        gamma = sqrt(-e.a4)
        t = trace(e.a6 * gamma ** -3)
        return CurveClass(ctype, INV_ZERO if t == 0 else INV_NONZERO)
    return CurveClass(ctype, None)


def isomorphic(e1: ShortCurve, e2: ShortCurve) -> Optional[IsomorphismWitness]:
    """Explicit witness e1 -> e2, or None when no isomorphism exists.

    Scans the at most four fourth roots u of a4/a4' in encoding order and,
    for each, solves the linearized equation r^3 + a4*r + (a6 - u^6*a6') = 0.
    The first solvable u wins, so results are deterministic.
    """
    if e1.ctx.key != e2.ctx.key:
        return None
    for u in fourth_roots(e1.a4 / e2.a4):
        k = e1.a6 - u ** 6 * e2.a6
        r = solve_linearized(e1.a4, k)
        if r is not None:
            return IsomorphismWitness(u, r)
    return None


def canonicalize(e: ShortCurve) -> tuple[ShortCurve, CurveClass, IsomorphismWitness]:
    """Class representative, class label, and a witness from e to it."""
    cls = _classify(e)
    rep = class_representative(e.ctx, cls)
    witness = isomorphic(e, rep)
    if witness is None:  # pragma: no cover - classification guarantees one
        raise InvalidCurve(f"no witness from {e} to its representative {rep}")
    return rep, cls, witness


def quadratic_twist(e: ShortCurve, g: FieldElement) -> ShortCurve:
    """Twist by a non-square g: (a4, a6) -> (a4*g^2, a6*g^3)."""
    if chi(g) != -1:
        raise NotANonSquare(f"{g} is a square (or zero); twists need chi(g) = -1")
    g2 = g * g
    return ShortCurve(e.a4 * g2, e.a6 * g2 * g)


@dataclass(frozen=True)
class ClassEntry:
    """One isomorphism class: representative, label, closed-form count."""

    rep: ShortCurve
    cls: CurveClass
    result: "CountResult"  # noqa: F821 - imported lazily to avoid a cycle


def list_classes(ctx: FieldContext) -> list[ClassEntry]:
    """Complete census: 4 classes for odd d, 6 for even d.

    Order is fixed: type I (invariant 0, then 1/nonzero, then -1), I+,
    II (0 then nonzero), IIIa, IIIb.
    """
    from .count import count_supersingular

    if ctx.d % 2 == 1:
        labels = [
            CurveClass(CurveType.I, "0"),
            CurveClass(CurveType.I, "1"),
            CurveClass(CurveType.I, "-1"),
            CurveClass(CurveType.I_PLUS, None),
        ]
    else:
        labels = [
            CurveClass(CurveType.I, INV_ZERO),
            CurveClass(CurveType.I, INV_NONZERO),
            CurveClass(CurveType.II, INV_ZERO),
            CurveClass(CurveType.II, INV_NONZERO),
            CurveClass(CurveType.IIIA, None),
            CurveClass(CurveType.IIIB, None),
        ]
    entries = []
    for cls in labels:
        rep = class_representative(ctx, cls)
        entries.append(ClassEntry(rep=rep, cls=cls, result=count_supersingular(rep)))
    return entries
