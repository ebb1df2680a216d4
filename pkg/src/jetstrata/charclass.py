"""Characteristic classes of virtual bundles and determinant obstruction classes.

A virtual bundle is the formal difference of two stable bundles, presented by
their total classes; its own total class is the first total times the formal
inverse of the second.  The obstruction class of the kernel-rank-i stratum is
a determinant in the graded classes of the virtual bundle, with the entry at
row s, column t holding the class of index i+s-t (index 0 is the unit,
negative indices are zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .gring import (
    CoefficientMode,
    ConsistencyError,
    GradedElement,
    ManifoldRing,
    ModeMismatch,
    NotAUnit,
    RingMismatch,
    invert_total_class,
)
from .symbols import JetContext


class CharClassError(ValueError):
    """Base class for characteristic-class validation failures."""


class NegativeSize(CharClassError):
    pass


class ParityError(CharClassError):
    pass


class UnsupportedDimension(CharClassError):
    pass


class NotSquare(CharClassError):
    pass


class ClassVariant(Enum):
    STIEFEL_WHITNEY = "sw"
    PONTRJAGIN = "pontrjagin"
    W_TABLE = "wtable"


class VirtualBundle:
    """Formal difference of stable bundles over one ring.

    ``total_positive`` is the total class of the positive part,
    ``total_negative_pulled`` the total class of the subtracted (pulled-back)
    part; both must have degree-0 component 1.  Mod-2 rings carry
    Stiefel-Whitney semantics, integer rings Pontrjagin semantics, in which
    case all class components must sit in degrees divisible by 4.
    """

    def __init__(self, total_positive: GradedElement, total_negative_pulled: GradedElement):
        ring = total_positive.ring
        if total_negative_pulled.ring is not ring:
            raise RingMismatch("bundle totals belong to different rings")
        for total in (total_positive, total_negative_pulled):
            if total.component(0) != ring.unit():
                raise NotAUnit("bundle totals must have degree-0 component equal to 1")
        if ring.mode is CoefficientMode.INTEGER_MOD_TORSION:
            for total in (total_positive, total_negative_pulled):
                for degree in total.support_degrees():
                    if degree % 4 != 0:
                        raise ParityError(
                            f"integer-mode total class has a component in degree {degree}, "
                            f"not a multiple of 4"
                        )
        self.ring = ring
        self.total_positive = total_positive
        self.total_negative_pulled = total_negative_pulled
        self._total_virtual: GradedElement | None = None

    @property
    def variant(self) -> ClassVariant:
        if self.ring.mode is CoefficientMode.MOD2:
            return ClassVariant.STIEFEL_WHITNEY
        return ClassVariant.PONTRJAGIN

    def virtual_total(self) -> GradedElement:
        """Total class of the difference bundle (cached)."""
        if self._total_virtual is None:
            self._total_virtual = self.total_positive * invert_total_class(
                self.total_negative_pulled
            )
        return self._total_virtual


def class_of_virtual(bundle: VirtualBundle, j: int) -> GradedElement:
    """j-th class of the virtual bundle: degree j mod 2, degree 4j integrally.

    j = 0 gives the unit, negative j gives zero.
    """
    if j < 0:
        return bundle.ring.zero()
    if j == 0:
        return bundle.ring.unit()
    degree = j if bundle.variant is ClassVariant.STIEFEL_WHITNEY else 4 * j
    return bundle.virtual_total().component(degree)


@dataclass(frozen=True)
class ObstructionClass:
    """Determinant obstruction class together with its degree bookkeeping."""

    value: GradedElement
    stratum_index: int
    expected_degree: int
    variant: ClassVariant

    def __post_init__(self):
        if not self.value.is_homogeneous(self.expected_degree):
            raise ConsistencyError(
                f"obstruction class is not homogeneous of degree {self.expected_degree}: "
                f"components in degrees {self.value.support_degrees()}"
            )

    @property
    def is_zero(self) -> bool:
        return not self.value


def det_graded(
    matrix: list[list[GradedElement]], *, ring: ManifoldRing | None = None
) -> GradedElement:
    """Determinant over a commutative graded ring; the 0x0 determinant is 1.

    Cofactor expansion with minors shared across column subsets, which keeps
    the term count at r * 2^(r-1) instead of r! while producing exactly the
    signed Leibniz sum.
    """
    rows = [list(r) for r in matrix]
    size = len(rows)
    if size == 0:
        if ring is None:
            raise NotSquare("empty determinant needs an explicit ring for its unit value")
        return ring.unit()
    for row in rows:
        if len(row) != size:
            raise NotSquare(f"matrix is {size} rows but a row has {len(row)} entries")
    owner = rows[0][0].ring
    if ring is not None and ring is not owner:
        raise RingMismatch("matrix entries do not belong to the given ring")
    for row in rows:
        for entry in row:
            if not isinstance(entry, GradedElement) or entry.ring is not owner:
                raise RingMismatch("matrix entries belong to different rings")

    current: dict[int, GradedElement] = {0: owner.unit()}
    for row in rows:
        following: dict[int, GradedElement] = {}
        for mask, minor in current.items():
            if not minor:
                continue
            for column in range(size):
                bit = 1 << column
                if mask & bit:
                    continue
                entry = row[column]
                if not entry:
                    continue
                term = minor * entry
                if (mask >> (column + 1)).bit_count() & 1:
                    term = -term
                key = mask | bit
                seen = following.get(key)
                following[key] = term if seen is None else seen + term
        current = following
    return current.get((1 << size) - 1, owner.zero())


def _class_matrix(bundle: VirtualBundle, center: int, size: int) -> list[list[GradedElement]]:
    classes: dict[int, GradedElement] = {}

    def entry(index: int) -> GradedElement:
        if index not in classes:
            classes[index] = class_of_virtual(bundle, index)
        return classes[index]

    return [[entry(center + s - t) for t in range(size)] for s in range(size)]


def porteous_sw(i: int, ctx: JetContext, bundle: VirtualBundle) -> ObstructionClass:
    """Mod-2 determinant class of the kernel-rank-i stratum: the determinant
    of the (p-n+i)-square matrix whose (s, t) entry is the class of index
    i+s-t, a homogeneous class of degree (p-n+i)*i.
    """
    if bundle.variant is not ClassVariant.STIEFEL_WHITNEY:
        raise ModeMismatch("mod-2 determinant class needs a mod-2 bundle")
    if not isinstance(i, int) or i < 1:
        raise CharClassError(f"stratum index must be a positive integer, got {i!r}")
    size = ctx.p - ctx.n + i
    if size < 0:
        raise NegativeSize(f"matrix size p-n+i = {size} is negative")
    value = det_graded(_class_matrix(bundle, i, size), ring=bundle.ring)
    return ObstructionClass(value, i, size * i, ClassVariant.STIEFEL_WHITNEY)


def porteous_pontrjagin(i: int, ctx: JetContext, bundle: VirtualBundle) -> ObstructionClass:
    """Integer determinant class of the even stratum: with n-p = 2u and
    i = 2v, the determinant of the (v-u)-square matrix whose (s, t) entry is
    the class of index v+s-t, homogeneous of degree 4*v*(v-u).
    """
    if bundle.variant is not ClassVariant.PONTRJAGIN:
        raise ModeMismatch("integer determinant class needs an integer-mode bundle")
    if not isinstance(i, int) or i < 1:
        raise CharClassError(f"stratum index must be a positive integer, got {i!r}")
    if (ctx.n - ctx.p) % 2 != 0 or i % 2 != 0:
        raise ParityError(
            f"integer determinant class needs n-p and i even, got n-p={ctx.n - ctx.p}, i={i}"
        )
    u = (ctx.n - ctx.p) // 2
    v = i // 2
    size = v - u
    if size < 0:
        raise NegativeSize(f"matrix size v-u = {size} is negative")
    value = det_graded(_class_matrix(bundle, v, size), ring=bundle.ring)
    return ObstructionClass(value, i, 4 * v * size, ClassVariant.PONTRJAGIN)


#: Integer obstruction polynomials of the full bounded-codimension stratum for
#: self-maps in dimensions 5..8: identically zero below 8; in dimension 8 the
#: combination 9*(second class) + 3*(first class squared).
W_TABLE_DIMENSIONS = (5, 6, 7, 8)


def w_table_polynomial(p: int, bundle: VirtualBundle) -> ObstructionClass:
    """Tabulated integer obstruction class for self-maps of a p-manifold,
    p in 5..8.  Zero for p = 5, 6, 7; for p = 8 the degree-8 class
    9*P2 + 3*P1^2 of the virtual bundle.
    """
    if bundle.variant is not ClassVariant.PONTRJAGIN:
        raise ModeMismatch("the obstruction table is integer-mode only")
    if p not in W_TABLE_DIMENSIONS:
        raise UnsupportedDimension(f"no tabulated polynomial for dimension {p}")
    if p in (5, 6, 7):
        value = bundle.ring.zero()
    else:
        first = class_of_virtual(bundle, 1)
        second = class_of_virtual(bundle, 2)
        value = 9 * second + 3 * (first * first)
    return ObstructionClass(value, p, p, ClassVariant.W_TABLE)


def bundle_from_spec(ring: ManifoldRing, spec) -> VirtualBundle:
    """Virtual bundle from its presentation document:
    {"totalPositive": [...], "totalNegativePulled": [...]}.
    """
    from .gring import PresentationError, element_from_spec

    if not isinstance(spec, dict):
        raise PresentationError("bundle presentation must be a JSON object")
    for key in ("totalPositive", "totalNegativePulled"):
        if key not in spec:
            raise PresentationError(f"bundle presentation is missing {key!r}")
    return VirtualBundle(
        element_from_spec(ring, spec["totalPositive"]),
        element_from_spec(ring, spec["totalNegativePulled"]),
    )


def bundle_to_spec(bundle: VirtualBundle) -> dict:
    from .gring import element_to_spec

    return {
        "totalPositive": element_to_spec(bundle.total_positive),
        "totalNegativePulled": element_to_spec(bundle.total_negative_pulled),
    }
