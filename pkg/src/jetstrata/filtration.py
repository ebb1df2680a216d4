"""Filtration-sequence construction: index recursion, dimension bookkeeping,
product-manifold assembly, and the check that each stage's obstruction class
survives pullback to the product.

A run is built from a strictly increasing schedule of codimension budgets
l_0 < l_1 < ... < l_{d+1} and, for each stage t <= d, a synthetic ring of
dimension 8*i_t^2 (where i_t is the smallest index whose cubic inequality
clears budget l_t) together with a virtual bundle whose even-stratum
determinant class is nonzero.  The product ring is the iterated tensor of the
stage rings; on it, the stage-t difference bundle is the pullback of the
stage's own difference bundle, every other factor cancelling.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .charclass import ObstructionClass, VirtualBundle, porteous_pontrjagin
from .gring import (
    CoefficientMode,
    ConsistencyError,
    GradedElement,
    ManifoldRing,
    ModeMismatch,
    RingMap,
    RingMismatch,
    compose,
    identity_map,
    kunneth_product,
)
from .symbols import INFINITE_ORDER, JetContext


class FiltrationError(ValueError):
    pass


class ScheduleNotIncreasing(FiltrationError):
    pass


class DimensionMismatch(FiltrationError):
    pass


# Same failure kind under the name some callers use.
DimMismatch = DimensionMismatch


class StageObstructionVanishes(FiltrationError):
    pass


class StageOutOfRange(FiltrationError):
    pass


def _cubic_cap(index: int) -> int:
    # Largest budget the given index clears: 4i^3 - 2i^2 >= 4i^2 + l.
    return 4 * index**3 - 6 * index**2


_caps: list[int] = [_cubic_cap(1)]


def next_index(budget: int) -> int:
    """Smallest index i >= 1 with 4i^3 - 2i^2 >= 4i^2 + budget.

    The predicate is monotone in i, so the answer is a bisection against the
    precomputed caps 4i^3 - 6i^2; the cap table grows on demand, making the
    recursion total for every budget.
    """
    if not isinstance(budget, int) or budget < 0:
        raise FiltrationError(f"budget must be a nonnegative integer, got {budget!r}")
    caps = _caps
    while caps[-1] < budget:
        caps.append(_cubic_cap(len(caps) + 1))
    return bisect_left(caps, budget) + 1


@dataclass(frozen=True)
class FiltrationStage:
    """One stage: its kernel rank 2*i_t, budget, dimension 8*i_t^2, ring,
    difference bundle and the (verified nonzero) stage obstruction class."""

    t: int
    kernel_rank: int
    budget: int
    dim: int
    ring: ManifoldRing
    bundle: VirtualBundle
    obstruction: ObstructionClass


@dataclass(frozen=True)
class FiltrationRun:
    depth: int
    schedule: tuple[int, ...]
    stages: tuple[FiltrationStage, ...]
    product_ring: ManifoldRing
    injections: tuple[RingMap, ...]


def _stage_context(dim: int) -> JetContext:
    return JetContext(dim, dim, INFINITE_ORDER)


def stage_obstruction(kernel_rank: int, bundle: VirtualBundle) -> ObstructionClass:
    """Even-stratum determinant class of a stage bundle on its own ring."""
    return porteous_pontrjagin(
        kernel_rank, _stage_context(bundle.ring.top_dim), bundle
    )


def build_run(depth: int, schedule, stage_bundles) -> FiltrationRun:
    """Assemble and verify a filtration run.

    ``schedule`` must list the d+2 budgets l_0..l_{d+1}, strictly increasing;
    ``stage_bundles`` the d+1 stage difference bundles, each on a ring of
    dimension 8*i_t^2 declared orientable, with nonzero stage obstruction.
    """
    if not isinstance(depth, int) or depth < 0:
        raise FiltrationError(f"depth must be a nonnegative integer, got {depth!r}")
    schedule = tuple(schedule)
    if len(schedule) < depth + 2:
        raise ScheduleNotIncreasing(
            f"schedule must list budgets l_0..l_{depth + 1}, got {len(schedule)} entries"
        )
    for value in schedule:
        if not isinstance(value, int) or value < 0:
            raise ScheduleNotIncreasing(f"budgets must be nonnegative integers, got {value!r}")
    for a, b in zip(schedule, schedule[1:]):
        if b <= a:
            raise ScheduleNotIncreasing(f"schedule is not strictly increasing at {a} -> {b}")
    stage_bundles = list(stage_bundles)
    if len(stage_bundles) != depth + 1:
        raise FiltrationError(
            f"expected {depth + 1} stage bundles for depth {depth}, got {len(stage_bundles)}"
        )

    stages = []
    for t, bundle in enumerate(stage_bundles):
        index = next_index(schedule[t])
        dim = 8 * index * index
        ring = bundle.ring
        if ring.mode is not CoefficientMode.INTEGER_MOD_TORSION:
            raise ModeMismatch(f"stage {t} ring must use integer coefficients")
        if not ring.orientable:
            raise FiltrationError(f"stage {t} ring must declare an orientation")
        if ring.top_dim != dim:
            raise DimensionMismatch(
                f"stage {t} needs a ring of dimension {dim} (= 8*{index}^2), "
                f"got {ring.top_dim}"
            )
        if not 4 * index**3 - 2 * index**2 >= 4 * index**2 + schedule[t]:
            raise ConsistencyError("stage index fails its own defining inequality")
        obstruction = stage_obstruction(2 * index, bundle)
        if obstruction.is_zero:
            raise StageObstructionVanishes(
                f"stage {t} determinant class of kernel rank {2 * index} vanishes"
            )
        stages.append(
            FiltrationStage(t, 2 * index, schedule[t], dim, ring, bundle, obstruction)
        )

    product_ring = stages[0].ring
    injections: list[RingMap] = [identity_map(product_ring)]
    for stage in stages[1:]:
        product_ring, keep_left, inject_right = kunneth_product(product_ring, stage.ring)
        injections = [compose(keep_left, m) for m in injections]
        injections.append(inject_right)

    if product_ring.top_dim != sum(s.dim for s in stages):
        raise ConsistencyError("product dimension differs from the sum of stage dimensions")
    return FiltrationRun(depth, schedule, tuple(stages), product_ring, tuple(injections))


def product_obstruction(run: FiltrationRun, t: int) -> ObstructionClass:
    """Stage-t obstruction computed on the product ring.

    The difference bundle on the product has every non-t factor cancelling,
    so its totals are the products of all injected stage totals with only the
    t-th negative total swapped in.  The resulting determinant class must
    equal the injection of the stage obstruction; any disagreement is an
    internal inconsistency.
    """
    if not isinstance(t, int) or t < 0 or t > run.depth:
        raise StageOutOfRange(f"stage {t} outside 0..{run.depth}")
    ring = run.product_ring
    total_positive = ring.unit()
    total_negative = ring.unit()
    for stage, inject in zip(run.stages, run.injections):
        total_positive = total_positive * inject(stage.bundle.total_positive)
        if stage.t == t:
            total_negative = total_negative * inject(stage.bundle.total_negative_pulled)
        else:
            total_negative = total_negative * inject(stage.bundle.total_positive)
    bundle = VirtualBundle(total_positive, total_negative)
    stage = run.stages[t]
    obstruction = porteous_pontrjagin(
        stage.kernel_rank, _stage_context(ring.top_dim), bundle
    )
    pulled = run.injections[t](stage.obstruction.value)
    if obstruction.value != pulled:
        raise ConsistencyError(
            "product obstruction differs from the injected stage obstruction"
        )
    return obstruction


@dataclass(frozen=True)
class DoubleConstruction:
    """Self-map of a product of two equal-dimensional manifolds swapping the
    factors through a homotopy equivalence and its inverse: the product ring,
    the difference bundle of the swap map, the factor injections, and the
    one-factor difference bundle it mirrors."""

    product_ring: ManifoldRing
    bundle: VirtualBundle
    inject_left: RingMap
    inject_right: RingMap
    factor_bundle: VirtualBundle


def double_construction(
    tangent_total_left: GradedElement,
    tangent_total_right: GradedElement,
    pullback: RingMap,
    inverse_pullback: RingMap,
) -> DoubleConstruction:
    """Difference bundle of the factor-swapping self-map of a product.

    ``tangent_total_left`` and ``tangent_total_right`` are the tangent totals
    of the two factors; ``pullback`` maps the right ring into the left one
    (the action of the equivalence on cohomology) and ``inverse_pullback``
    the left ring into the right one (its declared homotopy inverse, trusted
    as input).  The product bundle's positive total is the tensor of the two
    tangent totals; the negative total tensors the two pulled-back totals.
    """
    ring_left = tangent_total_left.ring
    ring_right = tangent_total_right.ring
    if ring_left.mode is not CoefficientMode.INTEGER_MOD_TORSION or (
        ring_right.mode is not CoefficientMode.INTEGER_MOD_TORSION
    ):
        raise ModeMismatch("both factors must use integer coefficients")
    if ring_left.top_dim != ring_right.top_dim:
        raise DimensionMismatch(
            f"factors must share a dimension, got {ring_left.top_dim} and {ring_right.top_dim}"
        )
    if pullback.source is not ring_right or pullback.target is not ring_left:
        raise RingMismatch("pullback must map the right ring into the left ring")
    if inverse_pullback.source is not ring_left or inverse_pullback.target is not ring_right:
        raise RingMismatch("inverse pullback must map the left ring into the right ring")

    factor_bundle = VirtualBundle(tangent_total_left, pullback(tangent_total_right))
    product_ring, inject_left, inject_right = kunneth_product(ring_left, ring_right)
    total_positive = inject_left(tangent_total_left) * inject_right(tangent_total_right)
    total_negative = inject_left(pullback(tangent_total_right)) * inject_right(
        inverse_pullback(tangent_total_left)
    )
    bundle = VirtualBundle(total_positive, total_negative)
    return DoubleConstruction(product_ring, bundle, inject_left, inject_right, factor_bundle)
