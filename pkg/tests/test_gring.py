import itertools
import random

import pytest

from jetstrata import gring
from jetstrata.gring import (
    BadUnit,
    DegreeOverflowEntry,
    ManifoldRing,
    MissingFundamental,
    ModeMismatch,
    NonAssociative,
    NotAUnit,
    PresentationError,
    RingMap,
    RingMismatch,
    apply_map,
    identity_map,
    invert_total_class,
    is_degreewise_injective,
    kunneth_product,
    make_ring,
    pair_fundamental,
    tensor_component,
    truncated_polynomial_ring,
)

from conftest import FOUR_MANIFOLD_SPEC, four_manifold_ring


def test_point_ring():
    ring = ManifoldRing("integer_mod_torsion", 0, [("1", 0)])
    assert ring.fundamental_label == "1"
    assert pair_fundamental(ring.unit()) == 1


def test_four_manifold_ring_products(four_ring):
    x = four_ring.basis_element("x")
    x2 = four_ring.basis_element("x2")
    assert x * x == x2
    assert x * x2 == four_ring.zero()  # truncation above the top dimension
    assert four_ring.unit() * x == x


def test_degree_overflow_entry():
    spec = {
        "mode": "integer_mod_torsion",
        "topDim": 4,
        "basis": [
            {"label": "1", "degree": 0},
            {"label": "x", "degree": 2},
            {"label": "y", "degree": 5},
        ],
        "products": [],
        "fundamental": "x",
    }
    with pytest.raises(DegreeOverflowEntry):
        make_ring(spec)


def test_product_targeting_above_top_dim():
    ring_spec = {
        "mode": "integer_mod_torsion",
        "topDim": 4,
        "basis": [
            {"label": "1", "degree": 0},
            {"label": "x", "degree": 2},
            {"label": "x2", "degree": 4},
        ],
        "products": [
            {"a": "x", "b": "x2", "result": [{"label": "x2", "coeff": 1}]},
        ],
        "fundamental": "x2",
    }
    with pytest.raises((DegreeOverflowEntry, PresentationError)):
        make_ring(ring_spec)


def test_bad_unit_detection():
    with pytest.raises(BadUnit):
        ManifoldRing(
            "integer_mod_torsion",
            2,
            [("1", 0), ("e", 0), ("x", 2)],
            fundamental="x",
        )
    with pytest.raises(BadUnit):
        ManifoldRing(
            "integer_mod_torsion",
            4,
            [("1", 0), ("x", 2), ("x2", 4)],
            {("1", "x"): {"x2": 0, "x": 2}},
            "x2",
        )


def test_non_associative_detection():
    basis = [("1", 0), ("a", 2), ("b", 2), ("c", 4), ("d", 6)]
    products = {
        ("a", "a"): {"c": 1},
        ("a", "b"): {"c": 1},
        ("a", "c"): {"d": 1},
        ("b", "c"): {},
    }
    with pytest.raises(NonAssociative):
        ManifoldRing("integer_mod_torsion", 6, basis, products, "d")


def test_missing_fundamental():
    with pytest.raises(MissingFundamental):
        ManifoldRing("integer_mod_torsion", 4, [("1", 0), ("x", 2)], {}, None)
    with pytest.raises(MissingFundamental):
        ManifoldRing("integer_mod_torsion", 4, [("1", 0), ("x", 2), ("x2", 4)], {}, "x")


def test_integer_mode_rejects_odd_degrees():
    with pytest.raises(PresentationError):
        ManifoldRing("integer_mod_torsion", 3, [("1", 0), ("w", 3)], {}, "w")
    # the same shape is fine mod 2
    ManifoldRing("mod2", 3, [("1", 0), ("w", 3)], {}, "w")


def test_add_examples(four_ring):
    x = four_ring.basis_element("x")
    assert x + four_ring.zero() == x
    assert 3 * x + 4 * x == four_ring.element({"x": 7})


def test_mod2_addition_cancels():
    ring = ManifoldRing("mod2", 2, [("1", 0), ("x", 1), ("y", 2)], {("x", "x"): {"y": 1}}, "y")
    x = ring.basis_element("x")
    assert x + x == ring.zero()
    assert -x == x


def test_ring_mismatch_on_mixed_arithmetic():
    a = four_manifold_ring()
    b = four_manifold_ring()
    with pytest.raises(RingMismatch):
        a.basis_element("x") + b.basis_element("x")
    with pytest.raises(RingMismatch):
        a.basis_element("x") * b.basis_element("x")


def test_invert_total_class_identity(four_ring):
    assert invert_total_class(four_ring.unit()) == four_ring.unit()


def test_invert_total_class_geometric_series():
    ring = truncated_polynomial_ring("integer_mod_torsion", 12, [("t", 4)])
    t = ring.basis_element("t")
    inverse = invert_total_class(ring.unit() + t)
    expected = ring.unit() - t + t * t - t * t * t
    assert inverse == expected


def test_invert_total_class_single_step(four_ring):
    total = four_ring.element({"1": 1, "x2": 3})
    inverse = invert_total_class(total)
    assert inverse == four_ring.element({"1": 1, "x2": -3})
    assert total * inverse == four_ring.unit()


def test_invert_total_class_requires_unit(four_ring):
    with pytest.raises(NotAUnit):
        invert_total_class(four_ring.basis_element("x"))
    with pytest.raises(NotAUnit):
        invert_total_class(2 * four_ring.unit())


def test_invert_involution_randomized(four_ring):
    rng = random.Random(20240817)
    ring8 = truncated_polynomial_ring(
        "integer_mod_torsion", 8, [("a", 2), ("b", 4)], fundamental="b^2"
    )
    for ring in (four_ring, ring8):
        labels = [l for l in ring.labels if l != ring.unit_label]
        for _ in range(25):
            coeffs = {ring.unit_label: 1}
            for label in labels:
                coeffs[label] = rng.randint(-9, 9)
            total = ring.element(coeffs)
            inverse = invert_total_class(total)
            assert total * inverse == ring.unit()
            assert invert_total_class(inverse) == total


def test_kunneth_with_point():
    ring = four_manifold_ring()
    point = ManifoldRing("integer_mod_torsion", 0, [("1", 0)])
    product, inject, _ = kunneth_product(ring, point)
    assert product.top_dim == ring.top_dim
    assert len(product.labels) == len(ring.labels)
    x = ring.basis_element("x")
    assert pair_fundamental(inject(x * x)) == 1


def test_kunneth_product_of_two_four_manifolds():
    a = four_manifold_ring()
    b = four_manifold_ring()
    product, qa, qb = kunneth_product(a, b)
    assert len(product.labels) == 9
    assert product.top_dim == 8
    assert product.fundamental_label == f"x2{gring.TENSOR_SEPARATOR}x2"
    x = a.basis_element("x")
    y = b.basis_element("x")
    assert qa(x) * qb(y) == product.basis_element(f"x{gring.TENSOR_SEPARATOR}x")


def test_kunneth_mode_mismatch():
    a = four_manifold_ring()
    b = ManifoldRing("mod2", 2, [("1", 0), ("u", 2)], {}, "u")
    with pytest.raises(ModeMismatch):
        kunneth_product(a, b)


def test_kunneth_pairing_factorizes():
    a = four_manifold_ring()
    b = four_manifold_ring()
    product, qa, qb = kunneth_product(a, b)
    top_a = a.basis_element("x2")
    top_b = b.basis_element("x2")
    assert pair_fundamental(qa(3 * top_a) * qb(5 * top_b)) == 15


def test_pair_fundamental_examples(four_ring):
    assert pair_fundamental(four_ring.basis_element("x2")) == 1
    assert pair_fundamental(four_ring.zero()) == 0
    assert pair_fundamental(four_ring.element({"x2": 5})) == 5
    assert pair_fundamental(four_ring.basis_element("x")) == 0


def test_apply_map_identity(four_ring):
    ident = identity_map(four_ring)
    c = four_ring.element({"1": 2, "x": -1, "x2": 4})
    assert apply_map(ident, c) == c


def test_apply_map_multiplicative_on_random_pairs():
    a = four_manifold_ring()
    b = four_manifold_ring()
    product, qa, _ = kunneth_product(a, b)
    rng = random.Random(7)
    labels = list(a.labels)
    for _ in range(20):
        u = a.element({rng.choice(labels): rng.randint(-4, 4)})
        v = a.element({rng.choice(labels): rng.randint(-4, 4)})
        assert qa(u * v) == qa(u) * qa(v)


def test_map_rejects_non_multiplicative_images():
    ring = four_manifold_ring()
    other = four_manifold_ring()
    images = {
        "1": other.unit(),
        "x": 2 * other.basis_element("x"),
        "x2": other.basis_element("x2"),  # should be 4*x2 to stay multiplicative
    }
    with pytest.raises(PresentationError):
        RingMap(ring, other, images)


def test_map_rejects_degree_shift():
    ring = four_manifold_ring()
    other = four_manifold_ring()
    images = {
        "1": other.unit(),
        "x": other.basis_element("x2"),
        "x2": other.zero(),
    }
    with pytest.raises(PresentationError):
        RingMap(ring, other, images)


def test_injections_are_degreewise_injective():
    a = four_manifold_ring()
    b = four_manifold_ring()
    _, qa, qb = kunneth_product(a, b)
    assert is_degreewise_injective(qa)
    assert is_degreewise_injective(qb)


def test_collapsing_map_is_not_injective():
    ring = four_manifold_ring()
    point = ManifoldRing("integer_mod_torsion", 0, [("1", 0)])
    to_point = RingMap(
        ring,
        point,
        {"1": point.unit(), "x": point.zero(), "x2": point.zero()},
    )
    assert not is_degreewise_injective(to_point)


def test_tensor_component_extraction():
    a = four_manifold_ring()
    b = four_manifold_ring()
    product, qa, qb = kunneth_product(a, b)
    mixed = qa(a.basis_element("x")) * qb(b.basis_element("x")) + qa(a.basis_element("x2"))
    assert tensor_component(mixed, 4, 0) == qa(a.basis_element("x2"))
    assert tensor_component(mixed, 2, 2) == qa(a.basis_element("x")) * qb(b.basis_element("x"))
    assert tensor_component(mixed, 0, 4) == product.zero()


def test_tensor_component_requires_tensor_ring(four_ring):
    with pytest.raises(PresentationError):
        tensor_component(four_ring.unit(), 0, 0)


def test_associativity_and_commutativity_exhaustive():
    rings = [
        four_manifold_ring(),
        truncated_polynomial_ring("mod2", 6, [("u", 1), ("v", 2)], fundamental="u^2*v^2"),
    ]
    a, b = four_manifold_ring(), four_manifold_ring()
    rings.append(kunneth_product(a, b)[0])
    for ring in rings:
        elements = [ring.basis_element(l) for l in ring.labels]
        for x, y in itertools.combinations_with_replacement(elements, 2):
            assert x * y == y * x
        for x, y, z in itertools.combinations_with_replacement(elements, 3):
            assert (x * y) * z == x * (y * z)


def test_serialize_round_trip(four_ring):
    spec = four_ring.serialize()
    again = make_ring(spec)
    assert again.serialize() == spec
    assert spec["basis"] == FOUR_MANIFOLD_SPEC["basis"]


def test_element_spec_round_trip(four_ring):
    c = four_ring.element({"x": -2, "x2": 9})
    spec = gring.element_to_spec(c)
    assert gring.element_from_spec(four_ring, spec) == c


def test_map_spec_round_trip():
    a = four_manifold_ring()
    b = four_manifold_ring()
    original = RingMap(
        a,
        b,
        {"1": b.unit(), "x": -1 * b.basis_element("x"), "x2": b.basis_element("x2")},
    )
    spec = original.serialize()
    again = gring.map_from_spec(a, b, spec)
    assert again.serialize() == spec
    assert again(a.basis_element("x")) == -1 * b.basis_element("x")


def test_truncated_polynomial_ring_shape():
    ring = truncated_polynomial_ring(
        "integer_mod_torsion", 8, [("a", 4), ("b", 8)], fundamental="b"
    )
    assert set(ring.labels) == {"1", "a", "b", "a^2"}
    a = ring.basis_element("a")
    assert a * a == ring.basis_element("a^2")
    assert a * ring.basis_element("b") == ring.zero()
