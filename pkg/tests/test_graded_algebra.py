import random

import pytest

from kdual.exact_abelian import FGAbelianGroup
from kdual.expressions import ParseError, parse_expression
from kdual.graded_algebra import (
    EQ,
    PM,
    Degree,
    InstabilityError,
    PresentedRing,
    UnknownGeneratorError,
    apply_ring_hom,
    degree_component,
    element_from_json,
    mul,
    normal_monomials,
    normalize,
    verify_ring_hom,
)
from kdual.paper_rings import (
    RING_NAMES,
    build_ring,
    forget_variant_degree,
    forgetful_images,
    nonequivariant_ring,
)


def random_element(rng, ring, max_terms=4, max_exp=3, max_coeff=3):
    terms = {}
    n = len(ring.generators)
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(n))
        terms[exps] = terms.get(exps, 0) + rng.randint(-max_coeff, max_coeff)
    return ring.element(terms)


# --- degrees -------------------------------------------------------------------


def test_degree_addition_variants():
    assert Degree(1, PM) + Degree(1, PM) == Degree(2, EQ)
    assert Degree(1, PM) + Degree(2, EQ) == Degree(3, PM)
    assert Degree(0, EQ) + Degree(0, EQ) == Degree(0, EQ)


def test_period_reduction():
    kk = build_ring("kk_point")
    assert kk.reduce_degree(Degree(2, EQ)) == Degree(0, EQ)
    hh = build_ring("hh_point")
    assert hh.reduce_degree(Degree(2, EQ)) == Degree(2, EQ)


# --- normalization ---------------------------------------------------------------


def test_normalize_point_ring_relations():
    kk = build_ring("kk_point")
    sigma = kk.gen("sigma")
    t = kk.gen("t")
    assert sigma ** 3 == 2 * sigma
    assert sigma * sigma == 1 - t
    assert ((1 + t) * sigma).is_zero()


def test_normalize_torsion_coefficients():
    hh = build_ring("hh_point")
    t12 = hh.gen("t12")
    assert (2 * t12).is_zero()
    assert (3 * t12) == t12
    assert not (2 * hh.one()).is_zero()


def test_normalize_zero():
    for name in RING_NAMES:
        ring = build_ring(name)
        assert normalize(ring, ring.zero()).is_zero()
        assert normalize(ring, []).is_zero()


def test_normalize_unknown_generator_errors():
    kk = build_ring("kk_point")
    with pytest.raises(UnknownGeneratorError):
        kk.from_named_terms([({"chi": 1}, 1)])


def test_normalize_idempotent_random():
    rng = random.Random(2024)
    per_ring = 1000 // len(RING_NAMES) + 1
    for name in RING_NAMES:
        ring = build_ring(name)
        for _ in range(per_ring):
            element = random_element(rng, ring)
            again = ring.element(dict(element.terms))
            assert again == element


def test_mul_examples():
    hh = build_ring("hh_circle_flip")
    assert hh.gen("chi") * hh.gen("chi") == hh.gen("t12") * hh.gen("chi")
    kk = build_ring("kk_circle_flip")
    assert kk.gen("chi") * kk.gen("chi") == kk.gen("sigma") * kk.gen("chi")
    kp = build_ring("kk_point")
    assert mul(kp, kp.gen("sigma"), kp.gen("sigma")) == 1 - kp.gen("t")


def test_mul_exhaustive_associative_commutative():
    for name in RING_NAMES:
        ring = build_ring(name)
        monomials = [ring.element({m: 1}) for m in normal_monomials(ring, 4)]
        for a in monomials:
            for b in monomials:
                ab = a * b
                assert ab == b * a
                for c in monomials:
                    assert ab * c == a * (b * c)


def test_mul_distributive_random():
    rng = random.Random(77)
    for name in RING_NAMES:
        ring = build_ring(name)
        for _ in range(120):
            a = random_element(rng, ring)
            b = random_element(rng, ring)
            c = random_element(rng, ring)
            assert a * (b + c) == a * b + a * c


def test_graded_unit():
    rng = random.Random(5)
    for name in RING_NAMES:
        ring = build_ring(name)
        for _ in range(50):
            a = random_element(rng, ring)
            assert ring.one() * a == a


def test_homogeneity_flags():
    kk = build_ring("kk_circle_flip")
    assert kk.gen("chi").is_homogeneous(Degree(1, PM))
    mixed = kk.one() + kk.gen("chi")
    assert mixed.degree() is None
    assert not mixed.is_homogeneous()
    assert kk.zero().is_homogeneous(Degree(5, PM))


# --- degree slices ---------------------------------------------------------------


def test_degree_component_flip_circle():
    hh = build_ring("hh_circle_flip")
    slice_ = degree_component(hh, Degree(2, EQ))
    assert slice_.group == FGAbelianGroup((2, 2))
    assert set(slice_.labels) == {"t12*chi", "t12^2"}


def test_degree_component_point():
    hh = build_ring("hh_point")
    slice_ = degree_component(hh, Degree(1, PM))
    assert slice_.group == FGAbelianGroup((2,))
    assert slice_.labels == ("t12",)


def test_degree_component_classifying_space():
    hh = build_ring("hh_cp_infty")
    slice_ = degree_component(hh, Degree(2, PM))
    assert slice_.group == FGAbelianGroup((0,))
    assert slice_.labels == ("c",)


def test_degree_component_instability():
    hh = build_ring("hh_cp_infty")
    with pytest.raises(InstabilityError):
        degree_component(hh, Degree(8, EQ), exponent_bound=3)
    stable = degree_component(hh, Degree(8, EQ), exponent_bound=8)
    assert set(stable.labels) == {"c^4", "t12^4*c^2", "t12^8"}
    assert stable.group == FGAbelianGroup((2, 2, 0))


def test_periodic_slices_agree_modulo_period():
    kk = build_ring("kk_torus2")
    for variant in (EQ, PM):
        reduced = degree_component(kk, Degree(0, variant))
        shifted = degree_component(kk, Degree(2, variant))
        negative = degree_component(kk, Degree(-2, variant))
        assert shifted.monomials == reduced.monomials
        assert negative.monomials == reduced.monomials


def test_random_parenthesization_agrees():
    rng = random.Random(404)
    for name in RING_NAMES:
        ring = build_ring(name)
        for _ in range(40):
            factors = [random_element(rng, ring, max_terms=2, max_exp=2)
                       for _ in range(4)]
            left = ((factors[0] * factors[1]) * factors[2]) * factors[3]
            right = factors[0] * (factors[1] * (factors[2] * factors[3]))
            middle = (factors[0] * factors[1]) * (factors[2] * factors[3])
            assert left == right == middle


def test_kk_point_slices():
    kk = build_ring("kk_point")
    even = degree_component(kk, Degree(0, EQ))
    assert even.labels == ("1", "t")
    assert even.group == FGAbelianGroup((0, 0))
    odd = degree_component(kk, Degree(1, PM))
    assert odd.labels == ("sigma",)
    assert odd.group == FGAbelianGroup((0,))


# --- ring homomorphisms -------------------------------------------------------------


def test_forgetful_map_flip_circle():
    source = build_ring("hh_circle_flip")
    target, images = forgetful_images("hh_circle_flip")
    assert verify_ring_hom(source, target, images, forget_variant_degree)


def test_pullback_circle_to_torus_is_hom():
    circle = build_ring("kk_circle_flip")
    torus = build_ring("kk_torus2")
    images = {"t": torus.gen("t"), "sigma": torus.gen("sigma"), "chi": torus.gen("chi1")}
    assert verify_ring_hom(circle, torus, images)


def test_bogus_map_rejected():
    kk = build_ring("kk_point")
    images = {"t": kk.gen("t"), "sigma": kk.one()}
    assert not verify_ring_hom(kk, kk, images)


def test_wrong_torsion_rejected():
    hh = build_ring("hh_point")
    target = nonequivariant_ring("h_circle")
    # t12 has order two; e does not, so t12 -> e violates the coefficient order
    assert not verify_ring_hom(hh, target, {"t12": target.gen("e")},
                               forget_variant_degree)


def test_apply_hom_is_multiplicative():
    circle = build_ring("kk_circle_flip")
    torus = build_ring("kk_torus2")
    images = {"t": torus.gen("t"), "sigma": torus.gen("sigma"), "chi": torus.gen("chi1")}
    rng = random.Random(8)
    for _ in range(40):
        a = random_element(rng, circle, max_exp=2)
        b = random_element(rng, circle, max_exp=2)
        assert (apply_ring_hom(circle, torus, images, a * b)
                == apply_ring_hom(circle, torus, images, a)
                * apply_ring_hom(circle, torus, images, b))


# --- parsing and serialization ---------------------------------------------------


def test_parse_expression_examples():
    kk = build_ring("kk_circle_flip")
    assert parse_expression(kk, "chi^2") == kk.gen("sigma") * kk.gen("chi")
    assert parse_expression(kk, "0").is_zero()
    torus = build_ring("kk_torus2")
    kernel = parse_expression(torus, "(1 + t*chi1*chi2)")
    assert kernel == torus.one() + torus.gen("t") * torus.gen("chi1") * torus.gen("chi2")


def test_parse_accepts_t_alias_in_h_rings():
    hh = build_ring("hh_circle_trivial")
    assert parse_expression(hh, "t*e") == hh.gen("t12") ** 2 * hh.gen("e")


def test_parse_error_position():
    kk = build_ring("kk_point")
    with pytest.raises(ParseError) as err:
        parse_expression(kk, "sigma + ")
    assert err.value.position == 8
    with pytest.raises(ParseError):
        parse_expression(kk, "nope")


def test_element_serialization_round_trip():
    rng = random.Random(13)
    for name in RING_NAMES:
        ring = build_ring(name)
        for _ in range(25):
            element = random_element(rng, ring)
            assert element_from_json(ring, element.to_json()) == element


def test_rule_orientation_is_checked():
    with pytest.raises(ValueError):
        PresentedRing.define("bad", [("x", 1, EQ, 0)],
                             [({"x": 1}, [({"x": 2}, 1)])])


def test_rules_must_be_homogeneous():
    with pytest.raises(ValueError):
        PresentedRing.define("bad2", [("x", 1, EQ, 0), ("y", 2, EQ, 0)],
                             [({"y": 1}, [({"x": 1}, 1)])])
