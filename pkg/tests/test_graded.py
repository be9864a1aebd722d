import pytest
from hypothesis import given

from strategies import objects
from tatemotive.graded import (
    UNIT,
    ExpressionError,
    GradedTateObject,
    augmentation,
    d_minus,
    d_plus,
    direct_sum,
    generator,
    gr_bar,
    gr_n,
    k0_class,
    parse_expression,
    preset,
    shift,
    tensor,
    twist,
    weight_above,
    weight_below,
    weights,
)
from tatemotive.laurent import ONE, TAU, ZERO, LaurentPolynomial

ZERO_OBJ = GradedTateObject()


def test_generators_and_basic_operations():
    assert generator(0, 0) == UNIT
    assert generator(1, 2).multiplicities == {(2, 1): 1}
    assert shift(UNIT, 1) == generator(0, 1)
    assert twist(generator(0, 2), 1) == generator(1, 2)
    x = parse_expression("Q(0)[1] + 2*Q(1)[2]")
    assert direct_sum(x, ZERO_OBJ) == x


def test_tensor_examples():
    g = generator(1, 1)
    assert tensor(g, g) == generator(2, 2)
    p1 = preset("P", 1)
    assert tensor(p1, UNIT) == p1
    assert tensor(p1, p1) == GradedTateObject({(0, 0): 1, (2, 1): 2, (4, 2): 1})
    assert k0_class(tensor(p1, p1)) == (ONE + TAU) * (ONE + TAU)


def test_weight_truncations_on_generators():
    x = direct_sum(UNIT, generator(2, 3))
    assert weight_below(x, 1) == UNIT
    assert weight_above(generator(4, 7), 4) == ZERO_OBJ
    assert weight_above(generator(4, 7), 3) == generator(4, 7)
    assert weight_below(generator(4, 7), 4) == ZERO_OBJ


@given(objects(5))
def test_graded_pieces_partition_support(x):
    assert direct_sum(*(gr_n(x, n) for n in weights(x))) == x
    assert all(gr_n(x, n) for n in weights(x))


@given(objects(4))
def test_truncations_commute(x):
    for n in range(-3, 4):
        for m in range(-3, 4):
            assert weight_below(weight_above(x, m), n) == weight_above(weight_below(x, n), m)


def test_gr_bar_convention():
    assert gr_bar(UNIT) == {0: 1}
    assert gr_bar(generator(5, 3)) == {-3: 1}
    assert gr_bar(preset("P", 2)) == {0: 1, -2: 1, -4: 1}


@given(objects(4))
def test_gr_bar_empty_iff_zero(x):
    assert (gr_bar(x) == {}) == x.is_zero()
    assert sum(gr_bar(x).values()) == d_plus(x) + d_minus(x)


def test_d_plus_d_minus():
    assert (d_plus(UNIT), d_minus(UNIT)) == (1, 0)
    x = parse_expression("Q(0)[1] + Q(2)[2]")
    assert (d_plus(x), d_minus(x)) == (1, 1)
    for n in range(6):
        assert (d_plus(preset("P", n)), d_minus(preset("P", n))) == (n + 1, 0)


@pytest.mark.parametrize("n", range(0, 11))
def test_preset_classes(n):
    assert k0_class(preset("P", n)) == sum((TAU ** i for i in range(n + 1)), ZERO)
    assert k0_class(preset("A", n)) == ONE
    assert k0_class(preset("Am0", n)) == ONE - TAU ** n


def test_preset_constructions():
    assert preset("P", 1) == parse_expression("Q(0)[0] + Q(1)[2]")
    assert preset("Am0", 2) == parse_expression("Q(0)[0] + Q(2)[3]")
    assert preset("Gm") == preset("Am0", 1)
    assert k0_class(generator(1, 1)) == -TAU
    with pytest.raises(ValueError):
        preset("X", 1)
    assert preset("Am0", 0).is_zero()


def test_augmentation():
    assert augmentation(ONE + TAU + TAU ** 2) == 3
    assert augmentation(ONE - TAU ** 4) == 0
    assert augmentation(TAU) == 1


@given(objects(5))
def test_augmentation_is_euler_characteristic(x):
    assert augmentation(k0_class(x)) == d_plus(x) - d_minus(x)


@given(objects(3), objects(3))
def test_k0_class_is_ring_homomorphism(x, y):
    assert k0_class(tensor(x, y)) == k0_class(x) * k0_class(y)
    assert k0_class(direct_sum(x, y)) == k0_class(x) + k0_class(y)


@given(objects(4))
def test_k0_class_shift_and_twist(x):
    assert k0_class(shift(x, 1)) == -k0_class(x)
    for n in (-2, 1, 3):
        assert k0_class(twist(x, n)) == TAU ** n * k0_class(x)
    assert shift(shift(x, 3), -3) == x


@given(objects(3), objects(3))
def test_no_zero_divisors(x, y):
    if tensor(x, y).is_zero():
        assert x.is_zero() or y.is_zero()


@given(objects(3), objects(3), objects(3))
def test_tensor_commutative_associative(x, y, z):
    assert tensor(x, y) == tensor(y, x)
    assert tensor(tensor(x, y), z) == tensor(x, tensor(y, z))
    assert tensor(x, UNIT) == x


def test_parse_expression_grammar():
    x = parse_expression("Q(0)[1] + 2*Q(1)[2] + P:2")
    assert x == GradedTateObject({(1, 0): 1, (2, 1): 3, (0, 0): 1, (4, 2): 1})
    assert parse_expression("Gm") == preset("Gm")
    assert parse_expression("A:3") == UNIT
    assert parse_expression("Am0:3") == preset("Am0", 3)
    assert parse_expression("Q(-1)[-2]") == generator(-1, -2)
    assert parse_expression("0").is_zero()


@pytest.mark.parametrize("text, position", [
    ("Q(0)[1] +", 9),
    ("Q(0)(1)", 4),
    ("R(1)", 0),
    ("2Q(1)[0]", 1),
    ("P:x", 2),
    ("P:-1", 2),
])
def test_parse_errors_report_position(text, position):
    with pytest.raises(ExpressionError) as info:
        parse_expression(text)
    assert info.value.position == position
    assert "expected" in str(info.value)


@given(objects(5))
def test_json_and_text_roundtrip(x):
    assert GradedTateObject.from_json(x.to_json()) == x
    assert parse_expression(str(x)) == x


def test_negative_multiplicity_rejected():
    with pytest.raises(ValueError):
        GradedTateObject({(0, 0): -1})


def test_laurent_zero_is_falsy():
    assert not k0_class(ZERO_OBJ)
    assert k0_class(parse_expression("Q(0)[0] + Q(0)[1]")) == LaurentPolynomial()
