import math

import pytest
from hypothesis import assume, given, strategies as st

from arcline import (
    DegenerateInput,
    IllPosedAngle,
    InvalidInput,
    NoAdmissibleCurve,
    Vec2,
    instance_from_json,
    instance_from_tangents,
    instance_to_json,
    make_instance,
    similarity_transform,
)
from conftest import WORKED_A, WORKED_B, WORKED_O, instances

R2 = math.sqrt(2.0) / 2.0


def test_worked_instance():
    inst = make_instance(WORKED_O, WORKED_A, WORKED_B)
    assert inst.omega == pytest.approx(3.0 * math.pi / 4.0, abs=1e-12)
    assert not inst.symmetric
    assert not inst.reversed
    assert inst.oa == pytest.approx(R2)
    assert inst.ob == pytest.approx(0.5)


def test_symmetric_quarter_turn():
    inst = make_instance(Vec2(0, 0), Vec2(0, 1), Vec2(1, 0))
    assert inst.alpha == Vec2(0, -1)
    assert inst.beta == Vec2(1, 0)
    assert inst.omega == pytest.approx(math.pi / 2, abs=1e-12)
    assert inst.symmetric


def test_collinear_rejected():
    with pytest.raises(IllPosedAngle):
        make_instance(Vec2(0, 0), Vec2(1, 0), Vec2(2, 0))


def test_near_pi_rejected():
    # tangent lines almost anti-aligned
    with pytest.raises(IllPosedAngle):
        make_instance(Vec2(0, 0), Vec2(1, 0), Vec2(-2, 1e-12))


def test_coincident_rejected():
    with pytest.raises(DegenerateInput):
        make_instance(Vec2(0, 0), Vec2(0, 0), Vec2(1, 0))


def test_reversal_normalization_and_involution():
    fwd = make_instance(WORKED_O, WORKED_A, WORKED_B)
    rev = make_instance(WORKED_O, WORKED_B, WORKED_A)
    assert rev.reversed and not fwd.reversed
    # normalization restores the forward traversal exactly
    assert rev.A == fwd.A and rev.B == fwd.B
    assert rev.alpha == fwd.alpha and rev.beta == fwd.beta
    assert rev.omega == fwd.omega
    assert 0.0 < rev.omega < math.pi


def test_from_tangents_worked_example():
    inst = instance_from_tangents(WORKED_A, WORKED_B, Vec2(-R2, R2), Vec2(0.0, -1.0))
    assert abs(inst.O.x) < 1e-12 and abs(inst.O.y) < 1e-12
    assert inst.omega == pytest.approx(3.0 * math.pi / 4.0, abs=1e-12)


def test_from_tangents_axes():
    inst = instance_from_tangents(Vec2(0, 1), Vec2(1, 0), Vec2(0, -1), Vec2(1, 0))
    assert abs(inst.O.x) < 1e-12 and abs(inst.O.y) < 1e-12


def test_from_tangents_wrong_orientation():
    with pytest.raises(NoAdmissibleCurve):
        instance_from_tangents(Vec2(0, 1), Vec2(1, 0), Vec2(0, 1), Vec2(1, 0))


def test_from_tangents_parallel():
    with pytest.raises(IllPosedAngle):
        instance_from_tangents(Vec2(0, 0), Vec2(1, 1), Vec2(1, 0), Vec2(1, 0))


def test_tangent_form_reproduces_point_form():
    for inst in instances(seed=701, count=50):
        again = instance_from_tangents(inst.A, inst.B, inst.alpha, inst.beta)
        assert (again.O - inst.O).norm() <= 1e-9 * inst.diameter
        assert again.omega == pytest.approx(inst.omega, abs=1e-9)
        assert (again.alpha - inst.alpha).norm() <= 1e-9
        assert (again.beta - inst.beta).norm() <= 1e-9


coords = st.floats(min_value=-10.0, max_value=10.0,
                   allow_nan=False, allow_infinity=False)


@given(coords, coords, coords, coords, coords, coords)
def test_normalization_properties(ox, oy, ax, ay, bx, by):
    # whatever triple survives validation is normalized: turning angle in
    # (0, pi), unit tangents consistent with the stored points
    try:
        inst = make_instance(Vec2(ox, oy), Vec2(ax, ay), Vec2(bx, by))
    except (DegenerateInput, IllPosedAngle):
        assume(False)
        return
    assert 0.0 < inst.omega < math.pi
    assert abs(inst.alpha.norm() - 1.0) <= 1e-12
    assert abs(inst.beta.norm() - 1.0) <= 1e-12
    assert ((inst.O - inst.A) - inst.alpha * inst.oa).norm() <= 1e-9 * inst.diameter
    assert ((inst.B - inst.O) - inst.beta * inst.ob).norm() <= 1e-9 * inst.diameter


def test_similarity_transform():
    inst = make_instance(WORKED_O, WORKED_A, WORKED_B)
    same = similarity_transform(inst, 0.0, 1.0, Vec2(0, 0))
    assert same == inst
    doubled = similarity_transform(inst, 0.0, 2.0, Vec2(0, 0))
    assert doubled.oa == pytest.approx(2.0 * inst.oa)
    assert doubled.omega == inst.omega
    rotated = similarity_transform(inst, math.pi / 3.0, 1.0, Vec2(5, -1))
    assert rotated.omega == pytest.approx(inst.omega, abs=1e-12)
    assert rotated.symmetric == inst.symmetric
    with pytest.raises(InvalidInput):
        similarity_transform(inst, 0.0, -1.0, Vec2(0, 0))


def test_json_point_form_roundtrip():
    inst = instance_from_json({"A": [0.5, -0.5], "O": [0.0, 0.0], "B": [0.0, -0.5]})
    assert inst.omega == pytest.approx(3.0 * math.pi / 4.0)
    out = instance_to_json(inst)
    assert out == {"A": [0.5, -0.5], "B": [0.0, -0.5], "O": [0.0, 0.0]}


def test_json_tangent_form():
    inst = instance_from_json({"A": [0.0, 1.0], "alpha": [0.0, -1.0],
                               "B": [1.0, 0.0], "beta": [1.0, 0.0]})
    assert abs(inst.O.x) < 1e-12 and abs(inst.O.y) < 1e-12


@pytest.mark.parametrize("obj", [
    {"A": [0, 0], "B": [1, 0]},
    {"A": [0, 0], "B": [1, 0], "O": [0, 1], "alpha": [1, 0], "beta": [0, 1]},
    {"A": [0, 0], "B": [1, 0], "alpha": [1, 0]},
    {"A": "x", "B": [1, 0], "O": [0, 1]},
    [1, 2, 3],
])
def test_json_schema_violations(obj):
    with pytest.raises(InvalidInput):
        instance_from_json(obj)
