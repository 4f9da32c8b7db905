import math

import numpy as np
import pytest

from arcline import (
    InvalidInput,
    QuadraticBezier,
    Vec2,
    arc_radius,
    bezier_min_radius,
    compare_report,
    numeric_curvature,
)
from conftest import WORKED_RA, instances


def worked_bezier():
    return QuadraticBezier(Vec2(0.5, -0.5), Vec2(0.0, 0.0), Vec2(0.0, -0.5))


def test_min_radius_worked_example():
    r_min, t_star = bezier_min_radius(worked_bezier())
    assert r_min == pytest.approx(math.sqrt(5.0) / 25.0, rel=1e-12)
    assert r_min == pytest.approx(0.0894427, abs=1e-7)
    assert t_star == pytest.approx(0.6, abs=1e-12)


def test_min_radius_symmetric_apex():
    bez = QuadraticBezier(Vec2(-1, 0), Vec2(0, 1), Vec2(1, 0))
    _, t_star = bezier_min_radius(bez)
    assert t_star == pytest.approx(0.5, abs=1e-12)


def test_min_radius_collinear_is_infinite():
    bez = QuadraticBezier(Vec2(0, 0), Vec2(1, 0), Vec2(2, 0))
    r_min, _ = bezier_min_radius(bez)
    assert math.isinf(r_min)


def test_control_points_must_differ():
    with pytest.raises(InvalidInput):
        QuadraticBezier(Vec2(0, 0), Vec2(0, 0), Vec2(1, 0))


def _brute_force_min_radius(bez: QuadraticBezier, n: int = 100_000) -> float:
    """Independent oracle: max of the discrete curvature over n samples.

    The parameter grid is padded so every node of [0, 1] gets a centered
    stencil.  A first pass locates the peak; the second pass evaluates a
    translated copy of the curve (curvature is translation-invariant) so
    the coordinates near the peak are tiny and the 1/h^2 amplification
    of point rounding stays below the requested accuracy.
    """
    ts = np.arange(-2, n + 3) / float(n)
    inside = [j for j, t in enumerate(ts) if 0.0 <= t <= 1.0]

    def sampled_max(b: QuadraticBezier) -> tuple[float, int]:
        kappa = numeric_curvature([b.point(float(t)) for t in ts])
        j_star = max(inside, key=lambda j: abs(kappa[j]))
        return abs(kappa[j_star]), j_star

    _, j1 = sampled_max(bez)
    shift = bez.point(float(ts[j1]))
    shifted = QuadraticBezier(bez.p0 - shift, bez.p1 - shift, bez.p2 - shift)
    peak, _ = sampled_max(shifted)
    return 1.0 / peak


def test_min_radius_against_brute_force():
    for inst in instances(seed=55, count=4):
        bez = QuadraticBezier.from_instance(inst)
        r_min, _ = bezier_min_radius(bez)
        assert r_min == pytest.approx(_brute_force_min_radius(bez), rel=1e-6)


def test_tangent_directions_match_instance():
    for inst in instances(seed=56, count=10):
        bez = QuadraticBezier.from_instance(inst)
        v0 = bez.velocity(0.0)
        v1 = bez.velocity(1.0)
        assert v0.cross(inst.alpha) == pytest.approx(0.0, abs=1e-12 * v0.norm())
        assert v0.dot(inst.alpha) > 0.0
        assert v1.cross(inst.beta) == pytest.approx(0.0, abs=1e-12 * v1.norm())
        assert v1.dot(inst.beta) > 0.0


def test_bezier_never_beats_the_optimum():
    # the parabola is admissible (positive curvature, heading from alpha to
    # beta), so its minimum radius cannot exceed the optimal one
    for inst in instances(seed=57, count=50):
        bez = QuadraticBezier.from_instance(inst)
        kappas = [bez.curvature(t) for t in np.linspace(0.0, 1.0, 512)]
        assert all(k > 0.0 for k in kappas)
        r_min, _ = bezier_min_radius(bez)
        assert r_min <= arc_radius(inst) * (1.0 + 1e-12)


def test_compare_report_worked_example(worked_instance):
    report = compare_report(worked_instance)
    assert report.bezier_min_radius == pytest.approx(math.sqrt(5.0) / 25.0, rel=1e-12)
    assert report.optimal_min_radius == pytest.approx(WORKED_RA, abs=1e-15)
    expected_ratio = 5.0 * math.sqrt(5.0) * (math.sqrt(2.0) - 1.0) / 2.0
    assert report.improvement_ratio == pytest.approx(expected_ratio, rel=1e-9)
    assert report.improvement_ratio == pytest.approx(2.315, abs=1e-3)
    assert not report.degenerate
    assert set(report.as_dict()) == {"bezierMinRadius", "optimalMinRadius",
                                     "improvementRatio"}


def test_compare_report_symmetric(symmetric_instance):
    report = compare_report(symmetric_instance)
    assert report.optimal_min_radius == pytest.approx(1.0)
    assert report.improvement_ratio is not None and report.improvement_ratio > 1.0
