import math

import numpy as np
import pytest

from apollonian import (
    DegenerateInputError,
    IntegratorConfig,
    OutsideDiscError,
    SampledCurve,
    apollonian_distance,
    distance_via_length,
    finsler_length,
    finsler_norm,
    geodesic_arc,
    hyperbolic_segment,
    integrate_geodesic,
    trajectory_residual,
)

LOG2 = math.log(2.0)
LOG15 = math.log(1.5)


def speeds(path):
    pts, vel = path.points, path.velocities
    u = np.sum(pts * pts, axis=1)
    return (np.hypot(vel[:, 0], vel[:, 1]) + np.sum(pts * vel, axis=1)) / (1.0 - u)


class TestIntegratorConfig:
    def test_validation(self):
        IntegratorConfig(step=1e-3, max_steps=10, boundary_margin=0.05)
        with pytest.raises(ValueError):
            IntegratorConfig(step=0.0)
        with pytest.raises(ValueError):
            IntegratorConfig(max_steps=0)
        with pytest.raises(ValueError):
            IntegratorConfig(boundary_margin=0.005)


class TestIntegration:
    def test_radial_geodesic_stays_on_axis(self):
        path = integrate_geodesic((0, 0), (1, 0), t_end=1.5)
        assert np.all(path.points[:, 1] == 0.0)
        assert np.all(np.diff(path.points[:, 0]) > 0.0)

    def test_unit_speed_conserved(self):
        path = integrate_geodesic((0.1, 0.3), (1, -2), t_end=1.0)
        assert np.max(np.abs(speeds(path) - 1.0)) <= 1e-8

    def test_curved_launch_stays_on_known_carrier(self):
        # tangent of the carrier through (0, 0.5) and (0.5, 0) at the first
        # point, oriented toward the second: perpendicular to z1 - center
        arc = geodesic_arc((0, 0.5), (0.5, 0))
        tangent = np.array([0.75, -1.25])
        path = integrate_geodesic((0, 0.5), tangent, t_end=1.0)
        assert trajectory_residual(path, arc) <= 1e-6
        assert np.max(np.abs(speeds(path) - 1.0)) <= 1e-10

    def test_fourth_order_convergence(self):
        x0, v0 = (0.0, 0.5), (0.75, -1.25)
        ref = integrate_geodesic(x0, v0, 0.8, IntegratorConfig(step=1e-4)).points[-1]
        errs = []
        for h in (0.04, 0.02):
            end = integrate_geodesic(x0, v0, 0.8, IntegratorConfig(step=h)).points[-1]
            errs.append(np.max(np.abs(end - ref)))
        ratio = errs[0] / errs[1]
        assert 8.0 < ratio < 32.0

    def test_boundary_exit_truncates(self):
        path = integrate_geodesic((0, 0), (1, 0), t_end=10.0,
                                  config=IntegratorConfig(boundary_margin=0.05))
        assert path.exit_reason == "boundary"
        assert np.all(np.hypot(path.points[:, 0], path.points[:, 1]) <= 0.95)
        assert path.t[-1] < 10.0

    def test_rejects_zero_direction(self):
        from apollonian import ZeroTangentError
        with pytest.raises(ZeroTangentError):
            integrate_geodesic((0, 0), (0, 0), 1.0)


class TestFinslerLength:
    def test_constant_path_is_zero(self):
        t = np.linspace(0, 1, 33)
        c = SampledCurve(t=t, points=np.tile([0.2, 0.1], (33, 1)), velocities=np.zeros((33, 2)))
        assert finsler_length(c) == 0.0

    def test_radial_segment_forward_and_back(self):
        seg = hyperbolic_segment((0, 0), (0.5, 0), 1024)
        assert finsler_length(seg) == pytest.approx(LOG2, abs=1e-8)
        seg = hyperbolic_segment((0.5, 0), (0, 0), 1024)
        assert finsler_length(seg) == pytest.approx(LOG15, abs=1e-8)

    def test_concatenation_additivity(self):
        # pairing from the left is exactly additive when the first part has
        # an even number of intervals
        seg = hyperbolic_segment((0, 0.5), (0.5, 0), 256)
        left = SampledCurve(t=seg.t[:129], points=seg.points[:129], velocities=seg.velocities[:129])
        right = SampledCurve(t=seg.t[128:], points=seg.points[128:], velocities=seg.velocities[128:])
        assert finsler_length(left) + finsler_length(right) == pytest.approx(
            finsler_length(seg), abs=1e-12)

    def test_domain_error_on_outside_sample(self):
        t = np.array([0.0, 1.0])
        c = SampledCurve(t=t, points=np.array([[0.0, 0.0], [1.5, 0.0]]),
                         velocities=np.ones((2, 2)))
        with pytest.raises(OutsideDiscError):
            finsler_length(c)

    def test_needs_two_samples(self):
        c = SampledCurve(t=np.zeros(1), points=np.zeros((1, 2)), velocities=np.zeros((1, 2)))
        with pytest.raises(ValueError):
            finsler_length(c)


class TestHyperbolicSegment:
    def test_diameter_samples(self):
        seg = hyperbolic_segment((0, 0), (0.5, 0), 64)
        assert len(seg) == 65
        assert np.all(seg.points[:, 1] == 0.0)
        assert tuple(seg.points[0]) == (0.0, 0.0)
        assert tuple(seg.points[-1]) == (0.5, 0.0)

    def test_circle_samples_on_carrier(self):
        seg = hyperbolic_segment((0, 0.5), (0.5, 0), 64)
        c = np.array([1.25, 1.25])
        r = math.sqrt(2.125)
        gaps = np.abs(np.hypot(seg.points[:, 0] - c[0], seg.points[:, 1] - c[1]) - r)
        assert np.max(gaps) <= 1e-12
        assert tuple(seg.points[0]) == (0.0, 0.5)
        assert tuple(seg.points[-1]) == (0.5, 0.0)

    def test_velocities_are_tangent(self):
        seg = hyperbolic_segment((0, 0.5), (0.5, 0), 64)
        c = np.array([1.25, 1.25])
        radial = seg.points - c
        dots = np.abs(np.sum(radial * seg.velocities, axis=1))
        assert np.max(dots) <= 1e-12

    def test_input_validation(self):
        with pytest.raises(ValueError):
            hyperbolic_segment((0, 0), (0.5, 0), 8)
        with pytest.raises(DegenerateInputError):
            hyperbolic_segment((0.2, 0.2), (0.2, 0.2), 64)


class TestDistanceViaLength:
    def test_radial_values(self):
        assert distance_via_length((0, 0), (0.5, 0), 1024) == pytest.approx(LOG2, abs=1e-8)
        assert distance_via_length((0.5, 0), (0, 0), 1024) == pytest.approx(LOG15, abs=1e-8)

    def test_matches_closed_form_generally(self, rng, disc_sampler):
        pts = disc_sampler(rng, 30, r_max=0.8)
        for z1, z2 in zip(pts[:15], pts[15:]):
            if math.hypot(*(z1 - z2)) < 1e-3:
                continue
            assert distance_via_length(z1, z2, 1024) == pytest.approx(
                apollonian_distance(z1, z2), abs=1e-6)

    def test_convergence_with_n(self):
        target = apollonian_distance((0, 0.5), (0.5, 0))
        errs = [abs(distance_via_length((0, 0.5), (0.5, 0), n) - target) for n in (64, 256, 1024)]
        assert errs[0] > errs[-1]
        assert errs[-1] <= 1e-10

    def test_minimum_sample_count(self):
        with pytest.raises(ValueError):
            distance_via_length((0, 0), (0.5, 0), 32)


class TestTrajectoryResidual:
    def test_exact_carrier_is_zero(self):
        seg = hyperbolic_segment((0, 0.5), (0.5, 0), 64)
        arc = geodesic_arc((0, 0.5), (0.5, 0))
        assert trajectory_residual(seg, arc) <= 1e-12

    def test_chord_is_not_the_geodesic(self):
        arc = geodesic_arc((0, 0.5), (0.5, 0))
        t = np.linspace(0, 1, 65)
        chord = SampledCurve(
            t=t,
            points=np.array([0.0, 0.5]) + t[:, None] * np.array([0.5, -0.5]),
            velocities=np.tile([0.5, -0.5], (65, 1)),
        )
        assert trajectory_residual(chord, arc) > 1e-3

    def test_chord_length_exceeds_distance(self):
        t = np.linspace(0, 1, 257)
        chord = SampledCurve(
            t=t,
            points=np.array([0.0, 0.5]) + t[:, None] * np.array([0.5, -0.5]),
            velocities=np.tile([0.5, -0.5], (257, 1)),
        )
        assert finsler_length(chord) > apollonian_distance((0, 0.5), (0.5, 0))
