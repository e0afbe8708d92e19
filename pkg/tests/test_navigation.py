import math

import numpy as np
import pytest

from apollonian import (
    HyperboloidPoint,
    NonSpacelikeError,
    ZermeloData,
    DegenerateNavigationError,
    finsler_norm,
    hyperboloid_jacobian,
    hyperboloid_map,
    hyperboloid_pushforward,
    lorentz_randers_value,
    pullback_check,
    zermelo_data,
    zermelo_reconstruct,
)


class TestZermelo:
    def test_origin(self):
        data = zermelo_data((0, 0))
        assert data.h == pytest.approx(np.eye(2), abs=1e-15)
        assert np.all(data.w == 0.0)
        assert data.wind_norm_sq == 0.0

    def test_hand_values(self):
        data = zermelo_data((0.5, 0))
        assert data.h == pytest.approx(np.diag([1.0, 4 / 3]), abs=1e-14)
        assert data.w == pytest.approx([-0.5, 0.0], abs=1e-15)
        assert data.wind_norm_sq == pytest.approx(0.25, abs=1e-15)
        assert data.lam == pytest.approx(0.75, abs=1e-15)

    def test_wind_norm_identity(self, rng, disc_sampler):
        for p in disc_sampler(rng, 30):
            assert zermelo_data(p).wind_norm_sq == pytest.approx(float(p @ p), abs=1e-14)

    def test_reconstruction_hand_values(self):
        data = zermelo_data((0.5, 0))
        assert zermelo_reconstruct(data, (1, 0)) == pytest.approx(2.0, abs=1e-14)
        assert zermelo_reconstruct(data, (0, 1)) == pytest.approx(4 / 3, abs=1e-14)

    def test_round_trip_everywhere(self, rng, disc_sampler):
        for p in disc_sampler(rng, 30):
            data = zermelo_data(p)
            a = rng.uniform(0, 2 * math.pi)
            d = (math.cos(a), math.sin(a))
            assert zermelo_reconstruct(data, d) == pytest.approx(
                finsler_norm(p, d), abs=1e-12)

    def test_degenerate_wind(self):
        bad = ZermeloData(h=np.eye(2), w=np.array([1.0, 0.0]), lam=0.0, wind_norm_sq=1.0)
        with pytest.raises(DegenerateNavigationError):
            zermelo_reconstruct(bad, (1, 0))


class TestHyperboloid:
    def test_map_values(self):
        p = hyperboloid_map((0, 0))
        assert (p.x1, p.x2, p.x3) == (0.0, 0.0, 1.0)
        p = hyperboloid_map((0.5, 0))
        assert (p.x1, p.x2, p.x3) == pytest.approx((4 / 3, 0.0, 5 / 3), abs=1e-14)

    def test_constraint_everywhere(self, rng, disc_sampler):
        for x in disc_sampler(rng, 30):
            assert abs(hyperboloid_map(x).constraint_residual) <= 1e-12

    def test_third_coordinate_diverges(self):
        vals = [hyperboloid_map((r, 0)).x3 for r in (0.9, 0.99, 0.999)]
        assert vals[0] < vals[1] < vals[2]

    def test_point_type_validates(self):
        HyperboloidPoint(0.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            HyperboloidPoint(1.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            HyperboloidPoint(0.0, 0.0, -1.0)

    def test_pushforward_hand_values(self):
        assert hyperboloid_pushforward((0, 0), (1, 0)) == pytest.approx([2.0, 0.0, 0.0], abs=1e-14)
        # dpi^2 = 2[(1-|x|^2) + 2 (x2)^2]/(1-|x|^2)^2 dx2 at x = (0.5, 0): 8/3
        assert hyperboloid_pushforward((0.5, 0), (0, 1)) == pytest.approx(
            [0.0, 8 / 3, 0.0], abs=1e-14)

    def test_jacobian_against_finite_differences(self, rng, disc_sampler):
        for x in disc_sampler(rng, 15):
            jac = hyperboloid_jacobian(x)
            fd = np.zeros((3, 2))
            h = 1e-6
            for j in range(2):
                xp = x.copy(); xp[j] += h
                xm = x.copy(); xm[j] -= h
                fd[:, j] = (hyperboloid_map(xp).as_array() - hyperboloid_map(xm).as_array()) / (2 * h)
            assert np.max(np.abs(jac - fd)) <= 1e-7

    def test_pushforward_is_lorentz_tangent(self, rng, disc_sampler):
        for x in disc_sampler(rng, 20):
            a = rng.uniform(0, 2 * math.pi)
            v = hyperboloid_pushforward(x, (math.cos(a), math.sin(a)))
            p = hyperboloid_map(x).as_array()
            lorentz = v[0] * p[0] + v[1] * p[1] - v[2] * p[2]
            assert abs(lorentz) <= 1e-10 * max(1.0, float(np.max(np.abs(v))))


class TestLorentzValue:
    def test_hand_values(self):
        assert lorentz_randers_value((0, 0, 1), (2, 0, 0)) == pytest.approx(2.0, abs=1e-15)
        assert lorentz_randers_value((0, 0, 1), (0, 0, 0)) == 0.0

    def test_timelike_rejected(self):
        with pytest.raises(NonSpacelikeError):
            lorentz_randers_value((0, 0, 1), (0, 0, 1))


class TestPullback:
    def test_hand_values(self):
        val, twice = pullback_check((0, 0), (1, 0))
        assert (val, twice) == pytest.approx((2.0, 2.0), abs=1e-14)
        val, twice = pullback_check((0.5, 0), (1, 0))
        assert (val, twice) == pytest.approx((4.0, 4.0), abs=1e-13)
        val, twice = pullback_check((0.5, 0), (0, 1))
        assert (val, twice) == pytest.approx((8 / 3, 8 / 3), abs=1e-13)

    def test_factor_two_uniformly(self, rng, disc_sampler):
        # the realization carries a single global factor 2 (not 1, and not
        # point-dependent)
        for x in disc_sampler(rng, 25):
            a = rng.uniform(0, 2 * math.pi)
            d = (math.cos(a), math.sin(a))
            val, _ = pullback_check(x, d)
            assert val / finsler_norm(x, d) == pytest.approx(2.0, abs=1e-10)
