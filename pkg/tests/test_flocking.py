import math

import pytest

from swarmnet.core import ZERO, SwarmConfig, UavState, Vec3, distance, norm
from swarmnet.flocking import (
    FlockTerms,
    alignment_vel,
    cohesion_vel,
    flock_terms,
    leader_goal_vel,
    separation_vel,
    step_uav,
)

CFG = SwarmConfig()
TOL = 1e-9


def uav(i, pos, vel=(0, 0, 0), w=0):
    return UavState(id=i, pos=Vec3.of(pos), vel=Vec3.of(vel), weight=w)


def close(a, b, tol=TOL):
    return all(abs(x - y) <= tol for x, y in zip(a, b))


class TestCohesion:
    def test_at_neighbor_mean(self):
        u = uav(0, (1, 0, 0))
        assert close(cohesion_vel(u, [uav(1, (0, 0, 0)), uav(2, (2, 0, 0))], CFG), ZERO)

    def test_single_neighbor(self):
        u = uav(0, (0, 0, 0))
        expected = Vec3((10 - 0) * 0.2, 0, 0)
        assert close(cohesion_vel(u, [uav(1, (10, 0, 0))], CFG), expected)

    def test_no_neighbors(self):
        assert cohesion_vel(uav(0, (5, 5, 5)), [], CFG) == ZERO


class TestSeparation:
    def test_single_close_neighbor(self):
        u = uav(0, (7, 7, 7))
        assert close(separation_vel(u, [uav(1, (10, 7, 7))], CFG), (-3, 0, 0))

    def test_symmetric_cancel(self):
        u = uav(0, (0, 0, 0))
        assert close(separation_vel(u, [uav(1, (5, 0, 0)), uav(2, (-5, 0, 0))], CFG), ZERO)

    def test_outside_radius(self):
        u = uav(0, (0, 0, 0))
        assert separation_vel(u, [uav(1, (150, 0, 0))], CFG) == ZERO

    def test_radius_is_strict(self):
        cfg = SwarmConfig(sep_radius=5.0)
        assert separation_vel(uav(0, (0, 0, 0)), [uav(1, (5, 0, 0))], cfg) == ZERO


class TestAlignment:
    def test_already_aligned(self):
        u = uav(0, (0, 0, 0), vel=(1, 2, 3))
        nb = [uav(1, (1, 0, 0), vel=(1, 2, 3)), uav(2, (2, 0, 0), vel=(1, 2, 3))]
        assert close(alignment_vel(u, nb, CFG), ZERO)

    def test_mean_of_two(self):
        u = uav(0, (0, 0, 0))
        nb = [uav(1, (1, 0, 0), vel=(1, 0, 0)), uav(2, (2, 0, 0), vel=(3, 0, 0))]
        assert close(alignment_vel(u, nb, CFG), (((1 + 3) / 2) * 0.2, 0, 0))

    def test_single_neighbor_divides_by_one(self):
        u = uav(0, (0, 0, 0))
        assert close(alignment_vel(u, [uav(1, (1, 0, 0), vel=(2, 0, 0))], CFG), (0.4, 0, 0))

    def test_no_neighbors(self):
        assert alignment_vel(uav(0, (0, 0, 0), vel=(1, 0, 0)), [], CFG) == ZERO


class TestLeaderGoal:
    def test_from_deployment_point(self):
        out = leader_goal_vel(uav(0, (25, 25, 25)), True, CFG)
        d = math.sqrt(3 * 75.0**2)
        assert close(out, (0.7 * 75 / d,) * 3)
        assert out[0] == pytest.approx(0.40415, abs=1e-4)
        assert abs(norm(out) - 0.7) <= TOL

    def test_within_arrival_radius(self):
        p = (100 - 3 / math.sqrt(3),) * 3
        assert distance(Vec3.of(p), CFG.d2) == pytest.approx(3.0)
        assert leader_goal_vel(uav(0, p), True, CFG) == ZERO

    def test_non_leader(self):
        assert leader_goal_vel(uav(0, (25, 25, 25)), False, CFG) == ZERO

    def test_exact_speed_beyond_radius(self):
        for p in [(0, 0, 0), (94, 100, 100), (100, 100, 94.9), (180, 3, 40)]:
            out = leader_goal_vel(uav(0, p), True, CFG)
            assert abs(norm(out) - CFG.vel_leader) <= TOL


class TestStep:
    def test_pure_drift(self):
        out = step_uav(uav(0, (0, 0, 0), vel=(1, 0, 0)), FlockTerms())
        assert out.pos == Vec3(1, 0, 0) and out.vel == Vec3(1, 0, 0)

    def test_terms_accumulate(self):
        terms = FlockTerms(v1_cohesion=Vec3(0.2, 0, 0), v3_alignment=Vec3(0.3, 0, 0))
        out = step_uav(uav(0, (0, 0, 0)), terms)
        assert close(out.vel, (0.5, 0, 0)) and close(out.pos, (0.5, 0, 0))

    def test_leader_first_tick(self):
        u = uav(0, (25, 25, 25), w=9)
        out = step_uav(u, flock_terms(u, [], True, CFG))
        assert close(out.pos, (25 + 0.7 / math.sqrt(3),) * 3)
        assert out.pos[0] == pytest.approx(25.40415, abs=1e-4)
        assert out.id == 0 and out.weight == 9

    def test_speed_limit(self):
        out = step_uav(uav(0, (0, 0, 0), vel=(3, 4, 0)), FlockTerms(), speed_limit=1.0)
        assert close(out.vel, (0.6, 0.8, 0)) and close(out.pos, (0.6, 0.8, 0))
        slow = step_uav(uav(0, (0, 0, 0), vel=(0.1, 0, 0)), FlockTerms(), speed_limit=1.0)
        assert slow.vel == Vec3(0.1, 0, 0)


def test_terms_ignore_neighbor_order():
    u = uav(0, (3, 1, 2), vel=(0.1, -0.2, 0.3))
    nb = [uav(i, (i * 1.7, i * 0.3, -i), vel=(i * 0.01, 0.2, -0.1)) for i in range(1, 6)]
    assert flock_terms(u, nb, False, CFG) == flock_terms(u, nb[::-1], False, CFG)


def test_isolated_leader_approaches_monotonically():
    u = uav(0, (25, 25, 25), w=9)
    prev = distance(u.pos, CFG.d2)
    first = True
    while True:
        terms = flock_terms(u, [], True, CFG)
        if terms.v4_goal == ZERO:
            break
        u = step_uav(u, terms, speed_limit=CFG.vel_leader)
        if first:
            assert abs(norm(u.vel) - CFG.vel_leader) <= TOL
            first = False
        d = distance(u.pos, CFG.d2)
        assert d < prev
        prev = d
    assert prev < CFG.arrive_eps


def test_resting_isolated_follower_stays_put():
    u = uav(0, (40, 50, 60))
    for _ in range(100):
        u = step_uav(u, flock_terms(u, [], False, CFG))
    assert u.pos == Vec3(40, 50, 60)
