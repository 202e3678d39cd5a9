from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from swarm_sqp.logic import (
    RelaxationSchedule,
    centre_of_gravity,
    compare_solutions,
    current_epsilon,
    flatten_dot,
    forward_neighbors,
    neighborhood_size,
    position_update,
    velocity_update,
)
from swarm_sqp.problem import ConstraintReport
from swarm_sqp.swarm import CoefficientSet


class PinnedDraws:
    """Stand-in generator returning a constant for every uniform draw."""

    def __init__(self, value):
        self.value = value

    def random(self, shape):
        return np.full(shape, self.value)


def _particle(x, v, pbest):
    return SimpleNamespace(x=np.array(x, float), v=np.array(v, float), pbest_x=np.array(pbest, float))


def _solution(f, g):
    return f, ConstraintReport.from_values(np.array([g], float), np.zeros(0), 1e-4)


# --- velocity / position ---

def test_velocity_identity_without_attraction():
    p = _particle([1.0, 2.0], [0.3, -0.4], [5.0, 5.0])
    v = velocity_update(p, np.array([7.0, 7.0]), CoefficientSet(1.0, 0.0, 0.0), np.random.default_rng(0))
    np.testing.assert_array_equal(v, p.v)


def test_velocity_zero_differences():
    p = _particle([1.0, 1.0], [2.0, -2.0], [1.0, 1.0])
    v = velocity_update(p, p.x, CoefficientSet(0.7, 1.5, 1.5), np.random.default_rng(3))
    np.testing.assert_allclose(v, 0.7 * p.v)


def test_velocity_pinned_draws():
    p = _particle([0.0], [1.0], [2.0])
    v = velocity_update(p, np.array([4.0]), CoefficientSet(0.7, 1.5, 1.5), PinnedDraws(0.5))
    assert v[0] == pytest.approx(5.2)


def test_velocity_clamped():
    p = _particle([0.0], [1.0], [2.0])
    v = velocity_update(p, np.array([4.0]), CoefficientSet(0.7, 1.5, 1.5), PinnedDraws(0.5), v_max=np.array([3.0]))
    assert v[0] == 3.0


def test_position_update_inside_bounds():
    p = _particle([1.0, 1.0], [0.0, 0.0], [1.0, 1.0])
    bounds = (np.zeros(2), np.full(2, 10.0))
    x, v = position_update(p, np.array([0.5, -0.5]), bounds)
    np.testing.assert_allclose(x, [1.5, 0.5])
    np.testing.assert_allclose(v, [0.5, -0.5])
    x, _ = position_update(p, np.zeros(2), bounds)
    np.testing.assert_array_equal(x, p.x)


def test_position_update_clips_and_zeroes_velocity():
    p = _particle([9.9], [0.0], [9.9])
    x, v = position_update(p, np.array([0.5]), (np.zeros(1), np.full(1, 10.0)))
    assert x[0] == 10.0
    assert v[0] == 0.0


@given(st.lists(st.floats(-100, 100), min_size=1, max_size=5))
def test_position_always_within_bounds(steps):
    n = len(steps)
    p = _particle(np.full(n, 0.5), np.zeros(n), np.zeros(n))
    x, _ = position_update(p, np.array(steps), (np.zeros(n), np.ones(n)))
    assert np.all((x >= 0) & (x <= 1))


# --- topology ---

def test_forward_neighbors_examples():
    assert forward_neighbors(0, 2, 5) == [1, 2]
    assert forward_neighbors(4, 2, 5) == [0, 1]
    assert sorted(forward_neighbors(3, 5, 6)) == [0, 1, 2, 4, 5]


@pytest.mark.parametrize("k", [0, 5, 7])
def test_forward_neighbors_rejects_k(k):
    with pytest.raises(ValueError):
        forward_neighbors(0, k, 5)


def test_forward_neighbors_cover_each_particle_k_times():
    for N in range(2, 11):
        for k in range(1, N):
            counts = np.zeros(N, dtype=int)
            for i in range(N):
                neighbours = forward_neighbors(i, k, N)
                assert i not in neighbours
                counts[neighbours] += 1
            assert np.all(counts == k)


def test_neighborhood_size():
    assert neighborhood_size(0, 100, 1, 9) == 1
    assert neighborhood_size(100, 100, 1, 9) == 9
    assert neighborhood_size(50, 100, 1, 9) == 5
    # half rounds up
    assert neighborhood_size(1, 4, 1, 3) == 2
    assert neighborhood_size(0, 0, 1, 9) == 9


@given(st.integers(1, 30), st.integers(0, 30), st.integers(1, 1000))
def test_neighborhood_size_monotone_within_range(k_min, extra, T):
    k_max = k_min + extra
    sizes = [neighborhood_size(t, T, k_min, k_max) for t in range(0, T + 1, max(1, T // 50))]
    assert sizes == sorted(sizes)
    assert all(k_min <= k <= k_max for k in sizes)


# --- priority ordering ---

def test_feasible_beats_infeasible():
    assert compare_solutions(_solution(10.0, -1.0), _solution(-100.0, 0.5)) == -1


def test_feasibles_ordered_by_f():
    assert compare_solutions(_solution(1.0, 0.0), _solution(2.0, -3.0)) == -1
    assert compare_solutions(_solution(2.0, 0.0), _solution(1.0, 0.0)) == 1


def test_infeasibles_ordered_by_violation_then_f():
    assert compare_solutions(_solution(99.0, 0.1), _solution(1.0, 0.5)) == -1
    assert compare_solutions(_solution(2.0, 0.1), _solution(1.0, 0.1)) == 1
    assert compare_solutions(_solution(1.0, 0.1), _solution(1.0, 0.1)) == 0


def test_slack_changes_feasibility_judgement():
    a, b = _solution(1.0, 5e-13), _solution(2.0, -1.0)
    assert compare_solutions(a, b) == 1
    assert compare_solutions(a, b, slack=1e-12) == -1


def test_compare_accepts_objects():
    f, report = _solution(1.0, 0.0)
    a = SimpleNamespace(f=f, report=report)
    assert compare_solutions(a, _solution(3.0, 0.0)) == -1


# --- relaxation schedule ---

def test_epsilon_after_cutoff_is_final():
    schedule = RelaxationSchedule(initial_scale=100, cutoff_fraction=0.5)
    assert current_epsilon(500, 1000, schedule) == 1e-4
    assert current_epsilon(1000, 1000, schedule) == 1e-4


def test_epsilon_degenerate_schedule():
    schedule = RelaxationSchedule(initial_scale=1.0)
    assert all(current_epsilon(t, 100, schedule) == pytest.approx(1e-4) for t in range(101))


def test_epsilon_linear_quarter_point():
    schedule = RelaxationSchedule(initial_scale=100, cutoff_fraction=0.5, decay="linear")
    assert current_epsilon(250, 1000, schedule) == pytest.approx(50.5e-4)
    assert current_epsilon(0, 1000, schedule) == pytest.approx(100e-4)


def test_epsilon_exponential_decay():
    schedule = RelaxationSchedule(initial_scale=100, cutoff_fraction=0.5, decay="exponential")
    assert current_epsilon(250, 1000, schedule) == pytest.approx(10e-4)


@pytest.mark.parametrize("decay", ["linear", "exponential"])
def test_epsilon_non_increasing(decay):
    schedule = RelaxationSchedule(initial_scale=50, cutoff_fraction=0.3, decay=decay)
    values = [current_epsilon(t, 200, schedule) for t in range(201)]
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert values[-1] == 1e-4


def test_schedule_validation():
    with pytest.raises(ValueError):
        RelaxationSchedule(initial_scale=0.5)
    with pytest.raises(ValueError):
        RelaxationSchedule(cutoff_fraction=1.5)
    with pytest.raises(ValueError):
        RelaxationSchedule(decay="cosine")


def test_inequality_slack_only_when_enabled():
    assert RelaxationSchedule().inequality_slack(1e-2) == 0.0
    assert RelaxationSchedule(relax_inequalities=True).inequality_slack(1e-2) == pytest.approx(1e-2 - 1e-4)


# --- misc ---

def test_centre_of_gravity():
    np.testing.assert_allclose(centre_of_gravity(np.array([[0.0, 0.0], [2.0, 2.0]])), [1.0, 1.0])
    np.testing.assert_allclose(centre_of_gravity(np.array([[3.0, -1.0]])), [3.0, -1.0])
    corners = np.array([[0, 0], [0, 1], [1, 0], [1, 1]], dtype=float)
    np.testing.assert_allclose(centre_of_gravity(corners), [0.5, 0.5])


def test_flatten_dot():
    assert flatten_dot({"a": {"b": 1, "c": {"d": 2}}, "e": 3}) == {"a.b": 1, "a.c.d": 2, "e": 3}
