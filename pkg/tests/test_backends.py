"""Cross-checks between the compiled kernels and the NumPy fallback."""

import math

import numpy as np
import pytest

from cocircular._backend import available_backends
from cocircular.errors import CollisionError
from cocircular.optimizer import random_feasible_config

BACKENDS = available_backends()
needs_both = pytest.mark.skipif(
    len(BACKENDS) < 2, reason="compiled extension not built"
)


def _cases(count=12, seed=99):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(3, 13))
        m = rng.uniform(0.2, 5.0, n)
        theta = random_feasible_config(n, rng, min_gap=1e-3).angles
        alpha = float(rng.choice([0.5, 1.0, 2.0, 3.7]))
        yield m, theta, alpha


@needs_both
@pytest.mark.parametrize("kernel", ["potential", "gradient", "hessian", "row_sums", "pair_matrix"])
def test_backends_agree(kernel):
    compiled, python = BACKENDS["compiled"], BACKENDS["python"]
    for m, theta, alpha in _cases():
        if kernel == "pair_matrix":
            a = getattr(compiled, kernel)(theta, alpha)
            b = getattr(python, kernel)(theta, alpha)
        else:
            a = getattr(compiled, kernel)(m, theta, alpha)
            b = getattr(python, kernel)(m, theta, alpha)
        assert np.allclose(a, b, rtol=1e-13, atol=1e-13), kernel


@needs_both
def test_quad_gaps_agree():
    compiled, python = BACKENDS["compiled"], BACKENDS["python"]
    rng = np.random.default_rng(5)
    q = np.sort(rng.uniform(0, 2 * math.pi, (500, 4)), axis=1)
    q = q[np.diff(q, axis=1).min(axis=1) > 1e-4]
    cols = [np.ascontiguousarray(q[:, i]) for i in range(4)]
    for alpha in (0.5, 1.0, 2.0):
        a = compiled.quad_gaps(*cols, alpha)
        b = python.quad_gaps(*cols, alpha)
        assert np.allclose(a, b, rtol=1e-13, atol=1e-14)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_collision_raises(name):
    mod = BACKENDS[name]
    theta = np.array([1.0, 1.0 + 1e-15, 4.0])
    m = np.ones(3)
    for fn in (mod.potential, mod.gradient, mod.hessian, mod.row_sums):
        with pytest.raises(CollisionError):
            fn(m, theta, 1.0)
    with pytest.raises(CollisionError):
        mod.pair_matrix(theta, 1.0)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_compensated_sum_scale(name):
    # many tiny terms plus one large one: naive summation would lose digits
    mod = BACKENDS[name]
    n = 12
    theta = np.sort(np.random.default_rng(3).uniform(0.2, 6.0, n - 1))
    theta = np.append(theta, 2 * math.pi)
    m = np.ones(n)
    m[0] = 1e8
    u = mod.potential(m, theta, 1.0)
    g = mod.gradient(m, theta, 1.0)
    assert math.isfinite(u)
    assert abs(np.sum(g)) <= 1e-12 * (n + np.max(np.abs(g)))
