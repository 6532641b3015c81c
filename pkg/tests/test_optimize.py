import numpy as np
import pytest

from qudit_eraser.optimize import golden_section, periodic_minimize


def test_golden_section_quadratic():
    x, y = golden_section(lambda t: (t - 0.3) ** 2, -1, 2, tol=1e-10)
    assert x == pytest.approx(0.3, abs=1e-9)
    assert y == pytest.approx(0.0, abs=1e-18)


def test_golden_section_kink():
    x, _ = golden_section(lambda t: abs(t - 1.234567), 0, 3, tol=1e-12)
    assert x == pytest.approx(1.234567, abs=1e-11)


def test_periodic_minimum_wraps_to_period_start():
    period = np.pi
    x, y = periodic_minimize(lambda t: -np.cos(2 * (t - 1e-13)), period, 64)
    dist = min(x, period - x)
    # value-based search on a quadratic minimum resolves x only to ~sqrt(eps)
    assert dist < 1e-7
    assert 0 <= x < period


@pytest.mark.parametrize("target", [0.1, 1.0, 2.9])
def test_periodic_minimize_with_sharper_refiner(target):
    f = lambda t: -np.cos(2 * (t - target))  # noqa: E731
    x, _ = periodic_minimize(f, np.pi, 1024, lambda t: abs(np.sin(t - target)))
    assert x == pytest.approx(target, abs=1e-10)
