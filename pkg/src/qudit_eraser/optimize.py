"""Deterministic scalar minimization: grid scan followed by golden-section."""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI2 = (3 - math.sqrt(5)) / 2


def golden_section(f: Callable[[float], float], a: float, b: float, tol: float = 1e-10):
    """Minimize a unimodal ``f`` on [a, b]; returns (x, f(x))."""
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, f(x)
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    yc, yd = f(c), f(d)
    for _ in range(n):
        if yc < yd:
            b, d, yd = d, c, yc
            h *= INV_PHI
            c = a + INV_PHI2 * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h *= INV_PHI
            d = a + INV_PHI * h
            yd = f(d)
    return (c, yc) if yc < yd else (d, yd)


def periodic_minimize(
    f_grid: Callable[[np.ndarray], np.ndarray],
    period: float,
    n_grid: int,
    f_refine: Callable[[float], float] | None = None,
    tol: float = 1e-10,
):
    """Minimize a ``period``-periodic function over [0, period).

    ``f_grid`` is evaluated on ``n_grid`` equispaced points; the best point
    (smallest index on ties) brackets a golden-section refinement of
    ``f_refine``, which defaults to ``f_grid`` on scalars. ``f_refine`` may be
    any function sharing the minimizer, e.g. one with a sharper minimum.
    Returns (x, f_grid(x)) with x wrapped into [0, period).
    """
    xs = np.arange(n_grid) * (period / n_grid)
    ys = np.asarray(f_grid(xs), dtype=float)
    k = int(np.argmin(ys))
    step = period / n_grid
    if f_refine is None:
        def f_refine(x):
            return float(f_grid(np.array([x]))[0])
    x, _ = golden_section(f_refine, xs[k] - step, xs[k] + step, tol)
    y = float(f_grid(np.array([x]))[0])
    if y > ys[k]:
        x, y = xs[k], float(ys[k])
    x = float(np.mod(x, period))
    if x >= period:
        x = 0.0
    return x, y
