"""Cumulative composite-Simpson integration on a cached uniform grid.

Each subinterval [t_i, t_{i+1}] contributes its own Simpson panel (endpoint,
midpoint, endpoint), so cumulative values are available at every node with
O(h^4) accuracy. Off-grid requests integrate a partial Simpson panel from the
nearest lower node; derivatives come from the integrand itself (fundamental
theorem of calculus), never from differencing cached values.

Instances are immutable after construction and safe for concurrent readers.
"""

from __future__ import annotations

from typing import Callable

import numpy as np


class CumulativeIntegral:
    def __init__(self, f: Callable[[float], float], a: float, b: float, n: int = 1024):
        if not b > a:
            raise ValueError(f"empty integration range [{a}, {b}]")
        self.f = f
        self.a = float(a)
        self.b = float(b)
        self.n = int(n)
        self.h = (self.b - self.a) / self.n
        nodes = np.linspace(self.a, self.b, self.n + 1)
        mids = 0.5 * (nodes[:-1] + nodes[1:])
        fn = np.array([f(t) for t in nodes])
        fm = np.array([f(t) for t in mids])
        panels = (self.h / 6.0) * (fn[:-1] + 4.0 * fm + fn[1:])
        cumulative = np.concatenate(([0.0], np.cumsum(panels)))
        self._nodes = nodes
        self._fn = fn
        self._cumulative = cumulative

    def _simpson(self, lo: float, hi: float, f_lo: float | None = None) -> float:
        if hi == lo:
            return 0.0
        fl = self.f(lo) if f_lo is None else f_lo
        return ((hi - lo) / 6.0) * (fl + 4.0 * self.f(0.5 * (lo + hi)) + self.f(hi))

    def value(self, t: float) -> float:
        """Integral of f from the range start a to t."""
        if t < self.a:
            return -self._multi_panel(t, self.a)
        if t > self.b:
            return self._cumulative[-1] + self._multi_panel(self.b, t)
        k = min(int((t - self.a) / self.h), self.n - 1)
        return self._cumulative[k] + self._simpson(self._nodes[k], t, self._fn[k])

    def derivative(self, t: float) -> float:
        return self.f(t)

    def total(self) -> float:
        return float(self._cumulative[-1])

    def _multi_panel(self, lo: float, hi: float) -> float:
        # outside the cached range: plain composite Simpson at grid resolution
        m = max(1, int(np.ceil((hi - lo) / self.h)))
        edges = np.linspace(lo, hi, m + 1)
        return float(sum(self._simpson(edges[i], edges[i + 1]) for i in range(m)))
