"""Dimension bookkeeping and the initial maximally entangled state.

Bipartite pure states live on two local Hilbert spaces of odd dimension
n = 2N + 1 spanned by levels q ∈ {−N, …, N}.  A state is stored as its
coefficient matrix β over the product basis |q⟩_A |r⟩_B, as an n×n complex
ndarray with the symmetric level range mapped to array offsets via
``i = q + N`` (the same convention is used for every matrix in the package).

The initial state entangles an m-dimensional encoding subspace maximally,
pairing level q of subsystem A with level −q of subsystem B:

    β_{q,r} = [ 1(|q| ≤ M and r = −q) − f_m · 1(q = 0 and r = 0) ] / √m

where M = m // 2 and f_m = 1 for even m, 0 for odd m.  For even m the parity
term removes the central |0,0⟩ contribution so exactly m anti-diagonal
entries of magnitude 1/√m remain.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError

__all__ = ["HilbertDims", "parity_flag", "make_initial_state"]


def _check_odd(value: int, name: str, minimum: int) -> None:
    if value < minimum or value % 2 == 0:
        raise DimensionError(f"{name} must be an odd integer >= {minimum}, got {value}")


@dataclass(frozen=True)
class HilbertDims:
    """Validated dimension triple (n, m, s).

    n : odd total local dimension, n = 2N + 1
    m : encoding dimension, 2 <= m <= n
    s : odd truncation dimension, 3 <= s <= n (defaults to n: no truncation)
    """

    n: int
    m: int
    s: int | None = None

    def __post_init__(self) -> None:
        if self.s is None:
            object.__setattr__(self, "s", self.n)
        _check_odd(self.n, "n", 3)
        if not 2 <= self.m <= self.n:
            raise DimensionError(f"m must satisfy 2 <= m <= n={self.n}, got {self.m}")
        _check_odd(self.s, "s", 3)
        if self.s > self.n:
            raise DimensionError(f"s must not exceed n={self.n}, got {self.s}")

    @property
    def half_width(self) -> int:
        """N in n = 2N + 1."""
        return (self.n - 1) // 2

    @property
    def window_half_width(self) -> int:
        """S in s = 2S + 1."""
        return (self.s - 1) // 2

    @property
    def encoding_half_width(self) -> int:
        """M: encoding levels span {-M, ..., M} (center removed for even m)."""
        return self.m // 2


def parity_flag(m: int) -> float:
    """Parity factor f_m = [(-1)^m + 1] / 2: 1.0 for even m, 0.0 for odd m."""
    return 1.0 if m % 2 == 0 else 0.0


def make_initial_state(dims: HilbertDims) -> np.ndarray:
    """Coefficient matrix of the maximally entangled encoding state.

    Returns an n×n complex array with exactly ``dims.m`` nonzero entries of
    magnitude 1/√m on the anti-diagonal r = −q, Frobenius norm 1, and reduced
    purity 1/m.
    """
    n, m = dims.n, dims.m
    big_n, big_m = dims.half_width, dims.encoding_half_width
    beta = np.zeros((n, n), dtype=complex)
    q = np.arange(-big_m, big_m + 1)
    beta[q + big_n, -q + big_n] = 1.0 / np.sqrt(m)
    # Even m: the parity term cancels the central |0,0> contribution exactly.
    beta[big_n, big_n] -= parity_flag(m) / np.sqrt(m)
    return beta
