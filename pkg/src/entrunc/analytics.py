"""Closed-form results for truncated-state entanglement.

All functions here are pure formula evaluators, vectorized over their level
arguments where that is natural.  The sinc convention throughout is the
unnormalized one, sinc(x) = sin(x)/x with sinc(0) = 1.

Available closed forms:

* ``analytic_beta_uniform`` — exact coefficients after uniform spreading of
  the encoding state (a ratio of Dirichlet kernels, here written with sinc).
* ``analytic_purity_m2`` — exact reduced purity of the truncated, uniformly
  spread two-dimensional encoding (the sums telescope for m = 2).
* ``conjectured_purity`` — the additive small-truncation model
  P ≈ 2/s + 1/m − 2/n for Haar-random local evolution; exact at s = n,
  increasingly accurate for wide windows, and systematically below the true
  ensemble mean for narrow windows (see README for measured deviations).
* ``entanglement_loss`` — the loss Δ = m − K predicted by that model for
  truncation onto the encoding dimension itself (s = m).
* ``linear_approx_K`` — the small-window linear law K ≈ m·s/n for uniform
  spreading.
"""

from __future__ import annotations

import numpy as np

from .statespace import parity_flag

__all__ = [
    "sinc",
    "analytic_beta_uniform",
    "analytic_purity_m2",
    "conjectured_purity",
    "conjectured_schmidt_number",
    "entanglement_loss",
    "linear_approx_K",
]


def sinc(x):
    """Unnormalized sinc: sin(x)/x, with the removable singularity filled in."""
    return np.sinc(np.asarray(x) / np.pi)


def analytic_beta_uniform(n: int, m: int, q, r):
    """Coefficient β_{q,r} after uniform spreading of the encoding state.

    With f = f_m (parity flag) and a = m + f:

        β_{q,r} = a·sinc[(q−r)·a·π/n] / (n·√m·sinc[(q−r)·π/n]) − f/(n·√m)

    The denominator sinc never vanishes for |q−r| ≤ n−1, and at q = r both
    sinc factors are 1, so the expression reduces to √m/n there without any
    special-casing.  Accepts scalar or array q, r (broadcast together); the
    result is real.
    """
    f = parity_flag(m)
    a = m + f
    delta = np.asarray(q) - np.asarray(r)
    spread = a * sinc(delta * a * np.pi / n) / (n * np.sqrt(m) * sinc(delta * np.pi / n))
    value = spread - f / (n * np.sqrt(m))
    return value if value.ndim else float(value)


def analytic_purity_m2(n: int, s) -> float:
    """Exact reduced purity of the truncated uniform spreading of m = 2.

        P(s) = 1/2 + 8 s² sin²(2π/n) sin²(2πs/n)
                     / [s² cos(4π/n) + cos(4πs/n) − s² − 1]²

    At s = n the oscillatory factor sin²(2πs/n) vanishes and P = 1/2: the
    full window recovers the initial two-dimensional entanglement (K = 2).
    """
    s = np.asarray(s, dtype=float)
    denom = s**2 * np.cos(4 * np.pi / n) + np.cos(4 * np.pi * s / n) - s**2 - 1
    value = 0.5 + 8 * s**2 * np.sin(2 * np.pi / n) ** 2 * np.sin(2 * np.pi * s / n) ** 2 / denom**2
    return value if value.ndim else float(value)


def conjectured_purity(n: int, m: int, s) -> float:
    """Additive model for the Haar-ensemble mean reduced purity: 2/s + 1/m − 2/n.

    Exact at s = n (P = 1/m, i.e. K = m).  Decreasing in both s and m.
    """
    s = np.asarray(s, dtype=float)
    value = 2.0 / s + 1.0 / m - 2.0 / n
    return value if value.ndim else float(value)


def conjectured_schmidt_number(n: int, m: int, s):
    """Schmidt number K = 1/P of the additive purity model."""
    return 1.0 / conjectured_purity(n, m, s)


def entanglement_loss(n: int, m) -> float:
    """Model prediction for the loss Δ = m − K at s = m:  2m(m−n)/(2m−3n).

    Algebraically identical to m − 1/conjectured_purity(n, m, s=m); zero at
    m = n (a full window cannot lose entanglement).  As a function of m the
    curve rises from m = 2, peaks at m = (3−√3)·n/2 ≈ 0.634·n, and falls
    back to zero at m = n.
    """
    m = np.asarray(m, dtype=float)
    value = 2.0 * m * (m - n) / (2.0 * m - 3.0 * n)
    return value if value.ndim else float(value)


def linear_approx_K(n: int, m: int, s) -> float:
    """Linear small-window law for uniform spreading: K ≈ m·s/n.

    Exact at m = n (truncating the fully spread state yields the maximally
    entangled state of dimension s, K = s).
    """
    s = np.asarray(s, dtype=float)
    value = m * s / n
    return value if value.ndim else float(value)
