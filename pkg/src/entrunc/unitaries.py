"""Local unitaries: the deterministic uniform-spreading operator and CUE samples.

Unitaries use the same level-to-offset convention as the state matrices
(offset i = q + N for level q).  Random unitaries are drawn from the circular
unitary ensemble (Haar measure) via QR decomposition of a complex Ginibre
matrix with the standard diagonal phase correction, and are reproducible:
the same :class:`RngStream` always yields the same matrix, independent of
execution order or thread count.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError

__all__ = ["RngStream", "uniform_spreading_unitary", "sample_cue"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RngStream:
    """Addressable, reproducible random stream.

    A stream is identified by a 64-bit master seed plus a tuple key; the key
    is fed to ``numpy.random.SeedSequence`` as the spawn key, so distinct
    keys give statistically independent streams and identical keys reproduce
    bit-identical draws.  Ensemble code derives one stream per realization
    (``base.child(j)``) and further children for the two subsystems.
    """

    master_seed: int
    key: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.master_seed < 0:
            raise ValueError(f"master_seed must be nonnegative, got {self.master_seed}")

    def child(self, *indices: int) -> "RngStream":
        """Sub-stream addressed by appending ``indices`` to this stream's key."""
        return RngStream(self.master_seed, self.key + indices)

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(self.master_seed, spawn_key=self.key)
        return np.random.Generator(np.random.PCG64(seq))


def uniform_spreading_unitary(n: int) -> np.ndarray:
    """Unitary spreading every basis state uniformly over all n levels.

    Entry (l, k) is exp(i·2π·k·l/n)/√n for levels l, k ∈ {−N, …, N}: a
    discrete Fourier kernel on the symmetric level range.  Every column is an
    equal-magnitude superposition (|U_{l,k}|² = 1/n), i.e. the columns form a
    basis mutually unbiased with the computational one.
    """
    if n < 3 or n % 2 == 0:
        raise DimensionError(f"n must be an odd integer >= 3, got {n}")
    levels = np.arange(-(n // 2), n // 2 + 1)
    return np.exp(2j * np.pi * np.outer(levels, levels) / n) / np.sqrt(n)


def sample_cue(n: int, stream: RngStream) -> np.ndarray:
    """Draw an n×n Haar-distributed unitary from the given stream.

    Standard construction: an n×n matrix of independent standard complex
    Gaussians (x + iy)/√2 is QR-factorized and the columns of Q are rescaled
    by R_jj/|R_jj|, which makes the factorization the unique one with a
    positive-diagonal R and hence Q exactly Haar.  In the measure-zero event
    that some |R_jj| underflows to 0 the draw is retried on the next
    sub-stream (logged), keeping the result a pure function of ``stream``.
    """
    if n < 3 or n % 2 == 0:
        raise DimensionError(f"n must be an odd integer >= 3, got {n}")
    attempt = 0
    while True:
        source = stream if attempt == 0 else stream.child(attempt)
        rng = source.generator()
        ginibre = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
        q, r = np.linalg.qr(ginibre)
        diag = np.diagonal(r)
        if not np.any(np.abs(diag) == 0.0):
            return q * (diag / np.abs(diag))
        attempt += 1
        logger.warning(
            "degenerate QR draw (zero diagonal) for n=%d stream=%s; retrying on sub-stream %d",
            n,
            stream,
            attempt,
        )
