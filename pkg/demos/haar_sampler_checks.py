"""Sanity checks on the Haar-random unitary sampler.

None of this is a substitute for the test suite; it is the quick visual
once-over you want when touching the sampler: unitarity residuals, the
first moment E|U_jk|^2 = 1/n, eigenvalue phases filling the circle evenly,
and the physics invariant that local unitaries cannot change the Schmidt
number of an untruncated state.
"""

import argparse

import numpy as np

from entrunc import RngStream, UnitaryKind, run_cell, sample_cue


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=17)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    n, count = args.n, args.samples
    base = RngStream(args.seed)

    worst_resid = 0.0
    second_moment = np.zeros((n, n))
    phases = []
    for j in range(count):
        u = sample_cue(n, base.child(j))
        worst_resid = max(worst_resid, np.abs(u @ u.conj().T - np.eye(n)).max())
        second_moment += np.abs(u) ** 2
        phases.append(np.angle(np.linalg.eigvals(u)))
    second_moment /= count
    phases = np.concatenate(phases)

    print(f"{count} draws at n={n}, seed={args.seed}")
    print(f"worst unitarity residual          : {worst_resid:.2e}")

    target = 1.0 / n
    dev = np.abs(second_moment - target).max()
    # a flat second moment is the cheapest Haar fingerprint; this is the max
    # over n^2 entries, so a few sigma is the expected order, not a red flag
    sigma = np.sqrt((n - 1) / (n**2 * (n + 1)) / count)
    print(f"max |E|U_jk|^2 - 1/n|             : {dev:.2e}  ({dev / sigma:.1f} sigma)")

    hist, _ = np.histogram(phases, bins=16, range=(-np.pi, np.pi))
    expected = len(phases) / 16
    print(f"eigenphase histogram spread       : "
          f"{hist.min()} .. {hist.max()} per bin (uniform would be ~{expected:.0f})")

    m = (n + 1) // 2
    (_, k, _), = run_cell(n, m, (n,), UnitaryKind.RANDOM_CUE, base.child(count, 1))
    print(f"untruncated K after random evolve : {k:.12f} (exactly m={m} expected)")


if __name__ == "__main__":
    main()
