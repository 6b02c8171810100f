"""Shared random-matrix generators for the test suite."""

import numpy as np


def random_symmetric(rng, n, scale=1.0):
    a = rng.standard_normal((n, n))
    return scale * (a + a.T) / 2.0


def random_invertible_symmetric(rng, n):
    """Symmetric with eigenvalues of random sign bounded away from zero."""
    q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    lam = rng.uniform(0.5, 3.0, n) * rng.choice([-1.0, 1.0], n)
    return (q * lam) @ q.T


def random_rank_deficient_symmetric(rng, n, rank):
    q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    lam = np.zeros(n)
    lam[:rank] = rng.uniform(0.5, 3.0, rank) * rng.choice([-1.0, 1.0], rank)
    return (q * lam) @ q.T


def random_nonzero_vector(rng, n, low=0.1, high=2.0):
    return rng.uniform(low, high, n) * rng.choice([-1.0, 1.0], n)
