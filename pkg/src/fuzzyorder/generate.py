"""Seeded random instances for tests, demos and the ``gen`` command."""
from __future__ import annotations

import numpy as np

from .category import DQCategory, transitive_closure
from .nets import EPSequence
from .presheaf import Coweight, Weight, coweight_closure, weight_closure
from .tnorm import TNorm


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def special_values(t: TNorm) -> np.ndarray:
    """Values worth hitting exactly: 0, 1 and the idempotent piece endpoints."""
    return np.array(t.piece_endpoints())


def random_truth_values(t: TNorm, size, rng, snap: float = 0.25) -> np.ndarray:
    """Uniform values, a fraction ``snap`` of them moved onto special values."""
    v = rng.random(size)
    mask = rng.random(size) < snap
    v[mask] = rng.choice(special_values(t), mask.sum())
    return v


def random_category(t: TNorm, n: int, seed=None, zero_rate: float = 0.3,
                    duplicate_rate: float = 0.5) -> DQCategory:
    """Types, raw homs below ``min(t_x, t_y)``, then transitive closure.

    With probability ``duplicate_rate`` an object is replaced by an
    isomorphic copy of another one, so that constant blocks with more than
    one object occur regularly.
    """
    rng = _rng(seed)
    t_vals = random_truth_values(t, n, rng)
    raw = rng.random((n, n)) * np.minimum(t_vals[:, None], t_vals[None, :])
    raw[rng.random((n, n)) < zero_rate] = 0.0
    np.fill_diagonal(raw, t_vals)
    hom = transitive_closure(t, raw)
    if n > 1 and rng.random() < duplicate_rate:
        i, j = rng.choice(n, 2, replace=False)
        hom[j, :] = hom[i, :]
        hom[:, j] = hom[:, i]
    c = DQCategory(t, hom)
    c.validate().raise_if_invalid()
    return c


def random_weight(c: DQCategory, seed=None) -> Weight:
    rng = _rng(seed)
    a = float(random_truth_values(c.tnorm, 1, rng, snap=0.3)[0])
    return weight_closure(c, a, rng.random(c.size) * (rng.random(c.size) > 0.3))


def random_coweight(c: DQCategory, seed=None) -> Coweight:
    rng = _rng(seed)
    b = float(random_truth_values(c.tnorm, 1, rng, snap=0.3)[0])
    return coweight_closure(c, b, rng.random(c.size) * (rng.random(c.size) > 0.3))


def random_sequence(c: DQCategory, seed=None, max_prefix: int = 3) -> EPSequence:
    rng = _rng(seed)
    prefix = rng.integers(0, c.size, rng.integers(0, max_prefix + 1))
    support = rng.choice(c.size, rng.integers(1, c.size + 1), replace=False)
    # repeats inside the cycle do not change its support
    cycle = rng.choice(support, len(support) + rng.integers(0, 3))
    cycle[: len(support)] = rng.permutation(support)
    return EPSequence(c, prefix.tolist(), cycle.tolist())
