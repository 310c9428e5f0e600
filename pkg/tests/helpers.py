"""Dataset builders shared by the test modules."""

import numpy as np

from opcurves import Dataset

# Nine samples with a tie at 0.70 and a miscalibrated top score; small
# enough that every curve value has a hand-checkable closed form.
TOY_SCORES = (0.03, 0.05, 0.10, 0.20, 0.70, 0.70, 0.90, 0.90, 0.95)
TOY_LABELS = (0, 0, 0, 1, 0, 0, 1, 0, 1)


def make_toy() -> Dataset:
    return Dataset(np.array(TOY_SCORES), np.array(TOY_LABELS))


def make_calibrated() -> Dataset:
    """Scores that equal the empirical positive fraction of their group:
    0.2 (1 of 5), 0.5 (1 of 2), 0.8 (4 of 5)."""
    scores = [0.2] * 5 + [0.5] * 2 + [0.8] * 5
    labels = [1, 0, 0, 0, 0] + [1, 0] + [1, 1, 1, 1, 0]
    return Dataset(np.array(scores, dtype=float), np.array(labels))


def make_random(seed: int, n: int = 200, pi_p: float = 0.5,
                tie_free: bool = False) -> Dataset:
    """Uniform random scores with exactly round(n * pi_p) positives."""
    rng = np.random.default_rng(seed)
    n_p = int(round(n * pi_p))
    scores = rng.random(n)
    if tie_free:
        assert len(np.unique(scores)) == n
    labels = np.concatenate([np.ones(n_p, dtype=int), np.zeros(n - n_p, dtype=int)])
    return Dataset(scores, labels)
