"""Labeled score datasets: parsing, serialization and simulation.

A dataset is an ordered collection of (score, label) samples where scores
live in [0, 1] and labels are binary. Everything downstream (ROC analysis,
decision curves, cost curves) reads from this container, so validation
happens once, here.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

NEGATIVE = 0
POSITIVE = 1

# accepted label spellings, case-insensitive
_LABEL_TOKENS = {"0": NEGATIVE, "n": NEGATIVE, "1": POSITIVE, "p": POSITIVE}

CSV_HEADER = ("score", "label")


class DatasetError(ValueError):
    """Base class for dataset construction failures."""


class ParseError(DatasetError):
    """A row could not be turned into a valid sample."""


class EmptyInputError(DatasetError):
    """No samples were provided."""


class DegenerateClassError(DatasetError):
    """One class is absent, so class-conditional rates are undefined."""


class SimulationSpecError(DatasetError):
    """A simulation spec violates its own constraints."""


class LabeledSample(NamedTuple):
    score: float
    label: int


@dataclass(frozen=True)
class Priors:
    """Class proportions; pi_p + pi_n = 1 up to one float ulp."""

    pi_p: float
    pi_n: float

    def __post_init__(self) -> None:
        if not (0.0 < self.pi_p < 1.0 and 0.0 < self.pi_n < 1.0):
            raise DatasetError("priors must lie strictly inside (0, 1)")
        if abs(self.pi_p + self.pi_n - 1.0) > 1e-15:
            raise DatasetError("priors must sum to 1")

    @classmethod
    def from_counts(cls, n_p: int, n_n: int) -> Priors:
        if n_p <= 0 or n_n <= 0:
            raise DegenerateClassError("both classes must be present")
        n = n_p + n_n
        # store the divisions as computed so recomputing from samples is
        # bit-identical; the sum check above tolerates the last-ulp slack
        return cls(pi_p=n_p / n, pi_n=n_n / n)


class Dataset:
    """Immutable, ordered collection of scored binary-labeled samples.

    Construction validates everything once: scores finite in [0, 1],
    labels binary, at least one sample of each class. The backing arrays
    are frozen, and per-class sorted score arrays are precomputed because
    every curve in this package reduces to counting scores above a
    threshold.
    """

    __slots__ = ("_scores", "_labels", "_pos_sorted", "_neg_sorted")

    def __init__(self, scores: Sequence[float] | np.ndarray,
                 labels: Sequence[int] | np.ndarray) -> None:
        scores = np.array(scores, dtype=np.float64)
        labels = np.array(labels, dtype=np.int64)
        if scores.ndim != 1 or labels.ndim != 1 or scores.shape != labels.shape:
            raise DatasetError("scores and labels must be 1-d and equal length")
        if scores.size == 0:
            raise EmptyInputError("dataset has no samples")
        if not np.all(np.isfinite(scores)) or scores.min() < 0.0 or scores.max() > 1.0:
            raise DatasetError("scores must be finite and within [0, 1]")
        if not np.all((labels == NEGATIVE) | (labels == POSITIVE)):
            raise DatasetError("labels must be 0 or 1")
        n_p = int(np.count_nonzero(labels))
        if n_p == 0 or n_p == scores.size:
            raise DegenerateClassError("dataset must contain both classes")
        self._scores = scores
        self._labels = labels
        self._pos_sorted = np.sort(scores[labels == POSITIVE])
        self._neg_sorted = np.sort(scores[labels == NEGATIVE])
        for arr in (self._scores, self._labels, self._pos_sorted, self._neg_sorted):
            arr.flags.writeable = False

    @classmethod
    def from_samples(cls, samples: Iterable[tuple[float, int]]) -> Dataset:
        pairs = list(samples)
        if not pairs:
            raise EmptyInputError("dataset has no samples")
        return cls([s for s, _ in pairs], [l for _, l in pairs])

    @property
    def scores(self) -> np.ndarray:
        return self._scores

    @property
    def labels(self) -> np.ndarray:
        return self._labels

    @property
    def positive_scores(self) -> np.ndarray:
        """Scores of the positive samples, sorted ascending."""
        return self._pos_sorted

    @property
    def negative_scores(self) -> np.ndarray:
        """Scores of the negative samples, sorted ascending."""
        return self._neg_sorted

    @property
    def n(self) -> int:
        return int(self._scores.size)

    @property
    def n_p(self) -> int:
        return int(self._pos_sorted.size)

    @property
    def n_n(self) -> int:
        return int(self._neg_sorted.size)

    @property
    def pi_p(self) -> float:
        return self.n_p / self.n

    @property
    def pi_n(self) -> float:
        return self.n_n / self.n

    @property
    def priors(self) -> Priors:
        return Priors.from_counts(self.n_p, self.n_n)

    @property
    def samples(self) -> tuple[LabeledSample, ...]:
        return tuple(LabeledSample(float(s), int(l))
                     for s, l in zip(self._scores, self._labels))

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[LabeledSample]:
        return iter(self.samples)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return (np.array_equal(self._scores, other._scores)
                and np.array_equal(self._labels, other._labels))

    def __hash__(self) -> int:
        return hash((self._scores.tobytes(), self._labels.tobytes()))

    def __repr__(self) -> str:
        return f"Dataset(n={self.n}, n_p={self.n_p}, n_n={self.n_n})"


def parse_dataset(records: Iterable[tuple[str, str]]) -> Dataset:
    """Build a Dataset from (score_text, label_text) records.

    Raises ParseError naming the offending 1-based row on any malformed
    score or unknown label token.
    """
    scores: list[float] = []
    labels: list[int] = []
    for row, (score_text, label_text) in enumerate(records, start=1):
        try:
            score = float(score_text)
        except (TypeError, ValueError):
            raise ParseError(f"row {row}: score {score_text!r} is not a decimal number") from None
        if not math.isfinite(score) or not 0.0 <= score <= 1.0:
            raise ParseError(f"row {row}: score {score_text!r} is outside [0, 1]")
        label = _LABEL_TOKENS.get(str(label_text).strip().casefold())
        if label is None:
            raise ParseError(f"row {row}: unknown label {label_text!r} (expected 0/1 or N/P)")
        scores.append(score)
        labels.append(label)
    if not scores:
        raise EmptyInputError("no sample rows in input")
    return Dataset(scores, labels)


def serialize_dataset(data: Dataset) -> tuple[tuple[str, str], ...]:
    """Inverse of parse_dataset: emits records that parse back to `data`.

    Scores are written with repr so the float round-trips exactly; labels
    are written canonically as 0/1.
    """
    return tuple((repr(float(s)), str(int(l)))
                 for s, l in zip(data.scores, data.labels))


def from_csv(text: str) -> Dataset:
    """Parse `score,label` CSV text into a Dataset."""
    rows = [row for row in csv.reader(io.StringIO(text))
            if row and any(cell.strip() for cell in row)]
    if not rows:
        raise EmptyInputError("csv input is empty")
    header = tuple(cell.strip().casefold() for cell in rows[0])
    if header != CSV_HEADER:
        raise ParseError(f"expected header 'score,label', got {','.join(rows[0])!r}")
    records = []
    for idx, row in enumerate(rows[1:], start=1):
        if len(row) != 2:
            raise ParseError(f"row {idx}: expected 2 fields, got {len(row)}")
        records.append((row[0], row[1]))
    return parse_dataset(records)


def to_csv(data: Dataset) -> str:
    lines = [",".join(CSV_HEADER)]
    lines.extend(f"{s},{l}" for s, l in serialize_dataset(data))
    return "\n".join(lines) + "\n"


def read_csv(path: str) -> Dataset:
    with open(path, "r", encoding="utf-8") as fh:
        return from_csv(fh.read())


def write_csv(data: Dataset, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(to_csv(data))


@dataclass(frozen=True)
class SimulationSpec:
    """Two-Gaussian score model: one component per class, clipped to [0, 1]."""

    n: int
    pi_p: float
    mu_n: float
    sigma_n: float
    mu_p: float
    sigma_p: float
    seed: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise SimulationSpecError("n must be at least 2")
        if not 0.0 < self.pi_p < 1.0:
            raise SimulationSpecError("pi_p must lie strictly inside (0, 1)")
        if self.sigma_n <= 0.0 or self.sigma_p <= 0.0:
            raise SimulationSpecError("class standard deviations must be positive")


def simulate_gaussian(spec: SimulationSpec) -> Dataset:
    """Draw a dataset from the spec's class-conditional Gaussians.

    round(n * pi_p) samples are positive. Draws falling outside [0, 1] are
    clipped to the boundary, so extreme parameters pile mass at 0 and 1.
    Identical specs (seed included) produce identical datasets.
    """
    n_p = round(spec.n * spec.pi_p)
    n_n = spec.n - n_p
    if n_p < 1 or n_n < 1:
        raise SimulationSpecError("requested prevalence rounds one class to zero samples")
    rng = np.random.default_rng(spec.seed)
    neg = np.clip(rng.normal(spec.mu_n, spec.sigma_n, n_n), 0.0, 1.0)
    pos = np.clip(rng.normal(spec.mu_p, spec.sigma_p, n_p), 0.0, 1.0)
    scores = np.concatenate([neg, pos])
    labels = np.concatenate([np.full(n_n, NEGATIVE), np.full(n_p, POSITIVE)])
    return Dataset(scores, labels)
