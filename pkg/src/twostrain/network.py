"""Degree distributions for annealed (degree-class) network models.

No explicit graph is ever built: the epidemic model only sees the degree
law P(k) and its moments, so a distribution object is the whole network.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ParameterError

PROBABILITY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DegreeDistribution:
    """Discrete degree law P(k) on a strictly increasing integer support.

    Immutable after construction and safe to share across threads;
    moments are cached on first use.
    """

    degrees: np.ndarray
    probabilities: np.ndarray

    def __post_init__(self):
        k = np.array(self.degrees, dtype=np.int64)
        p = np.array(self.probabilities, dtype=np.float64)
        if k.ndim != 1 or p.ndim != 1 or k.size == 0 or k.shape != p.shape:
            raise ParameterError(
                "degrees and probabilities must be 1-D sequences of equal, nonzero length"
            )
        if k[0] < 1 or np.any(np.diff(k) <= 0):
            raise ParameterError("degrees must be strictly increasing integers >= 1")
        if np.any(p < 0.0) or not np.all(np.isfinite(p)):
            raise ParameterError("probabilities must be finite and nonnegative")
        total = float(p.sum())
        if abs(total - 1.0) > PROBABILITY_TOL:
            raise ParameterError(
                f"probabilities must sum to 1 within {PROBABILITY_TOL}, got {total!r}"
            )
        k.setflags(write=False)
        p.setflags(write=False)
        object.__setattr__(self, "degrees", k)
        object.__setattr__(self, "probabilities", p)

    def __len__(self) -> int:
        return int(self.degrees.size)

    @cached_property
    def degrees_float(self) -> np.ndarray:
        k = self.degrees.astype(np.float64)
        k.setflags(write=False)
        return k

    @cached_property
    def mean_degree(self) -> float:
        """First moment <k>."""
        return moment(self, 1)

    @cached_property
    def second_moment(self) -> float:
        """Second moment <k^2>."""
        return moment(self, 2)

    @cached_property
    def moment_ratio(self) -> float:
        """<k^2>/<k>, the factor turning a spreading ratio into a threshold."""
        return self.second_moment / self.mean_degree

    def to_dict(self) -> dict:
        return {
            "degrees": [int(k) for k in self.degrees],
            "probabilities": [float(p) for p in self.probabilities],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DegreeDistribution":
        try:
            degrees = data["degrees"]
            probabilities = data["probabilities"]
        except (KeyError, TypeError) as exc:
            raise ParameterError(
                "distribution data must be a mapping with 'degrees' and 'probabilities'"
            ) from exc
        return cls(np.asarray(degrees), np.asarray(probabilities))


def moment(dist: DegreeDistribution, order: int) -> float:
    """Return the raw moment sum_k k**order P(k)."""
    if not isinstance(order, (int, np.integer)) or order < 0:
        raise ParameterError(f"moment order must be a nonnegative integer, got {order!r}")
    return float(np.dot(dist.probabilities, dist.degrees_float ** order))


def make_scale_free(exponent: float = 3.0, k_min: int = 2, k_max: int = 100) -> DegreeDistribution:
    """Power-law degree distribution P(k) proportional to k**(-exponent).

    Support is every integer in [k_min, k_max]; weights are normalized to
    sum exactly to 1. Tiny probabilities are kept, never pruned, so the
    moments stay exact.

    Args:
        exponent: Tail exponent, must exceed 1.
        k_min: Smallest degree (>= 1).
        k_max: Largest degree (>= k_min).
    """
    if not np.isfinite(exponent) or exponent <= 1.0:
        raise ParameterError(f"scale-free exponent must be finite and > 1, got {exponent!r}")
    if int(k_min) != k_min or int(k_max) != k_max:
        raise ParameterError("k_min and k_max must be integers")
    k_min, k_max = int(k_min), int(k_max)
    if k_min < 1 or k_min > k_max:
        raise ParameterError(f"need 1 <= k_min <= k_max, got k_min={k_min}, k_max={k_max}")
    k = np.arange(k_min, k_max + 1, dtype=np.int64)
    weights = k.astype(np.float64) ** (-float(exponent))
    return DegreeDistribution(k, weights / weights.sum())
