"""Discrete outcome distributions and Shannon entropies (in bits)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

NEGATIVE_TOL = 1e-12
SUM_TOL = 1e-9


@dataclass(frozen=True)
class OutcomeDistribution:
    """Probability table with one named axis per random variable.

    ``axes=("Phi", "D", "M")`` means ``probs[i, j, k] = P(Phi=i, D=j, M=k)``.
    """

    probs: np.ndarray
    axes: tuple[str, ...] = ()

    def __post_init__(self):
        p = np.array(self.probs, dtype=float)
        axes = tuple(self.axes) or tuple(f"X{k}" for k in range(p.ndim))
        if len(axes) != p.ndim:
            raise ValueError(f"{p.ndim}-d table needs {p.ndim} axis names, got {axes}")
        if len(set(axes)) != len(axes):
            raise ValueError(f"axis names must be unique: {axes}")
        _check_probs(p)
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)
        object.__setattr__(self, "axes", axes)

    def marginal(self, *keep: str) -> "OutcomeDistribution":
        missing = set(keep) - set(self.axes)
        if missing:
            raise KeyError(f"unknown axes {sorted(missing)}; have {self.axes}")
        drop = tuple(i for i, a in enumerate(self.axes) if a not in keep)
        p = self.probs.sum(axis=drop) if drop else self.probs
        kept = [a for a in self.axes if a in keep]
        order = [kept.index(a) for a in keep]
        return OutcomeDistribution(np.transpose(p, order), tuple(keep))

    def entropy(self, *of: str) -> float:
        return shannon_entropy(self.marginal(*of) if of else self)

    def conditional_entropy(self, target: Sequence[str], given: Sequence[str]) -> float:
        """H(target | given) = H(target, given) - H(given)."""
        target, given = tuple(target), tuple(given)
        if not given:
            return self.entropy(*target)
        return self.entropy(*target, *given) - self.entropy(*given)

    def mutual_information(self, a: Sequence[str], b: Sequence[str]) -> float:
        return self.entropy(*a) - self.conditional_entropy(a, b)


def _check_probs(p: np.ndarray) -> None:
    if not np.all(np.isfinite(p)):
        raise ValueError("probabilities must be finite")
    if p.size and p.min() < -NEGATIVE_TOL:
        raise ValueError(f"negative probability {p.min()!r}")
    total = p.sum()
    if abs(total - 1.0) > SUM_TOL:
        raise ValueError(f"probabilities sum to {total!r}, not 1")


def entropy_bits(p, axis=None) -> np.ndarray:
    """-sum p log2 p along ``axis`` with 0 log 0 = 0; no normalization.

    Vectorized workhorse behind the game optimizers.
    """
    p = np.clip(np.asarray(p, dtype=float), 0.0, None)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(p > 0, -p * np.log2(np.where(p > 0, p, 1.0)), 0.0)
    return terms.sum(axis=axis)


def shannon_entropy(dist) -> float:
    """Shannon entropy in bits of a distribution or raw probability table.

    Tables summing to one within 1e-9 are renormalized before evaluation.
    """
    p = dist.probs if isinstance(dist, OutcomeDistribution) else np.asarray(dist, float)
    _check_probs(p)
    p = np.clip(p, 0.0, None)
    return float(entropy_bits(p / p.sum()))


def conditional_entropy(joint) -> float:
    """H(A|B) for a joint table over pairs, A on axis 0 and B on axis 1.

    Extra trailing axes are treated as part of B.
    """
    if isinstance(joint, OutcomeDistribution):
        return joint.conditional_entropy(joint.axes[:1], joint.axes[1:])
    p = np.asarray(joint, dtype=float)
    if p.ndim < 2:
        raise ValueError("conditional entropy needs a joint table with >= 2 axes")
    return shannon_entropy(p) - shannon_entropy(p.sum(axis=0))


def binary_entropy(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    return entropy_bits(np.stack([p, 1.0 - p]), axis=0)
