"""Finite probability distributions over an outcome set.

A :class:`Distribution` stores strictly positive weights only; entries with
weight zero are dropped at construction, so the support is exactly the key
set. Weights must sum to one within :data:`SUM_TOLERANCE`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .errors import DistributionError, DomainMismatchError

#: Absolute tolerance for all probability-sum checks in the package.
SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Distribution:
    """Immutable finite distribution.

    ``weights`` maps outcome tokens to probabilities. ``domain``, when given,
    declares the full outcome set the distribution lives over (a superset of
    the support); it defaults to the support itself. Two distributions are
    comparable by a divergence only when their declared domains agree.
    """

    weights: Mapping[str, float]
    domain: Optional[frozenset[str]] = None

    def __post_init__(self):
        cleaned = {}
        total = 0.0
        for key, value in self.weights.items():
            value = float(value)
            if value < 0.0:
                raise DistributionError(f"negative weight {value!r} for {key!r}")
            if value > 0.0:
                cleaned[str(key)] = value
            total += value
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise DistributionError(f"weights sum to {total!r}, expected 1 within {SUM_TOLERANCE}")
        if not cleaned:
            raise DistributionError("distribution has empty support")
        object.__setattr__(self, "weights", cleaned)
        if self.domain is not None:
            dom = frozenset(self.domain)
            missing = set(cleaned) - dom
            if missing:
                raise DistributionError(f"support elements outside declared domain: {sorted(missing)}")
            object.__setattr__(self, "domain", dom)

    def __getitem__(self, key: str) -> float:
        return self.weights.get(key, 0.0)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self.weights)

    def effective_domain(self) -> frozenset[str]:
        return self.domain if self.domain is not None else self.support

    def mass(self, keys: Iterable[str]) -> float:
        """Total probability of a set of outcomes."""
        return sum(self.weights.get(k, 0.0) for k in keys)

    def items_sorted(self):
        return sorted(self.weights.items())

    def with_domain(self, domain: Iterable[str]) -> "Distribution":
        return Distribution(dict(self.weights), frozenset(domain))


def require_same_domain(mu: Distribution, nu: Distribution) -> frozenset[str]:
    """Return the shared declared domain, or raise :class:`DomainMismatchError`."""
    dom_mu, dom_nu = mu.effective_domain(), nu.effective_domain()
    if dom_mu != dom_nu:
        raise DomainMismatchError(
            f"distributions declared over different outcome sets: {sorted(dom_mu)} vs {sorted(dom_nu)}"
        )
    return dom_mu
