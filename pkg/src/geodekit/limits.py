"""Search budgets and the two-way result type shared by every solver."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Optional

PROVED = "proved"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchLimits:
    """Budgets for exact search.

    ``geodesic_cap`` bounds the geodesics enumerated for a single vertex pair,
    ``node_budget`` the search-tree nodes of one solver call (subset candidates
    plus cover-search nodes), ``time_budget`` its wall-clock seconds.
    """

    geodesic_cap: int = 10**5
    node_budget: int = 10**8
    time_budget: Optional[float] = None

    def __post_init__(self):
        if self.geodesic_cap < 1 or self.node_budget < 1:
            raise ValueError("search limits must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")


DEFAULT_LIMITS = SearchLimits()


class LimitExceeded(Exception):
    def __init__(self, limit: str):
        super().__init__(f"{limit} exceeded")
        self.limit = limit


class Budget:
    """Mutable node/time accounting for one solver call."""

    _CLOCK_EVERY = 1024

    def __init__(self, limits: SearchLimits):
        self.limits = limits
        self.nodes = 0
        self._deadline = (
            None
            if limits.time_budget is None
            else time.monotonic() + limits.time_budget
        )

    def tick(self, k: int = 1) -> None:
        self.nodes += k
        if self.nodes > self.limits.node_budget:
            raise LimitExceeded("node_budget")
        if self._deadline is not None and self.nodes % self._CLOCK_EVERY < k:
            if time.monotonic() > self._deadline:
                raise LimitExceeded("time_budget")


@dataclass
class Outcome:
    """Either a proved value (with a checkable certificate) or an inconclusive bracket."""

    status: str
    value: Any = None
    lower: Optional[int] = None
    upper: Optional[int] = None
    limit_hit: Optional[str] = None
    certificate: Any = None
    extra: dict = field(default_factory=dict)

    @property
    def proved(self) -> bool:
        return self.status == PROVED

    @classmethod
    def ok(cls, value, certificate=None, **extra) -> Outcome:
        return cls(PROVED, value=value, lower=None, upper=None,
                   certificate=certificate, extra=extra)

    @classmethod
    def inconclusive(cls, limit: str, lower=None, upper=None, **extra) -> Outcome:
        if lower is not None and upper is not None and lower > upper:
            raise ValueError("inconclusive bracket with lower > upper")
        return cls(INCONCLUSIVE, lower=lower, upper=upper, limit_hit=limit, extra=extra)

    def to_dict(self) -> dict:
        """Flat JSON shape: certificate fields, then ``value``/``status`` (or the bracket)."""
        d: dict = {} if self.certificate is None else self.certificate.to_dict()
        if self.proved:
            d["value"] = _plain(self.value)
        else:
            d.update(lower=self.lower, upper=self.upper, limit_hit=self.limit_hit)
        d["status"] = self.status
        d.update({k: _plain(v) for k, v in self.extra.items()})
        return d


def _plain(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if hasattr(x, "to_dict"):
        return x.to_dict()
    return x
