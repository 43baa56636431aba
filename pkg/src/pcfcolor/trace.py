"""Run metadata collected by the constructive solvers."""

from __future__ import annotations

from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Trace:
    """Counters and flags describing one solve.

    ``fallbacks`` lists internal contradictions that forced the exhaustive
    oracle; a correct run keeps it empty. ``substitutions`` lists designed
    uses of the oracle (tiny base cases, the degree-3 core of a subcubic
    graph) and is informational.
    """

    keep_contexts: bool = False
    events: Counter = field(default_factory=Counter)
    fallbacks: list[str] = field(default_factory=list)
    substitutions: list[str] = field(default_factory=list)
    contexts: list[Any] = field(default_factory=list)
    max_depth: int = 0
    _depth: int = 0

    @property
    def fallback_fired(self) -> bool:
        return bool(self.fallbacks)

    def note(self, event: str) -> None:
        self.events[event] += 1

    @contextmanager
    def level(self):
        self._depth += 1
        self.max_depth = max(self.max_depth, self._depth)
        try:
            yield
        finally:
            self._depth -= 1

    def report(self) -> str:
        """Tab-separated ``key=value`` record."""
        fields = [
            f"fallback={'yes' if self.fallback_fired else 'no'}",
            f"fallbacks={len(self.fallbacks)}",
            f"substitutions={len(self.substitutions)}",
            f"depth={self.max_depth}",
        ]
        fields += [f"{k}={v}" for k, v in sorted(self.events.items())]
        return "\t".join(fields)
