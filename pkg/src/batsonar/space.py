"""Box-constrained search spaces: the feasible region every unit moves in."""

from __future__ import annotations

from dataclasses import dataclass, field

Point = tuple[float, ...]


@dataclass(frozen=True)
class SearchSpace:
    """Axis-aligned box of decision variables.

    ``bounds`` holds one closed ``(low, high)`` interval per dimension.
    """

    bounds: tuple[tuple[float, float], ...]
    dims: int = field(init=False)

    def __post_init__(self):
        bounds = tuple((float(lo), float(hi)) for lo, hi in self.bounds)
        if len(bounds) < 1:
            raise ValueError("search space needs at least one dimension")
        for d, (lo, hi) in enumerate(bounds):
            if not (lo < hi):
                raise ValueError(f"dimension {d}: lower bound {lo} must be < upper bound {hi}")
        object.__setattr__(self, "bounds", bounds)
        object.__setattr__(self, "dims", len(bounds))

    def range(self, d: int) -> float:
        lo, hi = self.bounds[d]
        return hi - lo

    def min_range(self) -> float:
        return min(hi - lo for lo, hi in self.bounds)

    def contains(self, point) -> bool:
        if len(point) != self.dims:
            return False
        return all(lo <= x <= hi for x, (lo, hi) in zip(point, self.bounds))

    def clamp(self, point) -> Point:
        """Project a point onto the box, component-wise."""
        return tuple(min(max(float(x), lo), hi) for x, (lo, hi) in zip(point, self.bounds))

    def sample(self, rng) -> Point:
        """Uniform random point; draws exactly one value per dimension."""
        return tuple(float(rng.uniform(lo, hi)) for lo, hi in self.bounds)


def make_space(*bounds: tuple[float, float]) -> SearchSpace:
    """Convenience constructor: ``make_space((-6, 6))`` or ``make_space((-3, 3), (-3, 3))``."""
    return SearchSpace(tuple(bounds))
