"""Benchmark objectives and a registry for user-supplied ones.

The five built-ins (``f1`` .. ``f5``) are the classic polynomial /
exponential / periodic test functions used by the benchmark suites, each
with its default box and an analytically derived optimum record. All
evaluators are pure and accept numpy arrays as well as scalars, which the
brute-force grid oracle exploits.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from .space import Point, SearchSpace, make_space

__all__ = [
    "KnownOptimum",
    "ObjectiveSpec",
    "UnknownObjectiveError",
    "f1",
    "f2",
    "f3",
    "f4",
    "f5",
    "grid_oracle",
    "lookup",
    "names",
    "register",
]


def f1(x):
    """Third-order polynomial, one variable."""
    return x**3 - 5 * x**2 - 20 * x


def f2(x):
    """Fifth-order polynomial, one variable."""
    return x**5 - 10 * x**4 - 5.2 * x**3 - 12 * x**2 + 5.5 * x


def f3(x, y):
    """Two-variable polynomial with a single interior peak."""
    return x**3 - 5 * x**2 - 2.04 * y**2 + 4 * y


def f4(x, y):
    """Antisymmetric exponential bump: x * exp(-x^2 - y^2)."""
    return x * np.exp(-(x**2) - y**2)


def f5(x):
    """Periodic objective sin(2x) - cos(x); two global maxima per 2*pi window."""
    return np.sin(2 * x) - np.cos(x)


@dataclass(frozen=True)
class KnownOptimum:
    """Best attainable value, the point(s) attaining it, and a value tolerance."""

    value: float
    points: tuple[Point, ...]
    tolerance: float = 1e-3


@dataclass(frozen=True)
class ObjectiveSpec:
    """An evaluatable objective plus the metadata the drivers and suites need.

    ``evaluator`` is called with unpacked coordinates, e.g. ``evaluator(x, y)``
    for a two-variable objective.
    """

    name: str
    arity: int
    direction: str  # "maximize" | "minimize"
    evaluator: Callable[..., float]
    default_space: SearchSpace
    known_optimum: KnownOptimum | None = None

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("arity must be >= 1")
        if self.direction not in ("maximize", "minimize"):
            raise ValueError(f"direction must be 'maximize' or 'minimize', got {self.direction!r}")
        if self.default_space.dims != self.arity:
            raise ValueError(
                f"default_space has {self.default_space.dims} dims but arity is {self.arity}"
            )

    def evaluate(self, point) -> float:
        return float(self.evaluator(*point))


class UnknownObjectiveError(ValueError):
    """Raised by :func:`lookup` for names that were never registered."""


# Exact stationary points, frozen at double precision. The widely quoted
# 4-decimal figures (15.4564, 0.5635, 1.9608, 0.4289, 1.76017) agree with
# these to well under 1e-3.
_F1_ARGMAX = (10 - math.sqrt(340)) / 6  # -1.4065148190976291
_F1_MAX = 15.45639102739966
_F2_ARGMAX = 0.19318311263429328
_F2_MAX = 0.5635223847715409
_F3_ARGMAX = (0.0, 50.0 / 51.0)  # y = 0.9803921568627451
_F3_MAX = 100.0 / 51.0  # 1.9607843137254901
_F4_ARGMAX = (1 / math.sqrt(2), 0.0)
_F4_MAX = math.exp(-0.5) / math.sqrt(2)  # 0.4288819424803534
_F5_ARGMAX_RIGHT = 3.776459524723364
_F5_ARGMAX_LEFT = -2.5067257824562226
_F5_MAX = 1.7601725930460869

_REGISTRY: dict[str, ObjectiveSpec] = {}


def register(spec: ObjectiveSpec, *, overwrite: bool = False) -> ObjectiveSpec:
    """Add an objective to the registry and return it."""
    if spec.name in _REGISTRY and not overwrite:
        raise ValueError(f"objective {spec.name!r} is already registered")
    _REGISTRY[spec.name] = spec
    return spec


def lookup(name: str) -> ObjectiveSpec:
    """Fetch a registered objective by name."""
    try:
        return _REGISTRY[name]
    except KeyError:
        available = ", ".join(sorted(_REGISTRY))
        raise UnknownObjectiveError(
            f"unknown objective {name!r}; available: {available}"
        ) from None


def names() -> list[str]:
    return sorted(_REGISTRY)


register(
    ObjectiveSpec(
        name="f1",
        arity=1,
        direction="maximize",
        evaluator=f1,
        default_space=make_space((-6.0, 6.0)),
        known_optimum=KnownOptimum(_F1_MAX, ((_F1_ARGMAX,),)),
    )
)
register(
    ObjectiveSpec(
        name="f2",
        arity=1,
        direction="maximize",
        evaluator=f2,
        default_space=make_space((-6.0, 6.0)),
        known_optimum=KnownOptimum(_F2_MAX, ((_F2_ARGMAX,),)),
    )
)
register(
    ObjectiveSpec(
        name="f3",
        arity=2,
        direction="maximize",
        evaluator=f3,
        default_space=make_space((-3.0, 3.0), (-3.0, 3.0)),
        known_optimum=KnownOptimum(_F3_MAX, (_F3_ARGMAX,)),
    )
)
register(
    ObjectiveSpec(
        name="f4",
        arity=2,
        direction="maximize",
        evaluator=f4,
        default_space=make_space((-2.0, 2.0), (-2.0, 2.0)),
        known_optimum=KnownOptimum(_F4_MAX, (_F4_ARGMAX,)),
    )
)
register(
    ObjectiveSpec(
        name="f5",
        arity=1,
        direction="maximize",
        evaluator=f5,
        default_space=make_space((-2 * math.pi, 2 * math.pi)),
        known_optimum=KnownOptimum(_F5_MAX, ((_F5_ARGMAX_LEFT,), (_F5_ARGMAX_RIGHT,))),
    )
)


def _axis(lo: float, hi: float, resolution: float) -> np.ndarray:
    n = int(math.floor((hi - lo) / resolution + 1e-9)) + 1
    axis = lo + resolution * np.arange(n)
    if axis[-1] < hi - 1e-12:
        axis = np.append(axis, hi)
    else:
        axis[-1] = hi
    return axis


def grid_oracle(
    spec: ObjectiveSpec, resolution: float, tol: float = 1e-3
) -> tuple[float, list[Point]]:
    """Exhaustively evaluate ``spec`` on a uniform grid over its default box.

    Returns the best value found (under the objective's direction) and every
    grid point whose value lies within ``tol`` of it. Supports arity 1 and 2;
    used to confirm known optima independently of any search algorithm.
    """
    if spec.arity > 2:
        raise ValueError(f"grid oracle supports arity <= 2, got {spec.arity}")
    if resolution <= 0:
        raise ValueError("resolution must be positive")

    sign = 1.0 if spec.direction == "maximize" else -1.0

    def eval_rows(xs, ys=None):
        try:
            vals = spec.evaluator(xs) if ys is None else spec.evaluator(xs, ys)
            vals = np.asarray(vals, dtype=float)
            if vals.shape != xs.shape:
                raise TypeError
            return vals
        except Exception:
            if ys is None:
                return np.array([float(spec.evaluator(x)) for x in xs])
            return np.array([float(spec.evaluator(x, y)) for x, y in zip(xs, ys)])

    if spec.arity == 1:
        (lo, hi), = spec.default_space.bounds
        xs = _axis(lo, hi, resolution)
        vals = sign * eval_rows(xs)
        best = float(vals.max())
        keep = vals >= best - tol
        points = [(float(x),) for x in xs[keep]]
        return sign * best, points

    (xlo, xhi), (ylo, yhi) = spec.default_space.bounds
    xs = _axis(xlo, xhi, resolution)
    ys = _axis(ylo, yhi, resolution)
    best = -math.inf
    candidates: list[tuple[float, float, float]] = []
    # Row sweep: collect against the running best, filter once at the end.
    for y in ys:
        row = sign * eval_rows(xs, np.full_like(xs, y))
        row_best = float(row.max())
        if row_best > best:
            best = row_best
        keep = row >= best - tol
        if keep.any():
            candidates.extend((float(v), float(x), float(y)) for v, x in zip(row[keep], xs[keep]))
    points = [(x, y) for v, x, y in candidates if v >= best - tol]
    return sign * best, points
