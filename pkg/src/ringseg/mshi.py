"""Iterative mean-shift segmentation with a pluggable stopping criterion.

Each outer iteration filters the current image once and compares it with
its predecessor. The loop stops when the comparison drops to ``epsilon``
or below, or when ``max_outer_iters`` passes have run.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

from .shannon import entropy
from .mean_shift import FilterConfig, filter_pass
from .metrics import ned, we_index

CRITERIA = ("ned", "weak_entropy")
DEFAULT_EPSILON = {"ned": 0.9, "weak_entropy": 0.01}
_ALIASES = {"we": "weak_entropy"}


@dataclass(frozen=True)
class StoppingCriterion:
    kind: str = "ned"
    epsilon: float = None

    def __post_init__(self):
        kind = _ALIASES.get(self.kind, self.kind)
        if kind not in CRITERIA:
            raise ValueError(f"criterion must be one of {CRITERIA}, got {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        if self.epsilon is None:
            object.__setattr__(self, "epsilon", DEFAULT_EPSILON[kind])
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")


@dataclass(frozen=True)
class MshiConfig:
    filter: FilterConfig = field(default_factory=FilterConfig)
    stop: StoppingCriterion = field(default_factory=StoppingCriterion)
    max_outer_iters: int = 50

    def __post_init__(self):
        if int(self.max_outer_iters) < 1:
            raise ValueError("max_outer_iters must be >= 1")


class TraceRecord(NamedTuple):
    iteration: int
    criterion_value: float
    entropy: float


@dataclass
class ConvergenceTrace:
    """Per-iteration criterion value and entropy of the filtered image."""

    records: list = field(default_factory=list)

    def append(self, criterion_value, image_entropy):
        self.records.append(
            TraceRecord(len(self.records) + 1, float(criterion_value),
                        float(image_entropy))
        )

    @property
    def values(self):
        return [r.criterion_value for r in self.records]

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


class MshiResult(NamedTuple):
    segmented: object
    trace: ConvergenceTrace
    hit_cap: bool
    history: list = None


def criterion_value(stop, prev, cur):
    if stop.kind == "ned":
        return ned(prev, cur)
    return we_index(prev, cur)


def run(image, cfg=None, keep_history=False):
    """Filter repeatedly until the stopping criterion is met.

    Returns ``(segmented, trace, hit_cap)``; ``hit_cap`` is true when the
    iteration budget ran out with the criterion still above ``epsilon``.
    With ``keep_history`` the result also carries every intermediate image,
    starting with the input.
    """
    cfg = cfg or MshiConfig()
    trace = ConvergenceTrace()
    history = [image] if keep_history else None
    b1 = image
    err = float("inf")
    while err > cfg.stop.epsilon and len(trace) < cfg.max_outer_iters:
        b2 = filter_pass(b1, cfg.filter)
        err = criterion_value(cfg.stop, b1, b2)
        trace.append(err, entropy(b2))
        if keep_history:
            history.append(b2)
        b1 = b2
    return MshiResult(b1, trace, err > cfg.stop.epsilon, history)


def iterate_filter(image, filter_cfg, n_iters):
    """The input followed by ``n_iters`` successive filter passes."""
    images = [image]
    for _ in range(n_iters):
        images.append(filter_pass(images[-1], filter_cfg))
    return images


def trace_of(stop, images):
    """Trace of ``stop`` evaluated on consecutive pairs of ``images``."""
    trace = ConvergenceTrace()
    for prev, cur in zip(images, images[1:]):
        trace.append(criterion_value(stop, prev, cur), entropy(cur))
    return trace


def trace_total_variation(trace):
    """Sum of absolute changes between consecutive criterion values."""
    values = trace.values if isinstance(trace, ConvergenceTrace) else list(trace)
    if len(values) < 2:
        raise ValueError("total variation needs at least two trace records")
    return sum(abs(b - a) for a, b in zip(values, values[1:]))
