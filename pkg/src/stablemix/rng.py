"""Deterministic random state built on a counter-based bit generator.

RngState(seed, stream) pins a Philox-4x64 generator keyed by the pair
(seed, stream).  Distinct streams are statistically independent, so Monte
Carlo drivers derive one stream per task and stay reproducible regardless
of execution order.  Raw-word test vectors in the test suite freeze the
bit stream.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConstraintError

__all__ = ["RngState"]

_U64 = 1 << 64


@dataclass
class RngState:
    """Reproducible generator state keyed by (seed, stream).

    The underlying numpy Generator is created lazily and mutates in place
    as draws are made; the (seed, stream) pair alone determines the full
    sequence.
    """

    seed: int
    stream: int = 0
    _gen: np.random.Generator | None = field(
        default=None, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if not (0 <= int(self.seed) < _U64):
            raise ConstraintError("seed must be an unsigned 64-bit integer")
        if not (0 <= int(self.stream) < _U64):
            raise ConstraintError("stream must be an unsigned 64-bit integer")
        self.seed = int(self.seed)
        self.stream = int(self.stream)

    @property
    def generator(self) -> np.random.Generator:
        if self._gen is None:
            key = np.array([self.seed, self.stream], dtype=np.uint64)
            self._gen = np.random.Generator(np.random.Philox(key=key))
        return self._gen

    def derive(self, offset: int) -> "RngState":
        """Fresh independent state on stream + 1 + offset."""
        if offset < 0:
            raise ConstraintError("offset must be nonnegative")
        return RngState(self.seed, (self.stream + 1 + offset) % _U64)
