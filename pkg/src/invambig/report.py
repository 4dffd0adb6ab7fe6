from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any, Optional


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a verification run.

    For exhaustive finite checks ``worst_input`` is the least counterexample
    index and ``max_error`` is 0 or 1; for sampled numerical checks it is the
    sample with the largest error.
    """

    passed: bool
    max_error: float
    worst_input: Any
    samples: int
    seed: Optional[int]
    check: str = ""
    detail: str = ""
    tol: Optional[float] = None
    fourth_power_error: Optional[float] = None

    def as_dict(self) -> dict:
        return asdict(self)
