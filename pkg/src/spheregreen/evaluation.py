"""Result record shared by the three Green-function routes."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError


class Method(enum.Enum):
    SERIES = "series"
    INTEGRAL = "integral"
    APPELL = "appell"


@dataclass(frozen=True)
class GreenEvaluation:
    value: float
    theta: float
    method: Method
    error_estimate: float
    work: int

    @property
    def t(self) -> float:
        return math.cos(self.theta)


def check_theta(theta: float) -> float:
    theta = float(theta)
    if not 0.0 < theta <= math.pi:
        raise DomainError(
            f"theta must lie in (0, pi]; the Green function is singular at theta = 0 (got {theta})")
    return theta
