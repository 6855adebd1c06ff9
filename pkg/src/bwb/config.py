"""Run-wide settings shared by the CLI, the scripts and the explorer."""
from __future__ import annotations

from dataclasses import dataclass, replace

from .groebner import DEFAULT_CAP, degree_cap
from .poly import DEFAULT_PRIME, GF, GREVLEX, LEX, QQ


@dataclass(frozen=True)
class Config:
    prime: int = DEFAULT_PRIME
    rationals: bool = False
    order: str = "grevlex"
    max_degree: int = DEFAULT_CAP
    bound: int = 12
    seed: int = 0
    verify: bool = False
    tries: int = 5

    def __post_init__(self):
        if self.order not in ("lex", "grevlex"):
            raise ValueError(f"unknown order {self.order!r}")
        if self.max_degree < 1 or self.bound < 1:
            raise ValueError("max_degree and bound must be positive")

    @property
    def field(self):
        return QQ if self.rationals else GF(self.prime)

    @property
    def term_order(self):
        return LEX if self.order == "lex" else GREVLEX

    def with_(self, **kw) -> "Config":
        return replace(self, **kw)

    def activate(self):
        """Make this config's degree cap the default for new ideals; returns a reset token."""
        return degree_cap.set(self.max_degree)
