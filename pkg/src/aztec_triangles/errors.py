"""Shared exceptions and the search budget guarding brute-force enumerators."""

import os

DEFAULT_CAP = 10**7
CAP_ENV_VAR = "AZTEC_CAP"


class CapExceeded(RuntimeError):
    """An exhaustive search went past its node budget."""


class IdentityError(ArithmeticError):
    """An identity that should hold exactly evaluated to something else."""


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    cap = int(raw)
    if cap <= 0:
        raise ValueError(f"{CAP_ENV_VAR} must be positive, got {raw!r}")
    return cap


class SearchBudget:
    """Counts search nodes and aborts once the cap is reached."""

    def __init__(self, cap: int | None = None):
        self.cap = default_cap() if cap is None else cap
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.cap:
            raise CapExceeded(f"search exceeded cap of {self.cap} nodes")
