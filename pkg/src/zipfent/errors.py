"""Exception types shared across the package."""


class EmptyCorpusError(Exception):
    """An operation needed at least one token and got none."""


class InsufficientPointsError(Exception):
    """Fewer than two distinct frequencies were available for the log-log fit."""

    def __init__(self, available: int):
        self.available = available
        super().__init__(
            f"log-log fit needs at least 2 distinct frequencies in range, have {available}"
        )


class BoundNotApplicableError(Exception):
    """The entropy ceiling was requested for a slope a < 1, where it does not hold."""

    def __init__(self, a: float):
        self.a = a
        super().__init__(f"entropy bound requires slope a >= 1, got a = {a}")
