"""Exception classes and the per-call work budget."""


class AsynumError(Exception):
    """Base class for domain errors raised by this package."""


class HeterogeneousUnion(AsynumError):
    pass


class DimensionMismatch(AsynumError):
    pass


class InconsistentCommitment(AsynumError):
    pass


class FiniteSetCommitted(AsynumError):
    pass


class NotAMember(AsynumError):
    pass


class PreconditionNotMember(AsynumError):
    pass


class NotEquinumerous(AsynumError):
    pass


class NoWitnessWithinHorizon(AsynumError):
    pass


class NotNondecreasing(AsynumError):
    pass


class NotIntervalToOne(AsynumError):
    pass


class OutOfDomain(AsynumError):
    pass


class EmptySet(AsynumError):
    pass


class BoundExceeded(AsynumError):
    pass


class ParseError(AsynumError):
    def __init__(self, position, message, expected=()):
        self.position = position
        self.message = message
        self.expected = tuple(sorted(set(expected)))
        text = f"at offset {position}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)


class OracleFileError(AsynumError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class ResourceError(AsynumError):
    """Work-budget and horizon failures (CLI exit code 3)."""


class WorkBudgetExceeded(ResourceError):
    def __init__(self, limit, what="computation"):
        self.limit = limit
        super().__init__(f"{what} exceeded work budget of {limit} steps")


class HorizonTooSmall(ResourceError):
    pass


DEFAULT_BUDGET = 10**7


class Budget:
    """Mutable step counter; one instance per top-level call."""

    def __init__(self, limit=DEFAULT_BUDGET, what="computation"):
        if limit < 1:
            raise ValueError("budget must be >= 1")
        self.limit = limit
        self.used = 0
        self.what = what

    def charge(self, units=1):
        self.used += units
        if self.used > self.limit:
            raise WorkBudgetExceeded(self.limit, self.what)

    @classmethod
    def coerce(cls, budget):
        if budget is None:
            return cls()
        if isinstance(budget, Budget):
            return budget
        return cls(int(budget))
