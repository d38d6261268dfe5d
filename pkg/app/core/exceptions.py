class DenseBlockError(Exception):
    """
    Base error of the detection pipeline.

    Every error carries the process exit code and a human-readable detail
    message. The CLI entry point turns any DenseBlockError into its exit code.

    Fields:
        exit_code — process exit code reported by the CLI.
        detail    — message shown to the user.
        stage     — pipeline stage that raised it, set by the stage runner.
    """
    exit_code: int = 2
    stage: str | None = None

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class ConfigurationError(DenseBlockError):
    """Invalid configuration, flag or parameter value."""
    exit_code = 1


class DataError(DenseBlockError):
    """Input data is missing, unreadable or unusable."""
    exit_code = 2


class GraphFormatError(DataError):
    """A graph, attribute or artifact file is malformed."""

    def __init__(self, path: str, line: int | None, reason: str):
        location = f"{path}:{line}" if line is not None else path
        super().__init__(f"{location}: {reason}")
        self.path = path
        self.line = line


class UndefinedDensityError(DataError):
    """A density was requested for a subset too small to define one."""


class DegenerateInputError(DataError):
    """An algorithm received input it cannot operate on (e.g. an edgeless graph)."""


class DimensionMismatchError(DataError):
    """Arrays or parameters do not have the expected shapes."""


class NumericError(DenseBlockError):
    """Non-finite values appeared in inputs or intermediate results."""
    exit_code = 3

    def __init__(self, detail: str, value: float | None = None):
        super().__init__(detail)
        self.value = value


class TrainingDivergedError(NumericError):
    """The training loss became non-finite."""

    def __init__(self, iteration: int, value: float, reason: str = "non-finite loss"):
        super().__init__(f"Training diverged at iteration {iteration}: {reason} ({value})", value)
        self.iteration = iteration
