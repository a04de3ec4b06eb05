"""Exception types shared across the toolkit."""


class MultidoorError(Exception):
    """Base class for all toolkit errors."""


class DatasetLoadError(MultidoorError):
    """Dataset files are missing, unreadable, or not fetchable."""


class IntegrityError(DatasetLoadError):
    """A dataset record is corrupt; carries the offending index."""

    def __init__(self, index, message):
        super().__init__(f"record {index}: {message}")
        self.index = index


class ValidationError(MultidoorError):
    """Invalid argument or configuration value."""


class InsufficientSamplesError(ValidationError):
    """A target class has fewer samples than requested."""


class CapacityError(ValidationError):
    """Requested poison count exceeds the eligible sample pool."""


class GeometryError(MultidoorError):
    """Image / network shape mismatch."""


class TrainingDivergedError(MultidoorError):
    """A loss became non-finite; carries epoch and iteration."""

    def __init__(self, epoch, iteration, message="non-finite loss"):
        super().__init__(f"{message} at epoch {epoch}, iteration {iteration}")
        self.epoch = epoch
        self.iteration = iteration


class MetricUnavailableError(MultidoorError):
    """A metric cannot be computed in this environment (not fatal)."""


class DegenerateDistributionError(MultidoorError):
    """MAD of the values is zero; anomaly indexes are undefined."""


class ConfigError(ValidationError):
    """Experiment configuration failed fail-fast validation."""


class StageError(MultidoorError):
    """A pipeline stage failed; carries the stage name."""

    def __init__(self, stage, message):
        super().__init__(f"stage '{stage}' failed: {message}")
        self.stage = stage
