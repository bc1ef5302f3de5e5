"""Custom exceptions for the fullcycle engine."""


class FullCycleError(Exception):
    """Base exception for all fullcycle errors."""
    pass


class ConfigurationError(FullCycleError):
    """Raised when invalid parameters are provided to the engine."""
    pass


class EmbeddingError(FullCycleError):
    """Raised when a rotation system does not describe a valid embedding."""
    pass


class GraphFormatError(FullCycleError):
    """Raised when a graph file cannot be decoded."""
    pass


class PlanarCodeError(GraphFormatError):
    """Raised when a planar_code stream is malformed; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class InternalConsistencyError(FullCycleError):
    """Raised when a state that must be unreachable is reached."""
    pass


class AuditRefusalError(FullCycleError):
    """Raised when a bound is requested from an audit that does not support it."""
    pass


class OracleLimitError(FullCycleError):
    """Raised when the exhaustive oracle is asked to handle too large a graph."""
    pass
