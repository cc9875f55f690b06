# src/planarc5/errors.py
from __future__ import annotations


class Planarc5Error(Exception):
    """Root of every error raised on purpose by this package."""


class GraphError(Planarc5Error, ValueError):
    pass


class Graph6Error(GraphError):
    pass


class NotACycleError(GraphError):
    pass


class PatternTooLargeError(GraphError):
    pass


class NonPlanarError(Planarc5Error):
    pass


class DisconnectedError(Planarc5Error):
    pass


class ConstructionError(Planarc5Error, ValueError):
    pass


class SearchLimitError(Planarc5Error, ValueError):
    pass


class CheckpointError(Planarc5Error):
    pass


class CountOverflowError(Planarc5Error, OverflowError):
    pass
