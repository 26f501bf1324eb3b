"""Shared exception types."""


class GuardError(RuntimeError):
    """A computation exceeded its default size guard and was not forced."""


class InternalConsistencyError(RuntimeError):
    """An exact identity that must hold by construction failed to hold."""
