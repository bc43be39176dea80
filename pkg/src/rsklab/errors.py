"""Exceptions shared across the library."""


class CapExceededError(Exception):
    """An exhaustive computation was refused because its input exceeds the
    configured resource cap.  Raised instead of silently truncating."""


class OracleDisagreementError(Exception):
    """Two independent computations of the same quantity disagreed.

    This always indicates a bug in the harness, never a mathematical
    finding, and is therefore fatal for the run that encounters it."""
