"""Exception types shared across the package.

SelfCheckError signals that an internally verified identity failed to
re-expand correctly; it should never escape a healthy build and maps to a
dedicated process exit code in the CLI.  CapExceeded converts runaway
combinatorial growth into a clean, catchable error.
"""


class SelfCheckError(RuntimeError):
    """An internal identity or certificate failed its expansion check."""


class CapExceeded(RuntimeError):
    """A span or enumeration outgrew the configured dimension cap."""
