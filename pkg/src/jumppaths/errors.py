"""Shared exception types."""


class GuardError(ValueError):
    """An input exceeds a documented size guard.

    Guards exist to keep exact-arithmetic work at desk scale; each message
    names the guard that fired so callers can tell a policy limit from a
    plain usage error.
    """
