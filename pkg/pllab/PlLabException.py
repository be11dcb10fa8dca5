#!/usr/bin/env python
"""Define pllab exceptions.

Every error raised on purpose by pllab derives from PlLabException, which
carries the exit status the command line front end reports for it.
"""

__all__ = ["PlLabException",
           "ValidationError",
           "DomainError",
           "ResourceLimitError",
           "StructuralError"]


class PlLabException(Exception):

    """Define pllab exception class."""

    exit_code = 1

    def __init__(self, msg, cmd=None):
        Exception.__init__(self, msg)
        self.cmd = cmd
        self.msg = msg

    def __repr__(self):
        if self.cmd is None:
            return self.msg
        return "command: " + self.cmd + " raised the following " + \
            "error: " + self.msg

    def __str__(self):
        return self.__repr__()


class ValidationError(PlLabException, ValueError):

    """Malformed input or a violated precondition."""


class DomainError(PlLabException, ValueError):

    """A request that is mathematically undefined, e.g. the lower
    covers of the empty diagram."""


class ResourceLimitError(PlLabException, RuntimeError):

    """A configured desk-scale cap was exceeded."""

    exit_code = 2


class StructuralError(PlLabException):

    """A graded graph violates its structural invariants."""
