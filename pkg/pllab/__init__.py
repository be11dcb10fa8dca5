"""Define version of pllab."""
from __future__ import absolute_import


VERSION = (0, 4, 1)


def get_version():
    """Return the version as a string, e.g. "0.4.1".

    Each sub-command reports this version through --version.
    """
    return ".".join([str(i) for i in VERSION])
