"""Workspace-level knobs.

The dimension cap bounds every matrix the exact kernels will touch; the
default Ext/Tor bound is what classify()/scenarios use when the caller does
not pass one.  The CLI may override both from a config file or flags.
"""

DEFAULT_BOUND = 6
DEFAULT_SEED = 0

_dimension_cap = 512


def dimension_cap():
    return _dimension_cap


def set_dimension_cap(n):
    global _dimension_cap
    if n < 1:
        raise ValueError("dimension cap must be >= 1")
    _dimension_cap = n
