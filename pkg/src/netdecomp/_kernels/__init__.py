"""Kernel backend selection.

At import time we pick the compiled extension if it is present, unless
the environment variable ``NETDECOMP_PURE=1`` forces the pure-Python
fallback. Both backends expose the same two functions (``bfs`` and
``propose_scan``) with identical outputs.
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("NETDECOMP_PURE") == "1":
    _impl = pure
else:
    try:
        from . import _speed as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

bfs = _impl.bfs
propose_scan = _impl.propose_scan
BACKEND = _impl.NAME


def backends():
    """Return every importable backend, keyed by name (for tests/benchmarks)."""
    found = {pure.NAME: pure}
    try:
        from . import _speed

        found[_speed.NAME] = _speed
    except ImportError:
        pass
    return found
