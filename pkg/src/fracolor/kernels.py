"""Kernel selection: the compiled ``_csearch`` when importable, else ``_pysearch``.

Set ``FRACOLOR_PURE=1`` to force the pure-Python kernels.
"""
import os

from . import _pysearch

YES, NO, TIMEOUT = _pysearch.YES, _pysearch.NO, _pysearch.TIMEOUT

_impl = _pysearch
if os.environ.get("FRACOLOR_PURE") != "1":
    try:
        from . import _csearch as _impl  # type: ignore[no-redef]
    except ImportError:  # extension not built
        pass

backend = "cython" if _impl is not _pysearch else "python"
color_search = _impl.color_search
max_clique = _impl.max_clique
