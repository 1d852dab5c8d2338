"""Mullineux symbols, residue symbols and Jantzen-Seitz partitions."""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # pragma: no cover - build-tree layout
    from _core import *  # noqa: F401,F403
