"""Braid normal forms, sliding circuits and canonical reduction systems."""

from __future__ import annotations

from . import curves, garside


def clear_caches() -> None:
    """Drop every memoized permutation and curve computation."""
    for module in (garside, curves):
        for obj in vars(module).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()
