"""Wavelet basis catalog.

Filter taps are embedded as source constants (see _filter_tables.py and
tools/make_filter_tables.py); the catalog verifies the defining identities
of every bank once, on first access.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._filter_tables import FILTER_BANKS
from .errors import CatalogError

CATALOG_NAMES = tuple(FILTER_BANKS)

#: the 15 bases swept during basis selection (haar is kept for testing only)
SELECTION_CATALOG = tuple(n for n in CATALOG_NAMES if n != "haar")


@dataclass(frozen=True)
class WaveletSpec:
    """A named two-channel filter bank (analysis/synthesis, low/high)."""

    name: str
    dec_lo: np.ndarray
    dec_hi: np.ndarray
    rec_lo: np.ndarray
    rec_hi: np.ndarray
    orthogonal: bool

    def __post_init__(self):
        for field in ("dec_lo", "dec_hi", "rec_lo", "rec_hi"):
            taps = np.ascontiguousarray(getattr(self, field),
                                        dtype=np.float64)
            taps.setflags(write=False)
            object.__setattr__(self, field, taps)

    @property
    def filter_length(self) -> int:
        return int(self.dec_lo.size)

    @property
    def max_synthesis_length(self) -> int:
        return max(int(self.rec_lo.size), int(self.rec_hi.size))


def _verify_bank(spec: WaveletSpec) -> None:
    """Self-check run once per bank at catalog construction.

    Checks the two-channel perfect-reconstruction identities in the
    polynomial domain: Lo(z)Rlo(z) - Lo(-z)Rlo(-z) = 2 z^(K-1) together
    with the alias relations used to build the high-pass filters.
    """
    lo, hi = spec.dec_lo, spec.dec_hi
    rlo, rhi = spec.rec_lo, spec.rec_hi
    K = lo.size
    prod = np.convolve(lo, rlo) + np.convolve(hi, rhi)
    want = np.zeros_like(prod)
    want[K - 1] = 2.0
    if not np.allclose(prod, want, atol=1e-10):
        raise CatalogError(f"{spec.name}: perfect-reconstruction identity "
                           "violated")
    if spec.orthogonal:
        if not np.allclose(lo, rlo[::-1], atol=1e-12):
            raise CatalogError(f"{spec.name}: dec_lo is not the time-"
                               "reversed rec_lo")
        if abs(np.sum(lo ** 2) - 1.0) > 1e-12:
            raise CatalogError(f"{spec.name}: analysis low-pass is not "
                               "unit norm")
    if abs(np.sum(lo) - np.sqrt(2.0)) > 1e-10:
        raise CatalogError(f"{spec.name}: low-pass taps do not sum to "
                           "sqrt(2)")


def _build_catalog() -> dict[str, WaveletSpec]:
    catalog = {}
    for name, bank in FILTER_BANKS.items():
        spec = WaveletSpec(name=name,
                           dec_lo=bank["dec_lo"], dec_hi=bank["dec_hi"],
                           rec_lo=bank["rec_lo"], rec_hi=bank["rec_hi"],
                           orthogonal=bank["orthogonal"])
        _verify_bank(spec)
        catalog[name] = spec
    return catalog


_CATALOG: dict[str, WaveletSpec] | None = None


def catalog_lookup(name: str) -> WaveletSpec:
    """Return the named basis or raise CatalogError."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    try:
        return _CATALOG[name]
    except KeyError:
        known = ", ".join(sorted(_CATALOG))
        raise CatalogError(f"unknown basis {name!r}; catalog holds: {known}") \
            from None
