"""Exact verification of q-series identities built from the mod-3 Legendre symbol."""

__version__ = "0.1.0"
