"""Exact verification toolkit for diagonal quartic surfaces, the Fermat quartic
and the lemniscatic elliptic curve."""

__version__ = "0.1.0"
