"""Classification machinery for framed self-dual extensions over GF(2)."""

__version__ = "0.1.0"
