"""Exact computations with braided vector spaces and their Nichols algebras."""

__version__ = "0.1.0"
