"""Exact computer algebra for Leibniz algebras, their crossed modules, and
the enveloping constructions that turn representation theory into module
theory: truncated enveloping algebras, the enveloping crossed module, and
the categorical envelope in the category of linear maps.

All arithmetic is exact rational; truncated computations carry explicit
report degrees and stabilization certificates.
"""

__version__ = "0.1.0"
