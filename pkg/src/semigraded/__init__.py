"""Exact workbench for finite-dimensional semigroup-graded associative
algebras: structure theory, graded codimension sequences, multiplicity
certificates, and the polytope maximization behind the fractional growth
exponents."""

__version__ = "0.1.0"
