"""Exact domination numbers and minimum-dominating-set counts for the
pseudofractal scale-free web and the Sierpinski graph."""

__version__ = "0.1.0"
