"""Test package for the ternary quadratic solver."""
