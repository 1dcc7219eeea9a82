"""Numerical kernels: compiled core with a pure-Python/numpy fallback."""
