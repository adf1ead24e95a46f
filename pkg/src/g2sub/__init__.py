"""Exact computations in the exceptional Lie algebra G2."""
