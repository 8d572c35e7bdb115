"""Bit-packed vectors, subspaces and the analyzed sets and multisets."""
