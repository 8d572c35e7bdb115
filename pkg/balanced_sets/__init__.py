"""Balanced Sets package.

This package computes constant sets, balancing sets, balancing numbers,
fixing sets and quotient decompositions of subsets and multisets of F2^n,
cross-checked by closed-form predictors, a Walsh-Hadamard spectrum and a
brute-force oracle.
"""
