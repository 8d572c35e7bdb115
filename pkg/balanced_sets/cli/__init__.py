"""Command-line front-end for Balanced Sets."""
