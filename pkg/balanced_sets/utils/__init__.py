"""Helper functions used throughout the application."""
