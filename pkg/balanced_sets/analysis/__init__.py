"""Constant, balancing and fixing sets, closed forms and the spectrum."""
