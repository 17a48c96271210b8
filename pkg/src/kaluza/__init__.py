"""Exact truncated power series and the Kaluza sign property."""
