"""Exact verification workbench for q-supercongruences."""

__version__ = "0.1.0"
