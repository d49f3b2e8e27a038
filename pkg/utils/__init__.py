"""
Utility functions and helpers for gaugelab.
"""
