"""
Test suite for gaugelab.
"""
