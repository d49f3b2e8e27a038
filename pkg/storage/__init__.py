"""
File storage for scale tables, function literals and reports.
"""
