"""
Core modules

Configuration and the exception hierarchy.
"""
