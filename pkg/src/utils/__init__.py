"""
Utilities

Logging setup and text rendering.
"""
