"""
FRFT-LAB file utilities
"""
