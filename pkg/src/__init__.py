"""
resgen - Residue generators modulo 2^n-1 and 2^n+1 with diminished-one output
"""

__version__ = "0.1.0"
