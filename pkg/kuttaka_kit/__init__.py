"""
Kuttaka Kit - the pulverizer for linear indeterminate equations, congruences
and the classical Indian substitution codes
"""

__version__ = "1.0.0"
