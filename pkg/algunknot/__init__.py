"""
Certified bounds on algebraic unknotting invariants of knots and 2-knots.
"""

__version__ = '0.1.0'
