"""
polybohr - Bohr inequalities on noncommutative polyballs at finite truncation
"""

__version__ = "1.0.0"
