"""
Braid Centralizer Utilities

Helper modules for simple elements, normal forms, conjugacy, ultra summit
set graphs, centralizer generators and the genericity experiment.
"""

__version__ = "0.1.0"
