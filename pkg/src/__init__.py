"""squier-lab - string rewriting, Squier complexes and Peiffer calculus for small presentations"""

__version__ = '0.2.0'
