"""Almost contact B-metric structures on Lie algebras"""
__version__ = "0.1.0"
