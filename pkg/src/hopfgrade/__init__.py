"""Exact verification of group gradings, cocycle embeddings and Hopf twists."""

__version__ = "0.1.0"
