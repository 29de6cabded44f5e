"""galdescent - finite-level descent engine for Galois covers, twisting and cohomology"""

__version__ = "0.1.0"
