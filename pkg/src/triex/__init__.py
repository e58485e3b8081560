"""Maximum triangle counts for graphs with a fixed number of edges, and Schur multiplier bounds built on them."""

__version__ = "0.1.0"
