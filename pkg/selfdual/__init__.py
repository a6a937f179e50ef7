"""Self-dual 3-polytopes with prescribed degree sequences."""

__version__ = "0.1.0"
