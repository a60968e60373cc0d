"""Fixed point data of circle actions: exact checks and bounded classification search."""

__version__ = "0.1.0"
