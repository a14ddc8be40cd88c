"""Star-colourings of complete graphs: constructions, rainbow detection and exact search."""

__version__ = "0.1.0"
