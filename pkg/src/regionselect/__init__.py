"""Region Select: lamps-and-regions games on knot diagrams and crease patterns."""

__version__ = "0.1.0"
