"""Bridge diagrams, plat presentations and the 2-connected criterion."""

__version__ = "0.1.0"
