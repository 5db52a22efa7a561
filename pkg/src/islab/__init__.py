"""Tools for induced-C_2k-free graphs: templates, partitions, multigraphs, classifier."""

__version__ = "0.1.0"
