"""Maximum stable sets through a penalty QUBO: sampling, post-processing and
core-halo partitioning, with a benchmark harness for DIMACS instances."""

__version__ = "0.1.0"
