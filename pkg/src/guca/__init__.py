"""Workbench for graded upper cluster algebras from quiver
semi-invariant rings: seed and weight mutation, projection and
vertex-removal pipelines, hive-polytope lattice counting, and cluster
characters from quivers with potentials."""

__version__ = "0.1.0"
