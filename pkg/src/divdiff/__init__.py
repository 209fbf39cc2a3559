"""Divided differences, Newton forms and Hermite interpolation with repeated nodes."""

from .core import (
    HermiteDataset,
    NewtonPoly,
    NodeSequence,
    PowerPoly,
    SmoothFunction,
    cluster_nodes,
    newton_weight,
    sample_function,
)
from .ddtable import (
    DDTable,
    build_table,
    dd,
    divided_difference,
    hermite_interpolant,
    newton_coeffs,
    table_diagonal_for_centers,
)

__version__ = "0.1.0"
