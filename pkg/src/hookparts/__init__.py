"""Exact verification of the even-parts hook-length statistic A(n, m):
strong unimodality, recurrence certificates and the geometry of the zeros
of its generating polynomials."""

from .cyclotomic import CycloQ8
from .limits import LimitZeroResult, wz_limits
from .partitions import Partition, count_equal_adjacent_pairs, count_even_parts, enumerate_hook, oracle_tables
from .poly import Poly
from .polyseq import LiftPoly, f_poly, mobius_chain, shifted_w, w_lift
from .sequences import TriangleTable, a_closed, a_table, delta, g_value

__all__ = [
    "CycloQ8",
    "LiftPoly",
    "LimitZeroResult",
    "Partition",
    "Poly",
    "TriangleTable",
    "a_closed",
    "a_table",
    "count_equal_adjacent_pairs",
    "count_even_parts",
    "delta",
    "enumerate_hook",
    "f_poly",
    "g_value",
    "mobius_chain",
    "oracle_tables",
    "shifted_w",
    "w_lift",
    "wz_limits",
]
