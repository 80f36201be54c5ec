"""Parabolic and Brill-Noether loci in Nakajima quiver varieties, computed exactly."""

from .dims import (dim_bn, dim_bn_stratum, dim_nakajima, dim_parabolic_chain,
                   dim_parabolic_full, dim_parabolic_pair, excess, flag_fiber_dim,
                   half_dim_defect, is_lagrangian_support)
from .quiver import Arrow, Quiver, cartan, double, framed, k0, repetition
from .roots import (bn_nonempty, framed_graph, is_positive_root, nakajima_nonempty,
                    parabolic_nonempty, strata_table)

__version__ = "0.1.0"

__all__ = [
    "Arrow", "Quiver", "bn_nonempty", "cartan", "dim_bn", "dim_bn_stratum",
    "dim_nakajima", "dim_parabolic_chain", "dim_parabolic_full", "dim_parabolic_pair",
    "double", "excess", "flag_fiber_dim", "framed", "framed_graph", "half_dim_defect",
    "is_lagrangian_support", "is_positive_root", "k0", "nakajima_nonempty",
    "parabolic_nonempty", "repetition", "strata_table",
]
