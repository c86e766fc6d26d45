"""Seeded region growing on binary grids, with a geodesic oracle to check it against."""

from .grid import GridDomain, Neighborhood, contains, dilate, erode, neighbors, reachable, standard_neighborhood
from .growers import GrowResult, Seed, grow, grow_ambiguous, grow_simple, grow_vboundary, run_with_order
from .oracle import (
    PartitionReport,
    ambiguous_set,
    canonical_relabel,
    decomposition_check,
    geodesic_distances,
    influence_zones,
    is_simple_partition,
    is_v_boundary_partition,
)
from .population import UNLABELED, LabelMap, Population, TribePolicy
from .queues import OUT, Discipline, SystemQueue

__all__ = [
    "GridDomain", "Neighborhood", "contains", "dilate", "erode", "neighbors", "reachable", "standard_neighborhood",
    "GrowResult", "Seed", "grow", "grow_ambiguous", "grow_simple", "grow_vboundary", "run_with_order",
    "PartitionReport", "ambiguous_set", "canonical_relabel", "decomposition_check", "geodesic_distances",
    "influence_zones", "is_simple_partition", "is_v_boundary_partition",
    "UNLABELED", "LabelMap", "Population", "TribePolicy",
    "OUT", "Discipline", "SystemQueue",
]

__version__ = "0.1.0"
