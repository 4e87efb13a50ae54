"""Exact computation of rectilinear local crossing numbers of complete graphs."""

__version__ = "0.1.0"

from .constructions import (PartitionedPointSet, calibrate_epsilon, case_maxima_report, construct_five_part,
                            construct_three_arcs, verify_cluster_separation, verify_secant_separation)
from .crossings import CrossingProfile, Edge, crossing_profile, edge_crossings, local_crossing_number, total_crossings
from .errors import (CalibrationError, GeneralPositionError, GeometryError, LcrError, LemmaViolation,
                     PointSetParseError)
from .formula import LcrValue, lcr_formula, lower_bound_class
from .geometry import (Orientation, Point, PointSet, SectorCounts, SideCounts, convex_hull, is_general_position,
                       orient, sector_counts, segments_cross, side_counts)
from .pointfile import parse_pointset, read_pointset, serialize_pointset, write_pointset
from .search import SearchConfig, SearchResult, search_witness, verify_floor_by_sampling
from .separation import (LowerBoundCertificate, SeparationWitness, find_separation_witness, hull_endpoint_property,
                         lemma_lower_bound, tightness_diagnostic)
from .svg import emit_svg
