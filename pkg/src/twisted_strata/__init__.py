"""Unipotent character sheaves and strata of twisted reductive groups.

Label combinatorics for the groups of type 2A_n, 2D_n, 2E6 and 3D4: cuspidal
supports, the map tau to strata, component groups and the fibre law.
"""

from .centralizers import RClass, RootTypeString, centralizer_rank_check, centralizer_type
from .component_groups import ComponentGroup, CStarDescriptor
from .cuspidal_support import (
    CSLabel, CuspidalLevi, cuspidal_count, cuspidal_levis, enumerate_cs2,
    enumerate_cs_prime, parse_cs_label, unipotent_support_case,
)
from .errors import *  # noqa: F401,F403
from .springer_tau import (
    ClassicalTauPlugin, GoldenTable, StratumRow, cuspidal_stratum_check, fiber,
    golden_table, register_plugin, tau,
)
from .strata_atlas import c_star, component_group, fiber_bijection, strata, verify_fiber_law
from .verify import verify_all
from .weyl_core import (
    UNIT, BipartitionLabel, NamedLabel, PartitionLabel, TwistedType, WeylType,
    bipartitions, folded_type, irr_labels, parse_label, partitions,
)

__version__ = "0.1.0"
