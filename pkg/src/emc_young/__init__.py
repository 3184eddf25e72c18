"""Earth mover's coefficient of histograms via Young diagrams."""

from .compositions import (
    Composition,
    CompositionError,
    YoungDiagram,
    composition_of,
    conjugate,
    corners,
    diagram_of,
    enumerate_compositions,
    enumerate_diagrams,
    join,
    meet,
    parse_composition,
    parse_tuple,
    word_of,
)
from .emc import (
    InstanceTooLarge,
    cost,
    cost_median_oracle,
    emc,
    emc_prefix_oracle,
    emc_rsk,
    emc_transport_oracle,
    unimodal_symdiff,
)
from .laurent import LaurentPolynomial
from .qseries import distribution_from_genfun, genfun_H, qbin_bracket, qbin_paren
from .statistics import (
    BudgetExceeded,
    count_emc2_d0,
    emc_vs_d_table,
    pp_2,
    pp_box,
    proportion_emc_eq_absd,
    tail_threshold,
    weighted_difference,
    weighted_total,
)
from .characters import char_V, d_distribution_bruteforce, decompose_sl3, weight_diagram_export
from .tables import DistributionTable

__version__ = "0.1.0"
