"""Generalized major index statistics maj_d on permutations and standard Young tableaux."""

from .dist import DistPolynomial
from .paths import (
    BlockPartition,
    LatticePath,
    Side,
    SwapMode,
    blocks,
    build_path,
    cycle_blocks,
    phi_k,
    phi_k_d,
    psi_d,
    psi_k_d,
    psi_k_d_via_swaps,
    psi_pipeline,
    side_of,
    swap,
)
from .perm import foata, inv, inv_w, inversion_set, maj, maj_d_perm, perm_distribution, weight_matrix_d
from .stats import (
    Reading,
    WeightedPair,
    descent_lemma_check,
    hs_attack_assignment,
    hs_inversion_set,
    inv_hs,
    maj_d_transform,
    maj_d_weighted,
    maj_tab,
    naive_weighted,
    recursion_check,
)
from .tableau import BoundsError, Partition, StandardTableau, count_syt, delete_max, enumerate_syt, is_standard

__version__ = "0.1.0"
