"""Combinatorics of affine pavings for generic planar curve singularities.

Parameters (n, m, d) describe a singularity whose value semigroup is
generated by dn, dm and dmn+1.  The package enumerates (dn, dm)-Dyck paths
and admissible semimodules, maps between them, computes cell dimensions of
punctual Hilbert schemes, and compares the Hilbert L-function with the
motivic superpolynomial at a = 0.
"""
from .bijection import (
    enhanced_rank,
    enhanced_rank_inverse,
    gc_vector,
    phi,
    psi,
    sweep_zeta,
)
from .dyck import DyckPath, arm_leg, codinv, dinv, enumerate_dyck
from .genfun import (
    check_functional_equation,
    hmot,
    hmot_per_path,
    l_function,
    l_poly_per_path,
    verify_cdp,
)
from .paving import (
    cell_dim_via_dyck,
    eps,
    eps_hat,
    hilb_cell_dim,
    hilb_cells,
    tau0_in_delta_via_rank,
)
from .polynomial import BivarPoly
from .semigroup import InvalidParameters, Params, bezout, gap_set, make_params, semigroup_contains
from .semimodule import (
    CMatrix,
    Semimodule,
    contains,
    dim_floor_sum,
    dim_gaps,
    dim_gc,
    enumerate_admissible,
    from_cmatrix,
    gaps_from,
    is_admissible_definition,
    to_cmatrix,
)

__version__ = "0.1.0"
