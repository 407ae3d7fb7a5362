"""Grassmann supermatrices, OSp(m|2n) holonomies on the torus and graded phase-space checks."""

import json

from ._core import (
    DimensionError,
    Error,
    GrassmannElement,
    HypothesisError,
    NotInvertibleError,
    Parity,
    ParityError,
    SingularAhatError,
    SuperAlgebra,
    SuperMatrix,
    alg_build_osp,
    alg_build_osp12,
    alg_element,
    alg_ff_block,
    alg_real_coefficients,
    grp_is_member,
    grp_membership_residual,
    grp_xi_block,
    grp_xi_from_chi,
    mod_ahat,
    mod_fermionic_moduli_bruteforce,
    mod_fermionic_moduli_count,
    mod_gauge_fix_sigma,
    osp12_sigma,
    run_cli,
    sample_member,
    sigma_plus,
    sm_commutator,
    sm_exp,
    sm_inverse,
    sm_mul,
    sm_supertrace,
    sm_supertranspose,
)
from . import _core

__version__ = "0.1.0"


def alg_check_jacobi(alg, tol=1e-10):
    return json.loads(_core.alg_check_jacobi(alg, tol))


def sp_check_closure(alg, tol=1e-10):
    return json.loads(_core.sp_check_closure(alg, tol))


def sp_efm(alg, c):
    return json.loads(_core.sp_efm(alg, c))


def mod_enumerate_sectors_osp12(generators=2):
    return json.loads(_core.mod_enumerate_sectors_osp12(generators))


def mod_osp22_partial_report(grid=10):
    return json.loads(_core.mod_osp22_partial_report(grid))
