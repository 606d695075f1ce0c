"""Exact combinatorics of Hasse-diagram path polytopes for rectangular
highest-weight modules: root orders, Dyck paths and co-chains, lattice-point
bases with normality certificates, and a shadow straightening calculus."""

__version__ = "0.1.0"

from .hasse import HasseDiagram, KChain, build_diagram, k_chains, label_text, to_dot, to_json
from .paths import (
    all_dyck_paths,
    cochain_formula,
    cochains,
    conflict_matrix,
    maximal_paths,
    on_common_path,
    supp1,
    supp1_inverse,
)
from .polytope import (
    CertificationError,
    PolytopeH,
    build_polytope,
    certify_normality,
    decompose_step,
    lattice_points,
    minkowski_sum,
    nonredundancy_certificates,
    peel,
    point_count,
    reduce_nonredundant,
    zorder_sequence,
)
from .repmodels import epsilon_coords, known_dim, spin_image, wedge_image
from .rootsys import (
    NORMALITY,
    SPANNING,
    STANDARD,
    CaseError,
    CaseId,
    LieType,
    Root,
    Weight,
    canonical_case,
    cartan_matrix,
    case_dim,
    fundamental_weight,
    has_modified_variant,
    highest_root,
    in_table,
    named_roots,
    order_sequence,
    pairing,
    parse_case,
    positive_roots,
    root_by_coeffs,
    simple_root,
    support_roots,
    table_cases,
    weyl_dim,
)
from .straighten import (
    ShadowSum,
    apply_diff,
    cascade,
    clear_rewrite_cache,
    exp_precedes,
    leading_term,
    monomial_key,
    rewrite_to_basis,
    straighten_relation,
)

__all__ = [name for name in dir() if not name.startswith("_")]
