"""Generalized type-A and type-B k-triangulation complexes and the
determinantal ideals attached to them, computed exactly at desk scale."""

from .complexes import (
    SimplicialComplex,
    all_faces,
    enumerate_facets,
    enumerate_symmetric_facets,
    fh_vector,
    is_face,
    link,
)
from .counting import bounds_report, catalan, typeA_count, typeB_lower, typeB_upper
from .errors import BudgetExceeded, VerificationError
from .gale import CyclicSpec, cyclic_facets, gale_is_face, verify_cyclic_iso
from .groebner import buchberger, check_dreitenoere, initial_ideal, normal_form
from .homology import betti_gf2, is_homology_sphere
from .monomials import compare, leading_monomial, minor, n_set, phi, phi_inv, psi, sr_generators
from .polygon import (
    Diagonal,
    DiagonalClass,
    Mode,
    crosses,
    ground_set,
    max_crossing_number,
    rotate,
)

__version__ = "0.1.0"
