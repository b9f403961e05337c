"""Residue-current certificates for integral closedness of Artinian monomial ideals."""

from .ideal import (
    MonIdeal,
    contains,
    intersect,
    irreducible_decomposition,
    is_artinian,
    maximal_ideal_power,
    minimalize,
    power,
    product,
    pure_powers,
    standard_monomials,
)
from .newton import compact_facets, ideal_order, integral_closure, is_integrally_closed, rees_valuations
from .cells import (
    boundary_matrix,
    compose_zero,
    is_cellular_resolution,
    koszul_complex,
    rank_profile,
    scarf_complex,
    taylor_complex,
)
from .residue import annihilator, duality_check, monomial_annihilates, residue_current
from .certify import (
    briancon_skoda_check,
    certify_ideal,
    cross_validate,
    find_certificate,
    smallness_report,
)
from .fan import divisor_table, is_regular, normal_fan, regularize

__version__ = "0.1.0"
