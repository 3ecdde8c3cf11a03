"""Color symmetries of Bravais colorings of the cyclotomic modules Z[xi_n].

Exact integer arithmetic throughout: cyclotomic integers, Hermite and Smith
normal forms, integrality tests for the color symmetry group H and the
color fixing group K, principal-ideal search, magnetic point groups, and
cut-and-project SVG rendering.
"""
from .cyclo import (
    CLASS_NUMBER_ONE,
    CycInt,
    ModulusContext,
    ModulusError,
    context,
    cyclotomic_polynomial,
    euler_phi,
    mult_matrix,
    norm,
    parse_generator,
)
from .intlat import SublatticeBasis, coset_reps, determinant, divides, hnf, lattice_equal, same_coset, snf
from .symgroups import enumerate_dihedral, reflection_matrix, rotation_matrix
from .colorsym import (
    ColoringModel,
    SymmetryReport,
    analyze,
    build_model,
    color_permutation,
    fixing_group_by_cosets,
    fixing_group_fast,
    is_perfect,
)
from .idealsearch import IdealCatalogEntry, enumerate_ideals, verify_generator
from .magnetic import MagneticClassification, MagneticSymbol, classify, format_symbol, two_coloring
from .render import ColoredPatch, ProjectionSetup, cut_and_project, emit_svg, embed_physical

__version__ = "0.1.0"
