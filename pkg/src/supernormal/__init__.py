"""Normality and supernormality of integer vector configurations.

Exact integer arithmetic throughout: Hilbert bases, tightness and total dual
integrality of ``P_c``, triangulations, chamber complexes, lattice ideals
and virtual initial ideals.
"""
from .errors import *  # noqa: F401,F403
from .lattice import Configuration, gale_dual, hermite_normal_form, integer_kernel, smith_normal_form
from .polyhedra import (Cone, cone_from, hilbert_basis, integer_hull, lattice_points, monoid_membership,
                        polyhedron, relevant_lattice_points)
from .verdicts import (check_dim2_criterion, is_normal, is_supernormal, is_TDI, is_tight,
                       property_test_tight_implies_tdi, tdi_witness, tighten)
from .triangulations import all_triangulations, is_regular, is_unimodular, refine_to_triangulation, regular_subdivision
from .chambers import LatticePolygon, chamber_complex, cone_over_polygon, emit_svg, mu, polygon_chamber_complex
from .ideals import groebner_basis, initial_ideal, is_A_graded, lattice_ideal, minimal_primes, MonomialIdeal
from .virtual import (chamber_from_ideal, section_from_triangulation, verify_bijection, virtual_chambers,
                      virtual_initial_ideal)
from .fixtures import fixture, fixture_names

__version__ = "0.1.0"
