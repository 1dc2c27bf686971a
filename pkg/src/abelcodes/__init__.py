"""Abelian codes as ideals of F[X1..Xs]/<Xi^ri - 1>, with dimension computed three ways:
defining sets via the finite-field DFT, footprints via Groebner bases, and matrix rank."""

from .algebra import AlgebraContext, CodeSpec, DFTVector, new_context
from .field import ExtensionField, FieldElement, PrimeField, make_prime_field, primitive_root, splitting_field
from .groebner import (
    GroebnerBasis,
    buchberger,
    dimension_from_footprint,
    footprint,
    groebner_basis,
    normal_form,
)
from .oracle import dimension_via_rank, rank, spanning_matrix
from .orbits import Orbit, OrbitSet, all_orbits, orbit_set_from, q_orbit
from .poly import GREVLEX, GRLEX, LEX, Polynomial, multi_divide, parse
from .transform import (
    code_from_defining_set,
    defining_set,
    dft,
    dimension_from_defining_set,
    generating_idempotent,
    inverse_dft,
    primitive_idempotents,
    star_mul,
)

__version__ = "0.1.0"
