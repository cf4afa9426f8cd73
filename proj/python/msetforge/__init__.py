"""Residue-count certificates for integer linear recurrences.

Integers cross the boundary as Python ints; polynomials are lists of
coefficients in ascending degree.
"""

from ._msetforge import (
    DomainError,
    InvariantViolation,
    aurifeuille_applicable,
    aurifeuillian_pair,
    cyclotomic,
    factorize,
    find_linear_witness,
    find_witness,
    has_primitive_divisor,
    is_prime,
    lehmer_u,
    lehmer_v_odd,
    mset_scan,
    mult_order,
    orbit,
    parse_poly,
    phi_value,
    pretty_poly,
    primitive_divisors,
    rank_of_appearance,
    resultant,
    two_squares,
    verify_witness,
    zsigmondy_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
