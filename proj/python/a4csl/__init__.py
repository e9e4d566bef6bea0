"""Coincidence site lattices of the root lattice A4.

Quaternions are passed as literals such as ``"(t, 2t, 0, 0)"`` or
``"1/2(1,1,1,1)"``; ``t`` is the golden ratio. Large integers are returned
as Python ints, lattices as dicts with ``hnf``, ``index`` and ``basis``.
"""

from ._core import (
    CeilingExceeded,
    DomainError,
    NotAdmissibleError,
    NotPrimitiveError,
    ParseError,
    asymptotic_ladder,
    coefficients_csv,
    csl,
    csl_by_intersection,
    dedekind_zeta_k,
    denominator,
    dirichlet_coeffs,
    dirichlet_partial_sum,
    enumerate_shell,
    euler_factor,
    euler_product,
    f_known,
    f_rot,
    f_rot_prime_power,
    hurwitz_zeta,
    is_admissible,
    is_icosian,
    is_primitive,
    l_chi,
    nr,
    parse_golden,
    parse_quat,
    residue,
    residue_from_special_values,
    rotation_report,
    same_right_ideal,
    sigma,
    spectrum_check,
    ssl,
    verify,
    zeta,
    zeta_form,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
