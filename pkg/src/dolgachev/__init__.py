"""Exact combinatorics of the Spin-polynomial invariants of Dolgachev surfaces S(p, q)."""

from .assembly import (
    InvariantPolynomial,
    closed_form_a,
    closed_form_b,
    closed_form_check,
    coefficient_series,
    coefficients,
    evaluate_q,
    mu_route_check,
)
from .errata import ErrataLedgerEntry, build_ledger
from .hilb2 import Hilb2Divisor, phi1_of_d, phi2, phi2_symmetric, quartic
from .kernels import BACKEND
from .lattice import (
    C2,
    SIGNATURE,
    LatticeClass,
    SurfaceParams,
    classes,
    k_perp_quotient_gram,
    pair,
    transvection,
)
from .strata import StratumIndex, decompose, multiplicity, square, stratum_data
from .vertical import VerticalDivisor, cohomology, h0, normalize
from .walls import Wall, dirac_index, wall_effective, walls_on_segment

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "C2",
    "ErrataLedgerEntry",
    "Hilb2Divisor",
    "InvariantPolynomial",
    "LatticeClass",
    "SIGNATURE",
    "StratumIndex",
    "SurfaceParams",
    "VerticalDivisor",
    "Wall",
    "build_ledger",
    "classes",
    "closed_form_a",
    "closed_form_b",
    "closed_form_check",
    "coefficient_series",
    "coefficients",
    "cohomology",
    "decompose",
    "dirac_index",
    "evaluate_q",
    "h0",
    "k_perp_quotient_gram",
    "multiplicity",
    "mu_route_check",
    "normalize",
    "pair",
    "phi1_of_d",
    "phi2",
    "phi2_symmetric",
    "quartic",
    "square",
    "stratum_data",
    "transvection",
    "wall_effective",
    "walls_on_segment",
]
