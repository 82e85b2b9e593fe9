"""Point counts on monomial deformations of diagonal hypersurfaces over F_q,
and McCarthy's p-adic hypergeometric function."""

from .counting import count_affine, count_projective, fermat_count_convolution
from .ffield import FieldElem, FieldSpec, dlog, find_generator, make_field, trace
from .gfunction import GParams, build_b_list, evaluate_G, theorem_params
from .padic import PadicNum, UnramNum, frac_floor, omega_power, padic_inverse, teichmuller
from .pgamma import gamma_int, gamma_rational
from .surface import SurfaceSpec
from .verify import VerificationReport, verify_theorem1, verify_theorem2

__version__ = "0.1.0"

__all__ = [
    "FieldElem",
    "FieldSpec",
    "GParams",
    "PadicNum",
    "SurfaceSpec",
    "UnramNum",
    "VerificationReport",
    "build_b_list",
    "count_affine",
    "count_projective",
    "dlog",
    "evaluate_G",
    "fermat_count_convolution",
    "find_generator",
    "frac_floor",
    "gamma_int",
    "gamma_rational",
    "make_field",
    "omega_power",
    "padic_inverse",
    "teichmuller",
    "theorem_params",
    "trace",
    "verify_theorem1",
    "verify_theorem2",
]
