"""Numerical experiments on power moments of zeta(1/2 + it).

Hot loops run in a compiled extension when it is built; ``BACKEND`` says which
implementation was picked at import.
"""
from ._backend import BACKEND, get_num_threads, set_num_threads
from .atkinson import e_atkinson, e_direct, et_sweep
from .kernels import DivisorTable, P4Coefficients, p4_eval
from .smoothed import j1_series28, j1_series29, jk_quadrature
from .spacing import count_quads_fast, count_triples_fast, verify_bound_shapes
from .spectral import j2_spectral, load_spectral
from .zeta import hardy_z, zeta_em, zeta_rs

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "get_num_threads", "set_num_threads",
    "zeta_rs", "zeta_em", "hardy_z",
    "DivisorTable", "P4Coefficients", "p4_eval",
    "e_direct", "e_atkinson", "et_sweep",
    "jk_quadrature", "j1_series29", "j1_series28",
    "j2_spectral", "load_spectral",
    "count_triples_fast", "count_quads_fast", "verify_bound_shapes",
]
