"""SAT encodings together with the procedures that solve them."""

from .dimacs import emit_dimacs
from .encoding import (
    CnfFormula,
    VarSpace,
    conjoin,
    decode_completion,
    decode_extension,
    encode_ad,
    encode_cf,
    encode_defeat_defs,
    encode_stb,
    encode_structure,
    encode_task,
)
from .external import ExternalBackend
from .procedures import cegar_nca, cegar_psa_stb, solve_nsa_stb_sat, solve_pca_sat
from .solver import DPLLSolver, EmbeddedBackend, SolverError, default_backend

__all__ = [
    "CnfFormula",
    "DPLLSolver",
    "EmbeddedBackend",
    "ExternalBackend",
    "SolverError",
    "VarSpace",
    "cegar_nca",
    "cegar_psa_stb",
    "conjoin",
    "decode_completion",
    "decode_extension",
    "default_backend",
    "emit_dimacs",
    "encode_ad",
    "encode_cf",
    "encode_defeat_defs",
    "encode_stb",
    "encode_structure",
    "encode_task",
    "solve_nsa_stb_sat",
    "solve_pca_sat",
]
