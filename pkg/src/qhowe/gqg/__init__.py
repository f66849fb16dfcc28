"""Generalized quantum groups of type C and D acting on oscillator modules."""

from .operators import ConfigError, GQGModule, LinOp, ModuleConfig, block_generator, psi_twist, tensor_extend
from .polarization import eta_adjoint_check, gram_check
from .relations import relation_catalog, verify_relations
from .twist import classical_limit_check, tau_sigma_ops
from .words import WordExpr, bracket, evaluate

__all__ = [
    "ConfigError",
    "GQGModule",
    "LinOp",
    "ModuleConfig",
    "WordExpr",
    "block_generator",
    "bracket",
    "classical_limit_check",
    "eta_adjoint_check",
    "evaluate",
    "gram_check",
    "psi_twist",
    "relation_catalog",
    "tau_sigma_ops",
    "tensor_extend",
    "verify_relations",
]
