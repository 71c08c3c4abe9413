"""Abstract Fock space for finite Cartan types: straightening, bar involution,
canonical basis, and the action of Weyl characters."""

from .characters import Character, monomial_expand, psi_ell, schur_expand, weyl_character
from .fock import (
    FockConfig,
    FockElement,
    FuelExhausted,
    InconsistentBasis,
    act_character,
    canonical_basis,
    fock_bar,
    ket,
    kl_coefficient,
    straighten,
)
from .laurent import LaurentPoly
from .rootdata import CartanType, build_root_system

__all__ = [
    "CartanType", "Character", "FockConfig", "FockElement", "FuelExhausted",
    "InconsistentBasis", "LaurentPoly", "act_character", "build_root_system",
    "canonical_basis", "fock_bar", "ket", "kl_coefficient", "monomial_expand",
    "psi_ell", "schur_expand", "straighten", "weyl_character",
]
