"""Exact symbolic computation in U(gl(n)) with a polynomial-algebra oracle."""

from ._capelli import (
    MPoly,
    UglElement,
    act,
    act_column_capelli_diff,
    act_higher_capelli,
    bitableau,
    capelli_bitableau,
    capelli_determinant,
    capelli_immanant,
    column_capelli,
    column_capelli_alt,
    commutator,
    double_young_capelli,
    gc_expand,
    is_central,
    koszul,
    koszul_inverse,
    quantum_immanant,
    realize_young_capelli,
    right_symmetrized,
    schur_element,
    schur_element_dyc,
    standard_capelli_expansion,
    straighten,
    verify,
    young_capelli,
)

__all__ = [
    "MPoly",
    "UglElement",
    "act",
    "act_column_capelli_diff",
    "act_higher_capelli",
    "bitableau",
    "capelli_bitableau",
    "capelli_determinant",
    "capelli_immanant",
    "column_capelli",
    "column_capelli_alt",
    "commutator",
    "double_young_capelli",
    "gc_expand",
    "is_central",
    "koszul",
    "koszul_inverse",
    "quantum_immanant",
    "realize_young_capelli",
    "right_symmetrized",
    "schur_element",
    "schur_element_dyc",
    "standard_capelli_expansion",
    "straighten",
    "verify",
    "young_capelli",
]
