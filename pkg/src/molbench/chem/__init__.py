"""Molecular graph core: parsing, writing, perception, and counting."""

from molbench.chem.counts import (
    ELEMENT_NAMES,
    NAME_TO_SYMBOL,
    bond_counts,
    count_rotatable_bonds,
    heavy_atom_counts,
)
from molbench.chem.errors import (
    ChemError,
    ElementError,
    KekulizationError,
    SmilesSyntaxError,
    ValenceError,
)
from molbench.chem.model import AROMATIC, DOUBLE, SINGLE, TRIPLE, Atom, Bond, Molecule
from molbench.chem.parse import parse_smiles
from molbench.chem.perception import RawAtom, RawBond, assemble, find_sssr
from molbench.chem.write import canonical_rank, random_smiles, write_smiles


def implicit_hydrogens(mol: Molecule) -> list[int]:
    """Per-atom attached hydrogen counts (explicit counts included)."""
    return [a.hydrogens for a in mol.atoms]


def perceive_aromaticity(mol: Molecule) -> Molecule:
    """Re-run perception over a molecule; idempotent for assembled values."""
    raw_atoms = [
        RawAtom(a.symbol, a.charge, a.isotope, a.explicit_h, False, a.stereo)
        for a in mol.atoms
    ]
    raw_bonds = [RawBond(b.a, b.b, b.kekule, b.stereo) for b in mol.bonds]
    return assemble(raw_atoms, raw_bonds)


def canonical_smiles(text: str) -> str:
    """Canonical form of a SMILES string; raises on invalid input."""
    return write_smiles(parse_smiles(text))


__all__ = [
    "AROMATIC", "DOUBLE", "SINGLE", "TRIPLE",
    "Atom", "Bond", "Molecule", "RawAtom", "RawBond",
    "ChemError", "ElementError", "KekulizationError", "SmilesSyntaxError",
    "ValenceError",
    "ELEMENT_NAMES", "NAME_TO_SYMBOL",
    "assemble", "bond_counts", "canonical_rank", "canonical_smiles",
    "count_rotatable_bonds", "find_sssr", "heavy_atom_counts",
    "implicit_hydrogens", "parse_smiles", "perceive_aromaticity",
    "random_smiles", "write_smiles",
]
