"""Atom and bond category counters used by the structural checkers."""

from __future__ import annotations

from collections import Counter

from molbench.chem.model import AROMATIC, DOUBLE, SINGLE, TRIPLE, Molecule

ELEMENT_NAMES = {
    "C": "carbon", "O": "oxygen", "N": "nitrogen", "S": "sulfur",
    "F": "fluorine", "Cl": "chlorine", "Br": "bromine", "I": "iodine",
    "P": "phosphorus", "B": "boron", "Si": "silicon", "Se": "selenium",
    "Te": "tellurium", "As": "arsenic", "Sb": "antimony", "Bi": "bismuth",
    "Po": "polonium",
}
NAME_TO_SYMBOL = {v: k for k, v in ELEMENT_NAMES.items()}


def heavy_atom_counts(mol: Molecule) -> dict[str, int]:
    """Per-element heavy atom counts; hydrogens never appear."""
    counts: Counter[str] = Counter()
    for atom in mol.atoms:
        if atom.symbol != "H":
            counts[atom.symbol] += 1
    return dict(counts)


def _is_amide_bond(mol: Molecule, bond) -> bool:
    for c, n in ((bond.a, bond.b), (bond.b, bond.a)):
        if mol.atoms[c].symbol != "C" or mol.atoms[n].symbol != "N":
            continue
        for bi in mol.adjacency[c]:
            other = mol.bonds[bi]
            partner = other.other(c)
            if other.order == DOUBLE and mol.atoms[partner].symbol == "O":
                return True
    return False


def count_rotatable_bonds(mol: Molecule) -> int:
    """Acyclic single bonds with both endpoints bonded to at least two
    heavy atoms, amide C-N bonds excluded."""
    total = 0
    for bond in mol.bonds:
        if bond.order != SINGLE:
            continue
        if mol.bond_in_ring(bond):
            continue
        if mol.heavy_degree(bond.a) < 2 or mol.heavy_degree(bond.b) < 2:
            continue
        if _is_amide_bond(mol, bond):
            continue
        total += 1
    return total


def bond_counts(mol: Molecule) -> dict[str, int]:
    """Counts for the five checked bond categories.

    'single' excludes aromatic bonds; 'rotatable' is a classification that
    overlaps 'single'.
    """
    counts = {"single": 0, "double": 0, "triple": 0, "aromatic": 0}
    for bond in mol.bonds:
        if bond.order == SINGLE:
            counts["single"] += 1
        elif bond.order == DOUBLE:
            counts["double"] += 1
        elif bond.order == TRIPLE:
            counts["triple"] += 1
        elif bond.order == AROMATIC:
            counts["aromatic"] += 1
    counts["rotatable"] = count_rotatable_bonds(mol)
    return counts
