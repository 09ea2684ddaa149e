"""Topological polar surface area from nitrogen/oxygen fragment
contributions (the classic published N/O parameterization; sulfur and
phosphorus are excluded, matching the drug-likeness estimator's inputs)."""

from __future__ import annotations

from molbench.chem.model import AROMATIC, DOUBLE, SINGLE, TRIPLE, Molecule


def _in_three_ring(mol: Molecule, idx: int) -> bool:
    return any(len(ring) == 3 and idx in ring for ring in mol.rings)


def _atom_psa(mol: Molecule, idx: int) -> float:
    atom = mol.atoms[idx]
    h = atom.hydrogens
    charge = atom.charge
    singles = doubles = triples = aromatics = 0
    for bi in mol.adjacency[idx]:
        order = mol.bonds[bi].order
        if order == SINGLE:
            singles += 1
        elif order == DOUBLE:
            doubles += 1
        elif order == TRIPLE:
            triples += 1
        elif order == AROMATIC:
            aromatics += 1
    degree = singles + doubles + triples + aromatics

    if atom.symbol == "N":
        if atom.aromatic:
            if charge == 0:
                if h == 0 and aromatics == 2 and degree == 2 and doubles == 0:
                    return 12.89
                if h == 0 and aromatics == 3 and degree == 3:
                    return 4.41
                if h == 0 and aromatics == 2 and singles == 1:
                    return 4.93
                if h == 0 and aromatics == 2 and doubles == 1:
                    return 8.39
                if h == 1 and aromatics == 2 and degree == 2:
                    return 15.79
            if charge == 1:
                if h == 0 and aromatics == 3 and degree == 3:
                    return 4.10
                if h == 0 and aromatics == 2 and singles == 1:
                    return 3.88
                if h == 1 and aromatics == 2 and degree == 2:
                    return 14.14
        else:
            if charge == 0:
                if h == 0:
                    if singles == 3 and degree == 3:
                        return 3.01 if _in_three_ring(mol, idx) else 3.24
                    if singles == 1 and doubles == 1 and degree == 2:
                        return 12.36
                    if triples == 1 and degree == 1:
                        return 23.79
                    if singles == 1 and doubles == 2 and degree == 3:
                        return 11.68
                    if doubles == 1 and triples == 1 and degree == 2:
                        return 13.60
                if h == 1:
                    if singles == 2 and degree == 2:
                        return 21.94 if _in_three_ring(mol, idx) else 12.03
                    if doubles == 1 and degree == 1:
                        return 23.85
                if h == 2 and singles == 1 and degree == 1:
                    return 26.02
            if charge == 1:
                if h == 0:
                    if singles == 4 and degree == 4:
                        return 0.00
                    if singles == 2 and doubles == 1 and degree == 3:
                        return 3.01
                    if singles == 1 and triples == 1 and degree == 2:
                        return 4.36
                if h == 1:
                    if singles == 3 and degree == 3:
                        return 4.44
                    if singles == 1 and doubles == 1 and degree == 2:
                        return 13.97
                if h == 2:
                    if singles == 2 and degree == 2:
                        return 16.61
                    if doubles == 1 and degree == 1:
                        return 25.59
                if h == 3 and singles == 1 and degree == 1:
                    return 27.64
        # fallback shared by every uncatalogued nitrogen environment
        return max(0.0, 30.5 - degree * 8.2 + h * 1.5)

    if atom.symbol == "O":
        if atom.aromatic:
            if aromatics == 2 and degree == 2 and h == 0:
                return 13.14
        else:
            if charge == 0:
                if h == 0 and singles == 2 and degree == 2:
                    return 12.53 if _in_three_ring(mol, idx) else 9.23
                if h == 0 and doubles == 1 and degree == 1:
                    return 17.07
                if h == 1 and singles == 1 and degree == 1:
                    return 20.23
            if charge == -1 and h == 0 and singles == 1 and degree == 1:
                return 23.06
        return max(0.0, 28.5 - degree * 8.6 + h * 1.5)

    return 0.0


def tpsa(mol: Molecule) -> float:
    return sum(_atom_psa(mol, i) for i in range(len(mol.atoms)))
