"""Random valid-molecule builder for test corpora.

Grows a valence-tracked graph from weighted random moves (chain extension,
ring templates, ring closures, charges, isotopes) and validates the result
through the package's own assembly pipeline. Used by the committed-corpus
builder and by randomized tests; not part of the shipped engine.
"""

from __future__ import annotations

import random

from molbench.chem import RawAtom, RawBond, assemble
from molbench.chem.errors import ChemError
from molbench.chem.model import Molecule

_CHAIN_ELEMENTS = [("C", 60), ("N", 10), ("O", 10), ("S", 4), ("F", 3), ("Cl", 3),
                   ("Br", 2), ("I", 1), ("P", 1), ("Si", 1), ("B", 1), ("Se", 1)]
_MAX_VALENCE = {"C": 4, "N": 3, "O": 2, "S": 2, "F": 1, "Cl": 1, "Br": 1, "I": 1,
                "P": 3, "Si": 4, "B": 3, "Se": 2, "As": 3, "Te": 2, "Sb": 3,
                "Bi": 3, "Po": 2}

# Templates: atoms as (symbol, aromatic, pinned H count or None), ring bonds
# (0 = aromatic member, 1 = single), selection weight.
_C_AR = ("C", True, None)
_RING_TEMPLATES = [
    # benzene
    ([_C_AR] * 6, [(i, (i + 1) % 6, 0) for i in range(6)], 25),
    # pyridine
    ([("N", True, None)] + [_C_AR] * 5, [(i, (i + 1) % 6, 0) for i in range(6)], 8),
    # pyrrole (N carries its hydrogen) / furan / thiophene
    ([("N", True, 1)] + [_C_AR] * 4, [(i, (i + 1) % 5, 0) for i in range(5)], 4),
    ([("O", True, None)] + [_C_AR] * 4, [(i, (i + 1) % 5, 0) for i in range(5)], 3),
    ([("S", True, None)] + [_C_AR] * 4, [(i, (i + 1) % 5, 0) for i in range(5)], 3),
    # cyclohexane / cyclopentane
    ([("C", False, None)] * 6, [(i, (i + 1) % 6, 1) for i in range(6)], 8),
    ([("C", False, None)] * 5, [(i, (i + 1) % 5, 1) for i in range(5)], 5),
]


class _Builder:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.symbols: list[str] = []
        self.aromatic: list[bool] = []
        self.charges: list[int] = []
        self.isotopes: list[int | None] = []
        self.pinned_h: list[int | None] = []
        self.bonds: list[tuple[int, int, int]] = []  # (a, b, order 0=aromatic-member)
        self.used: list[int] = []  # consumed valence

    def add_atom(self, symbol: str, aromatic: bool = False,
                 pinned_h: int | None = None) -> int:
        self.symbols.append(symbol)
        self.aromatic.append(aromatic)
        self.charges.append(0)
        self.isotopes.append(None)
        self.pinned_h.append(pinned_h)
        self.used.append(0)
        return len(self.symbols) - 1

    def free(self, i: int) -> int:
        cap = _MAX_VALENCE[self.symbols[i]]
        if self.aromatic[i]:
            cap = {"C": 1, "N": 0, "O": 0, "S": 0}.get(self.symbols[i], 0)
            return cap - sum(1 for a, b, o in self.bonds
                             if o != 0 and i in (a, b))
        return cap - self.used[i]

    def add_bond(self, a: int, b: int, order: int) -> None:
        self.bonds.append((a, b, order))
        if order:
            self.used[a] += order
            self.used[b] += order

    def attach_ring(self, parent: int | None) -> None:
        weights = [t[2] for t in _RING_TEMPLATES]
        atoms, bonds, _ = self.rng.choices(_RING_TEMPLATES, weights=weights)[0]
        base = len(self.symbols)
        for sym, arom, pinned in atoms:
            self.add_atom(sym, arom, pinned)
        for a, b, order in bonds:
            self.add_bond(base + a, base + b, order)
        if parent is not None:
            carbons = [base + k for k, (sym, _, _) in enumerate(atoms)
                       if sym == "C" and self.free(base + k) > 0]
            if carbons and self.free(parent) > 0:
                self.add_bond(parent, self.rng.choice(carbons), 1)

    def grow_chain(self, parent: int | None) -> int:
        sym = self.rng.choices([s for s, _ in _CHAIN_ELEMENTS],
                               weights=[w for _, w in _CHAIN_ELEMENTS])[0]
        idx = self.add_atom(sym)
        if parent is not None and self.free(parent) > 0:
            max_order = min(self.free(parent), _MAX_VALENCE[sym])
            order = 1
            if max_order >= 2 and self.rng.random() < 0.15:
                order = 2
            if max_order >= 3 and self.rng.random() < 0.04:
                order = 3
            self.add_bond(parent, idx, order)
        return idx

    def random_site(self) -> int | None:
        sites = [i for i in range(len(self.symbols)) if self.free(i) > 0]
        return self.rng.choice(sites) if sites else None

    def to_molecule(self) -> Molecule:
        raw_atoms = [
            RawAtom(sym, charge, isotope, pinned, aromatic)
            for sym, charge, isotope, pinned, aromatic in zip(
                self.symbols, self.charges, self.isotopes, self.pinned_h,
                self.aromatic)
        ]
        raw_bonds = [RawBond(a, b, order) for a, b, order in self.bonds]
        return assemble(raw_atoms, raw_bonds)


def random_molecule(rng: random.Random, max_heavy: int = 28,
                    fragments: bool = False) -> Molecule:
    """One random valid molecule with at most max_heavy heavy atoms."""
    for _ in range(30):
        builder = _Builder(rng)
        n_frag = 2 if fragments and rng.random() < 0.1 else 1
        for _ in range(n_frag):
            if rng.random() < 0.35:
                builder.attach_ring(None)
            else:
                builder.grow_chain(None)
            target = rng.randint(2, max_heavy // n_frag)
            while len(builder.symbols) < target:
                site = builder.random_site()
                if site is None:
                    break
                if rng.random() < 0.10 and len(builder.symbols) + 6 <= max_heavy:
                    builder.attach_ring(site)
                else:
                    builder.grow_chain(site)
        # occasional decorations
        if rng.random() < 0.08:
            ns = [i for i, s in enumerate(builder.symbols)
                  if s == "N" and not builder.aromatic[i] and builder.free(i) > 0]
            if ns:
                i = rng.choice(ns)
                builder.charges[i] = 1
        if rng.random() < 0.05:
            cs = [i for i, s in enumerate(builder.symbols)
                  if s == "C" and not builder.aromatic[i]]
            if cs:
                builder.isotopes[rng.choice(cs)] = 13
        try:
            return builder.to_molecule()
        except ChemError:
            continue
    raise RuntimeError("random molecule generation kept failing")
