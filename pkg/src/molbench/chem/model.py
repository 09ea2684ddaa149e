"""Molecular graph model.

Molecule values are frozen once assembled: parsing, editing, and generation
all funnel through the same assembly pipeline (ring perception, kekulization,
aromaticity perception, implicit hydrogen assignment), so any Molecule in
hand already satisfies the valence model and can be shared across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

SINGLE = 1
DOUBLE = 2
TRIPLE = 3
AROMATIC = 4

ORDER_NAMES = {SINGLE: "single", DOUBLE: "double", TRIPLE: "triple", AROMATIC: "aromatic"}


@dataclass
class Atom:
    symbol: str
    charge: int = 0
    isotope: int | None = None
    # Hydrogen count fixed by a bracket spelling; None means derived.
    explicit_h: int | None = None
    aromatic: bool = False
    # Total attached hydrogens (explicit_h or the derived implicit count).
    hydrogens: int = 0
    index: int = -1
    # Chirality marker from the input ('@' / '@@'), kept for fidelity only;
    # every metric in the engine is stereo-blind.
    stereo: str | None = None


@dataclass
class Bond:
    a: int
    b: int
    # Perceived category: AROMATIC inside aromatic rings, else the
    # kekule order.
    order: int = SINGLE
    # Integer order backing the valence model (AROMATIC bonds keep the
    # alternating assignment found during kekulization here).
    kekule: int = SINGLE
    # Directional marker from the input ('/' or '\\'), fidelity only.
    stereo: str | None = None

    def other(self, idx: int) -> int:
        return self.b if idx == self.a else self.a


@dataclass
class Molecule:
    atoms: list[Atom] = field(default_factory=list)
    bonds: list[Bond] = field(default_factory=list)
    # adjacency[i] lists bond indices touching atom i.
    adjacency: list[list[int]] = field(default_factory=list)
    # SSSR as atom-index cycles, each a tuple in ring order.
    rings: list[tuple[int, ...]] = field(default_factory=list)
    # Connected components as sorted atom-index tuples.
    components: list[tuple[int, ...]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.atoms)

    def neighbors(self, idx: int) -> list[int]:
        return [self.bonds[b].other(idx) for b in self.adjacency[idx]]

    def bond_between(self, i: int, j: int) -> Bond | None:
        for b in self.adjacency[i]:
            if self.bonds[b].other(i) == j:
                return self.bonds[b]
        return None

    def heavy_degree(self, idx: int) -> int:
        return len(self.adjacency[idx])

    def ring_membership(self, idx: int) -> int:
        return sum(1 for ring in self.rings if idx in ring)

    def in_ring(self, idx: int) -> bool:
        return any(idx in ring for ring in self.rings)

    def bond_in_ring(self, bond: Bond) -> bool:
        for ring in self.rings:
            n = len(ring)
            for k in range(n):
                u, v = ring[k], ring[(k + 1) % n]
                if {u, v} == {bond.a, bond.b}:
                    return True
        return False

    @property
    def fragment_count(self) -> int:
        return len(self.components)

    def heavy_atom_count(self) -> int:
        return sum(1 for a in self.atoms if a.symbol != "H")

    def debug_lines(self) -> list[str]:
        """Line-oriented dump of the graph for fixture diffing."""
        out = [f"molecule atoms={len(self.atoms)} bonds={len(self.bonds)} "
               f"rings={len(self.rings)} fragments={self.fragment_count}"]
        for a in self.atoms:
            out.append(
                f"atom {a.index} {a.symbol} charge={a.charge} "
                f"isotope={a.isotope or 0} h={a.hydrogens} "
                f"aromatic={int(a.aromatic)}"
            )
        for b in self.bonds:
            out.append(f"bond {b.a} {b.b} {ORDER_NAMES[b.order]}")
        return out
