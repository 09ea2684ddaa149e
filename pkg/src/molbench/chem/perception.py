"""Graph assembly: ring perception, kekulization, aromaticity, hydrogens.

Every Molecule is produced by ``assemble``, whether it came from the SMILES
parser or from the structure editor. The pipeline is:

1. adjacency + connected components
2. SSSR (smallest set of smallest rings)
3. resolution of unspecified bonds between lowercase atoms
4. kekulization of input-aromatic ring systems
5. implicit hydrogen assignment from the integer bond orders
6. aromaticity perception over SSSR rings (Hueckel 4n+2 with a fixed
   pi-electron contribution table)
7. valence validation

Perception is authoritative: input aromatic flags that fail the model are
demoted to the kekule assignment, and Kekule spellings of aromatic rings
are promoted, so both spellings of a ring system converge to one graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from molbench.chem import elements
from molbench.chem.errors import KekulizationError, ValenceError
from molbench.chem.model import AROMATIC, DOUBLE, SINGLE, TRIPLE, Atom, Bond, Molecule

# Sentinel for a bond written without a symbol; resolved during assembly.
UNSPECIFIED = 0


@dataclass
class RawAtom:
    symbol: str
    charge: int = 0
    isotope: int | None = None
    explicit_h: int | None = None
    aromatic_input: bool = False
    stereo: str | None = None


@dataclass
class RawBond:
    a: int
    b: int
    order: int = UNSPECIFIED
    stereo: str | None = None

    def other(self, idx: int) -> int:
        return self.b if idx == self.a else self.a


@dataclass
class _Graph:
    atoms: list[RawAtom]
    bonds: list[RawBond]
    adjacency: list[list[int]] = field(default_factory=list)

    def build_adjacency(self) -> None:
        self.adjacency = [[] for _ in self.atoms]
        for i, bond in enumerate(self.bonds):
            self.adjacency[bond.a].append(i)
            self.adjacency[bond.b].append(i)

    def neighbors(self, i: int):
        for bi in self.adjacency[i]:
            yield self.bonds[bi].other(i), bi


def _components(n: int, adjacency, bonds) -> list[tuple[int, ...]]:
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        comp = []
        while queue:
            u = queue.popleft()
            comp.append(u)
            for bi in adjacency[u]:
                v = bonds[bi].other(u)
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        comps.append(tuple(sorted(comp)))
    return comps


def find_sssr(n_atoms: int, bonds, adjacency) -> list[tuple[int, ...]]:
    """Smallest set of smallest rings as atom cycles.

    Candidate cycles are the shortest cycle through each bond plus the
    spanning-forest fundamental cycles as a completeness backstop; a greedy
    GF(2) independence filter over edge sets keeps exactly
    |bonds| - |atoms| + |components| of them, shortest first.
    """
    comps = _components(n_atoms, adjacency, bonds)
    dim = len(bonds) - n_atoms + len(comps)
    if dim <= 0:
        return []

    pair_to_bond = {}
    for i, b in enumerate(bonds):
        pair_to_bond[frozenset((b.a, b.b))] = i

    def cycle_mask(path: list[int]) -> int:
        mask = 0
        for k in range(len(path)):
            u, v = path[k], path[(k + 1) % len(path)]
            mask |= 1 << pair_to_bond[frozenset((u, v))]
        return mask

    candidates: dict[int, tuple[int, ...]] = {}

    # Shortest cycle through each bond: BFS from one endpoint to the other
    # with that bond removed.
    for bi, bond in enumerate(bonds):
        source, target = bond.a, bond.b
        prev = {source: -1}
        queue = deque([source])
        while queue and target not in prev:
            u = queue.popleft()
            for b2 in adjacency[u]:
                if b2 == bi:
                    continue
                v = bonds[b2].other(u)
                if v not in prev:
                    prev[v] = u
                    queue.append(v)
        if target not in prev:
            continue
        path = [target]
        while path[-1] != source:
            path.append(prev[path[-1]])
        mask = cycle_mask(path)
        if mask not in candidates:
            candidates[mask] = tuple(reversed(path))

    # Fundamental cycles from a BFS forest (backstop; usually redundant).
    parent: dict[int, tuple[int, int]] = {}
    tree_bonds = set()
    seen = [False] * n_atoms
    for start in range(n_atoms):
        if seen[start]:
            continue
        seen[start] = True
        parent[start] = (-1, -1)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for bi in adjacency[u]:
                v = bonds[bi].other(u)
                if not seen[v]:
                    seen[v] = True
                    parent[v] = (u, bi)
                    tree_bonds.add(bi)
                    queue.append(v)

    def root_path(u: int) -> list[int]:
        path = [u]
        while parent[path[-1]][0] != -1:
            path.append(parent[path[-1]][0])
        return path

    for bi, bond in enumerate(bonds):
        if bi in tree_bonds:
            continue
        pa, pb = root_path(bond.a), root_path(bond.b)
        sa, sb = set(pa), set(pb)
        # Lowest common ancestor: first atom of pa that lies on pb.
        lca = next(u for u in pa if u in sb)
        cyc = pa[: pa.index(lca) + 1] + list(reversed(pb[: pb.index(lca)]))
        del sa
        mask = cycle_mask(cyc)
        if mask not in candidates:
            candidates[mask] = tuple(cyc)

    ordered = sorted(candidates.items(), key=lambda kv: (len(kv[1]), kv[0]))
    basis: list[int] = []
    rings: list[tuple[int, ...]] = []
    for mask, cycle in ordered:
        reduced = mask
        for b in basis:
            low = b & -b
            if reduced & low:
                reduced ^= b
        if reduced:
            basis.append(reduced)
            rings.append(cycle)
            if len(rings) == dim:
                break
    return rings


def _sigma_count(graph: _Graph, i: int) -> int:
    return len(graph.adjacency[i]) + (graph.atoms[i].explicit_h or 0)


def _has_exo_multiple(graph: _Graph, i: int) -> bool:
    for bi in graph.adjacency[i]:
        if graph.bonds[bi].order in (DOUBLE, TRIPLE):
            return True
    return False


def needs_pi_bond(graph: _Graph, i: int) -> bool:
    """Whether an input-aromatic atom must receive one ring double bond.

    Mirrors the usual kekulization bookkeeping: carbons need one unless a
    charge or an exocyclic multiple bond already accounts for the electron,
    two-connected bare nitrogens are pyridine-like, and chalcogens only
    need one when positively charged.
    """
    atom = graph.atoms[i]
    sym = atom.symbol
    sigma = _sigma_count(graph, i)
    exo = _has_exo_multiple(graph, i)
    if sym in ("C", "Si"):
        return atom.charge == 0 and not exo
    if sym in ("N", "P", "As", "Sb", "Bi"):
        if exo:
            return False
        if atom.charge == 0:
            return sigma == 2
        if atom.charge == 1:
            return sigma in (2, 3)
        return False
    if sym in ("O", "S", "Se", "Te", "Po"):
        return atom.charge == 1 and sigma == 2 and not exo
    if sym == "B":
        return False
    return False


def _kekulize(graph: _Graph, aromatic_atoms: set[int], aromatic_bonds: set[int]) -> None:
    """Assign alternating double bonds over the input-aromatic subgraph."""
    needy = {i for i in aromatic_atoms if needs_pi_bond(graph, i)}
    if not needy:
        for bi in aromatic_bonds:
            graph.bonds[bi].order = SINGLE
        return

    # Candidate edges: aromatic bonds joining two needy atoms.
    options: dict[int, list[int]] = {i: [] for i in needy}
    for bi in aromatic_bonds:
        bond = graph.bonds[bi]
        if bond.a in needy and bond.b in needy:
            options[bond.a].append(bi)
            options[bond.b].append(bi)

    matched: dict[int, int] = {}

    def backtrack(remaining: set[int]) -> bool:
        if not remaining:
            return True
        # Most-constrained atom first keeps the search near-linear.
        u = min(remaining, key=lambda x: (sum(1 for bi in options[x]
                                              if graph.bonds[bi].other(x) in remaining), x))
        for bi in options[u]:
            v = graph.bonds[bi].other(u)
            if v not in remaining:
                continue
            matched[u] = bi
            matched[v] = bi
            remaining.discard(u)
            remaining.discard(v)
            if backtrack(remaining):
                return True
            remaining.add(u)
            remaining.add(v)
            del matched[u]
            del matched[v]
        return False

    if not backtrack(set(needy)):
        raise KekulizationError(
            "aromatic ring system admits no alternating bond assignment"
        )
    chosen = set(matched.values())
    for bi in aromatic_bonds:
        graph.bonds[bi].order = DOUBLE if bi in chosen else SINGLE


def _assign_hydrogens(graph: _Graph) -> list[int]:
    out = []
    for i, atom in enumerate(graph.atoms):
        bond_sum = sum(graph.bonds[bi].order for bi in graph.adjacency[i])
        allowed = elements.allowed_valences(atom.symbol, atom.charge)
        if atom.explicit_h is not None:
            total = bond_sum + atom.explicit_h
            if total > max(allowed):
                raise ValenceError(
                    f"atom {i} ({atom.symbol}{atom.charge:+d}) valence {total} "
                    f"exceeds allowed {allowed}"
                )
            out.append(atom.explicit_h)
            continue
        fits = [v for v in allowed if v >= bond_sum]
        if not fits:
            raise ValenceError(
                f"atom {i} ({atom.symbol}{atom.charge:+d}) bond order sum "
                f"{bond_sum} exceeds allowed valences {allowed}"
            )
        out.append(fits[0] - bond_sum)
    return out


def _pi_contribution(graph: _Graph, hydrogens: list[int], ring: tuple[int, ...],
                     ring_atom_sets: list[set[int]], i: int) -> int | None:
    """Electrons atom i donates to the ring under evaluation; None if the
    atom cannot sit in an aromatic ring at all."""
    atom = graph.atoms[i]
    sym = atom.symbol
    doubles = []
    for bi in graph.adjacency[i]:
        order = graph.bonds[bi].order
        if order == TRIPLE:
            return None
        if order == DOUBLE:
            doubles.append(graph.bonds[bi].other(i))
    if len(doubles) > 1:
        return None
    sigma = len(graph.adjacency[i]) + hydrogens[i]

    def double_share() -> int:
        partner = doubles[0]
        if partner in ring:
            return 1
        # A double bond into a fused ring keeps the conjugation inside the
        # ring system; one to a non-ring atom (exocyclic C=O and friends)
        # pulls the electron out of the ring.
        if any(partner in s for s in ring_atom_sets):
            return 1
        return 0

    if sym in ("C", "Si"):
        if doubles:
            return double_share() if sigma <= 3 else None
        if sigma <= 3 and atom.charge == -1:
            return 2
        if sigma <= 3 and atom.charge == 1:
            return 0
        return None
    if sym in ("N", "P", "As", "Sb", "Bi"):
        if doubles:
            return double_share() if sigma <= 3 else None
        if atom.charge == 0 and sigma == 3:
            return 2
        if atom.charge == -1 and sigma == 2:
            return 2
        if atom.charge == 1 and sigma == 3:
            return 2
        return None
    if sym in ("O", "S", "Se", "Te", "Po"):
        if doubles:
            if atom.charge == 1 and sigma == 2:
                return double_share()
            if atom.charge == 0 and sigma == 2:
                # Ring S/Se with an exocyclic oxide keeps its seat but
                # donates nothing.
                return double_share() if doubles[0] in ring else 0
            return None
        if atom.charge == 0 and sigma == 2:
            return 2
        if atom.charge == 1 and sigma == 3:
            return 2
        return None
    if sym == "B":
        if doubles:
            return double_share() if sigma <= 3 else None
        return 0 if sigma <= 3 else None
    return None


def assemble(raw_atoms: list[RawAtom], raw_bonds: list[RawBond]) -> Molecule:
    """Run the perception pipeline and freeze a Molecule."""
    graph = _Graph(raw_atoms, [RawBond(b.a, b.b, b.order, b.stereo) for b in raw_bonds])
    seen_pairs = set()
    for bond in graph.bonds:
        if bond.a == bond.b:
            raise KekulizationError("bond endpoints must be distinct")
        pair = frozenset((bond.a, bond.b))
        if pair in seen_pairs:
            raise KekulizationError("duplicate bond between one atom pair")
        seen_pairs.add(pair)
    graph.build_adjacency()

    components = _components(len(graph.atoms), graph.adjacency, graph.bonds)
    rings = find_sssr(len(graph.atoms), graph.bonds, graph.adjacency)
    ring_atom_sets = [set(r) for r in rings]
    ring_bond_ids: set[int] = set()
    pair_to_bond = {frozenset((b.a, b.b)): i for i, b in enumerate(graph.bonds)}
    for ring in rings:
        for k in range(len(ring)):
            ring_bond_ids.add(pair_to_bond[frozenset((ring[k], ring[(k + 1) % len(ring)]))])

    aromatic_atoms = {i for i, a in enumerate(graph.atoms) if a.aromatic_input}
    for i in aromatic_atoms:
        if not any(i in s for s in ring_atom_sets):
            raise KekulizationError(f"aromatic atom {i} is not in any ring")

    aromatic_bonds: set[int] = set()
    for bi, bond in enumerate(graph.bonds):
        both_aromatic = bond.a in aromatic_atoms and bond.b in aromatic_atoms
        if bond.order == AROMATIC:
            if not (both_aromatic and bi in ring_bond_ids):
                raise KekulizationError("explicit aromatic bond outside an aromatic ring")
            aromatic_bonds.add(bi)
        elif bond.order == UNSPECIFIED:
            if both_aromatic and bi in ring_bond_ids:
                bond.order = AROMATIC
                aromatic_bonds.add(bi)
            else:
                bond.order = SINGLE

    _kekulize(graph, aromatic_atoms, aromatic_bonds)
    hydrogens = _assign_hydrogens(graph)

    aromatic_ring_flags = []
    for ring in rings:
        contributions = [
            _pi_contribution(graph, hydrogens, ring, ring_atom_sets, i) for i in ring
        ]
        ok = all(c is not None for c in contributions)
        aromatic_ring_flags.append(ok and sum(contributions) % 4 == 2)

    atom_aromatic = [False] * len(graph.atoms)
    for ring, flag in zip(rings, aromatic_ring_flags):
        if flag:
            for i in ring:
                atom_aromatic[i] = True

    atoms = [
        Atom(
            symbol=a.symbol,
            charge=a.charge,
            isotope=a.isotope,
            explicit_h=a.explicit_h,
            aromatic=atom_aromatic[i],
            hydrogens=hydrogens[i],
            index=i,
            stereo=a.stereo,
        )
        for i, a in enumerate(graph.atoms)
    ]
    bonds = []
    aromatic_bond_ids = set()
    for ring, flag in zip(rings, aromatic_ring_flags):
        if flag:
            for k in range(len(ring)):
                aromatic_bond_ids.add(
                    pair_to_bond[frozenset((ring[k], ring[(k + 1) % len(ring)]))]
                )
    for bi, bond in enumerate(graph.bonds):
        perceived = AROMATIC if bi in aromatic_bond_ids else bond.order
        bonds.append(Bond(bond.a, bond.b, perceived, kekule=bond.order, stereo=bond.stereo))

    adjacency = [list(row) for row in graph.adjacency]
    return Molecule(atoms, bonds, adjacency, rings, components)
