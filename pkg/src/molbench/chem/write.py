"""SMILES writer and canonical atom ranking.

Ranking is iterative partition refinement over (element, charge, isotope,
hydrogen count, aromatic flag, degree) with neighbor-rank multisets; ties
are broken by individualizing each candidate of the first tied cell and
keeping the lexicographically smallest emitted string, so the result
depends only on the graph, never on input atom order.
"""

from __future__ import annotations

import random

from molbench.chem import elements
from molbench.chem.model import AROMATIC, DOUBLE, SINGLE, TRIPLE, Atom, Molecule
from molbench.chem.perception import needs_pi_bond

_BOND_TOKEN = {SINGLE: "", DOUBLE: "=", TRIPLE: "#", AROMATIC: ""}
_KEKULE_TOKEN = {SINGLE: "", DOUBLE: "=", TRIPLE: "#"}
_AROMATIC_LOWER = {"B": "b", "C": "c", "N": "n", "O": "o", "P": "p", "S": "s",
                   "Se": "se", "As": "as", "Te": "te"}
_BRACKET_ONLY_AROMATIC = {"Se", "As", "Te"}


def _writer_needs_pi(mol: Molecule, idx: int) -> bool:
    """Re-parse simulation: would a bare aromatic spelling of this atom be
    assigned one ring double bond by the kekulizer?"""

    class _Shim:
        class _A:
            pass

        def __init__(self):
            self.atoms = []
            self.bonds = mol.bonds
            self.adjacency = mol.adjacency
            for a in mol.atoms:
                raw = _Shim._A()
                raw.symbol = a.symbol
                raw.charge = a.charge
                raw.explicit_h = None
                self.atoms.append(raw)

    shim = _Shim()
    # needs_pi_bond reads bond.order for exocyclic multiples; perceived
    # orders match what a re-parse of the emitted string would see.
    return needs_pi_bond(shim, idx)


def _default_h(mol: Molecule, atom: Atom) -> int | None:
    """Hydrogen count a bare spelling would get back, or None if no
    allowed valence fits."""
    if atom.aromatic:
        total = 0
        for bi in mol.adjacency[atom.index]:
            bond = mol.bonds[bi]
            total += 1 if bond.order == AROMATIC else bond.kekule
        if _writer_needs_pi(mol, atom.index):
            total += 1
    else:
        total = sum(mol.bonds[bi].kekule for bi in mol.adjacency[atom.index])
    for v in elements.lookup(atom.symbol).valences:
        if v >= total:
            return v - total
    return None


def _atom_token(mol: Molecule, atom: Atom, kekule: bool) -> str:
    aromatic = atom.aromatic and not kekule
    bare_symbol = _AROMATIC_LOWER[atom.symbol] if aromatic else atom.symbol
    elem = elements.lookup(atom.symbol)
    can_be_bare = (
        elem.organic_subset
        and atom.charge == 0
        and atom.isotope is None
        and not (aromatic and atom.symbol in _BRACKET_ONLY_AROMATIC)
    )
    if can_be_bare:
        expected = _default_h(mol, atom) if not kekule else None
        if kekule:
            total = sum(mol.bonds[bi].kekule for bi in mol.adjacency[atom.index])
            for v in elem.valences:
                if v >= total:
                    expected = v - total
                    break
        if expected is not None and expected == atom.hydrogens:
            return bare_symbol

    parts = ["["]
    if atom.isotope is not None:
        parts.append(str(atom.isotope))
    parts.append(bare_symbol)
    if atom.hydrogens == 1:
        parts.append("H")
    elif atom.hydrogens > 1:
        parts.append(f"H{atom.hydrogens}")
    if atom.charge == 1:
        parts.append("+")
    elif atom.charge == -1:
        parts.append("-")
    elif atom.charge > 1:
        parts.append(f"+{atom.charge}")
    elif atom.charge < -1:
        parts.append(f"-{-atom.charge}")
    parts.append("]")
    return "".join(parts)


def _bond_token(mol: Molecule, bond, kekule: bool) -> str:
    if kekule:
        return _KEKULE_TOKEN[bond.kekule if bond.order == AROMATIC else bond.order]
    if bond.order == SINGLE and mol.atoms[bond.a].aromatic and mol.atoms[bond.b].aromatic:
        return "-"
    return _BOND_TOKEN[bond.order]


def emit(mol: Molecule, ranks: list[int], kekule: bool = False) -> str:
    """Write SMILES visiting atoms in rank order (ties by index)."""
    n = len(mol.atoms)
    if n == 0:
        return ""
    key = lambda i: (ranks[i], i)

    visited = [False] * n
    order: list[int] = []
    children: list[list[int]] = [[] for _ in range(n)]
    tree_bond: dict[tuple[int, int], int] = {}
    closure_bonds: set[int] = set()
    ring_closures: list[tuple[int, int, int]] = []  # (opening, closing, bond idx)

    comp_roots = sorted((min(comp, key=key) for comp in mol.components), key=key)
    for root in comp_roots:
        # True DFS via explicit frames: visit marking happens on entry, so
        # every non-tree edge connects an atom to one of its ancestors and
        # ring digits always open before they close.
        visited[root] = True
        order.append(root)
        frames = [(root, -1, iter(sorted(
            ((mol.bonds[bi].other(root), bi) for bi in mol.adjacency[root]),
            key=lambda vb: key(vb[0]))))]
        while frames:
            u, parent, it = frames[-1]
            advanced = False
            for v, bi in it:
                if v == parent:
                    continue
                if visited[v]:
                    if bi not in closure_bonds:
                        closure_bonds.add(bi)
                        ring_closures.append((v, u, bi))
                    continue
                visited[v] = True
                order.append(v)
                children[u].append(v)
                tree_bond[(v, u)] = bi
                frames.append((v, u, iter(sorted(
                    ((mol.bonds[b2].other(v), b2) for b2 in mol.adjacency[v]),
                    key=lambda vb: key(vb[0])))))
                advanced = True
                break
            if not advanced:
                frames.pop()

    pos = {a: k for k, a in enumerate(order)}
    opens_at: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for opening, closing, bi in ring_closures:
        opens_at[opening].append((pos[closing], closing, bi))
    digit_of: dict[int, int] = {}
    next_digit = 1
    closes_at: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u in order:
        for _, closing, bi in sorted(opens_at[u]):
            digit_of[bi] = next_digit
            closes_at[closing].append((next_digit, bi))
            next_digit += 1

    def digit_token(d: int) -> str:
        return str(d) if d < 10 else f"%{d:02d}"

    out: list[str] = []

    def emit_atom(u: int, via_bond: int | None) -> None:
        if via_bond is not None:
            out.append(_bond_token(mol, mol.bonds[via_bond], kekule))
        out.append(_atom_token(mol, mol.atoms[u], kekule))
        for _, closing, bi in sorted(opens_at[u]):
            out.append(_bond_token(mol, mol.bonds[bi], kekule))
            out.append(digit_token(digit_of[bi]))
        for digit, bi in sorted(closes_at[u]):
            out.append(digit_token(digit))
        kids = children[u]
        for i, v in enumerate(kids):
            bi = tree_bond[(v, u)]
            if i < len(kids) - 1:
                out.append("(")
                emit_atom(v, bi)
                out.append(")")
            else:
                emit_atom(v, bi)

    for k, root in enumerate(comp_roots):
        if k:
            out.append(".")
        emit_atom(root, None)
    return "".join(out)


def _initial_ranks(mol: Molecule) -> list[int]:
    invariants = [
        (
            mol.heavy_degree(a.index),
            a.symbol,
            a.charge,
            a.isotope or 0,
            a.hydrogens,
            a.aromatic,
        )
        for a in mol.atoms
    ]
    table = {inv: r for r, inv in enumerate(sorted(set(invariants)))}
    return [table[inv] for inv in invariants]


def _refine(mol: Molecule, ranks: list[int]) -> list[int]:
    n = len(mol.atoms)
    while True:
        keys = []
        for i in range(n):
            nbrs = sorted(
                (mol.bonds[bi].order, ranks[mol.bonds[bi].other(i)])
                for bi in mol.adjacency[i]
            )
            keys.append((ranks[i], tuple(nbrs)))
        table = {k: r for r, k in enumerate(sorted(set(keys)))}
        new_ranks = [table[k] for k in keys]
        if new_ranks == ranks:
            return ranks
        ranks = new_ranks


def _canonical(mol: Molecule, ranks: list[int]) -> tuple[str, list[int]]:
    ranks = _refine(mol, ranks)
    cells: dict[int, list[int]] = {}
    for i, r in enumerate(ranks):
        cells.setdefault(r, []).append(i)
    tied = sorted(r for r, members in cells.items() if len(members) > 1)
    if not tied:
        return emit(mol, ranks), ranks
    cell = cells[tied[0]]
    best: tuple[str, list[int]] | None = None
    for atom in cell:
        boosted = [r * 2 + 1 for r in ranks]
        boosted[atom] -= 1
        candidate = _canonical(mol, boosted)
        if best is None or candidate[0] < best[0]:
            best = candidate
    return best


def canonical_rank(mol: Molecule) -> list[int]:
    """Deterministic per-atom ranks: a permutation of 0..n-1 stable across
    runs, platforms, and input spellings of the same graph."""
    if not mol.atoms:
        return []
    _, ranks = _canonical(mol, _initial_ranks(mol))
    return ranks


def write_smiles(mol: Molecule) -> str:
    """Canonical SMILES: one string per graph, aromatic form."""
    if not mol.atoms:
        return ""
    smiles, _ = _canonical(mol, _initial_ranks(mol))
    return smiles


def random_smiles(mol: Molecule, rng: random.Random, kekule: bool | None = None) -> str:
    """A valid but randomly ordered spelling, for corpus diversity.

    kekule=None picks the aromatic or Kekule form at random.
    """
    ranks = list(range(len(mol.atoms)))
    rng.shuffle(ranks)
    if kekule is None:
        kekule = rng.random() < 0.5
    return emit(mol, ranks, kekule=kekule)
