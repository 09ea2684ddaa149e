"""Structure editor realizing group additions, deletions, and swaps.

Edits operate on the Kekule form of the graph and re-run full assembly,
so every product is a valid perceived molecule. Each public operation
verifies its group-count delta with the same matcher the checkers use
(add +1, delete -1, substitute -1/+1) and tries other sites or matches
until the delta is exact.
"""

from __future__ import annotations

import random

from molbench.chem import RawAtom, RawBond, assemble, parse_smiles
from molbench.chem.errors import ChemError, ValenceError
from molbench.chem.model import Molecule
from molbench.chem import elements
from molbench.patterns import GroupRegistry
from molbench.taskgen.requirements import AddGroup, DelGroup, SubGroup


class NoAttachmentSite(ValueError):
    """No atom can accept the new group."""


class NoRemovableMatch(ValueError):
    """No occurrence of the group can be removed cleanly."""


def _default_h(symbol: str, charge: int, bond_sum: int) -> int | None:
    for v in elements.allowed_valences(symbol, charge):
        if v >= bond_sum:
            return v - bond_sum
    return None


def to_raw(mol: Molecule) -> tuple[list[RawAtom], list[RawBond]]:
    """Kekule raw graph; hydrogen counts are pinned only where the free
    valence fill would disagree with the molecule."""
    raw_atoms = []
    for atom in mol.atoms:
        bond_sum = sum(mol.bonds[bi].kekule for bi in mol.adjacency[atom.index])
        default = _default_h(atom.symbol, atom.charge, bond_sum)
        pinned = None if default == atom.hydrogens else atom.hydrogens
        raw_atoms.append(RawAtom(atom.symbol, atom.charge, atom.isotope, pinned))
    raw_bonds = [RawBond(b.a, b.b, b.kekule) for b in mol.bonds]
    return raw_atoms, raw_bonds


def _fragment_raw(registry: GroupRegistry, group: str, rng: random.Random):
    spec = registry.get(group).fragment
    if spec is None:
        raise NoAttachmentSite(f"group {group!r} has no attachable fragment")
    smiles = rng.choice(spec["choices"]) if "choices" in spec else spec["smiles"]
    frag = parse_smiles(smiles)
    raw_atoms, raw_bonds = to_raw(frag)
    return raw_atoms, raw_bonds, spec.get("attach", 0)


def _attach(mol: Molecule, parent: int, frag_atoms, frag_bonds, attach: int) -> Molecule:
    raw_atoms, raw_bonds = to_raw(mol)
    if raw_atoms[parent].explicit_h is not None:
        if raw_atoms[parent].explicit_h < 1:
            raise ValenceError(f"atom {parent} has no hydrogen to replace")
        raw_atoms[parent].explicit_h -= 1
    base = len(raw_atoms)
    raw_atoms.extend(RawAtom(a.symbol, a.charge, a.isotope, a.explicit_h)
                     for a in frag_atoms)
    raw_bonds = raw_bonds + [RawBond(b.a + base, b.b + base, b.order)
                             for b in frag_bonds]
    raw_bonds.append(RawBond(parent, base + attach, 1))
    return assemble(raw_atoms, raw_bonds)


def attachment_sites(mol: Molecule) -> list[int]:
    """Heavy atoms with a hydrogen to give up for a new single bond."""
    return [a.index for a in mol.atoms if a.symbol != "H" and a.hydrogens >= 1]


def add_group(mol: Molecule, group: str, registry: GroupRegistry,
              rng: random.Random) -> Molecule:
    before = registry.count_group(mol, group)
    sites = attachment_sites(mol)
    rng.shuffle(sites)
    frag_atoms, frag_bonds, attach = _fragment_raw(registry, group, rng)
    for parent in sites:
        try:
            edited = _attach(mol, parent, frag_atoms, frag_bonds, attach)
        except ChemError:
            continue
        if registry.count_group(edited, group) == before + 1:
            return edited
    raise NoAttachmentSite(f"no attachment site yields exactly one new {group!r}")


def _remove_atoms(mol: Molecule, doomed: frozenset[int]) -> Molecule | None:
    keep = [i for i in range(len(mol.atoms)) if i not in doomed]
    remap = {old: new for new, old in enumerate(keep)}
    raw_atoms, raw_bonds = to_raw(mol)
    kept_atoms = [raw_atoms[i] for i in keep]
    kept_bonds = [RawBond(remap[b.a], remap[b.b], b.order) for b in raw_bonds
                  if b.a in remap and b.b in remap]
    if not kept_atoms:
        return None
    try:
        edited = assemble(kept_atoms, kept_bonds)
    except ChemError:
        return None
    if edited.fragment_count != mol.fragment_count:
        return None
    return edited


def del_group(mol: Molecule, group: str, registry: GroupRegistry,
              rng: random.Random) -> Molecule:
    matches = list(registry.find_matches(mol, group).matches)
    if not matches:
        raise NoRemovableMatch(f"no {group!r} present")
    before = len(matches)
    rng.shuffle(matches)
    for match in matches:
        edited = _remove_atoms(mol, match)
        if edited is None:
            continue
        if registry.count_group(edited, group) == before - 1:
            return edited
    raise NoRemovableMatch(f"no removable occurrence of {group!r}")


def _terminal_matches(mol: Molecule, match: frozenset[int]) -> int | None:
    """Parent atom if the match connects to the rest through exactly one
    single bond; None otherwise."""
    external = []
    for bond in mol.bonds:
        inside_a, inside_b = bond.a in match, bond.b in match
        if inside_a != inside_b:
            external.append((bond, bond.b if inside_a else bond.a))
    if len(external) != 1:
        return None
    bond, parent = external[0]
    if bond.kekule != 1:
        return None
    return parent


def sub_group(mol: Molecule, source: str, target: str, registry: GroupRegistry,
              rng: random.Random) -> Molecule:
    matches = list(registry.find_matches(mol, source).matches)
    rng.shuffle(matches)
    src_before = len(matches)
    tgt_before = registry.count_group(mol, target)
    frag_atoms, frag_bonds, attach = _fragment_raw(registry, target, rng)
    for match in matches:
        parent = _terminal_matches(mol, match)
        if parent is None:
            continue
        stripped = _remove_atoms(mol, match)
        if stripped is None:
            continue
        remap_parent = parent - sum(1 for i in match if i < parent)
        try:
            edited = _attach(stripped, remap_parent, frag_atoms, frag_bonds, attach)
        except ChemError:
            continue
        if registry.count_group(edited, source) == src_before - 1 and \
                registry.count_group(edited, target) == tgt_before + 1:
            return edited
    raise NoRemovableMatch(
        f"no terminal {source!r} can be swapped for {target!r}")


def apply_edit(mol: Molecule, edit, registry: GroupRegistry,
               rng: random.Random) -> Molecule:
    if isinstance(edit, AddGroup):
        return add_group(mol, edit.group, registry, rng)
    if isinstance(edit, DelGroup):
        return del_group(mol, edit.group, registry, rng)
    if isinstance(edit, SubGroup):
        return sub_group(mol, edit.source, edit.target, registry, rng)
    raise TypeError(f"not an edit requirement: {edit!r}")
