"""Functional-group registry and subgraph counting.

Group semantics live in ``data/groups.jsonl``, one JSON object per line:
node constraints (element set, aromatic flag, charge, hydrogen range,
heavy degree, neighbor-element restriction), required edges with bond
orders, and anchored "forbid" patterns whose presence vetoes a match.
Nodes flagged ``member`` define the identity of a match: two embeddings
covering the same member atoms count once. A count is therefore the number
of distinct member atom sets, which is the stable integer the editing and
customization checkers increment and compare.

Overlapping groups are counted independently (a carboxyl also contains a
hydroxyl and matches the hydroxyl pattern); there is no suppression
hierarchy, so deltas compare like with like.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from importlib import resources

from molbench.chem.model import AROMATIC, DOUBLE, SINGLE, TRIPLE, Molecule

_ORDER_PRED = {
    "single": lambda o: o == SINGLE,
    "double": lambda o: o == DOUBLE,
    "triple": lambda o: o == TRIPLE,
    "aromatic": lambda o: o == AROMATIC,
    "single_or_aromatic": lambda o: o in (SINGLE, AROMATIC),
    "any": lambda o: True,
}

END_GROUPS = ("hydroxyl", "aldehyde", "carboxyl", "nitro", "halo", "nitrile", "thiol")


class UnknownGroup(KeyError):
    """Group name not present in the registry."""


@dataclass(frozen=True)
class NodeConstraint:
    elems: tuple[str, ...] | None = None
    aromatic: bool | None = None
    charge: int | None = None
    min_h: int = 0
    max_h: int | None = None
    degree: int | None = None
    only_single_bonds: bool = False
    nbr_only: tuple[str, ...] | None = None
    in_ring: bool | None = None
    member: bool = True

    @staticmethod
    def from_json(obj: dict) -> "NodeConstraint":
        elem = obj.get("elem")
        if isinstance(elem, str):
            elem = (elem,)
        elif elem is not None:
            elem = tuple(elem)
        nbr = obj.get("nbr_only")
        return NodeConstraint(
            elems=elem,
            aromatic=obj.get("aromatic"),
            charge=obj.get("charge"),
            min_h=obj.get("min_h", 0),
            max_h=obj.get("max_h"),
            degree=obj.get("degree"),
            only_single_bonds=obj.get("only_single_bonds", False),
            nbr_only=tuple(nbr) if nbr else None,
            in_ring=obj.get("in_ring"),
            member=obj.get("member", True),
        )

    def accepts(self, mol: Molecule, idx: int) -> bool:
        atom = mol.atoms[idx]
        if self.elems is not None and atom.symbol not in self.elems:
            return False
        if self.aromatic is not None and atom.aromatic != self.aromatic:
            return False
        if self.charge is not None and atom.charge != self.charge:
            return False
        if atom.hydrogens < self.min_h:
            return False
        if self.max_h is not None and atom.hydrogens > self.max_h:
            return False
        if self.degree is not None and mol.heavy_degree(idx) != self.degree:
            return False
        if self.only_single_bonds and any(
            mol.bonds[bi].order != SINGLE for bi in mol.adjacency[idx]
        ):
            return False
        if self.nbr_only is not None:
            for nb in mol.neighbors(idx):
                if mol.atoms[nb].symbol not in self.nbr_only:
                    return False
        if self.in_ring is not None and mol.in_ring(idx) != self.in_ring:
            return False
        return True


@dataclass(frozen=True)
class Forbid:
    anchor: int
    nodes: tuple[NodeConstraint, ...]
    edges: tuple[tuple[int, int, str], ...]  # index -1 refers to the anchor


@dataclass(frozen=True)
class PatternVariant:
    nodes: tuple[NodeConstraint, ...]
    edges: tuple[tuple[int, int, str], ...]
    forbids: tuple[Forbid, ...] = ()


@dataclass(frozen=True)
class GroupPattern:
    name: str
    weight_add: int | None
    weight_fg: int
    end_group: bool
    variants: tuple[PatternVariant, ...] = ()
    special: str | None = None
    fragment: dict | None = None


@dataclass
class MatchSet:
    group: str
    matches: list[frozenset[int]] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.matches)


def _match_variant(mol: Molecule, variant: PatternVariant) -> list[dict[int, int]]:
    """All injective embeddings of the variant; list of node->atom maps."""
    n_nodes = len(variant.nodes)
    adjacency: dict[int, list[tuple[int, str]]] = {i: [] for i in range(n_nodes)}
    for a, b, order in variant.edges:
        adjacency[a].append((b, order))
        adjacency[b].append((a, order))

    # Visit connected pattern nodes first so each new node can be pinned to
    # a neighbor of an already-mapped one.
    order_plan: list[int] = []
    seen = set()
    stack = [0]
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        order_plan.append(u)
        for v, _ in adjacency[u]:
            if v not in seen:
                stack.append(v)
    for u in range(n_nodes):
        if u not in seen:
            order_plan.append(u)

    results: list[dict[int, int]] = []

    def extend(k: int, mapping: dict[int, int], used: set[int]) -> None:
        if k == len(order_plan):
            results.append(dict(mapping))
            return
        node = order_plan[k]
        constraint = variant.nodes[node]
        mapped_nbrs = [(v, o) for v, o in adjacency[node] if v in mapping]
        if mapped_nbrs:
            v0, _ = mapped_nbrs[0]
            candidates = mol.neighbors(mapping[v0])
        else:
            candidates = range(len(mol.atoms))
        for atom_idx in candidates:
            if atom_idx in used:
                continue
            if not constraint.accepts(mol, atom_idx):
                continue
            ok = True
            for v, order_name in mapped_nbrs:
                bond = mol.bond_between(atom_idx, mapping[v])
                if bond is None or not _ORDER_PRED[order_name](bond.order):
                    ok = False
                    break
            if not ok:
                continue
            mapping[node] = atom_idx
            used.add(atom_idx)
            extend(k + 1, mapping, used)
            del mapping[node]
            used.discard(atom_idx)

    extend(0, {}, set())
    return results


def _forbid_hits(mol: Molecule, forbid: Forbid, anchor_atom: int,
                 blocked: set[int]) -> bool:
    """True if the anchored forbid pattern embeds with all non-anchor nodes
    outside the blocked atom set."""
    n_nodes = len(forbid.nodes)
    adjacency: dict[int, list[tuple[int, str]]] = {i: [] for i in range(-1, n_nodes)}
    for a, b, order in forbid.edges:
        adjacency[a].append((b, order))
        adjacency[b].append((a, order))

    def extend(k: int, mapping: dict[int, int], used: set[int]) -> bool:
        if k == n_nodes:
            return True
        constraint = forbid.nodes[k]
        mapped_nbrs = [(v, o) for v, o in adjacency[k] if v in mapping]
        if mapped_nbrs:
            candidates = mol.neighbors(mapping[mapped_nbrs[0][0]])
        else:
            candidates = range(len(mol.atoms))
        for atom_idx in candidates:
            if atom_idx in used or atom_idx in blocked:
                continue
            if not constraint.accepts(mol, atom_idx):
                continue
            ok = True
            for v, order_name in mapped_nbrs:
                bond = mol.bond_between(atom_idx, mapping[v])
                if bond is None or not _ORDER_PRED[order_name](bond.order):
                    ok = False
                    break
            if not ok:
                continue
            mapping[k] = atom_idx
            used.add(atom_idx)
            if extend(k + 1, mapping, used):
                return True
            del mapping[k]
            used.discard(atom_idx)
        return False

    return extend(0, {-1: anchor_atom}, {anchor_atom})


def _benzene_rings(mol: Molecule) -> list[frozenset[int]]:
    out = []
    for ring in mol.rings:
        if len(ring) != 6:
            continue
        if all(mol.atoms[i].symbol == "C" and mol.atoms[i].aromatic for i in ring):
            out.append(frozenset(ring))
    return out


class GroupRegistry:
    """Immutable registry of group patterns plus their sampling weights."""

    def __init__(self, groups: dict[str, GroupPattern], checksum: str):
        self.groups = groups
        self.checksum = checksum
        self.weights_addcomponent = {
            name: g.weight_add for name, g in groups.items() if g.weight_add
        }
        self.weights_functionalgroup = {name: g.weight_fg for name, g in groups.items()}
        self.end_groups = tuple(name for name, g in groups.items() if g.end_group)

    def __contains__(self, name: str) -> bool:
        return name in self.groups

    def get(self, name: str) -> GroupPattern:
        try:
            return self.groups[name]
        except KeyError:
            raise UnknownGroup(name) from None

    def names(self) -> list[str]:
        return list(self.groups)

    def find_matches(self, mol: Molecule, name: str) -> MatchSet:
        group = self.get(name)
        if group.special == "benzene_ring":
            return MatchSet(name, _benzene_rings(mol))
        member_sets: dict[frozenset[int], dict[int, int]] = {}
        for variant in group.variants:
            member_nodes = [i for i, c in enumerate(variant.nodes) if c.member]
            for mapping in _match_variant(mol, variant):
                blocked = set(mapping.values())
                vetoed = False
                for forbid in variant.forbids:
                    if _forbid_hits(mol, forbid, mapping[forbid.anchor], blocked):
                        vetoed = True
                        break
                if vetoed:
                    continue
                key = frozenset(mapping[i] for i in member_nodes)
                member_sets.setdefault(key, mapping)
        return MatchSet(name, list(member_sets))

    def count_group(self, mol: Molecule, name: str) -> int:
        return self.find_matches(mol, name).count

    def enumerate_present_groups(self, mol: Molecule) -> list[tuple[str, int]]:
        out = []
        for name in self.groups:
            count = self.count_group(mol, name)
            if count > 0:
                out.append((name, count))
        return out


def _parse_variant(obj: dict) -> PatternVariant:
    nodes = tuple(NodeConstraint.from_json(n) for n in obj["nodes"])
    edges = tuple((a, b, order) for a, b, order in obj["edges"])
    forbids = []
    for f in obj.get("forbids", []):
        forbids.append(
            Forbid(
                anchor=f["anchor"],
                nodes=tuple(NodeConstraint.from_json(n) for n in f["nodes"]),
                edges=tuple((a, b, order) for a, b, order in f["edges"]),
            )
        )
    return PatternVariant(nodes, edges, tuple(forbids))


def load_registry(path=None) -> GroupRegistry:
    if path is None:
        data = resources.files("molbench.data").joinpath("groups.jsonl").read_bytes()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    checksum = hashlib.sha256(data).hexdigest()
    groups: dict[str, GroupPattern] = {}
    for line in data.decode("utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        obj = json.loads(line)
        name = obj["name"]
        if name in groups:
            raise ValueError(f"duplicate group {name!r} in registry file")
        groups[name] = GroupPattern(
            name=name,
            weight_add=obj.get("weight_add"),
            weight_fg=obj["weight_fg"],
            end_group=obj["end_group"],
            variants=tuple(_parse_variant(v) for v in obj.get("variants", [])),
            special=obj.get("special"),
            fragment=obj.get("fragment"),
        )
    registry = GroupRegistry(groups, checksum)
    _validate(registry)
    return registry


_EXPECTED_FG_WEIGHTS = {
    "benzene ring": 15, "hydroxyl": 15, "anhydride": 2, "aldehyde": 5,
    "ketone": 5, "carboxyl": 10, "ester": 5, "amide": 5, "amine": 5,
    "nitro": 2, "halo": 2, "thioether": 1, "nitrile": 1, "thiol": 1,
    "sulfide": 1, "disulfide": 1, "sulfoxide": 1, "sulfone": 1, "borane": 1,
}
_EXPECTED_ADD_WEIGHTS = {
    "benzene ring": 15, "hydroxyl": 15, "aldehyde": 5, "carboxyl": 5,
    "amide": 10, "amine": 5, "nitro": 5, "halo": 5, "nitrile": 1, "thiol": 1,
}


def _validate(registry: GroupRegistry) -> None:
    if registry.weights_functionalgroup != _EXPECTED_FG_WEIGHTS:
        raise ValueError("functional-group weight table does not match the "
                         "pinned 19-entry vocabulary")
    if registry.weights_addcomponent != _EXPECTED_ADD_WEIGHTS:
        raise ValueError("add-component weight table does not match the "
                         "pinned 10-entry vocabulary")
    if set(registry.end_groups) != set(END_GROUPS):
        raise ValueError("end-group flags drifted from the pinned seven")


_DEFAULT: GroupRegistry | None = None


def default_registry() -> GroupRegistry:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = load_registry()
    return _DEFAULT


def count_group(mol: Molecule, name: str) -> int:
    return default_registry().count_group(mol, name)


def enumerate_present_groups(mol: Molecule) -> list[tuple[str, int]]:
    return default_registry().enumerate_present_groups(mol)


# The rotatable-bond definition used by bond counting lives with the other
# bond category counters.
from molbench.chem.counts import count_rotatable_bonds  # noqa: E402,F401
