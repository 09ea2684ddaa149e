"""Atom-contribution LogP and molar refractivity.

Each heavy atom is assigned the first matching type from the contribution
table (data/crippen.tsv keeps the coefficients and the match order); its
attached hydrogens are typed separately. LogP and MR are plain sums of the
per-atom contributions, so both descriptors are graph functions: every
spelling of a molecule scores identically.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from importlib import resources

from molbench.chem.model import AROMATIC, DOUBLE, SINGLE, TRIPLE, Molecule

_HETERO = ("N", "O", "P", "S", "F", "Cl", "Br", "I")
_COMMON = ("C", "N", "O", "S", "F", "Cl", "Br", "I", "H")


@dataclass(frozen=True)
class ContributionTable:
    order: tuple[str, ...]
    logp: dict[str, float]
    mr: dict[str, float]
    source: dict[str, str]
    checksum: str


def load_table() -> ContributionTable:
    data = resources.files("molbench.data").joinpath("crippen.tsv").read_bytes()
    order, logp, mr, source = [], {}, {}, {}
    for line in data.decode().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, lp, m, src = line.split("\t")
        order.append(name)
        logp[name] = float(lp)
        mr[name] = float(m)
        source[name] = src
    return ContributionTable(tuple(order), logp, mr, source,
                             hashlib.sha256(data).hexdigest())


_TABLE: ContributionTable | None = None


def table() -> ContributionTable:
    global _TABLE
    if _TABLE is None:
        _TABLE = load_table()
        wanted = set(_CARBON_ORDER + _NITROGEN_ORDER + _OXYGEN_ORDER
                     + _OTHER_ORDER + _H_ORDER)
        if set(_TABLE.order) != wanted:
            raise ValueError("contribution table rows do not match the typer")
    return _TABLE


class _AtomView:
    """Neighborhood facts the type predicates test."""

    def __init__(self, mol: Molecule, idx: int):
        atom = mol.atoms[idx]
        self.symbol = atom.symbol
        self.charge = atom.charge
        self.aromatic = atom.aromatic
        self.hydrogens = atom.hydrogens
        self.degree = mol.heavy_degree(idx)
        self.single_nbrs: list[tuple[str, bool]] = []   # (symbol, aromatic)
        self.double_nbrs: list[tuple[str, bool]] = []
        self.triple_nbrs: list[tuple[str, bool]] = []
        self.aromatic_nbrs: list[tuple[str, bool]] = []
        self.nbr_idx: list[int] = []
        for bi in mol.adjacency[idx]:
            bond = mol.bonds[bi]
            j = bond.other(idx)
            self.nbr_idx.append(j)
            other = mol.atoms[j]
            entry = (other.symbol, other.aromatic)
            if bond.order == SINGLE:
                self.single_nbrs.append(entry)
            elif bond.order == DOUBLE:
                self.double_nbrs.append(entry)
            elif bond.order == TRIPLE:
                self.triple_nbrs.append(entry)
            else:
                self.aromatic_nbrs.append(entry)

    @property
    def sp3(self) -> bool:
        return (not self.aromatic and not self.double_nbrs
                and not self.triple_nbrs and not self.aromatic_nbrs)

    @property
    def heavy_nbrs(self) -> list[tuple[str, bool]]:
        return (self.single_nbrs + self.double_nbrs + self.triple_nbrs
                + self.aromatic_nbrs)

    def has_single_to(self, symbols, aromatic=None) -> bool:
        return any(s in symbols and (aromatic is None or a == aromatic)
                   for s, a in self.single_nbrs)

    def has_double_to(self, symbols, aromatic=None) -> bool:
        return any(s in symbols and (aromatic is None or a == aromatic)
                   for s, a in self.double_nbrs)


def _type_carbon(v: _AtomView, mol: Molecule, idx: int) -> str:
    if not v.aromatic:
        nbrs = v.heavy_nbrs
        if v.sp3:
            all_aliphatic_c = all(s == "C" and not a for s, a in nbrs)
            hetero = any(s in _HETERO and not a for s, a in v.single_nbrs)
            attached_aromatic = any(a for _, a in nbrs)
            if all_aliphatic_c and not attached_aromatic:
                return "C1" if v.degree <= 2 else "C2"
            if hetero:
                return "C3" if v.degree <= 2 else "C4"
            if attached_aromatic:
                if v.hydrogens >= 3:
                    return "C8" if any(s == "C" and a for s, a in nbrs) else "C9"
                if v.hydrogens == 2:
                    return "C10"
                if v.hydrogens == 1:
                    return "C11"
                return "C12"
            if any(s not in _COMMON for s, _ in nbrs):
                return "C27"
            return "CS"
        # unsaturated aliphatic carbon
        if any(s != "C" and not a for s, a in v.double_nbrs):
            return "C5"
        if v.triple_nbrs:
            return "C7"
        doubles_to_aliph_c = [e for e in v.double_nbrs if e[0] == "C" and not e[1]]
        if any(s == "C" and a for s, a in v.double_nbrs):
            return "C26"
        if doubles_to_aliph_c:
            touches_aromatic = any(a for _, a in v.single_nbrs + v.aromatic_nbrs)
            if touches_aromatic:
                return "C26"
            return "C6"
        return "CS"
    # aromatic carbon
    if v.hydrogens >= 1 and not v.single_nbrs and not v.double_nbrs:
        return "C18"
    odd = [s for s, _ in v.single_nbrs + v.double_nbrs if s not in _COMMON]
    if odd and v.hydrogens == 0:
        return "C13"
    if v.has_single_to(("F",)):
        return "C14"
    if v.has_single_to(("Cl",)):
        return "C15"
    if v.has_single_to(("Br",)):
        return "C16"
    if v.has_single_to(("I",)):
        return "C17"
    if v.hydrogens >= 1:
        return "C18"
    if len(v.aromatic_nbrs) >= 3:
        return "C19"
    if v.has_single_to(("C", "N", "O", "S", "P", "B", "Se", "Te", "As"), aromatic=True):
        return "C20"
    if v.has_single_to(("C",), aromatic=False):
        return "C21"
    if v.has_single_to(("N",), aromatic=False):
        return "C22"
    if v.has_single_to(("O",), aromatic=False):
        return "C23"
    if v.has_single_to(("S",), aromatic=False):
        return "C24"
    if v.double_nbrs:
        return "C25"
    return "CS"


def _type_nitrogen(v: _AtomView, mol: Molecule, idx: int) -> str:
    if v.aromatic:
        return "N11" if v.charge <= 0 else "N12"
    if v.charge == 0:
        aromatic_nbr = any(a for _, a in v.heavy_nbrs)
        if v.triple_nbrs:
            return "N9"
        if v.double_nbrs:
            if v.hydrogens >= 1:
                return "N5"
            if v.single_nbrs:
                return "N6"
            return "NS"
        if v.hydrogens >= 2 and v.degree == 1:
            return "N3" if aromatic_nbr else "N1"
        if v.hydrogens == 1 and v.degree == 2:
            return "N4" if aromatic_nbr else "N2"
        if v.hydrogens == 0 and v.degree == 3:
            return "N8" if aromatic_nbr else "N7"
        return "NS"
    if v.charge >= 1:
        if v.hydrogens >= 1 and not v.double_nbrs and not v.triple_nbrs:
            return "N10"
        if v.hydrogens == 0:
            if len(v.single_nbrs) == 4:
                return "N13"
            if len(v.double_nbrs) == 1 and len(v.single_nbrs) == 2:
                return "N13"
            if (len(v.double_nbrs) == 2
                    and {s for s, _ in v.double_nbrs} <= {"C", "N"}
                    and any(s == "N" for s, _ in v.double_nbrs)
                    and any(s == "C" for s, _ in v.double_nbrs)):
                return "N13"
            if v.has_double_to(("N", "O")) or v.triple_nbrs:
                return "N14"
        return "NS"
    return "NS"


def _type_oxygen(v: _AtomView, mol: Molecule, idx: int) -> str:
    if v.aromatic:
        return "O1"
    if v.charge == 0 and v.hydrogens >= 1:
        return "O2"
    if v.charge == 0 and not v.double_nbrs:
        if v.degree == 2:
            if any(a for _, a in v.single_nbrs):
                return "O4"
            return "O3"
        return "OS"
    if v.charge < 0:
        if v.has_single_to(("N",)):
            return "O5"
        if v.has_single_to(("S",)):
            return "O6"
        # carboxylate oxygen: the carbon also carries a double-bonded O
        for j in v.nbr_idx:
            other = mol.atoms[j]
            if other.symbol != "C":
                continue
            for bi in mol.adjacency[j]:
                bond = mol.bonds[bi]
                k = bond.other(j)
                if k != idx and bond.order == DOUBLE and mol.atoms[k].symbol == "O":
                    return "O12"
        return "O7"
    if v.double_nbrs:
        partner_sym, partner_arom = v.double_nbrs[0]
        if partner_sym in ("N", "O"):
            return "O5"
        if partner_sym == "S":
            return "O6"
        if partner_sym == "C":
            if partner_arom:
                return "O8"
            j = next(j for j in v.nbr_idx if mol.atoms[j].symbol == "C")
            cv = _AtomView(mol, j)
            # the carbonyl carbon's substituents besides this oxygen
            others = []
            for bi in mol.adjacency[j]:
                bond = mol.bonds[bi]
                k = bond.other(j)
                if k != idx:
                    others.append((mol.atoms[k].symbol, mol.atoms[k].aromatic))
            if any(a for _, a in others):
                return "O10"
            has_aliph_c = any(s == "C" for s, a in others if not a)
            if cv.hydrogens >= 1 or has_aliph_c or len(cv.double_nbrs) > 1:
                return "O9"
            if sum(1 for s, _ in others if s != "C") >= 2:
                return "O11"
            return "O9"
        return "OS"
    return "OS"


def _type_heavy(mol: Molecule, idx: int) -> str:
    v = _AtomView(mol, idx)
    sym = v.symbol
    if sym == "C":
        return _type_carbon(v, mol, idx)
    if sym == "N":
        return _type_nitrogen(v, mol, idx)
    if sym == "O":
        return _type_oxygen(v, mol, idx)
    if sym == "F":
        return "F" if v.charge == 0 else "Hal"
    if sym == "Cl":
        return "Cl" if v.charge == 0 else "Hal"
    if sym == "Br":
        return "Br" if v.charge == 0 else "Hal"
    if sym == "I":
        return "I" if v.charge == 0 else "Hal"
    if sym == "P":
        return "P"
    if sym == "S":
        if v.aromatic:
            return "S3"
        return "S1" if v.charge == 0 else "S2"
    return "ME"


def _type_hydrogen_on(mol: Molecule, idx: int) -> str:
    """Type for hydrogens attached to heavy atom idx."""
    parent = mol.atoms[idx]
    if parent.symbol in ("C", "H"):
        return "H1"
    if parent.symbol == "N":
        return "H3"
    if parent.symbol == "O":
        nbr_syms = []
        doubles = []
        for bi in mol.adjacency[idx]:
            bond = mol.bonds[bi]
            other = mol.atoms[bond.other(idx)]
            nbr_syms.append((other.symbol, other.aromatic, bond.order, bond.other(idx)))
        if any(s == "N" for s, _, _, _ in nbr_syms):
            return "H3"
        if any(s in ("O", "S") for s, _, _, _ in nbr_syms):
            return "H4"
        for s, arom, order, j in nbr_syms:
            if s == "C" and order == SINGLE:
                if arom:
                    return "H2"
                jv = _AtomView(mol, j)
                if jv.sp3:
                    return "H2"
                if jv.has_double_to(("C", "N", "O", "S")):
                    return "H4"
                return "H2"
        if nbr_syms:
            return "H2"
        return "HS"
    if parent.symbol == "H":
        return "H1"
    return "H2"


def atom_types(mol: Molecule) -> list[str]:
    """Contribution type of every atom in the graph (explicit H included)."""
    out = []
    for atom in mol.atoms:
        if atom.symbol == "H":
            nbrs = [mol.bonds[bi].other(atom.index) for bi in mol.adjacency[atom.index]]
            heavy = [j for j in nbrs if mol.atoms[j].symbol != "H"]
            out.append(_type_hydrogen_on(mol, heavy[0]) if heavy else "H1")
        else:
            out.append(_type_heavy(mol, atom.index))
    return out


_CARBON_ORDER = tuple(f"C{i}" for i in range(1, 28)) + ("CS",)
_NITROGEN_ORDER = tuple(f"N{i}" for i in range(1, 15)) + ("NS",)
_OXYGEN_ORDER = tuple(f"O{i}" for i in range(1, 13)) + ("OS",)
_OTHER_ORDER = ("F", "Cl", "Br", "I", "Hal", "P", "S1", "S2", "S3", "ME")
_H_ORDER = ("H1", "H2", "H3", "H4", "HS")


def _contributions(mol: Molecule, values: dict[str, float]) -> float:
    total = 0.0
    for atom, typ in zip(mol.atoms, atom_types(mol)):
        total += values[typ]
        if atom.symbol != "H" and atom.hydrogens:
            h_type = _type_hydrogen_on(mol, atom.index)
            total += atom.hydrogens * values[h_type]
    return total


def logp(mol: Molecule) -> float:
    """Wildman-Crippen style log partition coefficient."""
    return _contributions(mol, table().logp)


def mr(mol: Molecule) -> float:
    """Molar refractivity from the same contribution scheme."""
    return _contributions(mol, table().mr)
