"""Quantitative drug-likeness estimate.

Eight descriptors (molecular weight, LogP, acceptor and donor counts,
polar surface area, rotatable bonds, aromatic ring count, structural-alert
hits) pass through desirability curves and combine as a weighted geometric
mean. Curve coefficients, weights, and the alert pattern list ship as data
files so every input to the score is auditable.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from importlib import resources

from molbench.chem import elements
from molbench.chem.model import DOUBLE, SINGLE, TRIPLE, Molecule
from molbench.descriptors.crippen import logp
from molbench.descriptors.tpsa import tpsa
from molbench.patterns import PatternVariant, _forbid_hits, _match_variant, _parse_variant

_DESCRIPTORS = ("MW", "ALOGP", "HBA", "HBD", "PSA", "ROTB", "AROM", "ALERTS")


@dataclass(frozen=True)
class QedParameters:
    weights: dict[str, float]
    ads: dict[str, tuple[float, ...]]
    alerts: tuple[tuple[str, tuple[PatternVariant, ...], str | None], ...]
    params_checksum: str
    alerts_checksum: str


def _load_alerts():
    data = resources.files("molbench.data").joinpath("alerts.jsonl").read_bytes()
    out = []
    for line in data.decode().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        obj = json.loads(line)
        variants = tuple(_parse_variant(v) for v in obj.get("variants", []))
        out.append((obj["name"], variants, obj.get("special")))
    return tuple(out), hashlib.sha256(data).hexdigest()


_PARAMS: QedParameters | None = None


def parameters() -> QedParameters:
    global _PARAMS
    if _PARAMS is None:
        raw = resources.files("molbench.data").joinpath("qed_params.json").read_bytes()
        obj = json.loads(raw)
        alerts, alerts_checksum = _load_alerts()
        _PARAMS = QedParameters(
            weights={k: float(v) for k, v in obj["weights"].items()},
            ads={k: tuple(float(x) for x in v) for k, v in obj["ads"].items()},
            alerts=alerts,
            params_checksum=hashlib.sha256(raw).hexdigest(),
            alerts_checksum=alerts_checksum,
        )
        if set(_PARAMS.weights) != set(_DESCRIPTORS) or set(_PARAMS.ads) != set(_DESCRIPTORS):
            raise ValueError("drug-likeness parameter file incomplete")
    return _PARAMS


def molecular_weight(mol: Molecule) -> float:
    total = 0.0
    for atom in mol.atoms:
        total += elements.atomic_mass(atom.symbol, atom.isotope)
        total += atom.hydrogens * elements.BY_SYMBOL["H"].mass
    return total


def hba_count(mol: Molecule) -> int:
    """Hydrogen-bond acceptors: N/O/S environments with an available lone
    pair; amide-like nitrogens are excluded."""
    count = 0
    for atom in mol.atoms:
        i = atom.index
        if atom.symbol == "O":
            if atom.aromatic:
                count += atom.hydrogens == 0
            elif atom.charge in (0, -1):
                count += 1
            continue
        if atom.symbol == "S":
            if atom.aromatic or atom.charge > 0:
                continue
            doubles = sum(1 for bi in mol.adjacency[i]
                          if mol.bonds[bi].order == DOUBLE)
            if atom.charge == -1 or (atom.hydrogens == 0 and doubles == 0
                                     and mol.heavy_degree(i) <= 2):
                count += 1
            continue
        if atom.symbol != "N":
            continue
        if atom.aromatic:
            count += atom.hydrogens == 0 and atom.charge == 0
            continue
        if atom.charge != 0:
            continue
        orders = [mol.bonds[bi].order for bi in mol.adjacency[i]]
        if TRIPLE in orders and mol.heavy_degree(i) == 1:
            count += 1
            continue
        if all(o == SINGLE for o in orders) and mol.heavy_degree(i) + atom.hydrogens == 3:
            adjacent_acyl = False
            for bi in mol.adjacency[i]:
                j = mol.bonds[bi].other(i)
                if mol.atoms[j].symbol not in ("C", "S"):
                    continue
                for bj in mol.adjacency[j]:
                    bond = mol.bonds[bj]
                    if bond.order == DOUBLE and mol.atoms[bond.other(j)].symbol == "O":
                        adjacent_acyl = True
            if not adjacent_acyl:
                count += 1
    return count


def hbd_count(mol: Molecule) -> int:
    """Hydrogen-bond donors: N/O/S atoms carrying at least one hydrogen."""
    count = 0
    for atom in mol.atoms:
        if atom.hydrogens < 1:
            continue
        if atom.symbol in ("O", "S") and atom.charge == 0:
            count += 1
        elif atom.symbol == "N" and atom.charge in (0, 1):
            count += 1
    return count


def _is_cx3_rotor(mol: Molecule, idx: int) -> bool:
    """Terminal CF3/CCl3/CBr3/C(CH3)3 style tops."""
    if mol.atoms[idx].symbol != "C":
        return False
    terminal = []
    for bi in mol.adjacency[idx]:
        bond = mol.bonds[bi]
        if bond.order != SINGLE:
            return False
        j = bond.other(idx)
        if mol.heavy_degree(j) == 1:
            terminal.append(mol.atoms[j].symbol)
    for sym in ("F", "Cl", "Br"):
        if terminal.count(sym) == 3:
            return True
    return terminal.count("C") == 3


def rotatable_bonds_strict(mol: Molecule) -> int:
    """Rotor count for the drug-likeness estimate: acyclic single bonds
    between non-terminal atoms, skipping triple-bond linears, amide-like
    C-[N,O,S] bonds, and symmetric CX3 tops."""
    total = 0
    for bond in mol.bonds:
        if bond.order != SINGLE or mol.bond_in_ring(bond):
            continue
        a, b = bond.a, bond.b
        if mol.heavy_degree(a) < 2 or mol.heavy_degree(b) < 2:
            continue
        skip = False
        for u, w in ((a, b), (b, a)):
            if any(mol.bonds[bi].order == TRIPLE for bi in mol.adjacency[u]):
                skip = True
            if _is_cx3_rotor(mol, u):
                skip = True
            if mol.atoms[w].symbol in ("N", "O", "S") and mol.atoms[u].symbol == "C":
                if any(mol.bonds[bi].order == DOUBLE
                       and mol.atoms[mol.bonds[bi].other(u)].symbol in ("N", "O", "S")
                       for bi in mol.adjacency[u]):
                    skip = True
            if skip:
                break
        if not skip:
            total += 1
    return total


def aromatic_ring_count(mol: Molecule) -> int:
    return sum(1 for ring in mol.rings
               if all(mol.atoms[i].aromatic for i in ring))


def _special_alert_hits(mol: Molecule, kind: str) -> bool:
    if kind == "ring3_hetero":
        return any(len(ring) == 3 and any(mol.atoms[i].symbol in ("O", "N")
                                          for i in ring)
                   for ring in mol.rings)
    if kind == "halo4plus":
        halos = sum(1 for a in mol.atoms if a.symbol in ("F", "Cl", "Br", "I"))
        return halos >= 4
    raise ValueError(f"unknown special alert {kind!r}")


def alert_hits(mol: Molecule) -> list[str]:
    """Names of alert rules with at least one embedding."""
    hits = []
    for name, variants, special in parameters().alerts:
        if special is not None:
            if _special_alert_hits(mol, special):
                hits.append(name)
            continue
        found = False
        for variant in variants:
            for mapping in _match_variant(mol, variant):
                blocked = set(mapping.values())
                if any(_forbid_hits(mol, f, mapping[f.anchor], blocked)
                       for f in variant.forbids):
                    continue
                found = True
                break
            if found:
                break
        if found:
            hits.append(name)
    return hits


def qed_properties(mol: Molecule) -> dict[str, float]:
    return {
        "MW": molecular_weight(mol),
        "ALOGP": logp(mol),
        "HBA": float(hba_count(mol)),
        "HBD": float(hbd_count(mol)),
        "PSA": tpsa(mol),
        "ROTB": float(rotatable_bonds_strict(mol)),
        "AROM": float(aromatic_ring_count(mol)),
        "ALERTS": float(len(alert_hits(mol))),
    }


def desirability(name: str, x: float) -> float:
    a, b, c, d, e, f, dmax = parameters().ads[name]
    value = a + b / (1 + math.exp(-(x - c + d / 2) / e)) \
        * (1 - 1 / (1 + math.exp(-(x - c - d / 2) / f)))
    value /= dmax
    return min(1.0, max(1e-6, value))


def qed(mol: Molecule) -> float:
    """Weighted geometric mean of the eight desirability values, in (0, 1]."""
    props = qed_properties(mol)
    weights = parameters().weights
    num = sum(weights[k] * math.log(desirability(k, props[k])) for k in _DESCRIPTORS)
    return math.exp(num / sum(weights.values()))
