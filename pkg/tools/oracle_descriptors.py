"""Independent descriptor oracle used to generate the committed golden set.

This module deliberately re-implements LogP, MR, TPSA, and the
drug-likeness estimate from the same published parameterizations as the
engine but through a different code path: flat decision functions with
inline constants, its own hydrogen typing, its own donor/acceptor/rotor
logic, and hand-coded alert predicates instead of the data-driven pattern
matcher. Agreement between the two routes is what the descriptor
acceptance criterion checks.

No third-party chemistry toolkit is available in the build environment
(verified against the package mirror), so these oracle values stand in
for external-toolkit goldens; the tolerance regime of the acceptance
criterion is unchanged.
"""

from __future__ import annotations

import math

from molbench.chem.model import AROMATIC, DOUBLE, SINGLE, TRIPLE, Molecule

HETERO = {"N", "O", "P", "S", "F", "Cl", "Br", "I"}
COMMON = {"C", "N", "O", "S", "F", "Cl", "Br", "I", "H"}
HALOGENS = {"F", "Cl", "Br", "I"}

LOGP = {
    "C1": 0.1441, "C2": 0.0, "C3": -0.2035, "C4": -0.2051, "C5": -0.2783,
    "C6": 0.1551, "C7": 0.0017, "C8": 0.08452, "C9": -0.1444, "C10": -0.0516,
    "C11": 0.1193, "C12": -0.0967, "C13": -0.5443, "C14": 0.0, "C15": 0.245,
    "C16": 0.198, "C17": 0.0, "C18": 0.1581, "C19": 0.2955, "C20": 0.2713,
    "C21": 0.136, "C22": 0.4619, "C23": 0.5437, "C24": 0.1893, "C25": -0.8186,
    "C26": 0.264, "C27": 0.2148, "CS": 0.08129,
    "N1": -1.019, "N2": -0.7096, "N3": -1.027, "N4": -0.5188, "N5": 0.08387,
    "N6": 0.1836, "N7": -0.3187, "N8": -0.4458, "N9": 0.01508, "N10": -1.95,
    "N11": -0.3239, "N12": -1.119, "N13": -0.3396, "N14": 0.2887, "NS": -0.4806,
    "O1": 0.1552, "O2": -0.2893, "O3": -0.0684, "O4": 0.4833, "O5": 0.0335,
    "O6": -0.3339, "O12": -1.326, "O7": -1.189, "O8": 0.1788, "O9": -0.1526,
    "O10": 0.1129, "O11": 0.4833, "OS": -0.1188,
    "F": 0.4202, "Cl": 0.6895, "Br": 0.8456, "I": 0.8857, "Hal": -2.996,
    "P": 0.8612, "S1": 0.6482, "S2": -0.0024, "S3": 0.6237, "ME": -0.3808,
    "H1": 0.123, "H2": -0.2677, "H3": 0.2142, "H4": 0.298, "HS": 0.1125,
}
MR = {
    "C1": 2.503, "C2": 2.433, "C3": 2.753, "C4": 2.731, "C5": 5.007,
    "C6": 3.513, "C7": 3.888, "C8": 2.464, "C9": 2.412, "C10": 2.488,
    "C11": 2.582, "C12": 2.576, "C13": 4.041, "C14": 3.257, "C15": 3.564,
    "C16": 3.18, "C17": 3.104, "C18": 3.35, "C19": 4.346, "C20": 3.904,
    "C21": 3.509, "C22": 4.067, "C23": 3.853, "C24": 2.673, "C25": 3.135,
    "C26": 4.305, "C27": 2.693, "CS": 3.243,
    "N1": 2.262, "N2": 2.173, "N3": 2.827, "N4": 3.0, "N5": 1.757,
    "N6": 2.428, "N7": 1.839, "N8": 2.819, "N9": 1.725, "N10": 0.0,
    "N11": 2.202, "N12": 0.0, "N13": 0.2604, "N14": 3.359, "NS": 2.134,
    "O1": 1.08, "O2": 0.8238, "O3": 1.085, "O4": 1.182, "O5": 3.367,
    "O6": 0.7774, "O12": 0.0, "O7": 0.0, "O8": 3.135, "O9": 0.0,
    "O10": 0.2215, "O11": 0.389, "OS": 0.6865,
    "F": 1.108, "Cl": 5.853, "Br": 8.927, "I": 14.02, "Hal": 0.0,
    "P": 6.92, "S1": 7.591, "S2": 7.365, "S3": 6.691, "ME": 5.754,
    "H1": 1.057, "H2": 1.395, "H3": 0.9627, "H4": 1.805, "HS": 1.112,
}

MASSES = {"H": 1.008, "B": 10.811, "C": 12.011, "N": 14.007, "O": 15.999,
          "F": 18.998, "Si": 28.086, "P": 30.974, "S": 32.067, "Cl": 35.453,
          "As": 74.922, "Se": 78.971, "Br": 79.904, "Sb": 121.760,
          "Te": 127.60, "I": 126.904, "Bi": 208.980, "Po": 209.0}

ADS = {
    "MW": (2.817065973, 392.5754953, 290.7489764, 2.419764353, 49.22325677,
           65.37051707, 104.9805561),
    "ALOGP": (3.172690585, 137.8624751, 2.534937431, 4.581497897, 0.822739154,
              0.576295591, 131.3186604),
    "HBA": (2.948620388, 160.4605972, 3.615294657, 4.435986202, 0.290141953,
            1.300669958, 148.7763046),
    "HBD": (1.618662227, 1010.051101, 0.985094388, 0.000000001, 0.713820843,
            0.920922555, 258.1632616),
    "PSA": (1.876861559, 125.2232657, 62.90773554, 87.83366614, 12.01999824,
            28.51324732, 104.5686167),
    "ROTB": (0.010000000, 272.4121427, 2.558379970, 1.565547684, 1.271567166,
             2.758063707, 105.4420403),
    "AROM": (3.217788970, 957.7374108, 2.274627939, 0.000000001, 1.317690384,
             0.375760881, 312.3372610),
    "ALERTS": (0.990316944, 1148.597110, 0.153231515, 0.145816208, 0.613671053,
               0.359936195, 186.2293577),
}
WEIGHTS = {"MW": 0.66, "ALOGP": 0.46, "HBA": 0.05, "HBD": 0.61, "PSA": 0.06,
           "ROTB": 0.65, "AROM": 0.48, "ALERTS": 0.95}


def bonds_of(mol, i):
    return [mol.bonds[bi] for bi in mol.adjacency[i]]


def nbrs_with_order(mol, i):
    return [(mol.atoms[b.other(i)], b.order) for b in bonds_of(mol, i)]


def order_counts(mol, i):
    singles = doubles = triples = aromatics = 0
    for b in bonds_of(mol, i):
        if b.order == SINGLE:
            singles += 1
        elif b.order == DOUBLE:
            doubles += 1
        elif b.order == TRIPLE:
            triples += 1
        else:
            aromatics += 1
    return singles, doubles, triples, aromatics


def carbon_type(mol, i):
    atom = mol.atoms[i]
    pairs = nbrs_with_order(mol, i)
    if atom.aromatic:
        singles = [(a, o) for a, o in pairs if o == SINGLE]
        doubles = [(a, o) for a, o in pairs if o == DOUBLE]
        if atom.hydrogens >= 1 and not singles and not doubles:
            return "C18"
        if atom.hydrogens == 0 and any(a.symbol not in COMMON
                                       for a, o in singles + doubles):
            return "C13"
        for sym, typ in (("F", "C14"), ("Cl", "C15"), ("Br", "C16"), ("I", "C17")):
            if any(a.symbol == sym for a, _ in singles):
                return typ
        if atom.hydrogens >= 1:
            return "C18"
        n_arom_bonds = sum(1 for _, o in pairs if o == AROMATIC)
        if n_arom_bonds >= 3:
            return "C19"
        if any(a.aromatic for a, _ in singles):
            return "C20"
        for sym, typ in (("C", "C21"), ("N", "C22"), ("O", "C23"), ("S", "C24")):
            if any(a.symbol == sym and not a.aromatic for a, _ in singles):
                return typ
        if doubles:
            return "C25"
        return "CS"
    doubles = [(a, o) for a, o in pairs if o == DOUBLE]
    triples = [(a, o) for a, o in pairs if o == TRIPLE]
    if not doubles and not triples and not any(o == AROMATIC for _, o in pairs):
        # saturated carbon
        if all(a.symbol == "C" and not a.aromatic for a, _ in pairs):
            return "C1" if len(pairs) <= 2 else "C2"
        if any(a.symbol in HETERO and not a.aromatic and o == SINGLE
               for a, o in pairs):
            return "C3" if len(pairs) <= 2 else "C4"
        if any(a.aromatic for a, _ in pairs):
            h = atom.hydrogens
            if h >= 3:
                return "C8" if any(a.aromatic and a.symbol == "C"
                                   for a, _ in pairs) else "C9"
            return {2: "C10", 1: "C11"}.get(h, "C12")
        if any(a.symbol not in COMMON for a, _ in pairs):
            return "C27"
        return "CS"
    if any(a.symbol != "C" and not a.aromatic for a, _ in doubles):
        return "C5"
    if triples:
        return "C7"
    if any(a.symbol == "C" and a.aromatic for a, _ in doubles):
        return "C26"
    if doubles:
        aromatic_touch = any(a.aromatic for a, o in pairs if o != DOUBLE)
        return "C26" if aromatic_touch else "C6"
    return "CS"


def nitrogen_type(mol, i):
    atom = mol.atoms[i]
    if atom.aromatic:
        return "N11" if atom.charge <= 0 else "N12"
    pairs = nbrs_with_order(mol, i)
    singles, doubles, triples, _ = order_counts(mol, i)
    aromatic_nbr = any(a.aromatic for a, _ in pairs)
    h = atom.hydrogens
    if atom.charge == 0:
        if triples:
            return "N9"
        if doubles:
            if h >= 1:
                return "N5"
            if singles:
                return "N6"
            return "NS"
        if h >= 2 and len(pairs) == 1:
            return "N3" if aromatic_nbr else "N1"
        if h == 1 and len(pairs) == 2:
            return "N4" if aromatic_nbr else "N2"
        if h == 0 and len(pairs) == 3:
            return "N8" if aromatic_nbr else "N7"
        return "NS"
    if atom.charge >= 1:
        if h >= 1 and doubles == 0 and triples == 0:
            return "N10"
        if h == 0:
            if singles == 4:
                return "N13"
            if doubles == 1 and singles == 2:
                return "N13"
            if doubles == 2:
                symbols = sorted(a.symbol for a, o in pairs if o == DOUBLE)
                if symbols == ["C", "N"]:
                    return "N13"
                return "N14" if any(a.symbol in ("N", "O") for a, o in pairs
                                    if o == DOUBLE) else "NS"
            if triples or any(a.symbol in ("N", "O") for a, o in pairs
                              if o == DOUBLE):
                return "N14"
        return "NS"
    return "NS"


def oxygen_type(mol, i):
    atom = mol.atoms[i]
    if atom.aromatic:
        return "O1"
    pairs = nbrs_with_order(mol, i)
    if atom.charge == 0 and atom.hydrogens >= 1:
        return "O2"
    doubles = [(a, o) for a, o in pairs if o == DOUBLE]
    if atom.charge == 0 and not doubles:
        if len(pairs) == 2:
            return "O4" if any(a.aromatic for a, _ in pairs) else "O3"
        return "OS"
    if atom.charge < 0:
        if any(a.symbol == "N" for a, _ in pairs):
            return "O5"
        if any(a.symbol == "S" for a, _ in pairs):
            return "O6"
        for a, _ in pairs:
            if a.symbol == "C":
                for b in bonds_of(mol, a.index):
                    k = b.other(a.index)
                    if k != i and b.order == DOUBLE and mol.atoms[k].symbol == "O":
                        return "O12"
        return "O7"
    if doubles:
        partner = doubles[0][0]
        if partner.symbol in ("N", "O"):
            return "O5"
        if partner.symbol == "S":
            return "O6"
        if partner.symbol != "C":
            return "OS"
        if partner.aromatic:
            return "O8"
        rest = []
        for b in bonds_of(mol, partner.index):
            k = b.other(partner.index)
            if k != i:
                rest.append(mol.atoms[k])
        if any(a.aromatic for a in rest):
            return "O10"
        carbonyl_doubles = sum(1 for b in bonds_of(mol, partner.index)
                               if b.order == DOUBLE)
        if partner.hydrogens >= 1 or any(a.symbol == "C" and not a.aromatic
                                         for a in rest) or carbonyl_doubles > 1:
            return "O9"
        if sum(1 for a in rest if a.symbol != "C") >= 2:
            return "O11"
        return "O9"
    return "OS"


def hydrogen_type(mol, parent_idx):
    parent = mol.atoms[parent_idx]
    if parent.symbol in ("C", "H"):
        return "H1"
    if parent.symbol == "N":
        return "H3"
    if parent.symbol != "O":
        return "H2"
    pairs = nbrs_with_order(mol, parent_idx)
    if any(a.symbol == "N" for a, _ in pairs):
        return "H3"
    if any(a.symbol in ("O", "S") for a, _ in pairs):
        return "H4"
    for a, order in pairs:
        if a.symbol == "C" and order == SINGLE:
            if a.aromatic:
                return "H2"
            c_doubles = [mol.atoms[b.other(a.index)].symbol
                         for b in bonds_of(mol, a.index) if b.order == DOUBLE]
            if any(s in ("C", "N", "O", "S") for s in c_doubles):
                return "H4"
            return "H2"
    return "H2" if pairs else "HS"


def atom_type(mol, i):
    sym = mol.atoms[i].symbol
    if sym == "C":
        return carbon_type(mol, i)
    if sym == "N":
        return nitrogen_type(mol, i)
    if sym == "O":
        return oxygen_type(mol, i)
    if sym in HALOGENS:
        return sym if mol.atoms[i].charge == 0 else "Hal"
    if sym == "P":
        return "P"
    if sym == "S":
        if mol.atoms[i].aromatic:
            return "S3"
        return "S1" if mol.atoms[i].charge == 0 else "S2"
    if sym == "H":
        heavy = [b.other(i) for b in bonds_of(mol, i)
                 if mol.atoms[b.other(i)].symbol != "H"]
        return hydrogen_type(mol, heavy[0]) if heavy else "H1"
    return "ME"


def crippen_sum(mol: Molecule, values) -> float:
    total = 0.0
    for atom in mol.atoms:
        total += values[atom_type(mol, atom.index)]
        if atom.symbol != "H" and atom.hydrogens:
            total += atom.hydrogens * values[hydrogen_type(mol, atom.index)]
    return total


def oracle_logp(mol: Molecule) -> float:
    return crippen_sum(mol, LOGP)


def oracle_mr(mol: Molecule) -> float:
    return crippen_sum(mol, MR)


def in_three_ring(mol, i):
    return any(len(r) == 3 and i in r for r in mol.rings)


def oracle_tpsa(mol: Molecule) -> float:
    total = 0.0
    for atom in mol.atoms:
        i = atom.index
        if atom.symbol not in ("N", "O"):
            continue
        s, d, t, ar = order_counts(mol, i)
        deg = s + d + t + ar
        h, q = atom.hydrogens, atom.charge
        contrib = None
        if atom.symbol == "N":
            key = (atom.aromatic, q, h, s, d, t, ar)
            table = {
                (False, 0, 0, 3, 0, 0, 0): 3.01 if in_three_ring(mol, i) else 3.24,
                (False, 0, 0, 1, 1, 0, 0): 12.36,
                (False, 0, 0, 0, 0, 1, 0): 23.79,
                (False, 0, 0, 1, 2, 0, 0): 11.68,
                (False, 0, 0, 0, 1, 1, 0): 13.60,
                (False, 0, 1, 2, 0, 0, 0): 21.94 if in_three_ring(mol, i) else 12.03,
                (False, 0, 1, 0, 1, 0, 0): 23.85,
                (False, 0, 2, 1, 0, 0, 0): 26.02,
                (False, 1, 0, 4, 0, 0, 0): 0.0,
                (False, 1, 0, 2, 1, 0, 0): 3.01,
                (False, 1, 0, 1, 0, 1, 0): 4.36,
                (False, 1, 1, 3, 0, 0, 0): 4.44,
                (False, 1, 1, 1, 1, 0, 0): 13.97,
                (False, 1, 2, 2, 0, 0, 0): 16.61,
                (False, 1, 2, 0, 1, 0, 0): 25.59,
                (False, 1, 3, 1, 0, 0, 0): 27.64,
                (True, 0, 0, 0, 0, 0, 2): 12.89,
                (True, 0, 0, 0, 0, 0, 3): 4.41,
                (True, 0, 0, 1, 0, 0, 2): 4.93,
                (True, 0, 0, 0, 1, 0, 2): 8.39,
                (True, 0, 1, 0, 0, 0, 2): 15.79,
                (True, 1, 0, 0, 0, 0, 3): 4.10,
                (True, 1, 0, 1, 0, 0, 2): 3.88,
                (True, 1, 1, 0, 0, 0, 2): 14.14,
            }
            contrib = table.get(key)
            if contrib is None:
                contrib = max(0.0, 30.5 - deg * 8.2 + h * 1.5)
        else:
            if atom.aromatic and ar == 2 and h == 0:
                contrib = 13.14
            elif not atom.aromatic and q == 0 and h == 0 and s == 2 and deg == 2:
                contrib = 12.53 if in_three_ring(mol, i) else 9.23
            elif not atom.aromatic and q == 0 and h == 0 and d == 1 and deg == 1:
                contrib = 17.07
            elif not atom.aromatic and q == 0 and h == 1 and s == 1 and deg == 1:
                contrib = 20.23
            elif not atom.aromatic and q == -1 and h == 0 and s == 1 and deg == 1:
                contrib = 23.06
            else:
                contrib = max(0.0, 28.5 - deg * 8.6 + h * 1.5)
        total += contrib
    return total


def oracle_mw(mol: Molecule) -> float:
    total = 0.0
    for atom in mol.atoms:
        total += float(atom.isotope) if atom.isotope else MASSES[atom.symbol]
        total += atom.hydrogens * MASSES["H"]
    return total


def oracle_hba(mol: Molecule) -> int:
    count = 0
    for atom in mol.atoms:
        i = atom.index
        s, d, t, ar = order_counts(mol, i)
        if atom.symbol == "O":
            if atom.aromatic:
                count += atom.hydrogens == 0
            elif atom.charge in (0, -1):
                count += 1
        elif atom.symbol == "S":
            if atom.aromatic or atom.charge > 0:
                continue
            if atom.charge == -1 or (atom.hydrogens == 0 and d == 0
                                     and len(mol.adjacency[i]) <= 2):
                count += 1
        elif atom.symbol == "N":
            if atom.aromatic:
                count += atom.hydrogens == 0 and atom.charge == 0
            elif atom.charge == 0:
                if t and len(mol.adjacency[i]) == 1:
                    count += 1
                elif d == 0 and t == 0 and ar == 0 \
                        and len(mol.adjacency[i]) + atom.hydrogens == 3:
                    acyl = False
                    for b in bonds_of(mol, i):
                        j = b.other(i)
                        if mol.atoms[j].symbol in ("C", "S"):
                            for b2 in bonds_of(mol, j):
                                if b2.order == DOUBLE and \
                                        mol.atoms[b2.other(j)].symbol == "O":
                                    acyl = True
                    if not acyl:
                        count += 1
    return count


def oracle_hbd(mol: Molecule) -> int:
    count = 0
    for atom in mol.atoms:
        if atom.hydrogens < 1:
            continue
        if atom.symbol in ("O", "S") and atom.charge == 0:
            count += 1
        elif atom.symbol == "N" and atom.charge in (0, 1):
            count += 1
    return count


def oracle_rotb(mol: Molecule) -> int:
    def cx3(i):
        if mol.atoms[i].symbol != "C":
            return False
        terminal = []
        for b in bonds_of(mol, i):
            if b.order != SINGLE:
                return False
            j = b.other(i)
            if len(mol.adjacency[j]) == 1:
                terminal.append(mol.atoms[j].symbol)
        return any(terminal.count(x) == 3 for x in ("F", "Cl", "Br", "C"))

    def has_triple(i):
        return any(b.order == TRIPLE for b in bonds_of(mol, i))

    def amide_like(c, x):
        if mol.atoms[c].symbol != "C" or mol.atoms[x].symbol not in ("N", "O", "S"):
            return False
        return any(b.order == DOUBLE and mol.atoms[b.other(c)].symbol in ("N", "O", "S")
                   for b in bonds_of(mol, c))

    count = 0
    for bond in mol.bonds:
        if bond.order != SINGLE or mol.bond_in_ring(bond):
            continue
        a, b = bond.a, bond.b
        if len(mol.adjacency[a]) < 2 or len(mol.adjacency[b]) < 2:
            continue
        if has_triple(a) or has_triple(b) or cx3(a) or cx3(b):
            continue
        if amide_like(a, b) or amide_like(b, a):
            continue
        count += 1
    return count


def oracle_arom(mol: Molecule) -> int:
    return sum(1 for r in mol.rings if all(mol.atoms[i].aromatic for i in r))


# --- hand-coded alert predicates -------------------------------------------

def _sym(mol, i):
    return mol.atoms[i].symbol


def _has_double_to(mol, i, symbols):
    return any(b.order == DOUBLE and _sym(mol, b.other(i)) in symbols
               for b in bonds_of(mol, i))


def _alert_nitro(mol):
    for atom in mol.atoms:
        if atom.symbol != "N":
            continue
        i = atom.index
        o_double = sum(1 for b in bonds_of(mol, i)
                       if b.order == DOUBLE and _sym(mol, b.other(i)) == "O"
                       and len(mol.adjacency[b.other(i)]) == 1)
        o_minus = sum(1 for b in bonds_of(mol, i)
                      if b.order == SINGLE and _sym(mol, b.other(i)) == "O"
                      and mol.atoms[b.other(i)].charge == -1
                      and len(mol.adjacency[b.other(i)]) == 1)
        if atom.charge == 1 and o_double >= 1 and o_minus >= 1:
            return True
        if atom.charge == 0 and o_double >= 2:
            return True
    return False


def _alert_aldehyde(mol):
    for atom in mol.atoms:
        if atom.symbol != "C" or atom.aromatic or atom.charge != 0 or atom.hydrogens < 1:
            continue
        i = atom.index
        if not any(b.order == DOUBLE and _sym(mol, b.other(i)) == "O"
                   and len(mol.adjacency[b.other(i)]) == 1 for b in bonds_of(mol, i)):
            continue
        if any(b.order == SINGLE and _sym(mol, b.other(i)) in ("O", "N", "S")
               for b in bonds_of(mol, i)):
            continue
        return True
    return False


def _alert_azide(mol):
    for atom in mol.atoms:
        if atom.symbol == "N" and atom.charge == 1:
            n_doubles = [b.other(atom.index) for b in bonds_of(mol, atom.index)
                         if b.order == DOUBLE and _sym(mol, b.other(atom.index)) == "N"]
            if len(n_doubles) == 2:
                return True
    return False


def _alert_diazonium(mol):
    for bond in mol.bonds:
        if bond.order == TRIPLE:
            a, b = mol.atoms[bond.a], mol.atoms[bond.b]
            if {a.symbol, b.symbol} == {"N"}:
                for x, y in ((a, b), (b, a)):
                    if x.charge == 1 and len(mol.adjacency[y.index]) == 1:
                        return True
    return False


def _alert_acyl_halide(mol):
    for atom in mol.atoms:
        if atom.symbol == "C" and not atom.aromatic:
            i = atom.index
            if _has_double_to(mol, i, ("O",)) and any(
                    b.order == SINGLE and _sym(mol, b.other(i)) in HALOGENS
                    for b in bonds_of(mol, i)):
                return True
    return False


def _alert_sulfonyl_halide(mol):
    for atom in mol.atoms:
        if atom.symbol == "S":
            i = atom.index
            o2 = sum(1 for b in bonds_of(mol, i)
                     if b.order == DOUBLE and _sym(mol, b.other(i)) == "O")
            if o2 >= 2 and any(b.order == SINGLE and _sym(mol, b.other(i)) in HALOGENS
                               for b in bonds_of(mol, i)):
                return True
    return False


def _alert_peroxide(mol):
    return any(bond.order == SINGLE
               and _sym(mol, bond.a) == "O" and _sym(mol, bond.b) == "O"
               and not mol.atoms[bond.a].aromatic and not mol.atoms[bond.b].aromatic
               and mol.atoms[bond.a].charge == 0 and mol.atoms[bond.b].charge == 0
               for bond in mol.bonds)


def _alert_disulfide(mol):
    return any(bond.order == SINGLE
               and _sym(mol, bond.a) == "S" and _sym(mol, bond.b) == "S"
               and not mol.atoms[bond.a].aromatic and not mol.atoms[bond.b].aromatic
               and mol.atoms[bond.a].charge == 0 and mol.atoms[bond.b].charge == 0
               for bond in mol.bonds)


def _alert_isocyanate(mol):
    for atom in mol.atoms:
        if atom.symbol == "C":
            i = atom.index
            has_n = _has_double_to(mol, i, ("N",))
            has_os = any(b.order == DOUBLE and _sym(mol, b.other(i)) in ("O", "S")
                         and len(mol.adjacency[b.other(i)]) == 1
                         for b in bonds_of(mol, i))
            if has_n and has_os:
                return True
    return False


def _alert_thiocyanate(mol):
    for atom in mol.atoms:
        if atom.symbol == "C":
            i = atom.index
            has_triple_n = any(b.order == TRIPLE and _sym(mol, b.other(i)) == "N"
                               and len(mol.adjacency[b.other(i)]) == 1
                               for b in bonds_of(mol, i))
            has_s = any(b.order == SINGLE and _sym(mol, b.other(i)) == "S"
                        and len(mol.adjacency[b.other(i)]) == 2
                        for b in bonds_of(mol, i))
            if has_triple_n and has_s:
                return True
    return False


def _alert_michael(mol):
    for bond in mol.bonds:
        if bond.order != DOUBLE:
            continue
        for u, v in ((bond.a, bond.b), (bond.b, bond.a)):
            if mol.atoms[u].symbol != "C" or mol.atoms[v].symbol != "C" \
                    or mol.atoms[u].aromatic or mol.atoms[v].aromatic:
                continue
            for b2 in bonds_of(mol, v):
                if b2.order != SINGLE:
                    continue
                w = b2.other(v)
                if mol.atoms[w].symbol != "C" or mol.atoms[w].aromatic:
                    continue
                if any(b3.order == DOUBLE and _sym(mol, b3.other(w)) == "O"
                       and len(mol.adjacency[b3.other(w)]) == 1
                       for b3 in bonds_of(mol, w)):
                    return True
                if any(b3.order == TRIPLE and _sym(mol, b3.other(w)) == "N"
                       and len(mol.adjacency[b3.other(w)]) == 1
                       for b3 in bonds_of(mol, w)):
                    return True
    return False


def _alert_alkyl_halide(mol):
    for bond in mol.bonds:
        if bond.order != SINGLE:
            continue
        for c, x in ((bond.a, bond.b), (bond.b, bond.a)):
            if _sym(mol, x) in ("Cl", "Br", "I") and mol.atoms[x].charge == 0 \
                    and len(mol.adjacency[x]) == 1 \
                    and _sym(mol, c) == "C" and not mol.atoms[c].aromatic \
                    and all(b.order == SINGLE for b in bonds_of(mol, c)):
                return True
    return False


def _alert_hydrazine(mol):
    for bond in mol.bonds:
        if bond.order != SINGLE:
            continue
        a, b = bond.a, bond.b
        if _sym(mol, a) == "N" and _sym(mol, b) == "N" \
                and not mol.atoms[a].aromatic and not mol.atoms[b].aromatic \
                and mol.atoms[a].charge == 0 and mol.atoms[b].charge == 0 \
                and all(x.order == SINGLE for x in bonds_of(mol, a)) \
                and all(x.order == SINGLE for x in bonds_of(mol, b)):
            return True
    return False


def _alert_hydrazone(mol):
    for atom in mol.atoms:
        if atom.symbol == "N" and not atom.aromatic:
            i = atom.index
            if _has_double_to(mol, i, ("C",)) and any(
                    b.order == SINGLE and _sym(mol, b.other(i)) == "N"
                    and not mol.atoms[b.other(i)].aromatic
                    for b in bonds_of(mol, i)):
                dbl = next(b for b in bonds_of(mol, i) if b.order == DOUBLE)
                if not mol.atoms[dbl.other(i)].aromatic:
                    return True
    return False


def _alert_n_oxide(mol):
    for bond in mol.bonds:
        if bond.order != SINGLE:
            continue
        for n, o in ((bond.a, bond.b), (bond.b, bond.a)):
            if _sym(mol, n) == "N" and mol.atoms[n].charge == 1 \
                    and _sym(mol, o) == "O" and mol.atoms[o].charge == -1 \
                    and len(mol.adjacency[o]) == 1:
                return True
    return False


def _alert_quat_n(mol):
    for atom in mol.atoms:
        if atom.symbol == "N" and atom.charge == 1 and atom.hydrogens == 0 \
                and len(mol.adjacency[atom.index]) == 4 \
                and all(b.order == SINGLE for b in bonds_of(mol, atom.index)):
            return True
    return False


def _alert_oxime(mol):
    for atom in mol.atoms:
        if atom.symbol == "N" and not atom.aromatic:
            i = atom.index
            c_dbl = any(b.order == DOUBLE and _sym(mol, b.other(i)) == "C"
                        and not mol.atoms[b.other(i)].aromatic
                        for b in bonds_of(mol, i))
            o_single = any(b.order == SINGLE and _sym(mol, b.other(i)) == "O"
                           for b in bonds_of(mol, i))
            if c_dbl and o_single:
                return True
    return False


def _alert_thiol(mol):
    return any(a.symbol == "S" and not a.aromatic and a.charge == 0
               and a.hydrogens >= 1 for a in mol.atoms)


def _alert_thiourea(mol):
    for atom in mol.atoms:
        if atom.symbol == "C" and not atom.aromatic:
            i = atom.index
            s_dbl = any(b.order == DOUBLE and _sym(mol, b.other(i)) == "S"
                        and len(mol.adjacency[b.other(i)]) == 1
                        for b in bonds_of(mol, i))
            n_single = sum(1 for b in bonds_of(mol, i)
                           if b.order == SINGLE and _sym(mol, b.other(i)) == "N")
            if s_dbl and n_single >= 2:
                return True
    return False


def _alert_thioester(mol):
    for atom in mol.atoms:
        if atom.symbol == "C" and not atom.aromatic:
            i = atom.index
            if _has_double_to(mol, i, ("O",)) and any(
                    b.order == SINGLE and _sym(mol, b.other(i)) == "S"
                    and not mol.atoms[b.other(i)].aromatic
                    and len(mol.adjacency[b.other(i)]) == 2
                    for b in bonds_of(mol, i)):
                return True
            if _has_double_to(mol, i, ("S",)) and any(
                    b.order == SINGLE and _sym(mol, b.other(i)) == "O"
                    and not mol.atoms[b.other(i)].aromatic
                    and len(mol.adjacency[b.other(i)]) == 2
                    for b in bonds_of(mol, i)):
                return True
    return False


def _alert_phosphorus(mol):
    return any(a.symbol == "P" for a in mol.atoms)


def _alert_sulfonate(mol):
    for atom in mol.atoms:
        if atom.symbol == "S":
            i = atom.index
            o_dbl = sum(1 for b in bonds_of(mol, i)
                        if b.order == DOUBLE and _sym(mol, b.other(i)) == "O")
            o_single = any(b.order == SINGLE and _sym(mol, b.other(i)) == "O"
                           for b in bonds_of(mol, i))
            if o_dbl >= 2 and o_single:
                return True
    return False


def _alert_nitroso(mol):
    for atom in mol.atoms:
        if atom.symbol == "N" and atom.charge == 0 \
                and len(mol.adjacency[atom.index]) == 2:
            i = atom.index
            o_dbl = any(b.order == DOUBLE and _sym(mol, b.other(i)) == "O"
                        and len(mol.adjacency[b.other(i)]) == 1
                        for b in bonds_of(mol, i))
            other_o = sum(1 for b in bonds_of(mol, i)
                          if _sym(mol, b.other(i)) == "O")
            if o_dbl and other_o == 1:
                return True
    return False


def _alert_ring3_hetero(mol):
    return any(len(r) == 3 and any(_sym(mol, i) in ("O", "N") for i in r)
               for r in mol.rings)


def _alert_polyhalogen(mol):
    return sum(1 for a in mol.atoms if a.symbol in HALOGENS) >= 4


def _alert_anhydride(mol):
    for atom in mol.atoms:
        if atom.symbol == "O" and not atom.aromatic \
                and len(mol.adjacency[atom.index]) == 2:
            i = atom.index
            acyl = 0
            for b in bonds_of(mol, i):
                if b.order != SINGLE:
                    continue
                j = b.other(i)
                if _sym(mol, j) == "C" and not mol.atoms[j].aromatic \
                        and _has_double_to(mol, j, ("O",)):
                    acyl += 1
            if acyl == 2:
                return True
    return False


def _alert_enamine(mol):
    for atom in mol.atoms:
        if atom.symbol == "N" and not atom.aromatic and atom.charge == 0 \
                and all(b.order == SINGLE for b in bonds_of(mol, atom.index)):
            for b in bonds_of(mol, atom.index):
                j = b.other(atom.index)
                if _sym(mol, j) == "C" and not mol.atoms[j].aromatic \
                        and _has_double_to(mol, j, ("C",)):
                    dbl = next(x for x in bonds_of(mol, j) if x.order == DOUBLE)
                    if not mol.atoms[dbl.other(j)].aromatic:
                        return True
    return False


def _alert_azo(mol):
    for bond in mol.bonds:
        if bond.order == DOUBLE and _sym(mol, bond.a) == "N" \
                and _sym(mol, bond.b) == "N" \
                and mol.atoms[bond.a].charge == 0 and mol.atoms[bond.b].charge == 0 \
                and len(mol.adjacency[bond.a]) == 2 and len(mol.adjacency[bond.b]) == 2:
            return True
    return False


def _alert_acyclic_imine(mol):
    for bond in mol.bonds:
        if bond.order != DOUBLE:
            continue
        for c, n in ((bond.a, bond.b), (bond.b, bond.a)):
            if _sym(mol, c) == "C" and _sym(mol, n) == "N" \
                    and not mol.atoms[c].aromatic and not mol.atoms[n].aromatic \
                    and mol.atoms[n].charge == 0 \
                    and not mol.in_ring(c) and not mol.in_ring(n):
                if not any(b.order == SINGLE and _sym(mol, b.other(n)) in ("N", "O")
                           for b in bonds_of(mol, n)):
                    return True
    return False


def _alert_long_chain(mol):
    def sp3_chain_atom(i):
        return _sym(mol, i) == "C" and not mol.atoms[i].aromatic \
            and not mol.in_ring(i) \
            and all(b.order == SINGLE for b in bonds_of(mol, i))

    good = [i for i in range(len(mol.atoms)) if sp3_chain_atom(i)]
    good_set = set(good)

    def dfs(node, length, visited):
        if length == 8:
            return True
        for b in bonds_of(mol, node):
            j = b.other(node)
            if j in good_set and j not in visited:
                if dfs(j, length + 1, visited | {j}):
                    return True
        return False

    return any(dfs(i, 1, {i}) for i in good)


ALERTS = [
    ("nitro", _alert_nitro), ("aldehyde", _alert_aldehyde),
    ("azide", _alert_azide), ("diazonium", _alert_diazonium),
    ("acyl_halide", _alert_acyl_halide), ("sulfonyl_halide", _alert_sulfonyl_halide),
    ("peroxide", _alert_peroxide), ("disulfide", _alert_disulfide),
    ("isocyanate", _alert_isocyanate), ("thiocyanate", _alert_thiocyanate),
    ("michael_acceptor", _alert_michael), ("alkyl_halide", _alert_alkyl_halide),
    ("hydrazine", _alert_hydrazine), ("hydrazone", _alert_hydrazone),
    ("n_oxide", _alert_n_oxide), ("quaternary_nitrogen", _alert_quat_n),
    ("oxime", _alert_oxime), ("thiol", _alert_thiol),
    ("thiourea", _alert_thiourea), ("thioester", _alert_thioester),
    ("phosphorus_center", _alert_phosphorus), ("sulfonate", _alert_sulfonate),
    ("nitroso", _alert_nitroso), ("three_ring_heteroatom", _alert_ring3_hetero),
    ("polyhalogenated", _alert_polyhalogen), ("anhydride", _alert_anhydride),
    ("enamine", _alert_enamine), ("azo", _alert_azo),
    ("acyclic_imine", _alert_acyclic_imine),
    ("long_aliphatic_chain", _alert_long_chain),
]


def oracle_alert_names(mol: Molecule) -> list[str]:
    return [name for name, fn in ALERTS if fn(mol)]


def oracle_qed(mol: Molecule) -> float:
    props = {
        "MW": oracle_mw(mol),
        "ALOGP": oracle_logp(mol),
        "HBA": float(oracle_hba(mol)),
        "HBD": float(oracle_hbd(mol)),
        "PSA": oracle_tpsa(mol),
        "ROTB": float(oracle_rotb(mol)),
        "AROM": float(oracle_arom(mol)),
        "ALERTS": float(len(oracle_alert_names(mol))),
    }
    total = 0.0
    for key, weight in WEIGHTS.items():
        a, b, c, d, e, f, dmax = ADS[key]
        x = props[key]
        val = a + b / (1 + math.exp(-(x - c + d / 2) / e)) \
            * (1 - 1 / (1 + math.exp(-(x - c - d / 2) / f)))
        val = min(1.0, max(1e-6, val / dmax))
        total += weight * math.log(val)
    return math.exp(total / sum(WEIGHTS.values()))
