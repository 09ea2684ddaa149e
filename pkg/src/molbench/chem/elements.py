"""Element table for the supported atom vocabulary.

The engine works over a closed set of 17 heavy elements plus hydrogen.
Anything else is rejected at parse time with ElementError, which the
evaluator maps to an invalid generation.
"""

from __future__ import annotations

from dataclasses import dataclass

from molbench.chem.errors import ElementError


@dataclass(frozen=True)
class Element:
    symbol: str
    number: int
    name: str
    # Allowed total valences (bond order sum + hydrogens), lowest first.
    valences: tuple[int, ...]
    # Average atomic mass, used for molecular weight.
    mass: float
    # True if the atom may be spelled lowercase/aromatic in input.
    aromatic_ok: bool = False
    # True if the bare (bracket-free) spelling is legal.
    organic_subset: bool = False


_ELEMENTS = [
    Element("H", 1, "hydrogen", (1,), 1.008),
    Element("B", 5, "boron", (3,), 10.811, aromatic_ok=True, organic_subset=True),
    Element("C", 6, "carbon", (4,), 12.011, aromatic_ok=True, organic_subset=True),
    Element("N", 7, "nitrogen", (3, 5), 14.007, aromatic_ok=True, organic_subset=True),
    Element("O", 8, "oxygen", (2,), 15.999, aromatic_ok=True, organic_subset=True),
    Element("F", 9, "fluorine", (1,), 18.998, organic_subset=True),
    Element("Si", 14, "silicon", (4,), 28.086),
    Element("P", 15, "phosphorus", (3, 5), 30.974, aromatic_ok=True, organic_subset=True),
    Element("S", 16, "sulfur", (2, 4, 6), 32.067, aromatic_ok=True, organic_subset=True),
    Element("Cl", 17, "chlorine", (1,), 35.453, organic_subset=True),
    Element("As", 33, "arsenic", (3, 5), 74.922, aromatic_ok=True),
    Element("Se", 34, "selenium", (2, 4, 6), 78.971, aromatic_ok=True),
    Element("Br", 35, "bromine", (1,), 79.904, organic_subset=True),
    Element("Sb", 51, "antimony", (3, 5), 121.760),
    Element("Te", 52, "tellurium", (2, 4, 6), 127.60, aromatic_ok=True),
    Element("I", 53, "iodine", (1,), 126.904, organic_subset=True),
    Element("Bi", 83, "bismuth", (3, 5), 208.980),
    Element("Po", 84, "polonium", (2, 4, 6), 209.0),
]

BY_SYMBOL: dict[str, Element] = {e.symbol: e for e in _ELEMENTS}

HALOGENS = frozenset({"F", "Cl", "Br", "I"})

# Elements whose usual valence grows with positive charge (N+ binds 4),
# as opposed to boron where the anion gains a bond (borate binds 4).
_POSITIVE_GAIN = frozenset(
    {"N", "P", "As", "Sb", "Bi", "O", "S", "Se", "Te", "Po", "F", "Cl", "Br", "I"}
)


def lookup(symbol: str) -> Element:
    elem = BY_SYMBOL.get(symbol)
    if elem is None:
        raise ElementError(f"unsupported element {symbol!r}")
    return elem


def allowed_valences(symbol: str, charge: int) -> tuple[int, ...]:
    """Charge-adjusted allowed valences, lowest first.

    The shift direction follows the usual organic conventions: [NH4+] binds
    four, [O-] binds one, [B-] binds four, carbon loses a bond either way.
    """
    elem = lookup(symbol)
    if charge == 0:
        return elem.valences
    if symbol == "B":
        shift = -charge
    elif symbol in ("C", "Si"):
        shift = -abs(charge)
    elif symbol in _POSITIVE_GAIN:
        shift = charge
    else:
        shift = 0
    vals = tuple(sorted({max(0, v + shift) for v in elem.valences}))
    return vals


def atomic_mass(symbol: str, isotope: int | None) -> float:
    if isotope is not None:
        # Nominal mass for explicit isotopes; close enough for a weight
        # descriptor over a corpus that almost never labels isotopes.
        return float(isotope)
    return lookup(symbol).mass
