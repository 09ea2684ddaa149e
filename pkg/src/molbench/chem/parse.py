"""SMILES reader.

Accepted dialect: organic-subset atoms, bracket atoms (isotope, chirality
marker, hydrogen count, charge), bond symbols ``- = # : / \\``, branches,
ring closures including ``%nn``, and ``.`` fragment separators. Chirality
and directional markers are kept as annotations and ignored by every
metric. Everything else (wildcards, atom classes, quadruple bonds) is
rejected outright.
"""

from __future__ import annotations

from molbench.chem import elements
from molbench.chem.errors import ElementError, SmilesSyntaxError
from molbench.chem.model import AROMATIC, DOUBLE, SINGLE, TRIPLE, Molecule
from molbench.chem.perception import UNSPECIFIED, RawAtom, RawBond, assemble

_BOND_SYMBOLS = {"-": SINGLE, "=": DOUBLE, "#": TRIPLE, ":": AROMATIC}
_AROMATIC_BARE = {"b": "B", "c": "C", "n": "N", "o": "O", "p": "P", "s": "S"}
_AROMATIC_BRACKET = dict(_AROMATIC_BARE, se="Se", te="Te", as_="As")
_AROMATIC_BRACKET["as"] = "As"
_ORGANIC_TWO = ("Cl", "Br")
_ORGANIC_ONE = tuple("BCNOPSFI")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def take_digits(self, limit: int | None = None) -> str:
        start = self.pos
        while self.peek().isdigit() and (limit is None or self.pos - start < limit):
            self.pos += 1
        return self.text[start:self.pos]

    def error(self, message: str) -> SmilesSyntaxError:
        return SmilesSyntaxError(f"{message} at position {self.pos}")


def _parse_bracket_atom(cur: _Cursor) -> RawAtom:
    # Opening '[' already consumed.
    isotope = None
    digits = cur.take_digits()
    if digits:
        isotope = int(digits)

    symbol = None
    aromatic = False
    rest = cur.text[cur.pos:]
    for lower, mapped in (("se", "Se"), ("as", "As"), ("te", "Te")):
        if rest.startswith(lower):
            symbol, aromatic = mapped, True
            cur.pos += 2
            break
    if symbol is None:
        ch = cur.peek()
        if ch == "*":
            raise ElementError("wildcard atoms are not supported")
        if ch in _AROMATIC_BARE:
            symbol, aromatic = _AROMATIC_BARE[ch], True
            cur.take()
        elif ch.isalpha() and ch.isupper():
            two = cur.text[cur.pos:cur.pos + 2]
            if len(two) == 2 and two[1].islower() and two in elements.BY_SYMBOL:
                symbol = two
                cur.pos += 2
            elif len(two) == 2 and two[1].islower() and two.isalpha():
                # Two-letter element outside the vocabulary.
                raise ElementError(f"unsupported element {two!r}")
            else:
                symbol = ch
                cur.take()
        else:
            raise cur.error(f"expected element symbol, found {ch!r}")

    elem = elements.lookup(symbol)
    if aromatic and not elem.aromatic_ok:
        raise cur.error(f"element {symbol} cannot be aromatic")

    stereo = None
    if cur.peek() == "@":
        cur.take()
        if cur.peek() == "@":
            cur.take()
            stereo = "@@"
        else:
            stereo = "@"

    hcount = 0
    if cur.peek() == "H":
        cur.take()
        digits = cur.take_digits()
        hcount = int(digits) if digits else 1

    charge = 0
    ch = cur.peek()
    if ch in "+-":
        sign = 1 if ch == "+" else -1
        cur.take()
        digits = cur.take_digits(limit=2)
        if digits:
            charge = sign * int(digits)
        else:
            charge = sign
            while cur.peek() == ch:
                cur.take()
                charge += sign

    if cur.peek() == ":":
        raise cur.error("atom class annotations are not supported")
    if cur.take() != "]":
        cur.pos -= 1
        raise cur.error("expected ']' to close bracket atom")
    return RawAtom(symbol, charge, isotope, hcount, aromatic, stereo)


def _parse_bare_atom(cur: _Cursor) -> RawAtom:
    two = cur.text[cur.pos:cur.pos + 2]
    if two in _ORGANIC_TWO:
        cur.pos += 2
        return RawAtom(two)
    ch = cur.peek()
    if ch in _ORGANIC_ONE:
        cur.take()
        return RawAtom(ch)
    if ch in _AROMATIC_BARE:
        cur.take()
        return RawAtom(_AROMATIC_BARE[ch], aromatic_input=True)
    if ch == "*":
        raise ElementError("wildcard atoms are not supported")
    if ch.isalpha():
        # Looks like an element spelled without brackets ([Si], [Se], ...).
        raise ElementError(f"element {ch!r} must be written in brackets")
    raise cur.error(f"unexpected character {ch!r}")


def parse_smiles(text: str) -> Molecule:
    """Parse a SMILES string into a perceived Molecule.

    Raises SmilesSyntaxError, ElementError, ValenceError, or
    KekulizationError; any of these marks the string invalid.
    """
    text = text.strip()
    if not text:
        raise SmilesSyntaxError("empty SMILES string")

    cur = _Cursor(text)
    atoms: list[RawAtom] = []
    bonds: list[RawBond] = []
    bonded_pairs: set[frozenset[int]] = set()

    prev_atom: int | None = None
    pending_order = UNSPECIFIED
    pending_stereo: str | None = None
    pending_set = False
    branch_stack: list[int] = []
    # ring number -> (atom index, bond order at opening, stereo)
    open_rings: dict[int, tuple[int, int, str | None]] = {}

    def add_bond(a: int, b: int, order: int, stereo: str | None) -> None:
        if a == b:
            raise cur.error("ring closure bonds an atom to itself")
        pair = frozenset((a, b))
        if pair in bonded_pairs:
            raise cur.error("duplicate bond between one atom pair")
        bonded_pairs.add(pair)
        bonds.append(RawBond(a, b, order, stereo))

    def close_ring(num: int) -> None:
        nonlocal pending_order, pending_stereo, pending_set
        if prev_atom is None:
            raise cur.error("ring closure digit before any atom")
        if num in open_rings:
            other, open_order, open_stereo = open_rings.pop(num)
            order = pending_order
            if open_order != UNSPECIFIED and order != UNSPECIFIED and open_order != order:
                raise cur.error(f"ring bond {num} specified with conflicting orders")
            if order == UNSPECIFIED:
                order = open_order
            add_bond(other, prev_atom, order, open_stereo or pending_stereo)
        else:
            open_rings[num] = (prev_atom, pending_order, pending_stereo)
        pending_order = UNSPECIFIED
        pending_stereo = None
        pending_set = False

    def attach(atom: RawAtom) -> None:
        nonlocal prev_atom, pending_order, pending_stereo, pending_set
        atoms.append(atom)
        idx = len(atoms) - 1
        if prev_atom is not None:
            add_bond(prev_atom, idx, pending_order, pending_stereo)
        elif pending_set:
            raise cur.error("bond symbol with no preceding atom")
        prev_atom = idx
        pending_order = UNSPECIFIED
        pending_stereo = None
        pending_set = False

    while cur.pos < len(cur.text):
        ch = cur.peek()
        if ch.isspace():
            raise cur.error("whitespace inside SMILES")
        if ch == "(":
            cur.take()
            if prev_atom is None:
                raise cur.error("branch with no preceding atom")
            branch_stack.append(prev_atom)
            continue
        if ch == ")":
            cur.take()
            if not branch_stack:
                raise cur.error("unmatched ')'")
            if pending_set:
                raise cur.error("dangling bond symbol before ')'")
            prev_atom = branch_stack.pop()
            continue
        if ch in _BOND_SYMBOLS:
            cur.take()
            if pending_set:
                raise cur.error("two bond symbols in a row")
            pending_order = _BOND_SYMBOLS[ch]
            pending_set = True
            continue
        if ch in "/\\":
            cur.take()
            if pending_set:
                raise cur.error("two bond symbols in a row")
            pending_order = SINGLE
            pending_stereo = ch
            pending_set = True
            continue
        if ch == "$":
            raise cur.error("quadruple bonds are not supported")
        if ch == ".":
            cur.take()
            if pending_set:
                raise cur.error("bond symbol before '.'")
            if branch_stack:
                raise cur.error("fragment separator inside a branch")
            if prev_atom is None:
                raise cur.error("empty fragment before '.'")
            prev_atom = None
            continue
        if ch.isdigit():
            cur.take()
            close_ring(int(ch))
            continue
        if ch == "%":
            cur.take()
            digits = cur.take_digits(limit=2)
            if len(digits) != 2:
                raise cur.error("'%' ring closure needs two digits")
            close_ring(int(digits))
            continue
        if ch == "[":
            cur.take()
            attach(_parse_bracket_atom(cur))
            continue
        attach(_parse_bare_atom(cur))

    if branch_stack:
        raise cur.error("unclosed '('")
    if open_rings:
        nums = ", ".join(str(n) for n in sorted(open_rings))
        raise cur.error(f"unclosed ring bond(s) {nums}")
    if pending_set:
        raise cur.error("dangling bond symbol at end of input")
    if prev_atom is None and not atoms:
        raise cur.error("no atoms")

    return assemble(atoms, bonds)
