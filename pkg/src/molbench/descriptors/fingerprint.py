"""Circular-neighborhood hashed fingerprints and Tanimoto similarity.

Atom environments up to the configured radius are hashed with a keyed
blake2b digest (stable across runs and platforms, unlike the builtin
hash) and folded onto a fixed-width bit vector. Identical graphs produce
identical fingerprints regardless of input spelling because the initial
invariants are graph properties only.
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass

from molbench.chem import elements
from molbench.chem.model import Molecule

DEFAULT_RADIUS = 2
DEFAULT_NBITS = 2048


class DimensionMismatch(ValueError):
    """Fingerprints built with different (radius, nbits) parameters."""


@dataclass(frozen=True)
class Fingerprint:
    bits: int
    radius: int
    nbits: int

    @property
    def popcount(self) -> int:
        return self.bits.bit_count()

    def packed(self) -> bytes:
        return self.bits.to_bytes(self.nbits // 8, "little")

    def on_bits(self) -> list[int]:
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    @staticmethod
    def from_packed(data: bytes, radius: int, nbits: int) -> "Fingerprint":
        return Fingerprint(int.from_bytes(data, "little"), radius, nbits)


def _hash64(*values: int) -> int:
    payload = struct.pack(f"<{len(values)}Q", *(v & 0xFFFFFFFFFFFFFFFF for v in values))
    digest = hashlib.blake2b(payload, digest_size=8, key=b"molbench-fp").digest()
    return int.from_bytes(digest, "little")


def morgan_fingerprint(mol: Molecule, radius: int = DEFAULT_RADIUS,
                       nbits: int = DEFAULT_NBITS) -> Fingerprint:
    n = len(mol.atoms)
    invariants = []
    for atom in mol.atoms:
        invariants.append(_hash64(
            elements.lookup(atom.symbol).number,
            mol.heavy_degree(atom.index),
            atom.hydrogens,
            atom.charge,
            atom.isotope or 0,
            int(atom.aromatic),
            int(mol.in_ring(atom.index)),
        ))
    bits = 0
    for inv in invariants:
        bits |= 1 << (inv % nbits)
    current = invariants
    for layer in range(1, radius + 1):
        nxt = []
        for i in range(n):
            neighborhood = sorted(
                (mol.bonds[bi].order, current[mol.bonds[bi].other(i)])
                for bi in mol.adjacency[i]
            )
            flat = [layer, current[i]]
            for order, inv in neighborhood:
                flat.extend((order, inv))
            nxt.append(_hash64(*flat))
        for inv in nxt:
            bits |= 1 << (inv % nbits)
        current = nxt
    return Fingerprint(bits, radius, nbits)


def tanimoto(a: Fingerprint, b: Fingerprint) -> float:
    """Shared-bit fraction: |a & b| / |a | b|."""
    if (a.radius, a.nbits) != (b.radius, b.nbits):
        raise DimensionMismatch(
            f"fingerprint parameters differ: {(a.radius, a.nbits)} "
            f"vs {(b.radius, b.nbits)}"
        )
    inter = (a.bits & b.bits).bit_count()
    union = a.popcount + b.popcount - inter
    if union == 0:
        return 1.0
    return inter / union
