"""Reference-corpus similarity index and novelty scoring.

Novelty of a generated molecule is one minus its mean Tanimoto similarity
over the whole reference set. The scalar path works on arbitrary-precision
ints, the bulk path on packed uint64 rows through a parallel popcount
kernel; both reduce with exactly-rounded summation, so they agree
bit-for-bit and the fast path needs no tolerance.
"""

from __future__ import annotations

import hashlib
import math
import os
import struct

import numpy as np
from numba import njit, prange

from molbench.descriptors.fingerprint import (
    DEFAULT_NBITS,
    DEFAULT_RADIUS,
    DimensionMismatch,
    Fingerprint,
)

_MAGIC = b"MBFPIDX1"


class EmptyReference(ValueError):
    """Novelty needs at least one reference fingerprint."""


@njit(cache=True)
def _popcount64(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@njit(parallel=True, cache=True)
def _intersections(refs, query, out):
    n, words = refs.shape
    for i in prange(n):
        acc = np.uint64(0)
        for j in range(words):
            acc += _popcount64(refs[i, j] & query[j])
        out[i] = acc


class ReferenceIndex:
    """Packed fingerprints of a reference corpus."""

    def __init__(self, packed: np.ndarray, radius: int, nbits: int,
                 corpus_checksum: str):
        if packed.ndim != 2 or packed.dtype != np.uint64:
            raise ValueError("expected a 2-D uint64 array of packed fingerprints")
        if packed.shape[0] == 0:
            raise EmptyReference("reference index is empty")
        self.packed = np.ascontiguousarray(packed)
        self.radius = radius
        self.nbits = nbits
        self.corpus_checksum = corpus_checksum
        self.popcounts = np.zeros(packed.shape[0], dtype=np.int64)
        all_ones = np.full(packed.shape[1], np.uint64(0xFFFFFFFFFFFFFFFF))
        _intersections(self.packed, all_ones, self.popcounts)

    @property
    def size(self) -> int:
        return int(self.packed.shape[0])

    @staticmethod
    def from_fingerprints(fps, radius: int = DEFAULT_RADIUS,
                          nbits: int = DEFAULT_NBITS,
                          corpus_checksum: str = "") -> "ReferenceIndex":
        rows = []
        for fp in fps:
            if (fp.radius, fp.nbits) != (radius, nbits):
                raise DimensionMismatch("reference fingerprint parameters differ")
            rows.append(np.frombuffer(fp.packed(), dtype=np.uint64))
        if not rows:
            raise EmptyReference("no reference fingerprints supplied")
        return ReferenceIndex(np.vstack(rows), radius, nbits, corpus_checksum)

    def row_int(self, i: int) -> int:
        return int.from_bytes(self.packed[i].tobytes(), "little")

    def save(self, path: str) -> None:
        header = struct.pack("<8sIIQ", _MAGIC, self.radius, self.nbits, self.size)
        checksum = self.corpus_checksum.encode()
        with open(path + ".partial", "wb") as fh:
            fh.write(header)
            fh.write(struct.pack("<I", len(checksum)))
            fh.write(checksum)
            fh.write(self.packed.tobytes())
        os.replace(path + ".partial", path)

    @staticmethod
    def load(path: str) -> "ReferenceIndex":
        with open(path, "rb") as fh:
            magic, radius, nbits, count = struct.unpack("<8sIIQ", fh.read(24))
            if magic != _MAGIC:
                raise ValueError(f"{path}: not a fingerprint index file")
            (csum_len,) = struct.unpack("<I", fh.read(4))
            checksum = fh.read(csum_len).decode()
            data = np.frombuffer(fh.read(), dtype=np.uint64)
        packed = data.reshape(count, nbits // 64).copy()
        return ReferenceIndex(packed, radius, nbits, checksum)


def file_checksum(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def load_or_build_index(corpus_path: str, build_fps, cache_path: str | None = None,
                        radius: int = DEFAULT_RADIUS,
                        nbits: int = DEFAULT_NBITS) -> ReferenceIndex:
    """Load the binary cache when its recorded corpus checksum still
    matches; otherwise rebuild via build_fps() and refresh the cache."""
    checksum = file_checksum(corpus_path)
    if cache_path and os.path.exists(cache_path):
        try:
            index = ReferenceIndex.load(cache_path)
            if (index.corpus_checksum == checksum and index.radius == radius
                    and index.nbits == nbits):
                return index
        except (ValueError, struct.error):
            pass
    index = ReferenceIndex.from_fingerprints(build_fps(), radius, nbits, checksum)
    if cache_path:
        index.save(cache_path)
    return index


def _check_compatible(fp: Fingerprint, index: ReferenceIndex) -> None:
    if (fp.radius, fp.nbits) != (index.radius, index.nbits):
        raise DimensionMismatch(
            f"query parameters {(fp.radius, fp.nbits)} do not match index "
            f"{(index.radius, index.nbits)}"
        )


def novelty_scalar(fp: Fingerprint, index: ReferenceIndex) -> float:
    """Reference implementation: per-row arbitrary-precision arithmetic."""
    _check_compatible(fp, index)
    query = fp.bits
    q_pop = fp.popcount
    sims = []
    for i in range(index.size):
        ref = index.row_int(i)
        inter = (query & ref).bit_count()
        union = q_pop + ref.bit_count() - inter
        sims.append(inter / union if union else 1.0)
    return 1.0 - math.fsum(sims) / index.size


def novelty_bulk(fps, index: ReferenceIndex) -> list[float]:
    """Vectorized novelty for many queries; equals the scalar path exactly."""
    out = []
    inter = np.zeros(index.size, dtype=np.int64)
    for fp in fps:
        _check_compatible(fp, index)
        query = np.frombuffer(fp.packed(), dtype=np.uint64)
        _intersections(index.packed, query, inter)
        union = index.popcounts + fp.popcount - inter
        sims = np.where(union > 0, inter / np.maximum(union, 1), 1.0)
        out.append(1.0 - math.fsum(sims.tolist()) / index.size)
    return out


def novelty(fp: Fingerprint, index: ReferenceIndex) -> float:
    """Novelty of one molecule against the reference set."""
    return novelty_bulk([fp], index)[0]
