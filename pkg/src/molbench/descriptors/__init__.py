"""Property calculators and fingerprint similarity machinery."""

from molbench.descriptors.crippen import logp, mr
from molbench.descriptors.fingerprint import (
    DEFAULT_NBITS,
    DEFAULT_RADIUS,
    DimensionMismatch,
    Fingerprint,
    morgan_fingerprint,
    tanimoto,
)
from molbench.descriptors.novelty import (
    EmptyReference,
    ReferenceIndex,
    load_or_build_index,
    novelty,
    novelty_bulk,
    novelty_scalar,
)
from molbench.descriptors.qed import qed, qed_properties
from molbench.descriptors.tpsa import tpsa

PROPERTY_FUNCTIONS = {"LogP": logp, "MR": mr, "QED": qed}

__all__ = [
    "DEFAULT_NBITS", "DEFAULT_RADIUS", "DimensionMismatch", "EmptyReference",
    "Fingerprint", "PROPERTY_FUNCTIONS", "ReferenceIndex",
    "load_or_build_index", "logp", "morgan_fingerprint", "mr", "novelty",
    "novelty_bulk", "novelty_scalar", "qed", "qed_properties", "tanimoto",
    "tpsa",
]
