import json
import math
import pathlib
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from molbench.chem import parse_smiles, random_smiles, write_smiles
from molbench.descriptors import (
    DimensionMismatch,
    Fingerprint,
    ReferenceIndex,
    logp,
    morgan_fingerprint,
    mr,
    novelty,
    novelty_bulk,
    novelty_scalar,
    qed,
    tanimoto,
)
from molbench.descriptors.qed import alert_hits, qed_properties

DATA = pathlib.Path(__file__).parent / "data"


def test_lipophilicity_ordering():
    octane = parse_smiles("CCCCCCCC")
    ethanol = parse_smiles("CCO")
    assert logp(octane) > logp(ethanol)


def test_logp_golden_value():
    golden = json.loads((DATA / "descriptor_golden.jsonl").read_text()
                        .splitlines()[1])
    mol = parse_smiles(golden["smiles"])
    assert logp(mol) == pytest.approx(golden["logp"], abs=1e-6)


def test_mr_ordering_and_golden():
    naphthalene = parse_smiles("c1ccc2ccccc2c1")
    benzene = parse_smiles("c1ccccc1")
    assert mr(naphthalene) > mr(benzene)
    assert mr(parse_smiles("CCO")) == pytest.approx(12.7598, abs=1e-4)


def test_descriptors_are_graph_functions():
    rng = random.Random(3)
    for smi in ["CC(=O)Oc1ccccc1C(=O)O", "CC(C)Cc1ccc(cc1)C(C)C(=O)O",
                "CN1C=NC2=C1C(=O)N(C)C(=O)N2C"]:
        mol = parse_smiles(smi)
        base = (logp(mol), mr(mol), qed(mol), morgan_fingerprint(mol).bits)
        for _ in range(5):
            alt = parse_smiles(random_smiles(mol, rng))
            assert logp(alt) == pytest.approx(base[0], abs=1e-12)
            assert mr(alt) == pytest.approx(base[1], abs=1e-12)
            assert qed(alt) == pytest.approx(base[2], abs=1e-12)
            assert morgan_fingerprint(alt).bits == base[3]


def test_qed_bounds_and_alert_effect():
    for smi in ["CCO", "c1ccccc1", "CC(C)Cc1ccc(cc1)C(C)C(=O)O"]:
        value = qed(parse_smiles(smi))
        assert 0.0 < value <= 1.0
    # loading a drug-like scaffold with nitro groups must strictly drop qed
    base = parse_smiles("CC(C)Cc1ccc(cc1)C(C)C(=O)O")
    loaded = parse_smiles(
        "CC(C([N+](=O)[O-])[N+](=O)[O-])Cc1c(cc(c(c1[N+](=O)[O-])[N+](=O)[O-])"
        "C(C([N+](=O)[O-])[N+](=O)[O-])C(=O)OC([N+](=O)[O-])[N+](=O)[O-])"
        "[N+](=O)[O-].[O-][N+](=O)O"
    )
    assert "nitro" in alert_hits(loaded)
    assert qed(loaded) < qed(base)


def test_qed_properties_shape():
    props = qed_properties(parse_smiles("CC(=O)Oc1ccccc1C(=O)O"))
    assert set(props) == {"MW", "ALOGP", "HBA", "HBD", "PSA", "ROTB", "AROM",
                          "ALERTS"}
    assert props["MW"] == pytest.approx(180.159, abs=0.01)
    assert props["AROM"] == 1


def test_fingerprint_contracts():
    benzene = morgan_fingerprint(parse_smiles("c1ccccc1"))
    cyclohexane = morgan_fingerprint(parse_smiles("C1CCCCC1"))
    assert benzene.bits != cyclohexane.bits
    assert benzene.popcount >= 1
    assert morgan_fingerprint(parse_smiles("C1=CC=CC=C1")).bits == benzene.bits


def test_fingerprint_golden_bits():
    golden_path = DATA / "fingerprint_golden.json"
    fp = morgan_fingerprint(parse_smiles("CC(=O)Oc1ccccc1C(=O)O"))
    golden = json.loads(golden_path.read_text())
    assert fp.on_bits() == golden["on_bits"]


def test_tanimoto_examples():
    fp = morgan_fingerprint(parse_smiles("CCO"))
    assert tanimoto(fp, fp) == 1.0
    a = Fingerprint(0b111, 2, 2048)
    b = Fingerprint(0b111000, 2, 2048)
    assert tanimoto(a, b) == 0.0
    # |a & b| = 3, |a | b| = 12
    a = Fingerprint((1 << 12) - 1, 2, 2048)
    b = Fingerprint(0b111, 2, 2048)
    assert tanimoto(a, b) == pytest.approx(0.25)


def test_tanimoto_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        tanimoto(Fingerprint(1, 2, 2048), Fingerprint(1, 3, 2048))


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=(1 << 128) - 1),
       st.integers(min_value=1, max_value=(1 << 128) - 1))
def test_tanimoto_properties(x, y):
    a = Fingerprint(x, 2, 2048)
    b = Fingerprint(y, 2, 2048)
    s = tanimoto(a, b)
    assert 0.0 <= s <= 1.0
    assert s == tanimoto(b, a)
    assert (s == 1.0) == (x == y)
    assert tanimoto(a, a) == 1.0


def _random_fp(rng, nbits=2048, density=50):
    bits = 0
    for _ in range(density):
        bits |= 1 << rng.randrange(nbits)
    return Fingerprint(bits, 2, nbits)


def test_novelty_examples():
    fp = morgan_fingerprint(parse_smiles("CCO"))
    index = ReferenceIndex.from_fingerprints([fp])
    assert novelty(fp, index) == 0.0
    other = Fingerprint(1 << 7, 2, 2048)
    disjoint = Fingerprint(1 << 9, 2, 2048)
    index = ReferenceIndex.from_fingerprints([other])
    assert novelty(disjoint, index) == 1.0
    # three references at similarities 1.0, 0.5, 0.0
    q = Fingerprint(0b11, 2, 2048)
    refs = [Fingerprint(0b11, 2, 2048), Fingerprint(0b1111, 2, 2048),
            Fingerprint(0b110000, 2, 2048)]
    index = ReferenceIndex.from_fingerprints(refs)
    expected = 1.0 - (1.0 + 0.5 + 0.0) / 3
    assert novelty(q, index) == pytest.approx(expected)


def test_novelty_bulk_equals_scalar_exactly():
    rng = random.Random(17)
    refs = [_random_fp(rng) for _ in range(400)]
    queries = [_random_fp(rng) for _ in range(60)]
    index = ReferenceIndex.from_fingerprints(refs)
    bulk = novelty_bulk(queries, index)
    for q, b in zip(queries, bulk):
        assert novelty_scalar(q, index) == b


def test_reference_index_cache_roundtrip(tmp_path):
    rng = random.Random(23)
    refs = [_random_fp(rng) for _ in range(50)]
    index = ReferenceIndex.from_fingerprints(refs, corpus_checksum="abc")
    path = str(tmp_path / "refs.idx")
    index.save(path)
    loaded = ReferenceIndex.load(path)
    assert loaded.size == 50
    assert loaded.corpus_checksum == "abc"
    q = _random_fp(rng)
    assert novelty(q, loaded) == novelty(q, index)
