import random

import networkx as nx
import pytest

from genmol import random_molecule
from molbench.chem import (
    canonical_rank,
    canonical_smiles,
    parse_smiles,
    random_smiles,
    write_smiles,
)


def as_nx(mol):
    g = nx.Graph()
    for a in mol.atoms:
        g.add_node(a.index, symbol=a.symbol, charge=a.charge,
                   isotope=a.isotope, hydrogens=a.hydrogens, aromatic=a.aromatic)
    for b in mol.bonds:
        g.add_edge(b.a, b.b, order=b.order)
    return g


def isomorphic(m1, m2) -> bool:
    return nx.is_isomorphic(
        as_nx(m1), as_nx(m2),
        node_match=lambda x, y: all(x[k] == y[k] for k in
                                    ("symbol", "charge", "isotope", "hydrogens", "aromatic")),
        edge_match=lambda x, y: x["order"] == y["order"],
    )


def test_canonical_fixed_points():
    assert canonical_smiles("OCC") == "CCO"
    assert canonical_smiles("CCO") == "CCO"
    assert canonical_smiles("c1ccccc1") == canonical_smiles("C1=CC=CC=C1")
    assert canonical_smiles("C") == "C"


def test_single_atom_and_small_cases():
    assert write_smiles(parse_smiles("C")) == "C"
    assert write_smiles(parse_smiles("[CH4]")) == "C"
    assert write_smiles(parse_smiles("O")) == "O"
    assert write_smiles(parse_smiles("[OH2]")) == "O"


def test_canonical_rank_is_permutation():
    for text in ["CC", "CCO", "c1ccccc1", "CC(C)(C)C", "c1ccc2ccccc2c1"]:
        mol = parse_smiles(text)
        ranks = canonical_rank(mol)
        assert sorted(ranks) == list(range(len(mol.atoms)))


def test_canonical_rank_oxygen_unique():
    mol = parse_smiles("CCO")
    ranks = canonical_rank(mol)
    # the oxygen's rank differs from both carbons
    o_rank = ranks[2]
    assert o_rank not in (ranks[0], ranks[1])


def test_canonical_rank_stable_across_runs():
    mol = parse_smiles("c1ccccc1")
    assert canonical_rank(mol) == canonical_rank(parse_smiles("c1ccccc1"))


@pytest.mark.parametrize("text", [
    "CCO", "c1ccccc1", "CC(=O)Oc1ccccc1C(=O)O", "C1CC2CCC1CC2",
    "[O-]C(=O)c1ccccc1", "O=c1cccc[nH]1", "c1ccc(cc1)-c1ccccc1",
    "N#Cc1ccccc1C#N", "[13CH3]OC", "CC.O", "[2H]O[2H]",
])
def test_roundtrip_isomorphism(text):
    m1 = parse_smiles(text)
    w = write_smiles(m1)
    m2 = parse_smiles(w)
    assert isomorphic(m1, m2)
    assert write_smiles(m2) == w


def test_respellings_collapse_to_one_canonical_form():
    rng = random.Random(11)
    for seed in range(120):
        mol = random_molecule(random.Random(seed), max_heavy=22, fragments=True)
        ref = write_smiles(mol)
        for _ in range(4):
            alt = random_smiles(mol, rng)
            m2 = parse_smiles(alt)
            assert isomorphic(mol, m2), (ref, alt)
            assert write_smiles(m2) == ref, (ref, alt)


def test_canonical_idempotence_randomized():
    for seed in range(150):
        mol = random_molecule(random.Random(1000 + seed), max_heavy=26)
        w = write_smiles(mol)
        assert write_smiles(parse_smiles(w)) == w
