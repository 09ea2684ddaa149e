import itertools
import random

import pytest

from genmol import random_molecule
from molbench.chem import count_rotatable_bonds, parse_smiles
from molbench.patterns import (
    END_GROUPS,
    UnknownGroup,
    _ORDER_PRED,
    default_registry,
)


def brute_force_count(mol, group) -> int:
    """All-subsets embedding enumerator, independent of the guided matcher:
    every ordered atom tuple of pattern size is checked directly."""
    from molbench.patterns import _benzene_rings, _forbid_hits

    if group.special == "benzene_ring":
        return len(_benzene_rings(mol))
    member_sets = set()
    n = len(mol.atoms)
    for variant in group.variants:
        k = len(variant.nodes)
        if k > n:
            continue
        member_nodes = [i for i, c in enumerate(variant.nodes) if c.member]
        for combo in itertools.permutations(range(n), k):
            if not all(variant.nodes[i].accepts(mol, combo[i]) for i in range(k)):
                continue
            ok = True
            for a, b, order in variant.edges:
                bond = mol.bond_between(combo[a], combo[b])
                if bond is None or not _ORDER_PRED[order](bond.order):
                    ok = False
                    break
            if not ok:
                continue
            blocked = set(combo)
            vetoed = False
            for forbid in variant.forbids:
                if _forbid_hits(mol, forbid, combo[forbid.anchor], blocked):
                    vetoed = True
                    break
            if not vetoed:
                member_sets.add(frozenset(combo[i] for i in member_nodes))
    return len(member_sets)


def test_registry_weight_tables():
    reg = default_registry()
    assert sum(reg.weights_functionalgroup.values()) == 79
    assert len(reg.weights_functionalgroup) == 19
    assert sum(reg.weights_addcomponent.values()) == 67
    assert len(reg.weights_addcomponent) == 10
    assert set(reg.end_groups) == set(END_GROUPS)
    assert len(reg.checksum) == 64


def test_unknown_group_raises():
    reg = default_registry()
    with pytest.raises(UnknownGroup):
        reg.count_group(parse_smiles("CC"), "phlogiston")


def test_spec_counting_examples():
    reg = default_registry()
    assert reg.count_group(parse_smiles("OCCO"), "hydroxyl") == 2
    assert reg.count_group(parse_smiles("c1ccccc1"), "benzene ring") == 1
    assert reg.count_group(parse_smiles("c1ccc2ccccc2c1"), "benzene ring") == 2
    assert reg.count_group(parse_smiles("CC(=O)O"), "carboxyl") == 1


def test_rotatable_bond_rules():
    assert count_rotatable_bonds(parse_smiles("CCCC")) == 1
    assert count_rotatable_bonds(parse_smiles("c1ccccc1")) == 0
    assert count_rotatable_bonds(parse_smiles("CC")) == 0
    # amide C-N excluded; the C-C to the methyl is terminal
    assert count_rotatable_bonds(parse_smiles("CC(=O)NC")) == 0
    assert count_rotatable_bonds(parse_smiles("CCC(=O)NCC")) == 2
    assert count_rotatable_bonds(parse_smiles("c1ccccc1Cc1ccccc1")) == 2


def test_symmetry_dedup_on_benzene():
    # Six aromatic CC bonds give six distinct atom pairs, not twelve
    # ordered embeddings.
    from molbench.patterns import (
        MatchSet,
        NodeConstraint,
        PatternVariant,
        _match_variant,
    )

    mol = parse_smiles("c1ccccc1")
    variant = PatternVariant(
        nodes=(NodeConstraint(elems=("C",), aromatic=True),
               NodeConstraint(elems=("C",), aromatic=True)),
        edges=((0, 1, "aromatic"),),
    )
    pairs = {frozenset(m.values()) for m in _match_variant(mol, variant)}
    assert len(pairs) == 6
    assert len(_match_variant(mol, variant)) == 12


def test_enumerate_present_groups_covers_registry():
    reg = default_registry()
    mol = parse_smiles("O=Cc1ccccc1")
    present = dict(reg.enumerate_present_groups(mol))
    assert present["benzene ring"] == 1
    assert present["aldehyde"] == 1
    assert all(count > 0 for count in present.values())


_ELEMENT_HINTS = {
    "benzene ring": "C", "hydroxyl": "O", "anhydride": "O", "aldehyde": "O",
    "ketone": "O", "carboxyl": "O", "ester": "O", "amide": "N", "amine": "N",
    "nitro": "N", "halo": None, "thioether": "S", "nitrile": "N",
    "thiol": "S", "sulfide": "S", "disulfide": "S", "sulfoxide": "S",
    "sulfone": "S", "borane": "B",
}


def test_matcher_agrees_with_brute_force_on_fixture_set():
    reg = default_registry()
    fixtures = [
        "CCO", "OCCO", "CC(=O)O", "CC(=O)OC", "CC(=O)N", "CCN", "CNC",
        "CC(=O)C", "O=CC=O", "CC#N", "CS", "CSC", "CSSC", "CS(=O)C",
        "CS(=O)(=O)C", "CB(O)O", "c1ccccc1", "c1ccncc1", "c1cc[nH]c1",
        "Oc1ccccc1", "Nc1ccccc1", "Clc1ccccc1", "O=Cc1ccccc1",
        "CC(=O)OC(=O)C", "[N+](=O)([O-])C", "N(=O)(=O)C", "OC(=O)CN",
        "CC(C)=O", "OCC(O)CO", "CC(Cl)Br", "FC(F)F", "SCCS", "NCCN",
        "CC(=O)NC", "COC", "CCOC=O", "OB(O)c1ccccc1", "Cc1ccc(O)cc1",
        "NC(=O)c1ccccc1", "O=S(=O)(O)c1ccccc1",
    ]
    rng = random.Random(99)
    while len(fixtures) < 50:
        mol = random_molecule(rng, max_heavy=9)
        from molbench.chem import write_smiles
        fixtures.append(write_smiles(mol))

    assert len(fixtures) == 50
    for smi in fixtures:
        mol = parse_smiles(smi)
        symbols = {a.symbol for a in mol.atoms}
        for name in reg.names():
            hint = _ELEMENT_HINTS[name]
            if hint is not None and hint not in symbols:
                continue
            fast = reg.count_group(mol, name)
            slow = brute_force_count(mol, reg.get(name))
            assert fast == slow, (smi, name, fast, slow)
