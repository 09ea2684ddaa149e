import pytest

from molbench.chem import (
    ElementError,
    KekulizationError,
    SmilesSyntaxError,
    ValenceError,
    bond_counts,
    find_sssr,
    heavy_atom_counts,
    implicit_hydrogens,
    parse_smiles,
)


def test_ethanol_basics():
    mol = parse_smiles("CCO")
    assert len(mol.atoms) == 3
    assert len(mol.bonds) == 2
    assert all(b.order == 1 for b in mol.bonds)
    # oxygen bears one implicit hydrogen
    assert mol.atoms[2].symbol == "O"
    assert mol.atoms[2].hydrogens == 1
    assert heavy_atom_counts(mol) == {"C": 2, "O": 1}


def test_benzene_aromatic_perception():
    mol = parse_smiles("c1ccccc1")
    assert sum(a.aromatic for a in mol.atoms) == 6
    assert bond_counts(mol)["aromatic"] == 6
    assert bond_counts(mol)["single"] == 0


def test_unclosed_ring_digit_is_syntax_error():
    with pytest.raises(SmilesSyntaxError):
        parse_smiles("C1CC")


@pytest.mark.parametrize("text,err", [
    ("(CC)", SmilesSyntaxError),
    ("C(C", SmilesSyntaxError),
    ("CC)", SmilesSyntaxError),
    ("C=", SmilesSyntaxError),
    ("", SmilesSyntaxError),
    ("  ", SmilesSyntaxError),
    ("C C", SmilesSyntaxError),
    ("C==C", SmilesSyntaxError),
    ("C%2CC", SmilesSyntaxError),
    ("C11C", SmilesSyntaxError),
    ("C=1CC#1", SmilesSyntaxError),
    ("C$C", SmilesSyntaxError),
    ("[CH2:1]", SmilesSyntaxError),
    ("[Zn]CC", ElementError),
    ("*CC", ElementError),
    ("[*]", ElementError),
    ("[Xx]", ElementError),
    ("O(C)(C)C", ValenceError),
    ("F=C", ValenceError),
    ("[CH5]", ValenceError),
    ("cc", KekulizationError),
    ("c1ccCcc1", KekulizationError),
    ("C:C", KekulizationError),
])
def test_rejected_inputs(text, err):
    with pytest.raises(err):
        parse_smiles(text)


def test_implicit_hydrogen_rules():
    # nitrogen with three single bonds -> 0
    assert implicit_hydrogens(parse_smiles("CN(C)C"))[1] == 0
    # carbon with one single bond -> 3
    assert implicit_hydrogens(parse_smiles("CC"))[0] == 3
    # oxygen with three single bonds has no allowed valence
    with pytest.raises(ValenceError):
        parse_smiles("CO(C)C")


def test_bracket_atoms():
    mol = parse_smiles("[NH4+]")
    atom = mol.atoms[0]
    assert (atom.symbol, atom.charge, atom.hydrogens) == ("N", 1, 4)
    assert heavy_atom_counts(mol) == {"N": 1}

    mol = parse_smiles("[13CH3]C")
    assert mol.atoms[0].isotope == 13
    assert mol.atoms[0].hydrogens == 3

    mol = parse_smiles("[O-]S(=O)(=O)[O-]")
    assert sum(a.charge for a in mol.atoms) == -2


def test_charged_valence_shifts():
    assert parse_smiles("[O+](C)(C)C").atoms[0].hydrogens == 0
    assert parse_smiles("[B-](F)(F)(F)F").atoms[0].hydrogens == 0
    assert parse_smiles("[Cl-]").atoms[0].hydrogens == 0


def test_case_study_atom_counts():
    mol = parse_smiles("BrCCCCCCCCCCCCCCCBr")
    assert heavy_atom_counts(mol) == {"C": 15, "Br": 2}


def test_fragments_accepted_and_counted():
    mol = parse_smiles("CC.O")
    assert mol.fragment_count == 2
    mol = parse_smiles("[Na+]".replace("Na", "NH4"))  # still one fragment
    assert mol.fragment_count == 1


def test_ring_count_matches_cyclomatic_formula():
    for text, expected in [("CCO", 0), ("c1ccccc1", 1), ("c1ccc2ccccc2c1", 2),
                           ("C1CC2CCC1CC2", 2), ("C1CC1C1CC1", 2)]:
        mol = parse_smiles(text)
        assert len(mol.rings) == expected
        assert len(mol.rings) == len(mol.bonds) - len(mol.atoms) + mol.fragment_count


def test_sssr_direct_call():
    mol = parse_smiles("c1ccc2ccccc2c1")
    rings = find_sssr(len(mol.atoms), mol.bonds, mol.adjacency)
    assert sorted(len(r) for r in rings) == [6, 6]


def test_stereo_markers_parse_and_are_ignored():
    mol = parse_smiles("F[C@@H](Cl)Br")
    assert mol.atoms[1].stereo == "@@"
    mol = parse_smiles("C/C=C/C")
    assert any(b.stereo for b in mol.bonds)
    # same heavy-atom graph as the unannotated spelling
    assert heavy_atom_counts(mol) == heavy_atom_counts(parse_smiles("CC=CC"))


def test_aromatic_and_kekule_spellings_converge():
    for a, b in [("c1ccccc1", "C1=CC=CC=C1"),
                 ("c1ccncc1", "C1=CC=NC=C1"),
                 ("c1cc[nH]c1", "C1=CC=CN1"),
                 ("c1ccoc1", "C1=CC=CO1"),
                 ("O=c1cccc[nH]1", "O=C1C=CC=CN1")]:
        ma, mb = parse_smiles(a), parse_smiles(b)
        assert sum(x.aromatic for x in ma.atoms) == sum(x.aromatic for x in mb.atoms)
        assert bond_counts(ma) == bond_counts(mb)


def test_nonaromatic_rings_stay_plain():
    mol = parse_smiles("C1CCCCC1")
    assert not any(a.aromatic for a in mol.atoms)
    assert bond_counts(mol)["aromatic"] == 0


def test_pyridine_aromatic_by_electron_count():
    mol = parse_smiles("c1ccncc1")
    assert sum(a.aromatic for a in mol.atoms) == 6
    assert bond_counts(mol)["aromatic"] == 6
