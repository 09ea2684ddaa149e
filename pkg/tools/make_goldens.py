#!/usr/bin/env python3
"""Builds the committed test fixtures:

- tests/data/roundtrip_corpus.smi   10,000 randomly spelled molecules
- tests/data/test_corpus.smi        10,000 canonical held-out molecules
- tests/data/train_corpus.smi       30,000 canonical training molecules
- tests/data/descriptor_golden.jsonl 1,000 molecules with oracle values

Run from the repository root. Regenerating rewrites the files in place;
the oracle values come from tools/oracle_descriptors.py.
"""

import json
import pathlib
import random
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))
sys.path.insert(0, str(ROOT / "tools"))

from genmol import random_molecule  # noqa: E402
from oracle_descriptors import oracle_logp, oracle_mr, oracle_qed  # noqa: E402

from molbench.chem import parse_smiles, random_smiles, write_smiles  # noqa: E402

DATA = ROOT / "tests" / "data"

CURATED = [
    "CC(=O)Oc1ccccc1C(=O)O", "CC(=O)Nc1ccc(O)cc1",
    "CN1C=NC2=C1C(=O)N(C)C(=O)N2C", "CC(C)Cc1ccc(cc1)C(C)C(=O)O",
    "c1ccc2c(c1)cccc2O", "OCC(O)C(O)C(O)C(O)CO", "N#Cc1ccccc1",
    "CC(=O)OC(=O)C", "CSSC", "CS(=O)(=O)c1ccccc1", "NS(=O)(=O)c1ccccc1",
    "O=[N+]([O-])c1ccc(Cl)cc1", "FC(F)(F)c1ccccc1", "c1ccsc1", "c1ccoc1",
    "c1cc[nH]c1", "c1ccncc1", "Clc1ccccc1Cl", "CCOC(=O)CC(=O)OCC",
    "NC(=O)c1ccccc1", "OC(=O)c1ccccc1O", "CNC(=O)Oc1ccccc1",
    "CC(C)(C)c1ccc(O)cc1", "BrCCCCCCCCCCCCCCCBr", "C1CCNCC1", "C1CCOCC1",
    "O=C1CCCCC1", "CC1=CC(=O)CC(C)(C)C1", "OCCN1CCCCC1", "[NH4+].[Cl-]",
]


def build_corpus(seed: int, count: int, max_heavy: int, spellings: bool,
                 exclude: set[str] | None = None) -> tuple[list[str], set[str]]:
    rng = random.Random(seed)
    lines, canon_seen = [], set()
    exclude = exclude or set()
    while len(lines) < count:
        mol = random_molecule(rng, max_heavy=max_heavy, fragments=False)
        canon = write_smiles(mol)
        if canon in canon_seen or canon in exclude:
            continue
        canon_seen.add(canon)
        lines.append(random_smiles(mol, rng) if spellings else canon)
    return lines, canon_seen


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)

    roundtrip, _ = build_corpus(seed=101, count=10_000, max_heavy=30, spellings=True)
    (DATA / "roundtrip_corpus.smi").write_text("\n".join(roundtrip) + "\n")
    print("roundtrip_corpus.smi written")

    test_lines, test_canon = build_corpus(seed=202, count=10_000, max_heavy=26,
                                          spellings=False)
    (DATA / "test_corpus.smi").write_text("\n".join(test_lines) + "\n")
    print("test_corpus.smi written")

    train_lines, _ = build_corpus(seed=303, count=30_000, max_heavy=26,
                                  spellings=False)
    (DATA / "train_corpus.smi").write_text("\n".join(train_lines) + "\n")
    print("train_corpus.smi written (overlap with test corpus is filtered "
          "by the emitter, not here)")

    rng = random.Random(404)
    golden = []
    seen = set()
    for smi in CURATED:
        mol = parse_smiles(smi)
        canon = write_smiles(mol)
        if canon in seen:
            continue
        seen.add(canon)
        golden.append((smi, mol))
    while len(golden) < 1000:
        mol = random_molecule(rng, max_heavy=32, fragments=False)
        canon = write_smiles(mol)
        if canon in seen:
            continue
        seen.add(canon)
        golden.append((canon, mol))
    with open(DATA / "descriptor_golden.jsonl", "w") as fh:
        for smi, mol in golden:
            fh.write(json.dumps({
                "smiles": smi,
                "logp": round(oracle_logp(mol), 6),
                "mr": round(oracle_mr(mol), 6),
                "qed": round(oracle_qed(mol), 6),
            }) + "\n")
    print("descriptor_golden.jsonl written:", len(golden), "molecules")


if __name__ == "__main__":
    main()
