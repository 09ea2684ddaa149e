"""Benchmark instance generation for the nine subtasks.

Every instance derives its own child RNG from (master seed, subtask,
ordinal) through a keyed hash, so generation is reproducible
byte-for-byte and embarrassingly parallel. Editing instances are proven
satisfiable at generation time: the editor's product is stored as an
audit witness.
"""

from __future__ import annotations

import hashlib
import random

from molbench.chem import parse_smiles, write_smiles
from molbench.chem.errors import ChemError
from molbench.patterns import END_GROUPS, GroupRegistry
from molbench.taskgen import editor
from molbench.taskgen.requirements import (
    ALL_SUBTASKS,
    AddGroup,
    AtomCounts,
    BondCounts,
    DelGroup,
    GroupCounts,
    MOLCUSTOM_SUBTASKS,
    MOLEDIT_SUBTASKS,
    MOLOPT_SUBTASKS,
    OptimizeProperty,
    SubGroup,
    TaskInstance,
    atom_range,
    bond_range,
)
from molbench.taskgen.tables import (
    ATOM_WEIGHTS,
    BOND_WEIGHTS,
    weighted_choice,
    weighted_sample_without_replacement,
)
from molbench.taskgen.templates import draw_template, render_prompt
from molbench.chem.counts import ELEMENT_NAMES

RETRY_BUDGET = 50


class ResampleExhausted(RuntimeError):
    """The corpus kept failing to admit the requested subtask."""


def child_rng(master_seed: int, subtask: str, ordinal: int) -> tuple[random.Random, str]:
    trace = f"{master_seed}:{subtask}:{ordinal}"
    digest = hashlib.blake2b(trace.encode(), digest_size=8,
                             key=b"molbench-seed").digest()
    return random.Random(int.from_bytes(digest, "big")), trace


class Corpus:
    """Parsed view over a one-SMILES-per-line corpus file."""

    def __init__(self, lines: list[str]):
        self.lines = lines
        if not lines:
            raise ValueError("corpus is empty")

    def sample(self, rng: random.Random):
        for _ in range(RETRY_BUDGET):
            text = rng.choice(self.lines)
            try:
                mol = parse_smiles(text)
            except ChemError:
                continue
            return mol
        raise ResampleExhausted("corpus keeps failing to parse")


def gen_moledit(corpus: Corpus, registry: GroupRegistry, subtask: str,
                master_seed: int, ordinal: int) -> TaskInstance:
    assert subtask in MOLEDIT_SUBTASKS
    rng, trace = child_rng(master_seed, subtask, ordinal)
    addable = registry.weights_addcomponent
    for _ in range(RETRY_BUDGET):
        mol = corpus.sample(rng)
        source = write_smiles(mol)
        try:
            if subtask == "AddComponent":
                group = weighted_choice(rng, addable)
                requirement = AddGroup(group)
                witness = editor.add_group(mol, group, registry, rng)
            elif subtask == "DelComponent":
                present = [g for g in addable if registry.count_group(mol, g) > 0]
                if not present:
                    continue
                group = rng.choice(present)
                requirement = DelGroup(group)
                witness = editor.del_group(mol, group, registry, rng)
            else:
                present = [g for g in END_GROUPS
                           if registry.count_group(mol, g) > 0]
                if not present:
                    continue
                src = rng.choice(present)
                dst = rng.choice([g for g in END_GROUPS if g != src])
                requirement = SubGroup(src, dst)
                witness = editor.sub_group(mol, src, dst, registry, rng)
        except (editor.NoAttachmentSite, editor.NoRemovableMatch):
            continue
        template_id = draw_template(rng, subtask)
        prompt = render_prompt(subtask, requirement, source, template_id)
        return TaskInstance(
            id=f"{subtask}-{ordinal:06d}",
            subtask=subtask,
            prompt=prompt,
            requirement=requirement,
            source_smiles=source,
            template_id=template_id,
            seed_trace=trace,
            witness=write_smiles(witness),
        )
    raise ResampleExhausted(f"{subtask} instance {ordinal} not satisfiable "
                            f"within {RETRY_BUDGET} resamples")


def gen_molopt(corpus: Corpus, subtask: str, master_seed: int,
               ordinal: int) -> TaskInstance:
    assert subtask in MOLOPT_SUBTASKS
    rng, trace = child_rng(master_seed, subtask, ordinal)
    mol = corpus.sample(rng)
    source = write_smiles(mol)
    direction = rng.choice(("higher", "lower"))
    requirement = OptimizeProperty(subtask, direction)
    template_id = draw_template(rng, subtask)
    prompt = render_prompt(subtask, requirement, source, template_id)
    return TaskInstance(
        id=f"{subtask}-{ordinal:06d}",
        subtask=subtask,
        prompt=prompt,
        requirement=requirement,
        source_smiles=source,
        template_id=template_id,
        seed_trace=trace,
    )


def _gen_atomnum(rng: random.Random) -> AtomCounts:
    counts = [("carbon", rng.randint(*atom_range("carbon")))]
    n_extra = rng.randint(0, 3)
    for name in weighted_sample_without_replacement(rng, ATOM_WEIGHTS, n_extra):
        counts.append((name, rng.randint(*atom_range(name))))
    requirement = AtomCounts(tuple(counts))
    requirement.validate()
    return requirement


def _gen_bondnum(rng: random.Random) -> BondCounts:
    k = rng.randint(1, 3)
    counts = []
    for name in weighted_sample_without_replacement(rng, BOND_WEIGHTS, k):
        counts.append((name, rng.randint(*bond_range(name))))
    requirement = BondCounts(tuple(counts))
    requirement.validate()
    return requirement


def _gen_functionalgroup(rng: random.Random, registry: GroupRegistry) -> GroupCounts:
    k = rng.randint(1, 3)
    names = weighted_sample_without_replacement(
        rng, registry.weights_functionalgroup, k)
    requirement = GroupCounts(tuple((n, rng.randint(1, 5)) for n in names))
    requirement.validate()
    return requirement


def gen_molcustom(registry: GroupRegistry, subtask: str, master_seed: int,
                  ordinal: int) -> TaskInstance:
    assert subtask in MOLCUSTOM_SUBTASKS
    rng, trace = child_rng(master_seed, subtask, ordinal)
    if subtask == "AtomNum":
        requirement = _gen_atomnum(rng)
    elif subtask == "BondNum":
        requirement = _gen_bondnum(rng)
    else:
        requirement = _gen_functionalgroup(rng, registry)
    template_id = draw_template(rng, subtask)
    prompt = render_prompt(subtask, requirement, None, template_id)
    return TaskInstance(
        id=f"{subtask}-{ordinal:06d}",
        subtask=subtask,
        prompt=prompt,
        requirement=requirement,
        source_smiles=None,
        template_id=template_id,
        seed_trace=trace,
    )


def gen_instance(corpus: Corpus | None, registry: GroupRegistry, subtask: str,
                 master_seed: int, ordinal: int) -> TaskInstance:
    if subtask in MOLEDIT_SUBTASKS:
        if corpus is None:
            raise ValueError("editing subtasks need a source corpus")
        return gen_moledit(corpus, registry, subtask, master_seed, ordinal)
    if subtask in MOLOPT_SUBTASKS:
        if corpus is None:
            raise ValueError("optimization subtasks need a source corpus")
        return gen_molopt(corpus, subtask, master_seed, ordinal)
    return gen_molcustom(registry, subtask, master_seed, ordinal)


def gen_benchmark(corpus: Corpus, registry: GroupRegistry, master_seed: int,
                  per_subtask: int, dedupe_custom: bool = True):
    """Yield (subtask, instances) for all nine subtasks.

    Customized-generation instances are deduplicated by requirement; extra
    ordinals fill the gap so each subtask still emits per_subtask items.
    """
    for subtask in ALL_SUBTASKS:
        instances = []
        seen_requirements = set()
        ordinal = 0
        while len(instances) < per_subtask:
            inst = gen_instance(corpus, registry, subtask, master_seed, ordinal)
            ordinal += 1
            if dedupe_custom and subtask in MOLCUSTOM_SUBTASKS:
                key = repr(sorted(inst.requirement.to_json()["counts"].items()))
                if key in seen_requirements:
                    continue
                seen_requirements.add(key)
            instances.append(inst)
        yield subtask, instances
