"""Instruction-tuning pair emission at the five dataset scales.

Pairs are built the same way the benchmark is: editing pairs through the
editor, optimization pairs by labeling a random edit with the recomputed
property delta, customization pairs from statistics extracted off real
corpus molecules. Every response must pass its own instruction's checker
and stay outside the held-out canonical set before it is emitted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from molbench.chem import bond_counts, heavy_atom_counts, write_smiles
from molbench.chem.counts import ELEMENT_NAMES
from molbench.evaluate.checks import check_molcustom, check_moledit, check_molopt
from molbench.descriptors import PROPERTY_FUNCTIONS
from molbench.patterns import GroupRegistry
from molbench.taskgen import editor
from molbench.taskgen.bench import Corpus, ResampleExhausted, child_rng
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
    TrainingPair,
    atom_range,
    bond_range,
)
from molbench.taskgen.tables import weighted_choice
from molbench.taskgen.templates import draw_template, render_prompt
from molbench.patterns import END_GROUPS

SCALES = {
    "light": 4_500,
    "small": 18_000,
    "medium": 45_000,
    "large": 90_000,
    "xlarge": 1_200_000,
}

_PAIR_RETRIES = 200


class ExclusionExhausted(RuntimeError):
    """The corpus cannot supply enough non-leaking pairs."""


@dataclass(frozen=True)
class ScaleConfig:
    level: str

    @property
    def total_pairs(self) -> int:
        return SCALES[self.level]

    def per_subtask(self) -> dict[str, int]:
        # Equal split; any remainder goes to the leading subtasks so the
        # total matches the scale exactly.
        base, remainder = divmod(self.total_pairs, len(ALL_SUBTASKS))
        out = {}
        for i, subtask in enumerate(ALL_SUBTASKS):
            out[subtask] = base + (1 if i < remainder else 0)
        return out


def _random_edit(mol, registry: GroupRegistry, rng: random.Random):
    """A feasible random edit and its product, or None."""
    addable = registry.weights_addcomponent
    kind = rng.choice(("add", "del", "sub"))
    try:
        if kind == "add":
            group = weighted_choice(rng, addable)
            return AddGroup(group), editor.add_group(mol, group, registry, rng)
        if kind == "del":
            present = [g for g in addable if registry.count_group(mol, g) > 0]
            if not present:
                return None
            group = rng.choice(present)
            return DelGroup(group), editor.del_group(mol, group, registry, rng)
        present = [g for g in END_GROUPS if registry.count_group(mol, g) > 0]
        if not present:
            return None
        src = rng.choice(present)
        dst = rng.choice([g for g in END_GROUPS if g != src])
        return SubGroup(src, dst), editor.sub_group(mol, src, dst, registry, rng)
    except (editor.NoAttachmentSite, editor.NoRemovableMatch):
        return None


def _moledit_pair(corpus, registry, subtask, rng):
    mol = corpus.sample(rng)
    source = write_smiles(mol)
    try:
        if subtask == "AddComponent":
            group = weighted_choice(rng, registry.weights_addcomponent)
            requirement = AddGroup(group)
            edited = editor.add_group(mol, group, registry, rng)
        elif subtask == "DelComponent":
            present = [g for g in registry.weights_addcomponent
                       if registry.count_group(mol, g) > 0]
            if not present:
                return None
            group = rng.choice(present)
            requirement = DelGroup(group)
            edited = editor.del_group(mol, group, registry, rng)
        else:
            present = [g for g in END_GROUPS if registry.count_group(mol, g) > 0]
            if not present:
                return None
            src = rng.choice(present)
            dst = rng.choice([g for g in END_GROUPS if g != src])
            requirement = SubGroup(src, dst)
            edited = editor.sub_group(mol, src, dst, registry, rng)
    except (editor.NoAttachmentSite, editor.NoRemovableMatch):
        return None
    if not check_moledit(mol, edited, requirement, registry):
        return None
    template_id = draw_template(rng, subtask)
    instruction = render_prompt(subtask, requirement, source, template_id)
    return (instruction, write_smiles(edited),
            {"source": source, "edit": requirement.to_json()})


def _molopt_pair(corpus, registry, subtask, rng):
    mol = corpus.sample(rng)
    source = write_smiles(mol)
    outcome = _random_edit(mol, registry, rng)
    if outcome is None:
        return None
    edit, edited = outcome
    fn = PROPERTY_FUNCTIONS[subtask]
    delta = fn(edited) - fn(mol)
    if delta == 0:
        return None
    direction = "higher" if delta > 0 else "lower"
    requirement = OptimizeProperty(subtask, direction)
    if not check_molopt(mol, edited, requirement):
        return None
    template_id = draw_template(rng, subtask)
    instruction = render_prompt(subtask, requirement, source, template_id)
    return (instruction, write_smiles(edited),
            {"source": source, "edit": edit.to_json(), "delta": delta})


def _molcustom_pair(corpus, registry, subtask, rng):
    mol = corpus.sample(rng)
    canon = write_smiles(mol)
    if subtask == "AtomNum":
        actual = heavy_atom_counts(mol)
        named = {ELEMENT_NAMES[sym]: n for sym, n in actual.items()}
        lo, hi = atom_range("carbon")
        if not lo <= named.get("carbon", 0) <= hi:
            return None
        counts = [("carbon", named["carbon"])]
        extras = [n for n in named
                  if n != "carbon" and atom_range(n)[0] <= named[n] <= atom_range(n)[1]]
        rng.shuffle(extras)
        for name in extras[:rng.randint(0, 3)]:
            counts.append((name, named[name]))
        requirement = AtomCounts(tuple(counts))
    elif subtask == "BondNum":
        actual = bond_counts(mol)
        eligible = [name for name, n in actual.items()
                    if n > 0 and bond_range(name)[0] <= n <= bond_range(name)[1]]
        if not eligible:
            return None
        rng.shuffle(eligible)
        picked = eligible[:rng.randint(1, 3)]
        requirement = BondCounts(tuple((name, actual[name]) for name in picked))
    else:
        present = [(name, count)
                   for name, count in registry.enumerate_present_groups(mol)
                   if 1 <= count <= 5]
        if not present:
            return None
        rng.shuffle(present)
        requirement = GroupCounts(tuple(present[:rng.randint(1, 3)]))
    requirement.validate()
    if not check_molcustom(mol, requirement, registry):
        return None
    template_id = draw_template(rng, subtask)
    instruction = render_prompt(subtask, requirement, None, template_id)
    return (instruction, canon,
            {"source": canon, "statistics": requirement.to_json()})


def gen_openmolins(corpus: Corpus, registry: GroupRegistry, scale: ScaleConfig,
                   exclusion: set[str], master_seed: int):
    """Yield TrainingPair records: equal per-subtask counts summing to the
    scale total, every response checked against its own instruction and
    the held-out canonical set."""
    quotas = scale.per_subtask()
    for subtask in ALL_SUBTASKS:
        emitted = 0
        ordinal = 0
        failures = 0
        while emitted < quotas[subtask]:
            rng, trace = child_rng(master_seed, f"train-{subtask}", ordinal)
            ordinal += 1
            if subtask in MOLEDIT_SUBTASKS:
                built = _moledit_pair(corpus, registry, subtask, rng)
            elif subtask in MOLOPT_SUBTASKS:
                built = _molopt_pair(corpus, registry, subtask, rng)
            else:
                built = _molcustom_pair(corpus, registry, subtask, rng)
            if built is None:
                failures += 1
                if failures > _PAIR_RETRIES and emitted == 0:
                    raise ResampleExhausted(
                        f"{subtask}: corpus admits no training pairs")
                continue
            instruction, response, provenance = built
            if response in exclusion:
                failures += 1
                if failures > _PAIR_RETRIES * max(1, quotas[subtask] // 10):
                    raise ExclusionExhausted(
                        f"{subtask}: cannot supply non-leaking pairs")
                continue
            provenance["seed_trace"] = trace
            yield TrainingPair(
                id=f"{subtask}-train-{emitted:07d}",
                subtask=subtask,
                instruction=instruction,
                response=response,
                provenance=provenance,
            )
            emitted += 1
