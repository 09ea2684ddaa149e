"""Prompt template pools and rendering.

The pools are fixed text: three spellings each for adding and removing a
group, six for substitution, five per optimized property (with paired
lower/higher and decrease/increase wordings), and ten per customized
subtask. Rendering fills slots, resolves the trailing "(s)" by the last
item's count, and joins multi-item lists with commas and "and".
"""

from __future__ import annotations

import random

from molbench.taskgen.requirements import (
    AddGroup,
    AtomCounts,
    BondCounts,
    DelGroup,
    GroupCounts,
    OptimizeProperty,
    Requirement,
    SubGroup,
)

ADD_TEMPLATES = (
    "Please add a {group} to the molecule {smiles}.",
    "Modify the molecule {smiles} by adding a {group}.",
    "Add a {group} to the molecule {smiles}.",
)
DEL_TEMPLATES = (
    "Please remove a {group} from the molecule {smiles}.",
    "Modify the molecule {smiles} by removing a {group}.",
    "Remove a {group} from the molecule {smiles}.",
)
SUB_TEMPLATES = (
    "Please substitute a {source} in the molecule {smiles} by {target}.",
    "Modify the molecule {smiles} by replacing a {source} by {target}.",
    "Replace a {source} in the molecule {smiles} by {target}.",
    "Please replace a {source} in the molecule {smiles} with {target}.",
    "Modify the molecule {smiles} by substituting a {source} with {target}.",
    "Substitute a {source} in the molecule {smiles} with {target}.",
)
# word templates: {dir} becomes lower/higher; verb templates: decrease/increase
OPT_TEMPLATES = (
    ("word", "Please optimize the molecule {smiles} to have a {dir} {prop} value."),
    ("verb", "Modify the molecule {smiles} to {dir} its {prop} value."),
    ("word", "Optimize the molecule {smiles} to have a {dir} {prop} value."),
    ("verb", "Please modify the molecule {smiles} to {dir} its {prop} value."),
    ("word", "Modify the molecule {smiles} to have a {dir} {prop} value."),
)
CUSTOM_TEMPLATES = (
    "Please generate a molecule with {items} {unit}(s).",
    "Please generate a molecule composed of {items} {unit}(s).",
    "Please generate a molecule consisting {items} {unit}(s).",
    "The molecule has {items} {unit}(s).",
    "The molecule is composed of {items} {unit}(s).",
    "The molecule consists of {items} {unit}(s).",
    "There is a molecule with {items} {unit}(s).",
    "There is a molecule composed of {items} {unit}(s).",
    "There is a molecule consisting of {items} {unit}(s).",
    "The molecule contains {items} {unit}(s).",
)

_CUSTOM_UNITS = {"AtomNum": "atom", "BondNum": "bond", "FunctionalGroup": "group"}
_DIRECTION_WORDS = {("word", "higher"): "higher", ("word", "lower"): "lower",
                    ("verb", "higher"): "increase", ("verb", "lower"): "decrease"}


class SlotMismatch(ValueError):
    """Requirement does not fit the subtask's template pool."""


def pool_size(subtask: str) -> int:
    return {
        "AddComponent": len(ADD_TEMPLATES),
        "DelComponent": len(DEL_TEMPLATES),
        "SubComponent": len(SUB_TEMPLATES),
        "LogP": len(OPT_TEMPLATES),
        "MR": len(OPT_TEMPLATES),
        "QED": len(OPT_TEMPLATES),
        "AtomNum": len(CUSTOM_TEMPLATES),
        "BondNum": len(CUSTOM_TEMPLATES),
        "FunctionalGroup": len(CUSTOM_TEMPLATES),
    }[subtask]


def _render_counts(counts, unit: str, template: str) -> str:
    parts = []
    for i, (name, count) in enumerate(counts):
        last = i == len(counts) - 1
        if last:
            parts.append(f"{count} {name}")
            trailing = unit if count == 1 else unit + "s"
        else:
            word = unit if count == 1 else unit + "s"
            parts.append(f"{count} {name} {word}")
    if len(parts) == 1:
        items = parts[0]
    elif len(parts) == 2:
        items = f"{parts[0]} and {parts[1]}"
    else:
        items = ", ".join(parts[:-1]) + f" and {parts[-1]}"
    return template.replace("{items}", items).replace("{unit}(s)", trailing)


def render_prompt(subtask: str, requirement: Requirement,
                  source_smiles: str | None, template_id: int) -> str:
    if subtask == "AddComponent":
        if not isinstance(requirement, AddGroup) or source_smiles is None:
            raise SlotMismatch(subtask)
        return ADD_TEMPLATES[template_id].format(group=requirement.group,
                                                 smiles=source_smiles)
    if subtask == "DelComponent":
        if not isinstance(requirement, DelGroup) or source_smiles is None:
            raise SlotMismatch(subtask)
        return DEL_TEMPLATES[template_id].format(group=requirement.group,
                                                 smiles=source_smiles)
    if subtask == "SubComponent":
        if not isinstance(requirement, SubGroup) or source_smiles is None:
            raise SlotMismatch(subtask)
        return SUB_TEMPLATES[template_id].format(
            source=requirement.source, target=requirement.target,
            smiles=source_smiles)
    if subtask in ("LogP", "MR", "QED"):
        if not isinstance(requirement, OptimizeProperty) or source_smiles is None:
            raise SlotMismatch(subtask)
        kind, template = OPT_TEMPLATES[template_id]
        word = _DIRECTION_WORDS[(kind, requirement.direction)]
        return template.format(smiles=source_smiles, dir=word,
                               prop=requirement.property)
    if subtask in ("AtomNum", "BondNum", "FunctionalGroup"):
        expected = {"AtomNum": AtomCounts, "BondNum": BondCounts,
                    "FunctionalGroup": GroupCounts}[subtask]
        if not isinstance(requirement, expected):
            raise SlotMismatch(subtask)
        return _render_counts(requirement.counts, _CUSTOM_UNITS[subtask],
                              CUSTOM_TEMPLATES[template_id])
    raise SlotMismatch(subtask)


def draw_template(rng: random.Random, subtask: str) -> int:
    return rng.randrange(pool_size(subtask))
