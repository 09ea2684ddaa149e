"""Machine-checkable requirement records carried by benchmark instances.

A requirement is exactly what the corresponding checker consumes: group
deltas for editing, a property direction for optimization, and exact
count maps for customized generation.
"""

from __future__ import annotations

from dataclasses import dataclass

MOLEDIT_SUBTASKS = ("AddComponent", "DelComponent", "SubComponent")
MOLOPT_SUBTASKS = ("LogP", "MR", "QED")
MOLCUSTOM_SUBTASKS = ("AtomNum", "BondNum", "FunctionalGroup")
ALL_SUBTASKS = MOLEDIT_SUBTASKS + MOLOPT_SUBTASKS + MOLCUSTOM_SUBTASKS

TASK_FAMILY = {}
for _s in MOLEDIT_SUBTASKS:
    TASK_FAMILY[_s] = "MolEdit"
for _s in MOLOPT_SUBTASKS:
    TASK_FAMILY[_s] = "MolOpt"
for _s in MOLCUSTOM_SUBTASKS:
    TASK_FAMILY[_s] = "MolCustom"

# Generation ranges: carbon count, other atom counts, and per-category
# bond counts.
CARBON_RANGE = (1, 40)
OTHER_ATOM_RANGE = (1, 5)
SINGLE_BOND_RANGE = (1, 50)
AROMATIC_BOND_RANGE = (5, 20)
OTHER_BOND_RANGE = (1, 5)
GROUP_COUNT_RANGE = (1, 5)


def bond_range(category: str) -> tuple[int, int]:
    if category == "single":
        return SINGLE_BOND_RANGE
    if category == "aromatic":
        return AROMATIC_BOND_RANGE
    return OTHER_BOND_RANGE


def atom_range(element_name: str) -> tuple[int, int]:
    return CARBON_RANGE if element_name == "carbon" else OTHER_ATOM_RANGE


@dataclass(frozen=True)
class AddGroup:
    group: str

    def to_json(self):
        return {"kind": "add_group", "group": self.group}


@dataclass(frozen=True)
class DelGroup:
    group: str

    def to_json(self):
        return {"kind": "del_group", "group": self.group}


@dataclass(frozen=True)
class SubGroup:
    source: str
    target: str

    def to_json(self):
        return {"kind": "sub_group", "source": self.source, "target": self.target}


@dataclass(frozen=True)
class OptimizeProperty:
    property: str   # LogP | MR | QED
    direction: str  # higher | lower

    def to_json(self):
        return {"kind": "optimize", "property": self.property,
                "direction": self.direction}


@dataclass(frozen=True)
class AtomCounts:
    counts: tuple[tuple[str, int], ...]  # element display name -> count

    def to_json(self):
        return {"kind": "atom_counts", "counts": dict(self.counts)}

    def validate(self):
        names = [n for n, _ in self.counts]
        if "carbon" not in names:
            raise ValueError("atom count requirements always include carbon")
        for name, count in self.counts:
            lo, hi = atom_range(name)
            if not lo <= count <= hi:
                raise ValueError(f"{name} count {count} outside [{lo}, {hi}]")


@dataclass(frozen=True)
class BondCounts:
    counts: tuple[tuple[str, int], ...]

    def to_json(self):
        return {"kind": "bond_counts", "counts": dict(self.counts)}

    def validate(self):
        for name, count in self.counts:
            lo, hi = bond_range(name)
            if not lo <= count <= hi:
                raise ValueError(f"{name} bond count {count} outside [{lo}, {hi}]")


@dataclass(frozen=True)
class GroupCounts:
    counts: tuple[tuple[str, int], ...]

    def to_json(self):
        return {"kind": "group_counts", "counts": dict(self.counts)}

    def validate(self):
        lo, hi = GROUP_COUNT_RANGE
        for name, count in self.counts:
            if not lo <= count <= hi:
                raise ValueError(f"{name} group count {count} outside [{lo}, {hi}]")


Requirement = (AddGroup | DelGroup | SubGroup | OptimizeProperty | AtomCounts
               | BondCounts | GroupCounts)


def requirement_from_json(obj: dict) -> Requirement:
    kind = obj["kind"]
    if kind == "add_group":
        return AddGroup(obj["group"])
    if kind == "del_group":
        return DelGroup(obj["group"])
    if kind == "sub_group":
        return SubGroup(obj["source"], obj["target"])
    if kind == "optimize":
        return OptimizeProperty(obj["property"], obj["direction"])
    if kind == "atom_counts":
        return AtomCounts(tuple(obj["counts"].items()))
    if kind == "bond_counts":
        return BondCounts(tuple(obj["counts"].items()))
    if kind == "group_counts":
        return GroupCounts(tuple(obj["counts"].items()))
    raise ValueError(f"unknown requirement kind {kind!r}")


@dataclass(frozen=True)
class TaskInstance:
    id: str
    subtask: str
    prompt: str
    requirement: Requirement
    source_smiles: str | None
    template_id: int
    seed_trace: str
    # Generation-time proof that the instance is satisfiable (a passing
    # answer); stored for audit, never shown to models.
    witness: str | None = None

    def to_json(self):
        obj = {
            "id": self.id,
            "subtask": self.subtask,
            "prompt": self.prompt,
            "requirement": self.requirement.to_json(),
            "template_id": self.template_id,
            "seed_trace": self.seed_trace,
        }
        if self.source_smiles is not None:
            obj["source_smiles"] = self.source_smiles
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj

    @staticmethod
    def from_json(obj: dict) -> "TaskInstance":
        return TaskInstance(
            id=obj["id"],
            subtask=obj["subtask"],
            prompt=obj["prompt"],
            requirement=requirement_from_json(obj["requirement"]),
            source_smiles=obj.get("source_smiles"),
            template_id=obj["template_id"],
            seed_trace=obj["seed_trace"],
            witness=obj.get("witness"),
        )


@dataclass(frozen=True)
class TrainingPair:
    id: str
    subtask: str
    instruction: str
    response: str
    provenance: dict

    def to_json(self):
        return {
            "id": self.id,
            "subtask": self.subtask,
            "instruction": self.instruction,
            "response": self.response,
            "provenance": self.provenance,
        }

    @staticmethod
    def from_json(obj: dict) -> "TrainingPair":
        return TrainingPair(obj["id"], obj["subtask"], obj["instruction"],
                            obj["response"], obj.get("provenance", {}))
