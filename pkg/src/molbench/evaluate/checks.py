"""The three structural testing processes.

Editing: the named group's count must move by exactly one (add), minus
one (delete), or both at once (substitute). Optimization: the recomputed
property must move strictly in the requested direction; equality fails.
Customized generation: every specified count must match exactly;
unspecified features are unconstrained.
"""

from __future__ import annotations

from molbench.chem import bond_counts, heavy_atom_counts
from molbench.chem.counts import NAME_TO_SYMBOL
from molbench.chem.model import Molecule
from molbench.descriptors import PROPERTY_FUNCTIONS
from molbench.patterns import GroupRegistry, default_registry
from molbench.taskgen.requirements import (
    AddGroup,
    AtomCounts,
    BondCounts,
    DelGroup,
    GroupCounts,
    OptimizeProperty,
    SubGroup,
)


def check_moledit(original: Molecule, generated: Molecule, requirement,
                  registry: GroupRegistry | None = None) -> bool:
    registry = registry or default_registry()
    if isinstance(requirement, AddGroup):
        return (registry.count_group(generated, requirement.group)
                == registry.count_group(original, requirement.group) + 1)
    if isinstance(requirement, DelGroup):
        return (registry.count_group(generated, requirement.group)
                == registry.count_group(original, requirement.group) - 1)
    if isinstance(requirement, SubGroup):
        removed = (registry.count_group(generated, requirement.source)
                   == registry.count_group(original, requirement.source) - 1)
        added = (registry.count_group(generated, requirement.target)
                 == registry.count_group(original, requirement.target) + 1)
        return removed and added
    raise TypeError(f"not an editing requirement: {requirement!r}")


def check_molopt(original: Molecule, generated: Molecule,
                 requirement: OptimizeProperty) -> bool:
    fn = PROPERTY_FUNCTIONS[requirement.property]
    before = fn(original)
    after = fn(generated)
    if requirement.direction == "higher":
        return after > before
    return after < before


def check_molcustom(generated: Molecule, requirement,
                    registry: GroupRegistry | None = None) -> bool:
    registry = registry or default_registry()
    if isinstance(requirement, AtomCounts):
        actual = heavy_atom_counts(generated)
        for name, want in requirement.counts:
            if actual.get(NAME_TO_SYMBOL[name], 0) != want:
                return False
        return True
    if isinstance(requirement, BondCounts):
        actual = bond_counts(generated)
        for name, want in requirement.counts:
            if actual.get(name, 0) != want:
                return False
        return True
    if isinstance(requirement, GroupCounts):
        for name, want in requirement.counts:
            if registry.count_group(generated, name) != want:
                return False
        return True
    raise TypeError(f"not a customization requirement: {requirement!r}")
