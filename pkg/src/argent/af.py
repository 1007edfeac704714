"""Abstract argumentation frameworks: apx parsing, stable semantics, acceptance.

Extension enumeration runs on the bitmask kernels from :mod:`argent.kernels`;
:func:`is_stable` is an independent set-based check and doubles as a
cross-validation of kernel output when extension sets are constructed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .errors import ParseError, ResourceLimitError, UnknownArgumentError
from .prop import ID_PATTERN


@dataclass(frozen=True)
class ArgumentationFramework:
    """Directed attack graph over named arguments."""

    arguments: tuple[str, ...]
    attacks: frozenset[tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "arguments", tuple(self.arguments))
        object.__setattr__(self, "attacks", frozenset(self.attacks))
        seen = set()
        for arg in self.arguments:
            if not ID_PATTERN.match(arg):
                raise ValueError(f"bad argument identifier: {arg!r}")
            if arg in seen:
                raise ValueError(f"duplicate argument: {arg!r}")
            seen.add(arg)
        for src, tgt in self.attacks:
            if src not in seen or tgt not in seen:
                raise UnknownArgumentError(f"attack ({src},{tgt}) uses an undeclared argument")

    def index(self, arg: str) -> int:
        try:
            return self.arguments.index(arg)
        except ValueError:
            raise UnknownArgumentError(f"unknown argument: {arg!r}") from None

    def pair_key(self, pair: tuple[str, str]) -> tuple[int, int]:
        return (self.index(pair[0]), self.index(pair[1]))

    def sorted_attacks(self) -> list[tuple[str, str]]:
        return sorted(self.attacks, key=self.pair_key)


_ARG_STMT = re.compile(r"arg\s*\(\s*([a-z][a-zA-Z0-9_]*)\s*\)\s*\.")
_ATT_STMT = re.compile(r"att\s*\(\s*([a-z][a-zA-Z0-9_]*)\s*,\s*([a-z][a-zA-Z0-9_]*)\s*\)\s*\.")


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    last = text.rfind("\n", 0, pos)
    return line, pos - last


def parse_af(text: str) -> ArgumentationFramework:
    """Parse apx-style text: `arg(<id>).` and `att(<id>,<id>).` statements."""
    stripped = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    arguments: list[str] = []
    attacks: list[tuple[str, str]] = []
    pos = 0
    n = len(stripped)
    while pos < n:
        if stripped[pos] in " \t\r\n":
            pos += 1
            continue
        m = _ARG_STMT.match(stripped, pos)
        if m:
            arguments.append(m.group(1))
            pos = m.end()
            continue
        m = _ATT_STMT.match(stripped, pos)
        if m:
            attacks.append((m.group(1), m.group(2)))
            pos = m.end()
            continue
        line, col = _line_col(stripped, pos)
        raise ParseError("expected arg(...). or att(...,...).", line, col)
    if len(set(arguments)) != len(arguments):
        raise ParseError("duplicate arg(...) declaration")
    declared = set(arguments)
    for src, tgt in attacks:
        if src not in declared or tgt not in declared:
            raise UnknownArgumentError(f"att({src},{tgt}) uses an undeclared argument")
    return ArgumentationFramework(tuple(arguments), frozenset(attacks))


def format_af(af: ArgumentationFramework) -> str:
    lines = [f"arg({a})." for a in af.arguments]
    lines += [f"att({s},{t})." for s, t in af.sorted_attacks()]
    return "\n".join(lines)


def is_stable(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    """Set-based stability check: conflict-free and attacking every outsider."""
    members = set(s)
    for arg in members:
        if arg not in af.arguments:
            raise UnknownArgumentError(f"unknown argument: {arg!r}")
    for src, tgt in af.attacks:
        if src in members and tgt in members:
            return False
    for arg in af.arguments:
        if arg in members:
            continue
        if not any((src, arg) in af.attacks for src in members):
            return False
    return True


def attacker_masks(af: ArgumentationFramework) -> list[int]:
    idx = {a: i for i, a in enumerate(af.arguments)}
    masks = [0] * len(af.arguments)
    for src, tgt in af.attacks:
        masks[idx[tgt]] |= 1 << idx[src]
    return masks


def _guard_size(af: ArgumentationFramework) -> None:
    if len(af.arguments) > kernels.MAX_ARGUMENTS:
        raise ResourceLimitError(
            f"{len(af.arguments)} arguments exceed the enumeration limit "
            f"of {kernels.MAX_ARGUMENTS}"
        )


def _mask_to_set(af: ArgumentationFramework, mask: int) -> frozenset[str]:
    return frozenset(a for i, a in enumerate(af.arguments) if (mask >> i) & 1)


@dataclass(frozen=True)
class ExtensionSet:
    """Stable extensions of one framework; each member re-checked on construction."""

    af: ArgumentationFramework
    extensions: tuple[frozenset[str], ...]

    def __post_init__(self):
        for ext in self.extensions:
            if not is_stable(self.af, ext):
                raise ValueError(f"not a stable extension: {sorted(ext)}")

    def __iter__(self):
        return iter(self.extensions)

    def __len__(self):
        return len(self.extensions)

    def as_sets(self) -> set[frozenset[str]]:
        return set(self.extensions)


@dataclass(frozen=True)
class AcceptanceReport:
    """Skeptically accepted arguments; `vacuous` marks the no-extension case,
    in which every argument counts as accepted."""

    accepted: frozenset[str]
    vacuous: bool


def stable_extensions(af: ArgumentationFramework) -> ExtensionSet:
    """All stable extensions, enumerated over subset masks in ascending order."""
    _guard_size(af)
    masks = kernels.stable_masks(attacker_masks(af), len(af.arguments))
    return ExtensionSet(af, tuple(_mask_to_set(af, m) for m in masks))


def skeptical_accepted(af: ArgumentationFramework) -> AcceptanceReport:
    """Intersection of all stable extensions, with the vacuous convention."""
    _guard_size(af)
    acc_mask, vacuous = kernels.acceptance_mask(attacker_masks(af), len(af.arguments))
    return AcceptanceReport(_mask_to_set(af, acc_mask), vacuous)


def format_extension(af: ArgumentationFramework, ext: Iterable[str]) -> str:
    members = set(ext)
    return "{" + ",".join(a for a in af.arguments if a in members) + "}"


def format_pair_set(af: ArgumentationFramework, pairs: Iterable[tuple[str, str]]) -> str:
    ordered = sorted(pairs, key=af.pair_key)
    return "{" + ",".join(f"({s},{t})" for s, t in ordered) + "}"
