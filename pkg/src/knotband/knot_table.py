"""Bundled small-knot table with golden invariant profiles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .diagram import orient, parse_pd
from .profile import ConsistencyError, InvariantProfile, invariant_profile


@dataclass(frozen=True)
class KnotTableEntry:
    name: str
    pd: str
    profile: InvariantProfile

    def diagram(self):
        return parse_pd(self.pd)


def _parse_table(text):
    entries = []
    name, body = None, []

    def flush():
        if name is None:
            return
        pd = next(line[3:].strip() for line in body if line.startswith("pd:"))
        prof = InvariantProfile.parse("\n".join(l for l in body if not l.startswith("pd:")))
        entries.append(KnotTableEntry(name, pd, prof))

    for line in text.splitlines():
        if line.startswith("#"):
            continue
        if line.startswith("[") and line.rstrip().endswith("]"):
            flush()
            name, body = line.strip()[1:-1], []
        elif line.strip() and name is not None:
            body.append(line)
    flush()
    return entries


def self_check(entries):
    for ent in entries:
        got = invariant_profile(orient(ent.diagram()))
        if got != ent.profile:
            raise ConsistencyError(
                f"bundled knot {ent.name}: recomputed profile differs from golden\n"
                f"{got.render()}\n--- expected ---\n{ent.profile.render()}")


@lru_cache(maxsize=1)
def load_table():
    """Entries keyed by name; the golden profiles are re-verified on load."""
    text = resources.files("knotband").joinpath("data/knots.txt").read_text()
    entries = _parse_table(text)
    self_check(entries)
    return {e.name: e for e in entries}


def get(name):
    table = load_table()
    if name not in table:
        raise KeyError(f"unknown bundled knot {name!r}; known: {', '.join(table)}")
    return table[name]
