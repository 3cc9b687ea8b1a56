"""Braid words, torus braids and their permutations."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    """Word in Artin generators; letter ``i`` is sigma_|i| with sign of ``i``."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError(f"strand count must be positive, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0:
                raise BraidError("braid letter 0 is not a generator")
            if not 1 <= abs(x) < self.strands:
                raise BraidError(
                    f"letter {x} out of range for {self.strands} strands")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        if other.strands != self.strands:
            raise BraidError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def mirror(self):
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def render(self):
        return f"{self.strands}: " + " ".join(str(x) for x in self.letters)

    @classmethod
    def parse(cls, text):
        """Parse ``"4: 1 2 3 ..."`` (the colon after the strand count is optional)."""
        tokens = text.replace(":", " ").replace(",", " ").split()
        if not tokens:
            raise BraidError("empty braid text")
        try:
            nums = [int(tok) for tok in tokens]
        except ValueError as exc:
            raise BraidError(f"non-integer token in braid text: {exc}") from None
        return cls(nums[0], tuple(nums[1:]))


@dataclass(frozen=True)
class Permutation:
    """Bijection on 1..n stored as its image list."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i):
        return self.images[i - 1]

    def then(self, other):
        """Apply self first, then other."""
        return Permutation(tuple(other(self(i)) for i in range(1, len(self.images) + 1)))

    def cycles(self):
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def cycle_count(self):
        return len(self.cycles())


def torus_braid(p, q):
    """(sigma_1 ... sigma_{q-1})^p on q strands; its closure is T(p,q)."""
    if p < 2 or q < 2:
        raise BraidError(f"torus parameters must be >= 2, got ({p},{q})")
    if gcd(p, q) != 1:
        raise BraidError(f"gcd({p},{q}) = {gcd(p, q)} != 1: not a knot")
    return BraidWord(q, tuple(range(1, q)) * p)


def braid_permutation(b):
    """Position permutation of ``b``: strand starting at position i ends at image i."""
    pos = list(range(1, b.strands + 1))  # pos[k] = strand currently at position k+1
    for x in b.letters:
        i = abs(x) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    images = [0] * b.strands
    for k, strand in enumerate(pos):
        images[strand - 1] = k + 1
    return Permutation(tuple(images))


def closure(b):
    """PD code of the closure of ``b``.

    The braid runs left to right with strand 1 at the bottom; closure arcs
    return around the outside.  Crossing k corresponds to letter k, so the
    crossing order is a sweep of the braid.
    """
    from .diagram import PlanarDiagram

    n = b.strands
    counter = 0

    def new():
        nonlocal counter
        counter += 1
        return counter

    start = [new() for _ in range(n)]
    cur = list(start)
    crossings = []
    for x in b.letters:
        i = abs(x) - 1
        lower_in, upper_in = cur[i], cur[i + 1]
        out_i, out_up = new(), new()
        if x > 0:
            crossings.append([lower_in, out_i, out_up, upper_in])
        else:
            crossings.append([upper_in, lower_in, out_i, out_up])
        cur[i], cur[i + 1] = out_i, out_up
    subst = {fin: st for fin, st in zip(cur, start) if fin != st}
    loops = sum(1 for fin, st in zip(cur, start) if fin == st)
    raw = [[subst.get(e, e) for e in c] for c in crossings]
    # compact labels in order of first appearance
    relabel = {}
    for c in raw:
        for e in c:
            relabel.setdefault(e, len(relabel) + 1)
    arcs = tuple(relabel.get(st) for st in start)
    pd = tuple(tuple(relabel[e] for e in c) for c in raw)
    return PlanarDiagram(pd, loops, closure_arcs=arcs, braid=b)
