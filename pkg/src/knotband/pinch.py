"""Pinch sequences on torus knots and the Betti number of the traced surface."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd


@dataclass(frozen=True, order=True)
class TorusParams:
    """Unordered coprime pair normalized to p > q; q <= 1 is the unknot."""

    p: int
    q: int

    def __post_init__(self):
        p, q = abs(self.p), abs(self.q)
        if p < q:
            p, q = q, p
        if q <= 1:
            p, q = 1, 0
        elif gcd(p, q) != 1:
            raise ValueError(f"gcd({p},{q}) = {gcd(p, q)} != 1: not a torus knot")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def unknot(cls):
        return cls(1, 0)

    @property
    def is_unknot(self):
        return self.q == 0

    def render(self):
        return "U" if self.is_unknot else f"({self.p},{self.q})"


@dataclass
class SurfaceTrace:
    """Running ledger of the surface traced by successive band moves."""

    bands_applied: int = 0
    b1: int = 0
    nonorientable: bool = False
    history: list = field(default_factory=list)

    def record(self, band, coherence, summary):
        self.bands_applied += 1
        self.b1 += 1
        if coherence == "non-coherent":
            self.nonorientable = True
        self.history.append((band, summary))


def pinch_step(k):
    """One pinch on the standard diagram of T(p,q)."""
    if k.is_unknot:
        raise ValueError("cannot pinch the unknot")
    p, q = k.p, k.q
    t = (-pow(q, -1, p)) % p
    h = pow(p, -1, q) % q
    return TorusParams(abs(p - 2 * t), abs(q - 2 * h))


@dataclass
class PinchSequence:
    steps: list
    b1: int
    trace: SurfaceTrace

    def render(self):
        return "->".join(s.render() for s in self.steps)


def pinch_sequence(k):
    steps = [k]
    trace = SurfaceTrace()
    cur = k
    while not cur.is_unknot:
        nxt = pinch_step(cur)
        if nxt.p * nxt.q >= cur.p * cur.q and not nxt.is_unknot:
            raise AssertionError(f"pinch did not simplify {cur.render()} -> {nxt.render()}")
        trace.record(("pinch", cur), "non-coherent", nxt.render())
        steps.append(nxt)
        cur = nxt
    return PinchSequence(steps, trace.b1, trace)


def batson_table(p_max, q_max):
    """Rows (p, q, b1, sequence) over coprime p > q >= 2, lexicographic."""
    if p_max < 2 or q_max < 2:
        raise ValueError("table bounds must be >= 2")
    rows = []
    for p in range(2, p_max + 1):
        for q in range(2, min(q_max, p - 1) + 1):
            if gcd(p, q) != 1:
                continue
            seq = pinch_sequence(TorusParams(p, q))
            rows.append((p, q, seq.b1, seq))
    return rows


def table_lines(rows):
    return [f"{p} {q} {b1} seq={seq.render()}" for p, q, b1, seq in rows]


def table_text(rows):
    lines = [f"{'p':>4} {'q':>4} {'b1':>3}  sequence"]
    for p, q, b1, seq in rows:
        lines.append(f"{p:>4} {q:>4} {b1:>3}  {seq.render()}")
    return "\n".join(lines)
