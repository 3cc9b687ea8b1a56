"""Band enumeration and invariant-pruned search for a target profile."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor, TimeoutError
from dataclasses import dataclass, field, fields

from .alexander import wirtinger_determinant
from .bracket import ResourceError, jones
from .diagram import DiagramError, canonical_code, orient, parse_pd
from .pinch import SurfaceTrace
from .profile import (InvariantProfile, alexander_from_seifert, fox_milnor_test,
                      symmetrized_invariants)
from .seifert import seifert_matrix
from .simplify import simplify
from .surgery import BandError, BandSpec, attach_band, trace_band

STAGES = ("coherence", "determinant", "signature", "arf", "alexander", "jones")
CONFIG_ENV = "KNOTBAND_CONFIG"
# deeper R3 lookahead costs ~20x per level and rarely helps surgered torus diagrams
SEARCH_R3_DEPTH = 1


@dataclass(frozen=True)
class SearchBudget:
    path_len: int = 2
    twists: int = 2
    max_crossings: int = 80
    max_width: int = 24
    workers: int = 1
    time_limit_s: float = 3600.0

    def __post_init__(self):
        if self.path_len < 0 or self.twists < 0:
            raise ValueError("path_len and twists must be non-negative")
        for name in ("max_crossings", "max_width", "workers", "time_limit_s"):
            if getattr(self, name) <= 0:
                raise ValueError(f"budget field {name} must be positive")

    @classmethod
    def parse(cls, text):
        kinds = {f.name: f.type for f in fields(cls)}
        vals = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            if not sep or key not in kinds:
                raise ValueError(f"bad budget line {raw!r}")
            vals[key] = float(value) if key == "time_limit_s" else int(value)
        return cls(**vals)

    @classmethod
    def load(cls, path=None):
        path = path or os.environ.get(CONFIG_ENV)
        if not path:
            return cls()
        with open(path) as fh:
            return cls.parse(fh.read())

    def render(self):
        return "\n".join(f"{f.name} = {getattr(self, f.name)}" for f in fields(self))


# -- enumeration ------------------------------------------------------------

def _sites_of_face(od, face):
    """(edge, side) pairs whose side faces ``face``, in edge order."""
    out = []
    for e in od.all_edges():
        for side in ("L", "R"):
            if od.face_of(e, side) == face:
                out.append((e, side))
    return out


def _chains(od, start_face, length):
    """Face chains of exactly ``length`` edge crossings, no face revisited."""
    if length == 0:
        yield (), start_face
        return
    edges = od.all_edges()

    def rec(face, visited, path):
        if len(path) == length:
            yield tuple(path), face
            return
        for c in edges:
            lf, rf = od.left_face(c), od.right_face(c)
            if lf == rf:
                continue
            if lf == face:
                nxt = rf
            elif rf == face:
                nxt = lf
            else:
                continue
            if nxt in visited:
                continue
            path.append(c)
            yield from rec(nxt, visited | {nxt}, path)
            path.pop()

    yield from rec(start_face, {start_face}, [])


def resolve_band(od, band):
    """The same band with both attach sides made explicit."""
    geo = trace_band(od, band)
    (e1, p1, _), (e2, p2, _) = band.attach1, band.attach2
    return BandSpec((e1, p1, geo.side1), (e2, p2, geo.side2), band.path, band.twists)


def band_key(band, od=None):
    """Canonical key: the smaller of the band and its reverse (sides resolved
    against ``od`` when given)."""
    if od is not None:
        band = resolve_band(od, band)

    def one(b):
        return (b.attach1, b.attach2, b.path, b.twists)

    rev = BandSpec(band.attach2, band.attach1, tuple(reversed(band.path)), band.twists)
    return min(one(band), one(rev))


def _raw_bands(od, budget):
    faces = sorted({od.face_of(e, s) for e in od.all_edges() for s in "LR"}, key=repr)
    sites = {f: _sites_of_face(od, f) for f in faces}
    twist_range = sorted(range(-budget.twists, budget.twists + 1), key=lambda w: (abs(w), w))
    for length in range(budget.path_len + 1):
        for f0 in faces:
            for crossed, f1 in _chains(od, f0, length):
                for e1, s1 in sites[f0]:
                    for e2, s2 in sites[f1]:
                        if e1 in crossed or e2 in crossed:
                            continue
                        if e1 == e2:
                            if length or s1 != s2:
                                continue
                            a1, a2 = (e1, 1 / 3, s1), (e2, 2 / 3, s2)
                        else:
                            a1, a2 = (e1, 0.5, s1), (e2, 0.5, s2)
                        for flags in _flag_words(length):
                            path = tuple(zip(crossed, flags))
                            for w in twist_range:
                                yield BandSpec(a1, a2, path, w)


def _candidates(od, budget):
    """(band, surgered diagram, coherence), deduplicated by band key and by
    the canonical code of the surgered diagram."""
    seen_keys, seen_codes = set(), set()
    for band in _raw_bands(od, budget):
        key = band_key(band)
        if key in seen_keys:
            continue
        seen_keys.add(key)
        try:
            d, coherence = attach_band(od, band)
        except (BandError, DiagramError):
            continue
        code = (coherence, canonical_code(d))
        if code in seen_codes:
            continue
        seen_codes.add(code)
        yield band, d, coherence


def enumerate_bands(od, budget):
    """Deterministic stream of distinct candidate bands within the budget."""
    if not hasattr(od, "base"):
        od = orient(od)
    for band, _, _ in _candidates(od, budget):
        yield band


def _flag_words(n):
    if n == 0:
        yield ()
        return
    for rest in _flag_words(n - 1):
        for f in ("over", "under"):
            yield rest + (f,)


# -- evaluation -------------------------------------------------------------

@dataclass
class SearchResult:
    band: BandSpec
    source: str
    profile: InvariantProfile
    stage: str
    trace: SurfaceTrace
    diagram: object = None


@dataclass
class SearchReport:
    results: list = field(default_factory=list)
    examined: int = 0
    stage_counts: dict = field(default_factory=dict)
    complete: bool = True
    elapsed_s: float = 0.0

    def deepest_stage(self):
        best = None
        for s in STAGES:
            if self.stage_counts.get(s):
                best = s
        return best


def evaluate_band(od, band, target, budget, stages=STAGES, surgered=None):
    """Run the pruning cascade on one candidate.

    Returns (stage_passed, result_or_None); ``stage_passed`` is the last
    cascade stage survived, or "rejected" for bands stopped at the first one.
    """
    if surgered is None:
        try:
            surgered = attach_band(od, band)
        except (BandError, DiagramError):
            return "rejected", None
    d, coherence = surgered
    rod = orient(d)
    # a coherent band on a knot always yields a two-component link
    if "coherence" in stages and (coherence == "coherent" or rod.component_count != 1):
        return "rejected", None
    if rod.component_count != 1:
        return "coherence", None
    small = simplify(d, r3_depth=SEARCH_R3_DEPTH)
    if small.crossing_count > budget.max_crossings:
        return "coherence", None
    sod = orient(small)
    if "determinant" in stages and wirtinger_determinant(sod) != target.determinant:
        return "coherence", None
    try:
        v = seifert_matrix(sod)
    except DiagramError:
        return "determinant", None
    det, sig, arf = symmetrized_invariants(sod, v)
    if "signature" in stages and sig != target.signature:
        return "determinant", None
    if "arf" in stages and arf != target.arf:
        return "signature", None
    alex = alexander_from_seifert(v)
    if "alexander" in stages and alex != target.alexander:
        return "arf", None
    try:
        jon = jones(sod, max_width=budget.max_width)
    except ResourceError:
        return "alexander", None
    prof = InvariantProfile(det, sig, arf, alex, jon, fox_milnor_test(alex), d.crossing_count)
    if not prof.matches(target):
        return "alexander", None
    trace = SurfaceTrace()
    trace.record(band, coherence, f"{d.crossing_count} crossings")
    return "jones", SearchResult(band, "", prof, "jones", trace, d)


def _run_chunk(args):
    pd_text, bands_text, target_text, budget, stages = args
    od = orient(parse_pd(pd_text))
    target = InvariantProfile.parse(target_text)
    out = []
    for bt in bands_text:
        stage, res = evaluate_band(od, BandSpec.parse(bt), target, budget, stages)
        out.append((bt, stage, res.profile.render() if res else None))
    return out


def _stage_index(stage):
    return -1 if stage == "rejected" else STAGES.index(stage)


def search_to_profile(od, target, budget, source="", stages=STAGES, chunk=64,
                      first_only=False):
    """All bands within ``budget`` whose surgered knot has ``target``'s profile."""
    if not hasattr(od, "base"):
        od = orient(od)
    start = time.monotonic()
    report = SearchReport()
    matched = []

    def take(band, stage, prof_text):
        report.examined += 1
        for s in STAGES[: _stage_index(stage) + 1]:
            report.stage_counts[s] = report.stage_counts.get(s, 0) + 1
        if prof_text is not None:
            matched.append(band)

    def out_of_time():
        return time.monotonic() - start > budget.time_limit_s

    if budget.workers <= 1:
        # lazy, so the time limit also bounds enumeration
        cands = _candidates(od, budget)
        for band, d, coherence in cands:
            if out_of_time():
                report.complete = False
                break
            stage, res = evaluate_band(od, band, target, budget, stages, (d, coherence))
            take(band, stage, res.profile.render() if res else None)
            if first_only and matched:
                report.complete = next(cands, None) is None
                break
    else:
        bands = []
        for band, _, _ in _candidates(od, budget):
            if out_of_time():
                report.complete = False
                break
            bands.append(band)
        pd_text = od.base.render()
        target_text = target.render()
        jobs = [bands[i:i + chunk] for i in range(0, len(bands), chunk)]
        with ProcessPoolExecutor(max_workers=budget.workers) as pool:
            futures = [pool.submit(_run_chunk, (pd_text, [b.render() for b in job],
                                                target_text, budget, stages))
                       for job in jobs]
            for job, fut in zip(jobs, futures):
                remaining = budget.time_limit_s - (time.monotonic() - start)
                if remaining <= 0 or (first_only and matched):
                    report.complete = False
                    break
                try:
                    rows = fut.result(timeout=remaining)
                except TimeoutError:
                    report.complete = False
                    break
                for band, (_, stage, prof_text) in zip(job, rows):
                    take(band, stage, prof_text)
            for fut in futures:
                fut.cancel()
    # recompute each match from scratch; also supplies the diagram
    for band in sorted(matched, key=band_key):
        stage, res = evaluate_band(od, band, target, budget, ())
        if res is None:
            raise AssertionError(f"match {band.render()} did not reproduce")
        res.source = source
        report.results.append(res)
    report.elapsed_s = time.monotonic() - start
    return report
