"""Exhaustive agreement check between the independent membership tests.

For each graph four verdicts are computed: obstruction minors, the case
analysis classifier (with its certificate re-verified), a direct search for
an outerplanar, wheel or prism witness, and the drawing oracle.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .generate import graphs_up_to
from .graph import CapacityError, Graph, to_graph6
from .oracle import exists_nonseparating_drawing
from .structure import classify, is_member, structural_witness

MAX_CONNECTED = 7
MAX_DISCONNECTED = 6


@dataclass(frozen=True)
class Verdicts:
    graph6: str
    n: int
    classifier: bool
    minor: bool
    structural: bool
    oracle: bool
    variant: str | None
    case: str
    seconds: tuple[float, float, float, float]

    @property
    def agree(self) -> bool:
        return self.classifier == self.minor == self.structural == self.oracle


@dataclass
class CrosscheckReport:
    n: int
    total: int = 0
    members: int = 0
    counts: Counter = field(default_factory=Counter)
    cases: Counter = field(default_factory=Counter)
    mismatches: list[Verdicts] = field(default_factory=list)
    elapsed: dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self, stable: bool = False) -> dict:
        verdict = lambda b: "member" if b else "non-member"  # noqa: E731
        out = {
            "n": self.n,
            "graphs": self.total,
            "members": self.members,
            "counts": dict(sorted(self.counts.items())),
            "cases": dict(sorted(self.cases.items())),
            "mismatches": [
                {
                    "graph6": v.graph6,
                    "classifier": verdict(v.classifier),
                    "minor": verdict(v.minor),
                    "structural": verdict(v.structural),
                    "oracle": verdict(v.oracle),
                }
                for v in self.mismatches
            ],
            "ok": self.ok,
        }
        if not stable:
            out["elapsed"] = {k: round(s, 3) for k, s in self.elapsed.items()}
        return out


def check_graph(g: Graph, inject_fault: bool = False) -> Verdicts:
    t0 = time.perf_counter()
    c = classify(g)
    t1 = time.perf_counter()
    minor = is_member(g)
    t2 = time.perf_counter()
    structural = structural_witness(g) is not None
    t3 = time.perf_counter()
    oracle = exists_nonseparating_drawing(g) is not None
    t4 = time.perf_counter()
    classifier = c.is_member
    variant = None if not classifier else c.certificate.to_json()["type"]
    if inject_fault and variant == "wheel":
        classifier = False  # harness self-test: a deliberately wrong classifier
    return Verdicts(
        to_graph6(g), g.n, classifier, minor, structural, oracle, variant, c.case,
        (t1 - t0, t2 - t1, t3 - t2, t4 - t3),
    )


def _check(args: tuple[Graph, bool]) -> Verdicts:
    return check_graph(*args)


def run_crosscheck(
    graphs: Iterable[Graph], n: int, jobs: int = 1, inject_fault: bool = False
) -> CrosscheckReport:
    report = CrosscheckReport(n)
    tasks = [(g, inject_fault) for g in graphs]
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check, tasks, chunksize=16))
    else:
        results = [_check(t) for t in tasks]
    stage = [0.0] * 4
    for v in results:
        report.total += 1
        if v.classifier:
            report.members += 1
            report.counts[v.variant] += 1
        report.cases[v.case] += 1
        if not v.agree:
            report.mismatches.append(v)
        for i, s in enumerate(v.seconds):
            stage[i] += s
    report.elapsed = dict(zip(("classifier", "minor", "structural", "oracle"), stage))
    report.elapsed["wall"] = time.perf_counter() - start
    return report


def corpus(n_max: int, include_disconnected: bool = False) -> list[Graph]:
    limit = MAX_DISCONNECTED if include_disconnected else MAX_CONNECTED
    if n_max > limit:
        kind = "with disconnected graphs" if include_disconnected else "for connected graphs"
        raise CapacityError(f"crosscheck {kind} is limited to n <= {limit}, got {n_max}")
    return graphs_up_to(n_max, connected=not include_disconnected)
