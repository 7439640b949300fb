"""Random staircase corpus for checking the pole criterion end to end.

Every instance gets its own random stream, drawn from the master seed before
any work starts, so results do not depend on the order in which workers
finish.
"""

import asyncio
import logging
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, List, Optional, Set

from pydantic import BaseModel

from ..config import Settings, settings as default_settings
from ..criterion import nondegeneracy_check, verify_criterion
from ..geometry import Point, SupportPoint, build_polygon, staircase_vertices
from .parser import render_polynomial

logger = logging.getLogger(__name__)


def _setting(name: str) -> Any:
    return field(default_factory=lambda: getattr(default_settings, name))


@dataclass
class CorpusConfig:
    """Configuration for a corpus run; unset fields come from the global settings."""

    seed: int = _setting("corpus_seed")
    count: int = _setting("corpus_count")
    max_vertices: int = _setting("corpus_max_vertices")
    max_coordinate: int = _setting("corpus_max_coordinate")
    coefficients: List[Fraction] = _setting("coefficient_choices")
    extra_points: int = _setting("corpus_extra_points")
    max_resamples: int = _setting("corpus_max_resamples")
    workers: int = _setting("corpus_workers")

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.max_vertices < 1 or self.max_coordinate < 1:
            raise ValueError("max_vertices and max_coordinate must be positive")
        if not self.coefficients or any(c == 0 for c in self.coefficients):
            raise ValueError("coefficients must be nonzero")

    @classmethod
    def from_settings(cls, config: Optional[Settings] = None, **overrides) -> "CorpusConfig":
        """Config from ``config`` (the global settings by default); None overrides are ignored."""
        config = config or default_settings
        values = dict(
            seed=config.corpus_seed,
            count=config.corpus_count,
            max_vertices=config.corpus_max_vertices,
            max_coordinate=config.corpus_max_coordinate,
            coefficients=config.coefficient_choices,
            extra_points=config.corpus_extra_points,
            max_resamples=config.corpus_max_resamples,
            workers=config.corpus_workers,
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


def _hull_vertices(rng: random.Random, config: CorpusConfig) -> List[Point]:
    bound = min(rng.choice([4, 8, 15, config.max_coordinate]), config.max_coordinate)
    target = rng.randint(1, config.max_vertices)
    points: Set[Point] = set()
    for _ in range(target + rng.randint(0, 2)):
        points.add((rng.randint(0, bound), rng.randint(0, bound)))
    if rng.random() < 0.5:
        points.add((0, rng.randint(1, bound)))
    if rng.random() < 0.5:
        points.add((rng.randint(1, bound), 0))
    if rng.random() < 0.2:
        points.add((1, rng.randint(1, bound)))
    if rng.random() < 0.2:
        points.add((rng.randint(1, bound), 1))
    points.discard((0, 0))
    if not points:
        points.add((rng.randint(1, bound), 0))
    vertices = staircase_vertices(points)
    if len(vertices) > config.max_vertices:
        start = rng.randint(0, len(vertices) - config.max_vertices)
        vertices = vertices[start:start + config.max_vertices]
    return vertices


def _extra_points(rng: random.Random, vertices: List[Point], config: CorpusConfig) -> Set[Point]:
    extras: Set[Point] = set()
    edges = list(zip(vertices, vertices[1:]))
    for _ in range(rng.randint(0, config.extra_points)):
        if edges and rng.random() < 0.5:
            (k, l), (m, n) = rng.choice(edges)
            g = math.gcd(m - k, l - n)
            if g > 1:
                i = rng.randint(1, g - 1)
                extras.add((k + i * (m - k) // g, l + i * (n - l) // g))
            continue
        x, y = rng.choice(vertices)
        point = (x + rng.randint(1, 3), y + rng.randint(1, 3))
        if max(point) <= config.max_coordinate:
            extras.add(point)
    return extras


def random_staircase(rng: random.Random, config: CorpusConfig) -> List[SupportPoint]:
    """A random nondegenerate support with a staircase of 1 to max_vertices vertices.

    Coefficients are resampled while some edge is degenerate; after
    ``max_resamples`` attempts the points inside edges are dropped, which
    always leaves a nondegenerate polynomial.
    """
    vertices = _hull_vertices(rng, config)
    points = sorted(set(vertices) | _extra_points(rng, vertices, config))

    for _ in range(config.max_resamples):
        support = [SupportPoint(x, y, rng.choice(config.coefficients)) for x, y in points]
        if nondegeneracy_check(support, build_polygon(support)).nondegenerate:
            return support
    logger.debug(f"Dropping edge points of {points} after {config.max_resamples} resamples")
    polygon = build_polygon(SupportPoint(x, y) for x, y in points)
    on_edges = {p for f in polygon.facets if f.is_compact for p in polygon.lattice_points(f)}
    kept = [p for p in points if p in set(vertices) or p not in on_edges]
    return [SupportPoint(x, y, rng.choice(config.coefficients)) for x, y in kept]


@dataclass
class InstanceResult:
    """Outcome of one corpus instance; plain data so it crosses process boundaries."""

    index: int
    polynomial: str
    agree: bool
    residue_checks: int
    residues_match: bool
    low_candidates: int
    details: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.agree and self.residues_match


def check_instance(index: int, sub_seed: int, config: CorpusConfig) -> InstanceResult:
    """Draw one staircase from ``sub_seed`` and verify the criterion on it."""
    rng = random.Random(sub_seed)
    support = random_staircase(rng, config)
    verdict = verify_criterion(support)
    result = InstanceResult(
        index=index,
        polynomial=render_polynomial(support),
        agree=verdict.agree,
        residue_checks=len(verdict.residue_checks),
        residues_match=verdict.residues_match,
        low_candidates=len(verdict.low_candidates),
    )
    if not result.ok:
        result.details = verdict.details()
    return result


class Counterexample(BaseModel):
    index: int
    polynomial: str
    details: List[str]


class CorpusSummary(BaseModel):
    seed: int
    count: int
    agreements: int
    residue_checks: int
    residue_mismatches: int
    low_candidate_instances: int
    counterexamples: List[Counterexample]

    @property
    def ok(self) -> bool:
        return self.agreements == self.count and self.residue_mismatches == 0


def summarize(config: CorpusConfig, results: List[InstanceResult]) -> CorpusSummary:
    """Merge results in instance order."""
    ordered = sorted(results, key=lambda r: r.index)
    return CorpusSummary(
        seed=config.seed,
        count=config.count,
        agreements=sum(1 for r in ordered if r.agree),
        residue_checks=sum(r.residue_checks for r in ordered),
        residue_mismatches=sum(1 for r in ordered if not r.residues_match),
        low_candidate_instances=sum(1 for r in ordered if r.low_candidates),
        counterexamples=[
            Counterexample(index=r.index, polynomial=r.polynomial, details=r.details)
            for r in ordered if not r.ok
        ],
    )


def instance_seeds(seed: int, count: int) -> List[int]:
    """One 64-bit sub-seed per instance, drawn in order from the master seed."""
    rng = random.Random(seed)
    return [rng.getrandbits(64) for _ in range(count)]


async def run_corpus_async(config: CorpusConfig) -> CorpusSummary:
    """Check ``config.count`` random instances, in worker processes when asked."""
    seeds = instance_seeds(config.seed, config.count)
    logger.info(f"Corpus: {config.count} instances, seed {config.seed}, {config.workers} worker(s)")

    if config.workers > 1:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            futures = [
                loop.run_in_executor(pool, check_instance, i, s, config)
                for i, s in enumerate(seeds)
            ]
            results = list(await asyncio.gather(*futures))
    else:
        results = []
        for i, s in enumerate(seeds):
            results.append(check_instance(i, s, config))
            if (i + 1) % 100 == 0:
                logger.info(f"Corpus progress: {i + 1}/{config.count}")
                await asyncio.sleep(0)

    summary = summarize(config, results)
    if summary.counterexamples:
        logger.error(f"{len(summary.counterexamples)} corpus instance(s) failed")
    return summary


def run_corpus(seed: int, count: int, config: Optional[CorpusConfig] = None) -> CorpusSummary:
    """Synchronous entry point; ``seed`` and ``count`` override ``config``."""
    base = config or CorpusConfig.from_settings()
    return asyncio.run(run_corpus_async(replace(base, seed=seed, count=count)))


def format_summary(summary: CorpusSummary) -> str:
    """Text summary ending in OK or FAILED."""
    lines = [
        f"seed {summary.seed}, {summary.count} instances",
        f"criterion agreement: {summary.agreements}/{summary.count}",
        f"residue checks: {summary.residue_checks}, mismatches: {summary.residue_mismatches}",
        f"instances with candidates below -1: {summary.low_candidate_instances}",
    ]
    for example in summary.counterexamples:
        lines.append(f"counterexample #{example.index}: {example.polynomial}")
        lines.extend(f"  {line}" for line in example.details)
    lines.append("OK" if summary.ok else "FAILED")
    return "\n".join(lines)
