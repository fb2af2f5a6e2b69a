"""
Named property suites run by ``cli verify``.

A suite records every check it runs and never stops at the first failure;
errors raised inside a check are recorded as failures with the error name.
"""

import logging
import random
import time
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel

from src.errors import IndexOutOfRange, RookAlgebraError
from src.homs import (
    FamilySpec,
    duality_check,
    homomorphism_check,
    non_homflypt_check,
    quadratic_check,
    skein_check,
    verify_braid_relations,
)
from src.invariants import jones_skein_check
from src.reps import (
    isomorphism_check,
    lambda_formula_check,
    linking_check,
    trace_decomposition_check,
)
from src.traces import (
    alexander_skein_check,
    markov_check,
    partition_check,
    vip_checks,
)

logger = logging.getLogger(__name__)

SUITES = ("relations", "duality", "skein", "traces", "vip", "reps", "all")


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: Optional[str] = None


class SuiteReport(BaseModel):
    suite: str
    seed: int
    checks: List[CheckResult]
    seconds: float

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class _Recorder:
    def __init__(self):
        self.checks: List[CheckResult] = []

    def run(self, label: str, fn: Callable[[], Dict[str, bool]]):
        try:
            results = fn()
        except RookAlgebraError as e:
            logger.error(f"{label} failed: {type(e).__name__}: {e}")
            self.checks.append(
                CheckResult(name=label, passed=False, detail=f"{type(e).__name__}: {e}")
            )
            return
        for name, ok in results.items():
            self.checks.append(CheckResult(name=name, passed=bool(ok)))


def _relations(rec: _Recorder, families: List[FamilySpec], **_):
    for spec in families:
        rec.run(
            spec.label(),
            lambda spec=spec: verify_braid_relations(spec, strict=False),
        )


def _duality(rec: _Recorder, **_):
    rec.run("duality", lambda: duality_check(strict=False))


def _skein(rec: _Recorder, rng: random.Random, sizes: List[int], count: int, **kw):
    length = kw["max_length"]
    rec.run("quadratic", quadratic_check)
    rec.run("non-HOMFLYPT", non_homflypt_check)
    for n in sizes:
        if n >= 2:
            rec.run(f"skein B_{n}", lambda n=n: skein_check(rng, n, count, length))
            rec.run(
                f"Jones skein B_{n}",
                lambda n=n: jones_skein_check(rng, n, count, length),
            )
    rec.run(
        "homomorphism",
        lambda: homomorphism_check(
            FamilySpec(5), rng, max(sizes), max(1, count // 5), length
        ),
    )


def _traces(rec: _Recorder, rng: random.Random, sizes: List[int], count: int, **kw):
    length = kw["max_length"]
    for n in sizes:
        rec.run(f"Markov B_{n}", lambda n=n: markov_check(rng, n, count, length))
        if n >= 2:
            rec.run(
                f"Alexander skein B_{n}",
                lambda n=n: alexander_skein_check(rng, n, count, length),
            )
    for n in range(1, 6):
        rec.run(f"partitions of {n}", lambda n=n: partition_check(n, strict=False))


def _vip(rec: _Recorder, vip_max: int, **_):
    for n in range(2, vip_max + 1):
        rec.run(f"closed form n={n}", lambda n=n: vip_checks(n, strict=False))


def _reps(rec: _Recorder, rng: random.Random, sizes: List[int], count: int, **kw):
    length = kw["max_length"]
    for n in sizes:
        rec.run(
            f"isomorphism n={n}",
            lambda n=n: isomorphism_check(n, rng, strict=False),
        )
        rec.run(
            f"trace decomposition n={n}",
            lambda n=n: trace_decomposition_check(n, rng, strict=False),
        )
        if n >= 2:
            rec.run(
                f"colored braid formula B_{n}",
                lambda n=n: lambda_formula_check(rng, n, max(1, count // 2), length),
            )
            rec.run(
                f"linking dependence B_{n}",
                lambda n=n: linking_check(rng, n, max(1, count // 2), length),
            )


_RUNNERS = {
    "relations": _relations,
    "duality": _duality,
    "skein": _skein,
    "traces": _traces,
    "vip": _vip,
    "reps": _reps,
}


def run_suite(
    suite: str,
    seed: int = 0,
    families: Optional[List[int]] = None,
    max_n: int = 4,
    count: int = 50,
    vip_max: int = 6,
    max_length: int = 6,
) -> SuiteReport:
    """
    Run one named suite, or every suite for 'all'
    """
    if suite not in SUITES:
        raise IndexOutOfRange(f"unknown suite '{suite}', expected one of {SUITES}")
    start = time.time()
    rng = random.Random(seed)
    rec = _Recorder()
    specs = [FamilySpec(f) for f in (families or [1, 2, 3, 4, 5])]
    if families is None or 2 in families:
        specs.append(FamilySpec(2, rescaled=True))
    names = list(_RUNNERS) if suite == "all" else [suite]
    for name in names:
        logger.info(f"Running suite '{name}' with seed {seed}")
        _RUNNERS[name](
            rec,
            rng=rng,
            families=specs,
            sizes=list(range(2, max_n + 1)),
            count=count,
            vip_max=vip_max,
            max_length=max_length,
        )
    report = SuiteReport(
        suite=suite,
        seed=seed,
        checks=rec.checks,
        seconds=round(time.time() - start, 3),
    )
    logger.info(
        f"Suite '{suite}': {sum(c.passed for c in report.checks)}/"
        f"{len(report.checks)} checks passed in {report.seconds}s"
    )
    return report
