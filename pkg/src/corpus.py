"""
Frozen regression corpus of braid closures.

One JSON record per line; Jones values are compared exactly, Alexander values
up to units.
"""

import json
import logging
import random
import time
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from src.braid import BraidWord, random_markov_rewrite
from src.errors import CorpusError, RookAlgebraError
from src.invariants import alexander, jones, normalize_units
from src.oracle import burau_alexander, equal_up_to_units, kauffman_jones
from src.poly import QPoly

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class CorpusRecord(BaseModel):
    name: str = Field(..., min_length=1)
    n: int = Field(..., ge=1)
    word: List[int]
    jones_q: str
    alexander_q: str

    def braid(self) -> BraidWord:
        return BraidWord(self.n, tuple(self.word))


class RecordStatus(BaseModel):
    name: str
    jones_engine: bool
    jones_oracle: bool
    alexander_engine: bool
    alexander_oracle: bool
    markov_rewrites: bool
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return all(
            (
                self.jones_engine,
                self.jones_oracle,
                self.alexander_engine,
                self.alexander_oracle,
                self.markov_rewrites,
            )
        )


class CorpusReport(BaseModel):
    path: str
    records: List[RecordStatus]
    seconds: float

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)


def load_corpus(path: PathLike) -> List[CorpusRecord]:
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"Corpus file does not exist: {path}")
    records = []
    for number, line in enumerate(path.read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = CorpusRecord.model_validate_json(line)
            record.braid()
        except (ValidationError, RookAlgebraError) as e:
            raise CorpusError(f"{path}:{number}: {e}")
        records.append(record)
    logger.info(f"Loaded {len(records)} corpus records from {path}")
    return records


def write_corpus(path: PathLike, records: List[CorpusRecord]):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [json.dumps(record.model_dump()) for record in records]
    path.write_text("\n".join(lines) + "\n")
    logger.info(f"Wrote {len(records)} corpus records to {path}")


def oracle_record(name: str, w: BraidWord, max_crossings: int = 24) -> CorpusRecord:
    return CorpusRecord(
        name=name,
        n=w.n,
        word=list(w.letters),
        jones_q=str(kauffman_jones(w, max_crossings)),
        alexander_q=str(normalize_units(burau_alexander(w))),
    )


def regenerate(path: PathLike, max_crossings: int = 24) -> List[CorpusRecord]:
    """
    Recompute both columns of an existing corpus from the oracles
    """
    records = [
        oracle_record(record.name, record.braid(), max_crossings)
        for record in load_corpus(path)
    ]
    write_corpus(path, records)
    return records


def _record_status(
    record: CorpusRecord, rng: random.Random, rewrites: int, max_crossings: int
) -> RecordStatus:
    w = record.braid()
    frozen_jones = QPoly.from_text(record.jones_q)
    frozen_alexander = QPoly.from_text(record.alexander_q)

    engine_jones = jones(w)
    engine_alexander = alexander(w)
    status = RecordStatus(
        name=record.name,
        jones_engine=engine_jones == frozen_jones,
        jones_oracle=kauffman_jones(w, max_crossings) == frozen_jones,
        alexander_engine=equal_up_to_units(engine_alexander, frozen_alexander),
        alexander_oracle=equal_up_to_units(burau_alexander(w), frozen_alexander),
        markov_rewrites=True,
    )

    rewritten = w
    for _ in range(rewrites):
        rewritten = random_markov_rewrite(rewritten, rng, max_n=max(w.n, 4))
        if jones(rewritten) != frozen_jones or not equal_up_to_units(
            alexander(rewritten), frozen_alexander
        ):
            status.markov_rewrites = False
            status.detail = f"invariants changed at {rewritten}"
            break
    if not status.passed:
        logger.warning(f"Corpus record {record.name} failed: {status}")
    return status


def check_corpus(
    path: PathLike,
    rng: Optional[random.Random] = None,
    rewrites: int = 10,
    max_crossings: int = 24,
) -> CorpusReport:
    """
    Compare engine and oracles against the frozen values
    """
    start = time.time()
    rng = rng or random.Random(0)
    statuses = [
        _record_status(record, rng, rewrites, max_crossings)
        for record in load_corpus(path)
    ]
    report = CorpusReport(
        path=str(path), records=statuses, seconds=round(time.time() - start, 3)
    )
    logger.info(
        f"Corpus check: {sum(s.passed for s in statuses)}/{len(statuses)} passed "
        f"in {report.seconds}s"
    )
    return report
