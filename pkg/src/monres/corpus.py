"""Enumeration of small Artinian ideals in two variables and corpus-wide checks."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from .cells import taylor_complex
from .certify import briancon_skoda_check, certify_ideal
from .documents import IdealDocument
from .errors import MonresError
from .ideal import MonIdeal, irreducible_decomposition, minimalize
from .newton import is_integrally_closed
from .residue import annihilator, residue_current

MAX_BOUND = 6


class CorpusRangeError(MonresError, ValueError):
    pass


def _staircases(a: int, b: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing heights h(0) = b >= h(1) >= ... >= h(a-1) >= 1."""
    def rec(prefix):
        if len(prefix) == a:
            yield tuple(prefix)
            return
        for h in range(prefix[-1], 0, -1):
            yield from rec(prefix + [h])

    yield from rec([b])


def generate_corpus(n: int = 2, bound: int = 4) -> list[IdealDocument]:
    """Every proper Artinian monomial ideal of k[x, y] with generators in the box [0, bound]^2.

    Each ideal is fixed by x^a, y^b (a, b <= bound) and its staircase, the
    least y-degree h(i) of an element x^i y^h for i < a.
    """
    if n != 2:
        raise CorpusRangeError("the corpus generator only supports n = 2")
    if not 1 <= bound <= MAX_BOUND:
        raise CorpusRangeError(f"bound must lie in 1..{MAX_BOUND}")
    ideals = set()
    for a, b in itertools.product(range(1, bound + 1), repeat=2):
        for h in _staircases(a, b):
            gens = [(i, hi) for i, hi in enumerate(h)] + [(a, 0)]
            ideals.add(minimalize(gens, 2))
    ordered = sorted(ideals, key=lambda I: (sum(map(sum, I.gens)), I.gens))
    return [IdealDocument.from_ideal(I, name=str(I)) for I in ordered]


def check_equivalence(I: MonIdeal) -> bool:
    return certify_ideal(I).closed == is_integrally_closed(I)


def check_duality(I: MonIdeal) -> bool:
    """Annihilator of the Taylor residue equals I, and its support covers the irreducible components."""
    Rf = residue_current(taylor_complex(I), I)
    labels = {c.alpha for c in Rf.candidates()}
    return annihilator(Rf) == I and irreducible_decomposition(I) <= labels


def check_bs(I: MonIdeal) -> bool:
    return briancon_skoda_check(I)


CHECKS: dict[str, Callable[[MonIdeal], bool]] = {
    "equivalence": check_equivalence,
    "duality": check_duality,
    "bs": check_bs,
}


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("MONRES_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class SweepResult:
    check: str
    bound: int
    count: int
    failures: tuple[IdealDocument, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def run_sweep(check: str, bound: int = 4, workers: int | None = None) -> SweepResult:
    """Run one named check over the corpus; results keep corpus order."""
    fn = CHECKS[check]
    docs = generate_corpus(2, bound)
    ideals = [d.ideal for d in docs]
    workers = workers or _worker_count()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(fn, ideals, chunksize=8))
    else:
        outcomes = [fn(I) for I in ideals]
    failures = tuple(d for d, ok in zip(docs, outcomes) if not ok)
    return SweepResult(check, bound, len(docs), failures)
