"""
Depth-first search for binary (4,4,N) complete complementary codes.

Rows are filled set by set, row by row. A row is encoded as an integer whose
bits, most significant first, are its (-1)-exponents, so increasing integers
visit rows in lexicographic order. While a set is being filled, its partial
autocorrelation sum and its partial cross-sums against every completed set
are bounded by what the remaining rows could still cancel.
"""

import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from .ccc import verify_ccc
from .config import get_settings
from .errors import GolayZczError
from .logger import setup_logger
from .models import SearchConfig
from .seqcore import CompleteComplementaryCode, PhaseSequence

logger = setup_logger(__name__)

SET_SIZE = 4
CodeKey = Tuple[Tuple[int, ...], ...]

# Nodes between checks of the cross-process cancel flag
CANCEL_CHECK_INTERVAL = 256


@dataclass
class SearchResult:
    """Codes found plus search counters"""
    codes: List[CompleteComplementaryCode] = field(default_factory=list)
    timed_out: bool = False
    nodes: int = 0
    prunes: int = 0

    @property
    def solutions(self) -> int:
        return len(self.codes)

    def canonical_forms(self) -> List[CodeKey]:
        """Sorted, de-duplicated canonical keys of the codes found."""
        return sorted({canonical_key(canonicalize(c)) for c in self.codes})

    def to_dict(self) -> dict:
        return {
            "solutions": self.solutions,
            "timed_out": self.timed_out,
            "nodes": self.nodes,
            "prunes": self.prunes,
        }


# --------------------------------------------------
# Row encoding and correlation tables
# --------------------------------------------------

def _row_exponents(value: int, length: int) -> Tuple[int, ...]:
    return tuple((value >> (length - 1 - k)) & 1 for k in range(length))


@lru_cache(maxsize=None)
def _row_signs(value: int, length: int) -> np.ndarray:
    return 1 - 2 * np.array(_row_exponents(value, length), dtype=np.int64)


@lru_cache(maxsize=None)
def _row_correlation(a: int, b: int, length: int) -> np.ndarray:
    """Aperiodic C_{a,b}(tau) for tau = -(N-1)..N-1 on +1/-1 rows."""
    return np.correlate(_row_signs(b, length), _row_signs(a, length), "full")


def _build_code(rows: Sequence[int], length: int) -> CompleteComplementaryCode:
    sequences = [PhaseSequence(2, _row_exponents(r, length)) for r in rows]
    return CompleteComplementaryCode.from_rows(
        [sequences[s * SET_SIZE:(s + 1) * SET_SIZE] for s in range(SET_SIZE)]
    )


# --------------------------------------------------
# Depth-first search over one branch
# --------------------------------------------------

class _BranchSearch:
    """DFS below a fixed prefix of row values"""

    def __init__(
        self,
        config: SearchConfig,
        prefix: Tuple[int, ...],
        deadline: float,
        limit: int,
        cancelled: Optional[Callable[[], bool]] = None,
    ):
        self.n = config.length
        self.cancelled = cancelled
        self.pruning = config.pruning
        self.prefix = prefix
        self.deadline = deadline
        self.limit = limit
        self.row_count = 1 << self.n

        self.slack = np.array([self.n - abs(t) for t in range(-(self.n - 1), self.n)], dtype=np.int64)
        self.off_peak = np.ones(2 * self.n - 1, dtype=bool)
        self.off_peak[self.n - 1] = False

        self.result = SearchResult()
        self._stop = False

    def run(self) -> SearchResult:
        zeros = np.zeros(2 * self.n - 1, dtype=np.int64)
        self._extend([], zeros, [], True)
        return self.result

    def _candidates(self, pos: int):
        if pos < len(self.prefix):
            return (self.prefix[pos],)
        return range(self.row_count)

    def _fits(self, auto: np.ndarray, crosses: List[np.ndarray], remaining: int) -> bool:
        bound = remaining * self.slack
        if np.any(np.abs(auto[self.off_peak]) > bound[self.off_peak]):
            return False
        return all(not np.any(np.abs(c) > bound) for c in crosses)

    def _extend(self, rows: List[int], auto: np.ndarray, crosses: List[np.ndarray], ok: bool) -> None:
        pos = len(rows)
        if pos == SET_SIZE * SET_SIZE:
            if ok:
                self._accept(rows)
            return

        s, r = divmod(pos, SET_SIZE)
        remaining = SET_SIZE - r - 1
        for value in self._candidates(pos):
            if self._stop:
                return
            if time.monotonic() > self.deadline:
                self.result.timed_out = True
                self._stop = True
                return
            self.result.nodes += 1
            if self.cancelled and self.result.nodes % CANCEL_CHECK_INTERVAL == 0 and self.cancelled():
                self._stop = True
                return

            new_auto = auto + _row_correlation(value, value, self.n)
            new_crosses = [
                crosses[t] + _row_correlation(value, rows[t * SET_SIZE + r], self.n)
                for t in range(s)
            ]

            still_ok = ok
            if self.pruning:
                if not self._fits(new_auto, new_crosses, remaining):
                    self.result.prunes += 1
                    continue
            elif remaining == 0:
                still_ok = ok and self._fits(new_auto, new_crosses, 0)

            rows.append(value)
            if remaining == 0:
                fresh = np.zeros_like(new_auto)
                self._extend(rows, fresh, [fresh] * (s + 1), still_ok)
            else:
                self._extend(rows, new_auto, new_crosses, still_ok)
            rows.pop()

    def _accept(self, rows: Sequence[int]) -> None:
        code = _build_code(rows, self.n)
        if not verify_ccc(code):
            # partial-sum bookkeeping and the verifier disagree
            logger.error(f"Rejected unverifiable candidate {tuple(rows)}")
            return
        self.result.codes.append(code)
        if len(self.result.codes) >= self.limit:
            self._stop = True


# Set in each pool worker by _init_worker
_cancel_event = None


def _init_worker(cancel_event) -> None:
    global _cancel_event
    _cancel_event = cancel_event


def _search_branch(config_data: dict, prefix: Tuple[int, ...], wall_deadline: float, limit: int) -> SearchResult:
    """Process-pool entry point; monotonic clocks are per process, so the deadline travels as wall time."""
    config = SearchConfig(**config_data)
    budget = max(0.0, wall_deadline - time.time())
    cancelled = _cancel_event.is_set if _cancel_event is not None else None
    return _BranchSearch(config, prefix, time.monotonic() + budget, limit, cancelled).run()


def _top_level_prefixes(config: SearchConfig) -> List[Tuple[int, ...]]:
    row_count = 1 << config.length
    if config.symmetry_reduction:
        return [(0, v) for v in range(row_count)]
    return [(v,) for v in range(row_count)]


# ==================================================
# PUBLIC API
# ==================================================

def search_ccc(config: SearchConfig) -> SearchResult:
    """
    Search for binary (4,4,N) CCCs.

    Branches are the row values at the first free position, taken in
    lexicographic order. A parallel run merges branches in that order and
    stops at the first branch that times out or completes max_solutions;
    later branches are cancelled and do not count. Its codes and timeout
    flag therefore match the single-process run, though the cutoff branch
    may spend more nodes.
    """
    settings = get_settings()
    workers = min(config.workers, settings.threads) if config.workers > 1 else 1
    deadline = time.monotonic() + config.timeout_seconds
    prefixes = _top_level_prefixes(config)

    logger.info(f"Searching (4,4,{config.length}) codes: {len(prefixes)} branches, "
                f"{workers} worker(s), timeout {config.timeout_seconds}s")

    result = SearchResult()
    progress = tqdm(total=len(prefixes), desc="Branches", disable=not settings.show_progress)

    if workers == 1:
        for prefix in prefixes:
            limit = config.max_solutions - result.solutions
            branch = _BranchSearch(config, prefix, deadline, limit).run()
            _merge(result, branch)
            progress.update(1)
            if result.timed_out or result.solutions >= config.max_solutions:
                break
    else:
        wall_deadline = time.time() + config.timeout_seconds
        cancel = multiprocessing.Event()
        executor = ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(cancel,))
        try:
            futures = [
                executor.submit(_search_branch, config.model_dump(), prefix, wall_deadline, config.max_solutions)
                for prefix in prefixes
            ]
            for future in futures:
                _merge(result, future.result())
                progress.update(1)
                if result.timed_out or result.solutions >= config.max_solutions:
                    break
        finally:
            cancel.set()
            executor.shutdown(wait=True, cancel_futures=True)
        del result.codes[config.max_solutions:]

    progress.close()
    _row_correlation.cache_clear()
    _row_signs.cache_clear()
    logger.info(f"Search finished: {result.to_dict()}")
    return result


def _merge(into: SearchResult, branch: SearchResult) -> None:
    into.codes.extend(branch.codes)
    into.nodes += branch.nodes
    into.prunes += branch.prunes
    into.timed_out = into.timed_out or branch.timed_out


def canonical_key(code: CompleteComplementaryCode) -> CodeKey:
    """Row exponents in set/row order."""
    return tuple(row.entries for s in code.sets for row in s.rows)


def _transform(code: CompleteComplementaryCode, negate: bool, flip: bool) -> CompleteComplementaryCode:
    def row_map(row: PhaseSequence) -> PhaseSequence:
        entries = row.entries[::-1] if flip else row.entries
        if negate:
            entries = tuple(1 - e for e in entries)
        return PhaseSequence(2, entries)

    return CompleteComplementaryCode.from_rows([[row_map(r) for r in s.rows] for s in code.sets])


def canonicalize(code: CompleteComplementaryCode) -> CompleteComplementaryCode:
    """
    Lexicographically least image of a binary code under global negation
    and simultaneous reversal of all rows.
    """
    if code.modulus != 2:
        raise GolayZczError("canonicalize applies to binary codes only")
    images = [_transform(code, neg, flip) for neg in (False, True) for flip in (False, True)]
    return min(images, key=canonical_key)
