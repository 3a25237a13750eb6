import logging
import math
from functools import lru_cache
from typing import Callable, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from .convergents import LOG2

logger = logging.getLogger(__name__)

# symbols of the half-cube and square-root branches of relation H
F0 = 1
F1 = 2


class SteeringWord(BaseModel):
    """Runs (f0^h1, f1^k1, f0^h2, ...) applied to 1, with the log of the value reached"""
    model_config = ConfigDict(frozen=True)

    runs: Tuple[Tuple[int, int], ...] = ()
    log_value: float = 0.0

    @property
    def length(self) -> int:
        return sum(count for _, count in self.runs)

    @property
    def symbols(self) -> Tuple[int, ...]:
        return tuple(s for s, count in self.runs for _ in range(count))


def pair_log(log_t, h, k):
    """ln f1^k(f0^h(e^log_t)); works on numpy arrays"""
    three = 3.0 ** h
    return (three * log_t - LOG2 * (three - 1) / 2) / 2.0 ** k


@lru_cache(maxsize=8)
def run_pair_table(max_length: int, pairs: int = 3):
    """
    All words made of up to `pairs` (f0^h, f1^k) blocks with h >= 1, total length <= max_length.

    Level 1 is exactly the Gabi family f1^k o f0^h. Returns flat arrays
    (log value, length, parent row, h, k); row 0 is the empty word.
    """
    hs, ks = np.meshgrid(np.arange(1, max_length + 1), np.arange(0, max_length + 1), indexing="ij")
    mask = hs + ks <= max_length
    hs, ks = hs[mask], ks[mask]

    logs = [np.zeros(1)]
    lengths = [np.zeros(1, dtype=np.int64)]
    parents = [np.full(1, -1, dtype=np.int64)]
    block_h = [np.zeros(1, dtype=np.int64)]
    block_k = [np.zeros(1, dtype=np.int64)]
    frontier = np.arange(1)
    offset = 0
    all_logs, all_lengths = logs[0], lengths[0]
    for _ in range(pairs):
        level_logs, level_lengths, level_parents, level_h, level_k = [], [], [], [], []
        base_logs, base_lengths = all_logs[frontier], all_lengths[frontier]
        for h, k in zip(hs, ks):
            keep = base_lengths + h + k <= max_length
            if not keep.any():
                continue
            with np.errstate(over="ignore"):
                level_logs.append(pair_log(base_logs[keep], int(h), int(k)))
            level_lengths.append(base_lengths[keep] + h + k)
            level_parents.append(frontier[keep])
            level_h.append(np.full(int(keep.sum()), h, dtype=np.int64))
            level_k.append(np.full(int(keep.sum()), k, dtype=np.int64))
        if not level_logs:
            break
        offset = len(all_logs)
        logs.append(np.concatenate(level_logs))
        lengths.append(np.concatenate(level_lengths))
        parents.append(np.concatenate(level_parents))
        block_h.append(np.concatenate(level_h))
        block_k.append(np.concatenate(level_k))
        all_logs = np.concatenate(logs)
        all_lengths = np.concatenate(lengths)
        frontier = np.arange(offset, len(all_logs))
    table = (all_logs, all_lengths, np.concatenate(parents), np.concatenate(block_h), np.concatenate(block_k))
    logger.debug(f"Steering table: {len(all_logs)} words of length <= {max_length}")
    return table


def _runs(table, row: int) -> Tuple[Tuple[int, int], ...]:
    _, _, parents, block_h, block_k = table
    blocks = []
    while row > 0:
        blocks.append((int(block_h[row]), int(block_k[row])))
        row = int(parents[row])
    runs = []
    for h, k in reversed(blocks):
        runs.append((F0, h))
        if k:
            runs.append((F1, k))
    return tuple(runs)


Cost = Callable[[np.ndarray, np.ndarray], np.ndarray]


def ranked_steering_words(max_length: int, cost: Cost, top: int = 8, pairs: int = 3) -> List[SteeringWord]:
    """Lowest-cost words; cost maps (log values, lengths) to one score per word, ties go to shorter words"""
    if max_length < 0:
        return []
    table = run_pair_table(max_length, pairs)
    logs, lengths = table[0], table[1]
    with np.errstate(invalid="ignore", over="ignore", under="ignore"):
        scores = np.nan_to_num(cost(logs, lengths), nan=math.inf)
    order = np.lexsort((lengths, scores))[:top]
    return [SteeringWord(runs=_runs(table, int(row)), log_value=float(logs[row])) for row in order]


def steering_candidates(log_target: float, max_length: int, top: int = 8, pairs: int = 3) -> List[SteeringWord]:
    """Words from 1 whose value lands closest to e^log_target, by relative distance in log space"""
    scale = abs(log_target) if log_target != 0 else 1.0

    def cost(logs: np.ndarray, lengths: np.ndarray) -> np.ndarray:
        return np.abs(logs - log_target) / scale

    return ranked_steering_words(max_length, cost, top, pairs)
