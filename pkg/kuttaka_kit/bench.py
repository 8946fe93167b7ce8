"""
Micro-benchmark: pulverizer inverse against the extended Euclid inverse

Every trial checks that both methods agree; a disagreement stops the run
and is reported as a counterexample.
"""

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from statistics import median
from typing import Callable, List, Optional, Sequence, Tuple

import structlog

from kuttaka_kit.congruence import inverse_extended, mod_inverse
from kuttaka_kit.errors import InvalidInputError

logger = structlog.get_logger(__name__)

MIN_BITS = 2
MAX_BITS = 59

InverseMethod = Callable[[int, int], int]


@dataclass
class ChunkOutcome:
    primary_ns: List[int] = field(default_factory=list)
    reference_ns: List[int] = field(default_factory=list)
    counterexample: Optional[dict] = None


@dataclass
class BenchReport:
    """Medians in microseconds; mismatches is 0 or 1 (the run stops on the first)"""

    trials: int
    bits: int
    seed: int
    completed: int
    mismatches: int
    kuttaka_median_us: float
    euclid_median_us: float
    counterexample: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def to_dict(self):
        return {
            'trials': self.trials,
            'bits': self.bits,
            'seed': self.seed,
            'completed': self.completed,
            'mismatches': self.mismatches,
            'kuttaka_median_us': self.kuttaka_median_us,
            'euclid_median_us': self.euclid_median_us,
            'counterexample': self.counterexample,
        }


class InverseBenchmark:
    """Time two modular-inverse methods over seeded random coprime pairs"""

    def __init__(self, primary: InverseMethod = mod_inverse,
                 reference: InverseMethod = inverse_extended):
        self.primary = primary
        self.reference = reference

    @staticmethod
    def coprime_pairs(trials: int, bits: int, seed: int) -> List[Tuple[int, int]]:
        """Deterministic coprime pairs (a, m) with both drawn from [2^(bits-1), 2^bits)"""
        if trials < 1:
            raise InvalidInputError(f"trials must be at least 1, got {trials}")
        if not MIN_BITS <= bits <= MAX_BITS:
            raise InvalidInputError(f"bits must lie in [{MIN_BITS}, {MAX_BITS}], got {bits}")

        rng = random.Random(seed)
        low, high = 1 << (bits - 1), (1 << bits) - 1
        pairs = []
        while len(pairs) < trials:
            a, m = rng.randint(low, high), rng.randint(max(low, 2), high)
            if gcd(a, m) == 1:
                pairs.append((a, m))
        return pairs

    def _run_chunk(self, pairs: Sequence[Tuple[int, int]]) -> ChunkOutcome:
        outcome = ChunkOutcome()
        for a, m in pairs:
            start = time.perf_counter_ns()
            primary_value = self.primary(a, m)
            middle = time.perf_counter_ns()
            reference_value = self.reference(a, m)
            end = time.perf_counter_ns()

            if primary_value != reference_value:
                outcome.counterexample = {
                    'a': a, 'm': m, 'kuttaka': primary_value, 'euclid': reference_value,
                }
                break
            outcome.primary_ns.append(middle - start)
            outcome.reference_ns.append(end - middle)
        return outcome

    def run(self, trials: int, bits: int, seed: int, workers: int = 1,
            fixed_pair: Optional[Tuple[int, int]] = None) -> BenchReport:
        """
        Run the comparison

        Args:
            trials: Number of pairs
            bits: Bit size of the random pairs
            seed: Seed for pair generation
            workers: Thread count; chunks are checked independently
            fixed_pair: Use this (a, m) for every trial instead of random pairs

        Returns:
            BenchReport
        """
        if fixed_pair is not None:
            if trials < 1:
                raise InvalidInputError(f"trials must be at least 1, got {trials}")
            pairs = [fixed_pair] * trials
        else:
            pairs = self.coprime_pairs(trials, bits, seed)

        workers = max(1, workers)
        chunk_size = -(-len(pairs) // workers)
        chunks = [pairs[start:start + chunk_size] for start in range(0, len(pairs), chunk_size)]

        if workers == 1:
            outcomes = [self._run_chunk(chunk) for chunk in chunks]
        else:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                outcomes = list(executor.map(self._run_chunk, chunks))

        primary_ns: List[int] = []
        reference_ns: List[int] = []
        counterexample = None
        for outcome in outcomes:
            primary_ns.extend(outcome.primary_ns)
            reference_ns.extend(outcome.reference_ns)
            if outcome.counterexample and counterexample is None:
                counterexample = outcome.counterexample

        if counterexample:
            logger.error(f"Inverse mismatch: {counterexample}")

        return BenchReport(
            trials=trials,
            bits=bits,
            seed=seed,
            completed=len(primary_ns),
            mismatches=1 if counterexample else 0,
            kuttaka_median_us=round(median(primary_ns) / 1000, 3) if primary_ns else 0.0,
            euclid_median_us=round(median(reference_ns) / 1000, 3) if reference_ns else 0.0,
            counterexample=counterexample,
        )
