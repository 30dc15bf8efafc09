"""Exhaustive and sampled verification campaigns.

Exhaustive campaigns walk every coloring of K_N, encoded as the integers
0..2^C(N,2)-1 with bit k giving pair k's color (set = red).  The walk
visits the integers in Gray-code order so each successive coloring flips
a single pair and the red/blue adjacency rows update in O(1); results are
independent of visit order, and first_failure reports the failing
coloring with the smallest integer encoding.

Sampled campaigns draw colorings from Python's Mersenne Twister seeded
with a caller-provided 64-bit seed: trial t uses the t-th call of
Random(seed).getrandbits(C(N,2)).  Identical (seed, trials, N) inputs
reproduce identical campaigns byte for byte.

Engines: ORACLE decides each coloring by the complete witness search;
PROOF runs the proof-guided extractor and demands a witness that passes
validation.  Both report failure for a coloring exactly when they produce
no valid witness.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .graphs import TwoColoring, pair_count, pair_list
from .formulas import CliqueUnion, ForestSpec
from .witness import make_oracle_checker, make_proof_checker

ORACLE = "ORACLE"
PROOF = "PROOF"

EXHAUSTIVE = "EXHAUSTIVE"
SAMPLED = "SAMPLED"

DEFAULT_CAP_BITS = 28


class CapExceededError(ValueError):
    """Exhaustive run would enumerate more colorings than the cap allows."""


@dataclass
class CampaignResult:
    mode: str
    trials: int
    failures: int
    first_failure: TwoColoring | None
    elapsed: float
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def report(self) -> str:
        """Deterministic text report; timing intentionally excluded so
        identical campaigns produce identical bytes."""
        lines = [
            f"mode: {self.mode}",
            f"trials: {self.trials}",
            f"failures: {self.failures}",
            f"verdict: {'PASS' if self.passed else 'FAIL'}",
        ]
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        if self.first_failure is not None:
            lines.append("first failure:")
            lines.append(self.first_failure.to_text().rstrip("\n"))
        return "\n".join(lines) + "\n"


def _checker(engine: str, f: ForestSpec, h: CliqueUnion, n: int):
    if engine == ORACLE:
        return make_oracle_checker(f, h, n)
    if engine == PROOF:
        return make_proof_checker(f, h, n)
    raise ValueError(f"unknown engine {engine!r}")


def exhaustive_verify(
    f: ForestSpec,
    h: CliqueUnion,
    n: int,
    engine: str = ORACLE,
    cap_bits: int = DEFAULT_CAP_BITS,
) -> CampaignResult:
    """Check every coloring of K_n; a trial fails when the engine yields
    no valid witness."""
    npairs = pair_count(n)
    if npairs > cap_bits:
        raise CapExceededError(
            f"C({n},2) = {npairs} exceeds the {cap_bits}-bit cap"
        )
    check = _checker(engine, f, h, n)
    flips = []
    for i, j in pair_list(n):
        flips.append((i, j, 1 << j, 1 << i))
    red = [0] * n
    full = (1 << n) - 1
    blue = [full & ~(1 << v) for v in range(n)]
    t0 = time.perf_counter()
    failures = 0
    worst = None
    gray = 0
    for k in range(1 << npairs):
        g = k ^ (k >> 1)
        delta = g ^ gray
        if delta:
            i, j, bj, bi = flips[delta.bit_length() - 1]
            red[i] ^= bj
            red[j] ^= bi
            blue[i] ^= bj
            blue[j] ^= bi
        gray = g
        if not check(red, blue):
            failures += 1
            if worst is None or g < worst:
                worst = g
    elapsed = time.perf_counter() - t0
    first = TwoColoring(n, worst) if worst is not None else None
    return CampaignResult(EXHAUSTIVE, 1 << npairs, failures, first, elapsed)


def sampled_verify(
    f: ForestSpec,
    h: CliqueUnion,
    n: int,
    engine: str = ORACLE,
    trials: int = 10_000,
    seed: int = 0,
) -> CampaignResult:
    """Check `trials` colorings drawn from the seeded generator."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    npairs = pair_count(n)
    check = _checker(engine, f, h, n)
    rng = random.Random(seed)
    pairs = pair_list(n)
    full = (1 << n) - 1
    t0 = time.perf_counter()
    failures = 0
    first = None
    for _ in range(trials):
        bits = rng.getrandbits(npairs) if npairs else 0
        red = [0] * n
        rem = bits
        while rem:
            b = rem & -rem
            i, j = pairs[b.bit_length() - 1]
            red[i] |= 1 << j
            red[j] |= 1 << i
            rem ^= b
        blue = [full & ~red[v] & ~(1 << v) for v in range(n)]
        if not check(red, blue):
            failures += 1
            if first is None:
                first = TwoColoring(n, bits)
    elapsed = time.perf_counter() - t0
    return CampaignResult(SAMPLED, trials, failures, first, elapsed, seed=seed)
