"""Exact squarefreeness of C(m, n) without factoring the value, and scans
of C(p**q n + 1, n) over the structural exception families.

A prime square r**2 divides C(m, n) iff adding n and m - n in base r
carries at least twice.  Two carries need at least three base-r digits in
m, so only primes r <= isqrt(m) can contribute; the test is exact and
costs O(pi(sqrt(m)) * log m) with no big-integer arithmetic at all.

For q >= 2 every non-exceptional n has p**q | C(p**q n + 1, n), hence the
binomial is divisible by p**2 and cannot be squarefree: scanning only the
enumerated exceptions loses nothing.
"""

from __future__ import annotations

import json
import os
import threading
import time
from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import isqrt

import numpy as np

from . import config
from .config import SizeGuardError
from .digits import PrimePower
from .exceptions import enumerate_exceptions

_primes: list[int] = []
_primes_limit = 1
_primes_lock = threading.Lock()  # growth is serialized; reads share the list


def _simple_sieve(limit: int) -> list[int]:
    """Plain odd-only sieve, used for base primes."""
    if limit < 2:
        return []
    if limit == 2:
        return [2]
    half = (limit + 1) // 2  # flags for 1, 3, 5, ..., the odds <= limit
    flags = np.ones(half, dtype=bool)
    flags[0] = False
    for i in range(1, (isqrt(limit) + 1) // 2 + 1):
        if flags[i]:
            p = 2 * i + 1
            flags[p * p // 2 :: p] = False
    return [2] + (2 * np.nonzero(flags)[0] + 1).tolist()


def _extend_primes(limit: int) -> None:
    """Grow the shared prime cache to cover [2, limit] segment by segment."""
    global _primes, _primes_limit
    if limit <= _primes_limit:
        return
    segment = max(config.sieve_segment(), 1 << 10)
    base = _simple_sieve(isqrt(limit))
    if not _primes:
        first = min(limit, 2 * segment)
        _primes = _simple_sieve(first)
        _primes_limit = first
    lo = _primes_limit + 1
    while lo <= limit:
        hi = min(lo + 2 * segment - 1, limit)
        start = lo | 1  # odd start of the window
        count = (hi - start) // 2 + 1
        flags = np.ones(count, dtype=bool)
        for p in base:
            if p == 2:
                continue
            if p * p > hi:
                break
            first_mult = max(p * p, ((start + p - 1) // p) * p)
            if first_mult % 2 == 0:
                first_mult += p
            if first_mult <= hi:
                flags[(first_mult - start) // 2 :: p] = False
        _primes.extend((start + 2 * np.nonzero(flags)[0]).tolist())
        lo = hi + 1
    _primes_limit = limit


def primes_upto(limit: int) -> list[int]:
    """Ascending primes <= limit from a shared, monotonically grown cache."""
    if limit > config.DEFAULT_SIEVE_LIMIT:
        raise SizeGuardError(
            f"sieve target {limit} exceeds the guard {config.DEFAULT_SIEVE_LIMIT}"
        )
    if limit < 2:
        return []
    if limit > _primes_limit:
        with _primes_lock:
            _extend_primes(limit)
    return _primes[: bisect_right(_primes, limit)]


def _carries_at_least_two(n: int, r: int, p: int) -> bool:
    carry = 0
    seen = 0
    while n or r:
        if n % p + r % p + carry >= p:
            carry = 1
            seen += 1
            if seen == 2:
                return True
        else:
            carry = 0
        n //= p
        r //= p
    return False


def is_squarefree_binom(m: int, n: int) -> bool:
    """Exact squarefreeness of C(m, n) by per-prime carry counting.

    Equivalent to checking kummer_carries(n, m - n, r) <= 1 for every prime
    r <= m; primes above isqrt(m) cannot carry twice, so only the small
    ones are visited.
    """
    if n < 0 or n > m:
        raise ValueError(f"need 0 <= n <= m, got m={m} n={n}")
    r_part = m - n
    for p in primes_upto(isqrt(m)):
        if _carries_at_least_two(n, r_part, p):
            return False
    return True


@dataclass(frozen=True)
class ScanReport:
    """Outcome of one squarefree scan of C(p**q n + 1, n) for n <= bound."""

    pp: PrimePower
    bound: int
    candidates_tested: int
    squarefree_hits: tuple[int, ...]
    elapsed: float
    checkpoint: int  # last n processed; 0 when nothing was scanned

    def same_outcome(self, other: "ScanReport") -> bool:
        """Equality modulo the elapsed field."""
        return (
            self.pp == other.pp
            and self.bound == other.bound
            and self.candidates_tested == other.candidates_tested
            and self.squarefree_hits == other.squarefree_hits
            and self.checkpoint == other.checkpoint
        )


def _write_checkpoint(path: str, pp: PrimePower, bound: int, last_n: int, hits: list[int]) -> None:
    record = {
        "p": pp.p,
        "q": pp.q,
        "bound": bound,
        "last_n": str(last_n),
        "hits": [str(h) for h in sorted(hits)],
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        fh.write(json.dumps(record, sort_keys=True) + "\n")
    os.replace(tmp, path)


def _read_checkpoint(path: str, pp: PrimePower) -> tuple[int, list[int]]:
    with open(path, encoding="ascii") as fh:
        record = json.loads(fh.read())
    if record["p"] != pp.p or record["q"] != pp.q:
        raise ValueError(
            f"checkpoint {path} is for {record['p']}^{record['q']}, not {pp}"
        )
    return int(record["last_n"]), [int(h) for h in record["hits"]]


def scan_candidates(
    pp: PrimePower,
    bound: int,
    *,
    exhaustive: bool = False,
    jobs: int = 1,
    checkpoint_path: str | None = None,
) -> ScanReport:
    """Squarefree hits of C(p**q n + 1, n) for n <= bound.

    By default only the structural exception candidates are tested (sound
    for q >= 2); exhaustive mode sweeps every n <= bound and serves as the
    oracle for the filter.  A checkpoint file, when given, is resumed from
    and rewritten as the scan advances.
    """
    if bound < 0:
        raise ValueError(f"bound must be >= 0, got {bound}")
    if not exhaustive and pp.q < 2:
        raise ValueError("the candidate filter needs q >= 2; use exhaustive mode")

    started = time.monotonic()
    if exhaustive:
        candidates = range(1, bound + 1)
    else:
        candidates = [e.value for e in enumerate_exceptions(pp, bound)]

    resume_from = 0
    hits: list[int] = []
    if checkpoint_path and os.path.exists(checkpoint_path):
        resume_from, prior = _read_checkpoint(checkpoint_path, pp)
        hits.extend(h for h in prior if h <= bound)
    todo = [n for n in candidates if n > resume_from]
    resume_from = min(resume_from, bound)  # reported checkpoint stays <= bound

    def test(n: int) -> bool:
        return is_squarefree_binom(pp.modulus * n + 1, n)

    tested = 0
    last = resume_from
    if jobs > 1 and len(todo) > 1:
        workers = min(jobs, len(todo))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for n, ok in zip(todo, pool.map(test, todo)):
                tested += 1
                if ok:
                    hits.append(n)
        last = todo[-1] if todo else last
        if checkpoint_path:
            _write_checkpoint(checkpoint_path, pp, bound, last, hits)
    else:
        for i, n in enumerate(todo):
            if test(n):
                hits.append(n)
            tested += 1
            last = n
            if checkpoint_path and (i + 1) % 512 == 0:
                _write_checkpoint(checkpoint_path, pp, bound, last, hits)
        if checkpoint_path and todo:
            _write_checkpoint(checkpoint_path, pp, bound, last, hits)

    return ScanReport(
        pp=pp,
        bound=bound,
        candidates_tested=tested,
        squarefree_hits=tuple(sorted(set(hits))),
        elapsed=time.monotonic() - started,
        checkpoint=last,
    )


def verify_divisibility_filter(pp: PrimePower, bound: int) -> bool:
    """Check the filter on [1, bound]: every n outside the exception list
    must give a non-squarefree C(p**q n + 1, n).  True when that holds."""
    if pp.q < 2:
        raise ValueError(f"the filter argument needs q >= 2, got {pp}")
    if bound < 1:
        return True
    exceptional = {e.value for e in enumerate_exceptions(pp, bound)}
    for n in range(1, bound + 1):
        if n in exceptional:
            continue
        if is_squarefree_binom(pp.modulus * n + 1, n):
            return False
    return True
