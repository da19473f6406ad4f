"""Ground-truth checks for cyclic sequences over [n].

Nothing here depends on forms or graphs: every window is turned back into a
set of symbols and counted directly.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import BudgetExceeded, SymbolOutOfRange


def windows(seq: Sequence[int], k: int, n: Optional[int] = None) -> list[tuple[int, ...]]:
    """The ``len(seq)`` cyclic windows of ``k`` consecutive symbols."""
    if not seq:
        raise ValueError("sequence is empty")
    if n is not None:
        for i, s in enumerate(seq):
            if not 1 <= s <= n:
                raise SymbolOutOfRange(f"symbol {s} at position {i} is outside 1..{n}")
    L = len(seq)
    return [tuple(seq[(i + j) % L] for j in range(k)) for i in range(L)]


@dataclass
class VerifyReport:
    n: int
    k: int
    length: int
    windows_total: int
    invalid_windows: list[int] = field(default_factory=list)
    duplicate_subsets: list[tuple[tuple[int, ...], list[int]]] = field(default_factory=list)
    distinct_covered: int = 0

    @property
    def coverage_ratio(self) -> Fraction:
        return Fraction(self.distinct_covered, math.comb(self.n, self.k))

    @property
    def classification(self) -> str:
        if self.invalid_windows or self.duplicate_subsets:
            return "invalid"
        if self.distinct_covered == math.comb(self.n, self.k) == self.length:
            return "ucycle"
        return "packing"

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "length": self.length,
            "windows_total": self.windows_total,
            "invalid_windows": self.invalid_windows,
            "duplicate_subsets": [
                {"subset": list(s), "positions": pos} for s, pos in self.duplicate_subsets
            ],
            "distinct_covered": self.distinct_covered,
            "coverage_ratio": float(self.coverage_ratio),
            "coverage": f"{self.distinct_covered}/{math.comb(self.n, self.k)}",
            "classification": self.classification,
        }


def verify(seq: Sequence[int], n: int, k: int) -> VerifyReport:
    wins = windows(seq, k, n)
    where = defaultdict(list)
    invalid = []
    for i, w in enumerate(wins):
        key = tuple(sorted(w))
        if len(set(key)) < k:
            invalid.append(i)
        else:
            where[key].append(i)
    dups = sorted((s, pos) for s, pos in where.items() if len(pos) > 1)
    return VerifyReport(n, k, len(seq), len(wins), invalid, dups, len(where))


@dataclass
class MaxPacking:
    best_length: int
    witness: list[int]
    nodes: int


MAX_EXHAUSTIVE_SUBSETS = 30


def exhaustive_max_packing(n: int, k: int, node_budget: Optional[int] = None) -> MaxPacking:
    """Longest cyclic packing by depth-first search.

    Symbols are relabelled so the sequence opens with ``1..k``, and a new
    symbol is only ever the smallest one not used yet.  Without an explicit
    ``node_budget`` the search refuses instances with more than 30 subsets.
    """
    total = math.comb(n, k)
    if node_budget is None:
        if total > MAX_EXHAUSTIVE_SUBSETS:
            raise BudgetExceeded(f"C({n},{k}) = {total} is too large for exhaustive search")
        node_budget = 10**7
    seq = list(range(1, k + 1))
    used = {frozenset(seq)}
    best = MaxPacking(0, [], 0)

    def closes() -> bool:
        L = len(seq)
        seen = set()
        for start in range(L - k + 1, L):
            w = frozenset(seq[(start + j) % L] for j in range(k))
            if len(w) < k or w in used or w in seen:
                return False
            seen.add(w)
        return True

    def dfs():
        best.nodes += 1
        if best.nodes > node_budget:
            raise BudgetExceeded(f"node budget {node_budget} exhausted", best=best)
        if len(seq) > best.best_length and closes():
            best.best_length, best.witness = len(seq), list(seq)
        if best.best_length == total:
            return
        fresh = max(seq) + 1
        for s in range(1, min(fresh, n) + 1):
            w = frozenset(seq[len(seq) - k + 1:] + [s])
            if len(w) < k or w in used:
                continue
            seq.append(s)
            used.add(w)
            dfs()
            used.discard(w)
            seq.pop()

    dfs()
    return best
