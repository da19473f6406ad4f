"""Unroll Eulerian circuits of form representations into cyclic symbol sequences.

Walking a circuit emits the last entry of each edge's representation as the
next difference.  One full pass shifts every symbol by ``sigma``; the walk
closes after ``L = n / gcd(sigma, n)`` passes, so a circuit of ``m`` edges
yields a cyclic sequence of ``m * L`` symbols.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional

from .classes import ClassSig
from .errors import BudgetExceeded
from .graphs import (
    EulerCircuit,
    build_transition,
    eulerian_circuit,
    included_classes,
    main_component,
)

DEFAULT_SEARCH_BUDGET = 200


@dataclass
class PackingResult:
    n: int
    k: int
    sequence: list[int]
    m: int
    sigma: int
    L: int
    covered: int
    omitted: int
    rep_choice: dict[ClassSig, int]
    report: dict = field(default_factory=dict)

    @property
    def coverage_ratio(self) -> float:
        return self.covered / math.comb(self.n, self.k)

    def stats(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "sigma": self.sigma,
            "L": self.L,
            "covered": self.covered,
            "omitted": self.omitted,
            "coverage_ratio": self.coverage_ratio,
        }


def circuit_shift(circuit: EulerCircuit, n: int) -> int:
    return sum(e.rep.last for e in circuit.edges) % n


def class_shift(c: ClassSig, dropped: int) -> int:
    """Contribution of one class's edges to sigma (before reduction mod n).

    The edges are all orderings of the class minus ``dropped``; by symmetry
    each entry sits last equally often, so the last entries sum to
    ``N * (n - dropped) / (k - 1)`` with ``N`` the number of orderings.
    """
    return _orderings(c) * (c.n - dropped) // (c.k - 1)


def _orderings(c: ClassSig) -> int:
    """Edges contributed by a good class: orderings of its entries minus one singleton."""
    out = math.factorial(c.k - 1)
    for _, m in c.counts:
        out //= math.factorial(m)
    return out


def unroll(circuit: EulerCircuit, n: int, k: int, start_symbol: int = 1) -> PackingResult:
    if not 1 <= start_symbol <= n:
        raise ValueError(f"start_symbol must lie in 1..{n}")
    diffs = [e.rep.last for e in circuit.edges]
    m = len(diffs)
    sigma = sum(diffs) % n
    L = n // math.gcd(sigma, n)
    seq = []
    s = start_symbol - 1
    for _ in range(L):
        for d in diffs:
            seq.append(s + 1)
            s = (s + d) % n
    choice = {}
    for e in circuit.edges:
        choice[e.cls] = e.rep.dropped
    covered = m * L
    return PackingResult(n, k, seq, m, sigma, L, covered, math.comb(n, k) - covered, choice)


@dataclass
class RepSearch:
    rep_choice: dict[ClassSig, int]
    default_gcd: int
    gcd: int
    best_reachable_gcd: int
    flips: int
    evaluations: int
    exhausted: bool

    @property
    def obstruction(self) -> bool:
        """True when no representative choice at all gives gcd(sigma, n) = 1."""
        return self.best_reachable_gcd > 1

    def as_dict(self) -> dict:
        return {
            "default_gcd": self.default_gcd,
            "gcd": self.gcd,
            "best_reachable_gcd": self.best_reachable_gcd,
            "obstruction": self.obstruction,
            "flips": self.flips,
            "evaluations": self.evaluations,
            "budget_exhausted": self.exhausted,
        }


def _residue_table(classes, n):
    """Reachable sigma residues with the fewest flips, plus back-pointers."""
    best = {0: 0}
    back = []
    for c in classes:
        default = max(c.singletons)
        nxt, ptr = {}, {}
        for r, flips in best.items():
            for d in c.singletons:
                r2 = (r + class_shift(c, d)) % n
                f2 = flips + (d != default)
                if r2 not in nxt or f2 < nxt[r2]:
                    nxt[r2], ptr[r2] = f2, (r, d)
        back.append(ptr)
        best = nxt
    return best, back


def _evaluate(n, k, classes, choice):
    """Score a representative choice by the packing its main component would give."""
    t = build_transition(n, k, classes=classes, rep_choice=choice)
    comp = main_component(t)
    sigma = sum(t.edges[i].rep.last for i in comp.edge_ids) % n
    L = n // math.gcd(sigma, n)
    return (L, len(comp.edge_ids) * L)


def rep_search(
    n: int,
    k: int,
    classes: list[ClassSig],
    budget: int = DEFAULT_SEARCH_BUDGET,
    seed: int = 0,
) -> RepSearch:
    """Choose dropped values per class to maximize L, then coverage.

    The residue problem (which gcd(sigma, n) values are reachable over all
    per-class choices) is solved exactly first.  Its optimum is tried; if it
    scores worse than expected because a flip split the main component, greedy
    single flips in seeded order take over.  Every candidate is scored on the
    main component it actually produces, and ``budget`` caps those builds.
    """
    classes = sorted(classes)
    default = {c: max(c.singletons) for c in classes}
    sigma0 = sum(class_shift(c, d) for c, d in default.items()) % n
    g0 = math.gcd(sigma0, n)
    table, back = _residue_table(classes, n)
    best_r = min(table, key=lambda r: (math.gcd(r, n), table[r], r))
    g_best = math.gcd(best_r, n)
    m = sum(_orderings(c) for c in classes)
    full = (n // g0, m * (n // g0))
    if g_best >= g0:
        return RepSearch(default, g0, g0, g_best, 0, 0, False)

    choice, r = {}, best_r
    for c, ptr in zip(reversed(classes), reversed(back)):
        r, d = ptr[r]
        choice[c] = d
    evaluations = 1
    score = _evaluate(n, k, classes, choice)
    if score == (n // g_best, m * (n // g_best)):
        return _finish(n, k, classes, choice, default, g0, g_best, evaluations, False)

    best_choice, best_score = dict(default), full
    if score > best_score:
        best_choice, best_score = choice, score
    candidates = [(c, d) for c in classes if len(c.singletons) > 1 for d in c.singletons]
    random.Random(seed).shuffle(candidates)
    exhausted, improved = False, True
    while improved and best_score[0] < n // g_best:
        improved = False
        for c, d in candidates:
            if best_choice[c] == d:
                continue
            if evaluations >= budget:
                exhausted = True
                break
            trial = dict(best_choice)
            trial[c] = d
            evaluations += 1
            s = _evaluate(n, k, classes, trial)
            if s > best_score:
                best_choice, best_score, improved = trial, s, True
        if exhausted:
            break
    return _finish(n, k, classes, best_choice, default, g0, g_best, evaluations, exhausted)


def _finish(n, k, classes, choice, default, g0, g_best, evaluations, exhausted):
    t = build_transition(n, k, classes=classes, rep_choice=choice)
    comp = main_component(t)
    sigma = sum(t.edges[i].rep.last for i in comp.edge_ids) % n
    flips = sum(choice[c] != default[c] for c in classes)
    return RepSearch(choice, g0, math.gcd(sigma, n), g_best, flips, evaluations, exhausted)


def generate_packing(
    n: int,
    k: int,
    filter: str = "awesome",
    rep_strategy: str = "default",
    start_symbol: int = 1,
    seed: int = 0,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> PackingResult:
    """Build a Ucycle packing from the main component of the restricted transition graph."""
    if not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n-2, got n={n}, k={k}")
    if rep_strategy not in ("default", "search"):
        raise ValueError(f"unknown rep_strategy {rep_strategy!r}")
    pool = included_classes(n, k, filter)
    t = build_transition(n, k, classes=pool)
    comp = main_component(t)
    used = comp.classes
    search = None
    if rep_strategy == "search":
        search = rep_search(n, k, used, budget=budget, seed=seed)
        t = build_transition(n, k, classes=used, rep_choice=search.rep_choice)
        comp = main_component(t)
    circuit = eulerian_circuit(t, comp, seed=seed)
    result = unroll(circuit, n, k, start_symbol)
    result.report = {
        "filter": filter,
        "rep_strategy": rep_strategy,
        "seed": seed,
        "classes_included": len(pool),
        "classes_in_main_component": len(comp.classes),
        "classes_outside_main_component": [str(c) for c in pool if c not in set(comp.classes)],
        "gcd": math.gcd(result.sigma, n),
        "full_translates": result.L == n,
    }
    if search is not None:
        result.report["search"] = search.as_dict()
        if search.exhausted:
            result.report["budget_exceeded"] = True
    return result


def require_within_budget(result: PackingResult):
    """Raise if a search ran out of budget; the partial result rides on the exception."""
    if result.report.get("budget_exceeded"):
        raise BudgetExceeded("representative search ran out of budget", best=result)
