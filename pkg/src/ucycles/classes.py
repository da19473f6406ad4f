"""Patterns, classes, and the counting machinery around them.

A *pattern* is a partition of k (the multiplicities of a form's distinct
values).  A *class* is the multiset of a form's entries; forms that are
rearrangements of each other share a class.  A class is good when some value
occurs once, and awesome when its largest such value exceeds 1.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Optional

from .errors import BudgetExceeded, NotBad, NotGood
from .forms import Form, min_rotation, pattern_of, set_count

Pattern = tuple  # partition of k, parts descending


@dataclass(frozen=True, order=True)
class ClassSig:
    """A multiset of positive form entries, stored as sorted ``(value, multiplicity)`` pairs."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "ClassSig":
        return cls(tuple(sorted(Counter(values).items())))

    @property
    def n(self) -> int:
        return sum(v * m for v, m in self.counts)

    @property
    def k(self) -> int:
        return sum(m for _, m in self.counts)

    @property
    def values(self) -> tuple[int, ...]:
        """All entries with repetition, ascending."""
        return tuple(v for v, m in self.counts for _ in range(m))

    @property
    def singletons(self) -> list[int]:
        return [v for v, m in self.counts if m == 1]

    @property
    def pattern(self) -> Pattern:
        return pattern_of(self)

    def multiplicity(self, value: int) -> int:
        return dict(self.counts).get(value, 0)

    def without(self, value: int) -> tuple[int, ...]:
        vals = list(self.values)
        vals.remove(value)
        return tuple(vals)

    def __str__(self):
        return "[" + " ".join(f"{v}^{m}" for v, m in self.counts) + "]"


@dataclass(frozen=True)
class ClassStatus:
    is_good: bool
    is_awesome: bool
    largest_singleton: Optional[int]


# ----------------------------------------------------------------------
# patterns


def partitions_of(k: int) -> list[Pattern]:
    """All partitions of ``k`` in descending lexicographic order."""

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, cap), 0, -1):
            for tail in gen(rest - part, part):
                yield (part,) + tail

    return list(gen(k, k))


def is_good_pattern(p: Pattern) -> bool:
    return 1 in p


def phi(p_bad: Pattern) -> Pattern:
    """Map a bad pattern to a good one: decrement the smallest part and add a part 1."""
    if is_good_pattern(p_bad):
        raise NotBad(f"pattern {p_bad} already contains a 1")
    parts = list(p_bad)
    parts[-1] -= 1
    return tuple(sorted(parts + [1], reverse=True))


# ----------------------------------------------------------------------
# classes and forms


def classes_of_pattern(p: Pattern, n: int) -> list[ClassSig]:
    """Every class with pattern ``p`` whose entries sum to ``n``, sorted."""
    groups = sorted(Counter(p).items(), reverse=True)  # (multiplicity, how many values)
    out = []

    def assign(gi: int, rest: int, used: frozenset, chosen: list):
        if gi == len(groups):
            if rest == 0:
                out.append(ClassSig.from_values(v for v, m in chosen for _ in range(m)))
            return
        mult, count = groups[gi]
        # weight still owed by later groups, each value at least 1
        later = sum(m * c for m, c in groups[gi + 1:])

        def pick(j: int, lo: int, rest: int, used: frozenset):
            if j == count:
                assign(gi + 1, rest, used, chosen)
                return
            # values within a group are increasing, so later picks in it cost more
            remaining = count - j - 1
            v = lo
            while mult * v + mult * remaining * (v + 1) + later <= rest:
                if v not in used:
                    chosen.append((v, mult))
                    pick(j + 1, v + 1, rest - mult * v, used | {v})
                    chosen.pop()
                v += 1

        pick(0, 1, rest, used)

    assign(0, n, frozenset(), [])
    return sorted(out)


def all_classes(n: int, k: int) -> list[ClassSig]:
    out = []
    for p in partitions_of(k):
        out.extend(classes_of_pattern(p, n))
    return sorted(out)


def multiset_permutations(values: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Distinct orderings of a multiset, in lexicographic order."""
    counts = sorted(Counter(values).items())
    total = sum(m for _, m in counts)
    keys = [v for v, _ in counts]
    left = [m for _, m in counts]
    cur: list[int] = []

    def rec():
        if len(cur) == total:
            yield tuple(cur)
            return
        for i, v in enumerate(keys):
            if left[i]:
                left[i] -= 1
                cur.append(v)
                yield from rec()
                cur.pop()
                left[i] += 1

    yield from rec()


def forms_of_class(c: ClassSig) -> list[Form]:
    """All cyclically distinct arrangements of the class entries."""
    vals = c.values
    if c.singletons:
        # a singleton pins the rotation, so arrangements of the rest are all distinct forms
        s = c.singletons[-1]
        rest = c.without(s)
        return sorted(Form(c.n, perm + (s,)) for perm in multiset_permutations(rest))
    head, rest = vals[0], vals[1:]
    seen = {min_rotation((head,) + perm) for perm in multiset_permutations(rest)}
    return sorted(Form(c.n, f) for f in seen)


def class_of(f: Form) -> ClassSig:
    return ClassSig.from_values(f.entries)


def status_of(c: ClassSig) -> ClassStatus:
    singles = c.singletons
    if not singles:
        return ClassStatus(False, False, None)
    top = max(singles)
    return ClassStatus(True, top > 1, top)


def anchor_class(n: int, k: int) -> ClassSig:
    """The class ``[1^{k-1}; n-k+1]`` every kappa path aims for."""
    return ClassSig.from_values([1] * (k - 1) + [n - k + 1])


def kappa(c: ClassSig) -> ClassSig:
    """One step toward the all-ones class: trade the largest non-top entry for a 1."""
    st = status_of(c)
    if not st.is_good:
        raise NotGood(f"class {c} has no singleton")
    top = st.largest_singleton
    rest = list(c.without(top))
    nxt = max(rest)
    rest.remove(nxt)
    return ClassSig.from_values(rest + [1, top + nxt - 1])


@dataclass
class KappaPath:
    classes: list[ClassSig]
    success: bool


def kappa_path(c: ClassSig) -> KappaPath:
    """Iterate kappa until the anchor class or a different fixed point is reached."""
    target = anchor_class(c.n, c.k)
    path = [c]
    for _ in range(c.k + 1):
        if path[-1] == target:
            return KappaPath(path, True)
        nxt = kappa(path[-1])
        if nxt == path[-1]:
            return KappaPath(path, False)
        path.append(nxt)
    return KappaPath(path, path[-1] == target)


# ----------------------------------------------------------------------
# denumerants

PSI_BUDGET_N = 10**6
PSI_BUDGET_T = 10


def _check_psi_budget(p: Pattern, n: int):
    if n > PSI_BUDGET_N or len(p) > PSI_BUDGET_T:
        raise BudgetExceeded(f"psi count for t={len(p)}, n={n} exceeds budget")


def _denumerant(coeffs: Iterable[int], total: int) -> int:
    """Ordered nonnegative solutions of sum(c_j x_j) = total."""
    if total < 0:
        return 0
    ways = [1] + [0] * total
    for c in coeffs:
        for s in range(c, total + 1):
            ways[s] += ways[s - c]
    return ways[total]


def psi_exact(p: Pattern, n: int) -> int:
    """Ordered tuples x_j >= 0 with sum(p_j x_j) = n."""
    _check_psi_budget(p, n)
    return _denumerant(p, n)


def _set_partitions(items: list) -> Iterator[list[list]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def psi_prime_exact(p: Pattern, n: int) -> int:
    """Ordered tuples of pairwise distinct x_j >= 1 with sum(p_j x_j) = n.

    Moebius inversion over the lattice of set partitions: each block of equal
    variables merges into one variable whose coefficient is the block sum.
    """
    _check_psi_budget(p, n)
    k = sum(p)
    total = 0
    for blocks in _set_partitions(list(range(len(p)))):
        mu = 1
        for b in blocks:
            mu *= (-1) ** (len(b) - 1) * math.factorial(len(b) - 1)
        total += mu * _denumerant([sum(p[j] for j in b) for b in blocks], n - k)
    return total


def class_count(p: Pattern, n: int) -> int:
    """Number of classes with pattern ``p``: psi' with equal multiplicities unordered."""
    sym = 1
    for r in Counter(p).values():
        sym *= math.factorial(r)
    return psi_prime_exact(p, n) // sym


def _gcd(p: Iterable[int]) -> int:
    return reduce(math.gcd, p, 0)


def psi_asym(p: Pattern, n: int) -> float:
    t = len(p)
    return n ** (t - 1) / (math.factorial(t - 1) * math.prod(p))


def psi_prime_asym(p: Pattern, n: int) -> float:
    t, k, q, g = len(p), sum(p), math.prod(p), _gcd(p)
    lead = (n - k) ** (t - 1) / (math.factorial(t - 1) * q * g ** (t - 1))
    if t < 2:
        return lead
    pair = sum(p[i] * p[j] / (p[i] + p[j]) for i in range(t) for j in range(i + 1, t))
    return lead - (n - k) ** (t - 2) / (math.factorial(t - 2) * q * g ** (t - 2)) * pair


def cross_ratio(p_bad: Pattern, n: int) -> Fraction:
    """Exact c(P) / c(phi(P)) for a bad pattern; ``inf`` is never returned, 0/0 gives 0."""
    good = class_count(phi(p_bad), n)
    bad = class_count(p_bad, n)
    return Fraction(bad, good) if good else Fraction(0)


# ----------------------------------------------------------------------
# census

CENSUS_BUDGET = 10**7


@dataclass
class CensusRow:
    n: int
    k: int
    pattern: Pattern
    exact_class_count: int
    asym_class_count: float
    psi_prime_ordered: int
    exact_form_count: int
    exact_set_count: int
    goodness: str
    awesome_set_count: int = 0
    # asymptotic value is meaningless when the pattern gcd does not divide n - k
    gcd_mismatch: bool = False


@dataclass
class NonAwesome:
    exact: int
    asym: Optional[float]
    classes: list[ClassSig] = field(default_factory=list)


@dataclass
class Census:
    n: int
    k: int
    rows: list[CensusRow]
    total_sets: int
    good_sets: int
    bad_sets: int
    awesome_sets: int
    cross_ratios: dict
    non_awesome: NonAwesome

    @property
    def good_fraction(self) -> float:
        return self.good_sets / self.total_sets

    @property
    def awesome_fraction(self) -> float:
        return self.awesome_sets / self.total_sets


def non_awesome_classes(n: int, k: int) -> NonAwesome:
    found = [c for c in all_classes(n, k) if c.singletons == [1]]
    asym = None
    if n > 2 * k + 1:
        asym = 0.0
        for p in partitions_of(k):
            if p.count(1) != 1 or len(p) < 2:
                continue
            t, q = len(p), math.prod(p)
            g = _gcd(x for x in p if x != 1)
            asym += (n - 2 * k - 1) ** (t - 2) / (math.factorial(t - 2) * g ** (t - 2) * q)
    return NonAwesome(len(found), asym, found)


def census(n: int, k: int, budget: int = CENSUS_BUDGET) -> Census:
    total = math.comb(n, k)
    if total > budget:
        raise BudgetExceeded(f"C({n},{k}) = {total} exceeds census budget {budget}")
    rows = []
    good = bad = awesome = 0
    for p in partitions_of(k):
        classes = classes_of_pattern(p, n)
        forms = sets = aw = 0
        for c in classes:
            fs = forms_of_class(c)
            cnt = sum(set_count(f) for f in fs)
            forms += len(fs)
            sets += cnt
            if status_of(c).is_awesome:
                aw += cnt
        is_good = is_good_pattern(p)
        g = _gcd(p)
        rows.append(CensusRow(
            n=n, k=k, pattern=p,
            exact_class_count=len(classes),
            asym_class_count=psi_prime_asym(p, n) if n > k else float("nan"),
            psi_prime_ordered=psi_prime_exact(p, n),
            exact_form_count=forms,
            exact_set_count=sets,
            goodness="good" if is_good else "bad",
            awesome_set_count=aw,
            gcd_mismatch=(n - k) % g != 0,
        ))
        if is_good:
            good += sets
        else:
            bad += sets
        awesome += aw
    ratios = {p: cross_ratio(p, n) for p in partitions_of(k) if not is_good_pattern(p)}
    return Census(n, k, rows, total, good, bad, awesome, ratios, non_awesome_classes(n, k))


def good_set_count(n: int, k: int) -> int:
    return census(n, k).good_sets
