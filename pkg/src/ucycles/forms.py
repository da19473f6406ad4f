"""Subsets of [n], their cyclic difference forms, and form representations.

A k-subset ``{s_1 < ... < s_k}`` of ``[n]`` has form ``(s_2 - s_1, ...,
s_k - s_{k-1}, s_1 - s_k mod n)``.  Forms are cyclic, so a :class:`Form`
stores its lexicographically smallest rotation.  A form is *good* when some
entry occurs exactly once; a :class:`FormRep` is the rotation that puts one
such singleton last, with that singleton removed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .errors import BadForm, InvalidDrop


def min_rotation(entries: Sequence[int]) -> tuple[int, ...]:
    entries = tuple(entries)
    return min(entries[i:] + entries[:i] for i in range(len(entries)))


@dataclass(frozen=True, order=True)
class Subset:
    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(self.elements))
        object.__setattr__(self, "elements", elems)
        k = len(elems)
        if not 2 <= k <= self.n - 2:
            raise ValueError(f"need 2 <= k <= n-2, got k={k}, n={self.n}")
        if len(set(elems)) != k or elems[0] < 1 or elems[-1] > self.n:
            raise ValueError(f"{elems} is not a {k}-subset of [{self.n}]")

    @property
    def k(self) -> int:
        return len(self.elements)


@dataclass(frozen=True, order=True)
class Form:
    """A simple form: positive entries summing to ``n``, stored as its minimal rotation."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if not entries or min(entries) < 1:
            raise ValueError(f"form entries must be positive, got {entries}")
        if sum(entries) != self.n:
            raise ValueError(f"form {entries} does not sum to n={self.n}")
        object.__setattr__(self, "entries", min_rotation(entries))

    @property
    def k(self) -> int:
        return len(self.entries)

    def rotations(self) -> Iterator[tuple[int, ...]]:
        e = self.entries
        for i in range(len(e)):
            yield e[i:] + e[:i]

    def period(self) -> int:
        """Smallest positive rotation mapping the form onto itself."""
        e = self.entries
        for p in range(1, len(e) + 1):
            if len(e) % p == 0 and e[p:] + e[:p] == e:
                return p
        return len(e)  # pragma: no cover

    @property
    def is_good(self) -> bool:
        return bool(unique_values(self))

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True, order=True)
class FormRep:
    """A rotation of a good form with one singleton entry removed from the end.

    ``entries`` are ``(f_1, ..., f_{k-1})``; ``dropped`` is ``f_k``.
    """

    entries: tuple[int, ...]
    dropped: int

    @property
    def k(self) -> int:
        return len(self.entries) + 1

    @property
    def n(self) -> int:
        return sum(self.entries) + self.dropped

    @property
    def prefix(self) -> tuple[int, ...]:
        return self.entries[:-1]

    @property
    def suffix(self) -> tuple[int, ...]:
        return self.entries[1:]

    @property
    def last(self) -> int:
        return self.entries[-1]

    def form(self) -> Form:
        return Form(self.n, self.entries + (self.dropped,))

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + f";{self.dropped})"


def form_of(s: Subset) -> Form:
    e = s.elements
    diffs = [e[i + 1] - e[i] for i in range(len(e) - 1)]
    diffs.append((e[0] - e[-1]) % s.n)
    return Form(s.n, tuple(diffs))


def realize(f: Form, start: int = 1) -> Subset:
    """The subset whose smallest-rotation differences start at ``start``."""
    elems, s = [], start - 1
    for d in f.entries:
        elems.append(s % f.n + 1)
        s += d
    return Subset(f.n, tuple(elems))


def sets_of_form(f: Form) -> list[Subset]:
    """All distinct translates of a subset realizing ``f``, sorted."""
    seen = set()
    for i in range(1, f.n + 1):
        seen.add(realize(f, i))
    return sorted(seen)


def set_count(f: Form) -> int:
    """Number of subsets with form ``f``, from the rotational period."""
    return f.n * f.period() // f.k


def pattern_of(x) -> tuple[int, ...]:
    """Multiplicities of the distinct values of a form or class, descending."""
    if isinstance(x, Form):
        counts = Counter(x.entries).values()
    elif hasattr(x, "counts"):
        counts = [m for _, m in x.counts]
    else:
        counts = Counter(x).values()
    return tuple(sorted(counts, reverse=True))


def unique_values(f: Form) -> list[int]:
    return sorted(v for v, m in Counter(f.entries).items() if m == 1)


def choose_rep(f: Form, drop_value: Optional[int] = None) -> FormRep:
    singles = unique_values(f)
    if not singles:
        raise BadForm(f"form {f} has no unique entry")
    if drop_value is None:
        drop_value = singles[-1]
    elif drop_value not in singles:
        raise InvalidDrop(f"{drop_value} is not a unique entry of {f}")
    for rot in f.rotations():
        if rot[-1] == drop_value:
            return FormRep(rot[:-1], drop_value)
    raise AssertionError("unreachable")  # pragma: no cover


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Ordered k-tuples of positive integers summing to n."""
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(k))


def all_forms(n: int, k: int) -> list[Form]:
    """Every simple form for k-subsets of [n], sorted."""
    out = []
    for c in compositions(n, k):
        if c == min_rotation(c):
            out.append(Form(n, c))
    return out
