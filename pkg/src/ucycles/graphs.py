"""Transition multigraph T(n,k), class graph H(n,k), and Eulerian circuits.

Vertices of T are (k-2)-tuples of form entries.  Each form representation
``(f_1, ..., f_{k-1}; f_k)`` is a directed edge from ``(f_1, ..., f_{k-2})``
to ``(f_2, ..., f_{k-1})``.
"""

from __future__ import annotations

import json
import random
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Optional

from .classes import (
    ClassSig,
    all_classes,
    anchor_class,
    multiset_permutations,
    status_of,
)
from .errors import InvalidRepChoice, MissingAnchor, NotEulerian
from .forms import FormRep

FILTERS = ("awesome", "good")


@dataclass(frozen=True, order=True)
class Edge:
    rep: FormRep
    cls: ClassSig

    @property
    def tail(self) -> tuple[int, ...]:
        return self.rep.prefix

    @property
    def head(self) -> tuple[int, ...]:
        return self.rep.suffix


@dataclass
class TransitionGraph:
    n: int
    k: int
    edges: list[Edge]
    rep_choice: dict[ClassSig, int]
    vertices: list[tuple[int, ...]] = field(init=False)
    out_edges: dict = field(init=False, repr=False)
    in_edges: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.edges = sorted(self.edges)
        self.out_edges = defaultdict(list)
        self.in_edges = defaultdict(list)
        for i, e in enumerate(self.edges):
            self.out_edges[e.tail].append(i)
            self.in_edges[e.head].append(i)
        self.vertices = sorted(set(self.out_edges) | set(self.in_edges))

    @property
    def anchor(self) -> tuple[int, ...]:
        return (1,) * (self.k - 2)

    def edges_of_class(self, c: ClassSig) -> list[Edge]:
        return [e for e in self.edges if e.cls == c]


def class_edges(c: ClassSig, dropped: int) -> list[Edge]:
    """One edge per form of a good class, each dropping ``dropped``."""
    rest = c.without(dropped)
    return [Edge(FormRep(perm, dropped), c) for perm in multiset_permutations(rest)]


def included_classes(n: int, k: int, filter: str = "awesome") -> list[ClassSig]:
    if filter not in FILTERS:
        raise ValueError(f"filter must be one of {FILTERS}, got {filter!r}")
    out = []
    for c in all_classes(n, k):
        st = status_of(c)
        if st.is_awesome or (filter == "good" and st.is_good):
            out.append(c)
    return out


def build_transition(
    n: int,
    k: int,
    filter: str = "awesome",
    rep_choice: Optional[Mapping[ClassSig, int]] = None,
    classes: Optional[list[ClassSig]] = None,
) -> TransitionGraph:
    """Build T(n,k) restricted to good or awesome classes.

    ``rep_choice`` maps a class to the singleton value its edges drop;
    classes not listed drop their largest singleton.  ``classes`` overrides
    the filter with an explicit class list.
    """
    if not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n-2, got n={n}, k={k}")
    rep_choice = dict(rep_choice or {})
    if classes is None:
        classes = included_classes(n, k, filter)
    chosen, edges = {}, []
    for c in classes:
        d = rep_choice.get(c, max(c.singletons) if c.singletons else None)
        if d is None or c.multiplicity(d) != 1:
            raise InvalidRepChoice(f"{d} is not a singleton of {c}")
        chosen[c] = d
        edges.extend(class_edges(c, d))
    return TransitionGraph(n, k, edges, chosen)


@dataclass
class DegreeReport:
    degrees: dict[tuple[int, ...], tuple[int, int]]
    is_even: bool

    def unbalanced(self) -> list[tuple[int, ...]]:
        return [v for v, (i, o) in self.degrees.items() if i != o]


def degree_report(t: TransitionGraph, edge_ids=None) -> DegreeReport:
    ids = range(len(t.edges)) if edge_ids is None else edge_ids
    deg = defaultdict(lambda: [0, 0])
    for i in ids:
        e = t.edges[i]
        deg[e.head][0] += 1
        deg[e.tail][1] += 1
    table = {v: tuple(d) for v, d in sorted(deg.items())}
    return DegreeReport(table, all(i == o for i, o in table.values()))


@dataclass
class Component:
    vertices: list[tuple[int, ...]]
    edge_ids: list[int]
    classes: list[ClassSig]

    def __len__(self):
        return len(self.edge_ids)


class _DisjointSet:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def components(t: TransitionGraph) -> list[Component]:
    """Weakly connected components, ordered by their smallest vertex."""
    ds = _DisjointSet()
    for v in t.vertices:
        ds.find(v)
    for e in t.edges:
        ds.union(e.tail, e.head)
    verts, eids = defaultdict(list), defaultdict(list)
    for v in t.vertices:
        verts[ds.find(v)].append(v)
    for i, e in enumerate(t.edges):
        eids[ds.find(e.tail)].append(i)
    comps = []
    for root in sorted(verts):
        ids = eids[root]
        classes = sorted({t.edges[i].cls for i in ids})
        comps.append(Component(verts[root], ids, classes))
    return comps


def main_component(t: TransitionGraph) -> Component:
    for comp in components(t):
        if t.anchor in comp.vertices:
            return comp
    raise MissingAnchor(f"vertex {t.anchor} is not in the graph")


@dataclass
class EulerCircuit:
    edges: list[Edge]

    def __len__(self):
        return len(self.edges)


def eulerian_circuit(
    t: TransitionGraph, component: Optional[Component] = None, seed: int = 0
) -> EulerCircuit:
    """Hierholzer's algorithm on one component; starts at the anchor when present.

    Out-edges are tried in sorted order; a nonzero ``seed`` shuffles that order
    reproducibly.
    """
    if component is None:
        component = main_component(t)
    ids = component.edge_ids
    if not ids:
        return EulerCircuit([])
    rep = degree_report(t, ids)
    if not rep.is_even:
        v = rep.unbalanced()[0]
        raise NotEulerian(f"vertex {v} has (in, out) = {rep.degrees[v]}", witness=v)

    members = set(ids)
    out = {v: [i for i in t.out_edges[v] if i in members] for v in component.vertices}
    if seed:
        rng = random.Random(seed)
        for v in sorted(out):
            rng.shuffle(out[v])
    start = t.anchor if t.anchor in out and out[t.anchor] else t.edges[ids[0]].tail

    ptr = dict.fromkeys(out, 0)
    stack = [(start, None)]
    circuit = []
    while stack:
        v, via = stack[-1]
        if ptr[v] < len(out[v]):
            i = out[v][ptr[v]]
            ptr[v] += 1
            stack.append((t.edges[i].head, i))
        else:
            stack.pop()
            if via is not None:
                circuit.append(via)
    circuit.reverse()
    if len(circuit) != len(ids):
        missed = sorted(members - set(circuit))
        raise NotEulerian(
            f"{len(missed)} edges unreachable from {start}",
            witness=t.edges[missed[0]],
        )
    return EulerCircuit([t.edges[i] for i in circuit])


# ----------------------------------------------------------------------
# class graph


@dataclass
class ClassGraph:
    n: int
    k: int
    nodes: list[ClassSig]
    adjacency: dict[ClassSig, set]

    def edges(self) -> list[tuple[ClassSig, ClassSig]]:
        return sorted((a, b) for a in self.nodes for b in self.adjacency[a] if a < b)

    def adjacent(self, a: ClassSig, b: ClassSig) -> bool:
        return b in self.adjacency.get(a, ())


def classes_adjacent(a: ClassSig, b: ClassSig) -> bool:
    """Distinct classes sharing a sub-multiset of size k-2."""
    if a == b or a.k != b.k:
        return False
    ca, cb = dict(a.counts), dict(b.counts)
    common = sum(min(m, cb.get(v, 0)) for v, m in ca.items())
    return common >= a.k - 2


def build_class_graph(n: int, k: int, filter: str = "awesome") -> ClassGraph:
    nodes = included_classes(n, k, filter)
    buckets = defaultdict(set)
    for c in nodes:
        for sub in set(combinations(c.values, k - 2)):
            buckets[sub].add(c)
    adj = {c: set() for c in nodes}
    for group in buckets.values():
        for a in group:
            adj[a] |= group - {a}
    return ClassGraph(n, k, nodes, adj)


@dataclass
class ClassConnectivity:
    components: list[list[ClassSig]]
    anchor_component: Optional[int]
    awesome_connected: bool


def class_connectivity(h: ClassGraph) -> ClassConnectivity:
    seen, comps = set(), []
    for c in h.nodes:
        if c in seen:
            continue
        comp, todo = [], [c]
        seen.add(c)
        while todo:
            x = todo.pop()
            comp.append(x)
            for y in h.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        comps.append(sorted(comp))
    anchor = anchor_class(h.n, h.k)
    idx = next((i for i, comp in enumerate(comps) if anchor in comp), None)
    awesome = [c for c in h.nodes if status_of(c).is_awesome]
    ok = idx is not None and set(awesome) <= set(comps[idx])
    return ClassConnectivity(comps, idx, ok)


def detached_adjacencies(h: ClassGraph, t: TransitionGraph) -> list[tuple[ClassSig, ClassSig]]:
    """H-edges whose two classes share no vertex in T.

    Adjacency in H does not by itself force the class subgraphs of T to meet;
    this lists the pairs where they do not, for the classes present in ``t``.
    """
    touched = defaultdict(set)
    for e in t.edges:
        touched[e.cls].update((e.tail, e.head))
    return [(a, b) for a, b in h.edges() if a in touched and b in touched
            and not touched[a] & touched[b]]


# ----------------------------------------------------------------------
# export


def _vertex_label(v) -> str:
    return "((" + ",".join(map(str, v)) + "))"


def _component_index(t: TransitionGraph):
    comps = components(t)
    where = {}
    for ci, comp in enumerate(comps):
        for v in comp.vertices:
            where[v] = ci
    main = where.get(t.anchor)
    return comps, where, main


def transition_to_json(t: TransitionGraph) -> dict:
    comps, where, main = _component_index(t)
    return {
        "n": t.n,
        "k": t.k,
        "vertices": [list(v) for v in t.vertices],
        "edges": [
            {
                "from": list(e.tail),
                "to": list(e.head),
                "rep": list(e.rep.entries),
                "dropped": e.rep.dropped,
                "class": [[v, m] for v, m in e.cls.counts],
            }
            for e in t.edges
        ],
        "components": [
            {"vertices": [list(v) for v in c.vertices], "edges": c.edge_ids, "main": i == main}
            for i, c in enumerate(comps)
        ],
        "is_even": degree_report(t).is_even,
    }


def transition_to_dot(t: TransitionGraph) -> str:
    comps, where, main = _component_index(t)
    lines = [f'digraph "T_{t.n}_{t.k}" {{']
    for v in t.vertices:
        ci = where[v]
        style = "" if ci == main else ', style=dashed, color=red, xlabel="isolated"'
        lines.append(f'  "{_vertex_label(v)}" [component={ci}{style}];')
    for e in t.edges:
        lines.append(
            f'  "{_vertex_label(e.tail)}" -> "{_vertex_label(e.head)}" '
            f'[label="{e.rep} {e.cls}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def class_graph_to_json(h: ClassGraph) -> dict:
    conn = class_connectivity(h)
    return {
        "n": h.n,
        "k": h.k,
        "vertices": [[[v, m] for v, m in c.counts] for c in h.nodes],
        "edges": [
            {"from": [[v, m] for v, m in a.counts], "to": [[v, m] for v, m in b.counts]}
            for a, b in h.edges()
        ],
        "components": [[str(c) for c in comp] for comp in conn.components],
        "awesome_connected": conn.awesome_connected,
    }


def class_graph_to_dot(h: ClassGraph) -> str:
    conn = class_connectivity(h)
    lines = [f'graph "H_{h.n}_{h.k}" {{']
    for ci, comp in enumerate(conn.components):
        for c in comp:
            st = status_of(c)
            tag = "awesome" if st.is_awesome else ("good" if st.is_good else "bad")
            lines.append(f'  "{c}" [component={ci}, status={tag}];')
    for a, b in h.edges():
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2)
