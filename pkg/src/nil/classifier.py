"""Structural classifier for integral closedness and normality.

Five induced edge-weighted configurations decide everything:

  F1  path on 3 vertices, both edges nontrivial, endpoints non-adjacent
  F2  triangle with all three weights nontrivial
  F3  four vertices inducing exactly two disjoint edges, both nontrivial
  F4  chordless odd cycle plus a disjoint nontrivial edge, no edges between
  F5  two vertex-disjoint chordless odd cycles whose connecting edges (if
      any) are all nontrivial

The edge ideal is integrally closed iff no F1/F2/F3 occurs, and normal iff
no F1..F5 occurs.  For every configuration there is an explicit witness
monomial refuting closedness of a specific power; certificates carry the
witness and can be checked against the LP oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations, permutations, product

from .closure import (
    DEFAULT_BOX_BUDGET,
    in_closure_power,
    is_power_integrally_closed,
    normality_scan,
)
from .errors import GraphError, IdealError, ResourceLimitError
from .ideal import contains_power, edge_ideal
from .wgraph import WeightedGraph, chordless_cycles

DEFAULT_CONFIG_CAP = 1000

_KINDS = ("F1", "F2", "F3", "F4", "F5")


class CertificateError(ValueError):
    """The witness formula does not apply to this configuration."""


@dataclass(frozen=True)
class ForbiddenConfig:
    """A located forbidden configuration.

    vertices: sorted vertex tuple of the induced configuration.
    edges: sorted (u, v, w) triples of every edge it induces.
    cycles: canonical cycle tuples (one for F4, two for F5, else empty).
    pendant: the nontrivial disjoint edge of an F4, as (u, v, w).
    connectors: the nontrivial edges joining the two cycles of an F5.
    """

    kind: str
    vertices: tuple
    edges: tuple
    cycles: tuple = ()
    pendant: tuple | None = None
    connectors: tuple = ()


@dataclass(frozen=True)
class Certificate:
    """A (power, witness) pair refuting normality, plus its oracle status.

    verified is one of "unverified", "verified", "failed"; "verified"
    means the witness was confirmed to lie in the closure of I^t but not
    in I^t, both by exact computation.
    """

    config: ForbiddenConfig
    t: int
    witness: tuple
    verified: str = "unverified"
    note: str = ""


@dataclass(frozen=True)
class ClassificationReport:
    integrally_closed: bool
    normal: bool
    found: tuple
    primary_certificate: Certificate | None
    notes: tuple


def _edge_triple(G, u, v):
    return (u, v, G.weight(u, v)) if u < v else (v, u, G.weight(u, v))


def find_f1_f2_f3(G):
    """All F1, F2 and F3 configurations, canonically ordered."""
    configs = []
    for v in G.vertices():
        heavy = sorted(u for u in G.adj[v] if G.weight(u, v) > 1)
        for u, w in combinations(heavy, 2):
            if not G.has_edge(u, w):
                configs.append(
                    ForbiddenConfig(
                        "F1",
                        vertices=tuple(sorted((u, v, w))),
                        edges=tuple(sorted((_edge_triple(G, u, v), _edge_triple(G, v, w)))),
                    )
                )
    for a, b, c in combinations(G.vertices(), 3):
        if (
            G.has_edge(a, b)
            and G.has_edge(a, c)
            and G.has_edge(b, c)
            and G.weight(a, b) > 1
            and G.weight(a, c) > 1
            and G.weight(b, c) > 1
        ):
            configs.append(
                ForbiddenConfig(
                    "F2",
                    vertices=(a, b, c),
                    edges=tuple(
                        sorted(
                            (
                                _edge_triple(G, a, b),
                                _edge_triple(G, a, c),
                                _edge_triple(G, b, c),
                            )
                        )
                    ),
                )
            )
    heavy_edges = G.nontrivial_edges()
    for e, f in combinations(heavy_edges, 2):
        quad = {e[0], e[1], f[0], f[1]}
        if len(quad) < 4:
            continue
        if any(G.has_edge(x, y) for x in e[:2] for y in f[:2]):
            continue
        configs.append(
            ForbiddenConfig(
                "F3",
                vertices=tuple(sorted(quad)),
                edges=tuple(sorted((e, f))),
            )
        )
    configs.sort(key=lambda c: (c.kind, c.vertices, c.edges))
    return configs


def _cycle_edges(G, cycle):
    m = len(cycle)
    return tuple(
        sorted(_edge_triple(G, cycle[i], cycle[(i + 1) % m]) for i in range(m))
    )


def find_f4(G):
    """All (chordless odd cycle, disjoint nontrivial edge) pairs with no
    edge between the cycle and the edge.  Cycle weights are unconstrained."""
    configs = []
    odd = [c for c in chordless_cycles(G) if len(c) % 2 == 1]
    heavy_edges = G.nontrivial_edges()
    for cycle in odd:
        cset = set(cycle)
        for u, v, w in heavy_edges:
            if u in cset or v in cset:
                continue
            if any(G.has_edge(x, y) for x in cycle for y in (u, v)):
                continue
            configs.append(
                ForbiddenConfig(
                    "F4",
                    vertices=tuple(sorted(cset | {u, v})),
                    edges=tuple(sorted(_cycle_edges(G, cycle) + ((u, v, w),))),
                    cycles=(cycle,),
                    pendant=(u, v, w),
                )
            )
    configs.sort(key=lambda c: (c.vertices, c.edges))
    return configs


def find_f5(G):
    """All pairs of vertex-disjoint chordless odd cycles whose connecting
    edges are all nontrivial (the connector set may be empty)."""
    configs = []
    odd = [c for c in chordless_cycles(G) if len(c) % 2 == 1]
    for i, c1 in enumerate(odd):
        s1 = set(c1)
        for c2 in odd[i + 1 :]:
            if s1 & set(c2):
                continue
            cross = [
                _edge_triple(G, x, y)
                for x in c1
                for y in c2
                if G.has_edge(x, y)
            ]
            if any(w == 1 for (_, _, w) in cross):
                continue
            configs.append(
                ForbiddenConfig(
                    "F5",
                    vertices=tuple(sorted(s1 | set(c2))),
                    edges=tuple(
                        sorted(_cycle_edges(G, c1) + _cycle_edges(G, c2) + tuple(cross))
                    ),
                    cycles=(c1, c2),
                    connectors=tuple(sorted(cross)),
                )
            )
    configs.sort(key=lambda c: (c.vertices, c.edges))
    return configs


def _embed(G, assignments):
    vec = [0] * G.n
    for v, value in assignments.items():
        vec[v - 1] = value
    return tuple(vec)


def _f1_f2_roles(G, config):
    """Pick (x1, x2, x3) with w(x1,x2) <= w(x2,x3) [<= w(x1,x3) for F2],
    lexicographically smallest among the valid role assignments."""
    candidates = []
    if config.kind == "F1":
        e1, e2 = config.edges
        (center,) = set(e1[:2]) & set(e2[:2])
        ends = []
        for u, v, w in (e1, e2):
            other = v if u == center else u
            ends.append((other, w))
        for (x1, wa), (x3, wb) in permutations(ends):
            if wa <= wb:
                candidates.append((x1, center, x3, wa, wb))
    else:
        for x1, x2, x3 in permutations(config.vertices):
            a = G.weight(x1, x2)
            b = G.weight(x2, x3)
            c = G.weight(x1, x3)
            if a <= b <= c:
                candidates.append((x1, x2, x3, a, b))
    return min(candidates)


def build_certificate(G, config):
    """The explicit witness monomial and power for a configuration.

    F1/F2 give x1^(a-1) x2^b x3^(b-1) at t=1 (a <= b), F3 gives
    x1^(a-1) x2^(a-1) x3^(b-1) x4^(b-1) at t=1, F4 gives the product of
    the cycle variables times (pendant pair)^(a-1) at t=(|C|+1)/2, and F5
    gives the product of all cycle variables at t=(|C1|+|C2|)/2.

    F4/F5 require every cycle edge to be trivial; otherwise a
    CertificateError directs the caller to the F1/F2/F3 configuration
    that is then guaranteed to exist.
    """
    kind = config.kind
    if kind in ("F1", "F2"):
        x1, x2, x3, a, b = _f1_f2_roles(G, config)
        return Certificate(
            config=config,
            t=1,
            witness=_embed(G, {x1: a - 1, x2: b, x3: b - 1}),
        )
    if kind == "F3":
        (u1, v1, a), (u2, v2, b) = config.edges
        return Certificate(
            config=config,
            t=1,
            witness=_embed(G, {u1: a - 1, v1: a - 1, u2: b - 1, v2: b - 1}),
        )
    if kind in ("F4", "F5"):
        for cycle in config.cycles:
            m = len(cycle)
            for i in range(m):
                if G.weight(cycle[i], cycle[(i + 1) % m]) != 1:
                    raise CertificateError(
                        f"{kind} cycle edge ({cycle[i]}, {cycle[(i + 1) % m]}) is "
                        "nontrivial; fall back to an F1/F2/F3 configuration"
                    )
        if kind == "F4":
            (cycle,) = config.cycles
            u, v, a = config.pendant
            t = (len(cycle) + 1) // 2
            values = {c: 1 for c in cycle}
            values[u] = a - 1
            values[v] = a - 1
            return Certificate(config=config, t=t, witness=_embed(G, values))
        c1, c2 = config.cycles
        t = (len(c1) + len(c2)) // 2
        return Certificate(
            config=config,
            t=t,
            witness=_embed(G, {c: 1 for c in c1 + c2}),
        )
    raise CertificateError(f"unknown configuration kind {kind!r}")


def verify_certificate(G, cert, box_budget=DEFAULT_BOX_BUDGET):
    """Check the witness against the oracle; returns an updated Certificate.

    "verified" means witness in closure(I^t) and witness not in I^t, both
    exact.  Resource errors leave the certificate "unverified" with a
    diagnostic note.
    """
    if len(cert.witness) != G.n:
        raise IdealError(
            f"witness length {len(cert.witness)} does not match vertex count {G.n}"
        )
    I = edge_ideal(G)
    try:
        in_cl = in_closure_power(I, cert.witness, cert.t)
        in_pw = contains_power(I, cert.witness, cert.t)
    except ResourceLimitError as exc:
        return replace(cert, verified="unverified", note=str(exc))
    if in_cl and not in_pw:
        return replace(cert, verified="verified", note="")
    return replace(
        cert,
        verified="failed",
        note=f"in_closure_power={in_cl}, contains_power={in_pw}",
    )


def classify(G, config_cap=DEFAULT_CONFIG_CAP):
    """Full structural verdicts plus the primary certificate.

    integrally_closed iff no F1/F2/F3 is found; normal iff nothing at all
    is found.  The primary certificate comes from the first configuration
    in priority order F1 > F2 > F3 > F4 > F5 (canonical order within a
    kind) whose witness formula applies; the fallback to F1/F2/F3 when an
    F4/F5 carries a nontrivial cycle edge is asserted to succeed.
    """
    if not G.edges:
        raise GraphError("classification needs at least one edge")
    found = find_f1_f2_f3(G) + find_f4(G) + find_f5(G)
    integrally_closed = not any(c.kind in ("F1", "F2", "F3") for c in found)
    normal = not found
    notes = []

    capped = []
    for kind in _KINDS:
        of_kind = [c for c in found if c.kind == kind]
        if len(of_kind) > config_cap:
            notes.append(f"{kind} list truncated to {config_cap} of {len(of_kind)}")
            of_kind = of_kind[:config_cap]
        capped.extend(of_kind)

    primary = None
    if found:
        for config in found:  # already in priority order
            try:
                primary = build_certificate(G, config)
                break
            except CertificateError as exc:
                notes.append(str(exc))
        if primary is None:
            raise RuntimeError(
                "no certificate constructible from any found configuration; "
                "the F1/F2/F3 fallback guarantee is violated"
            )
    return ClassificationReport(
        integrally_closed=integrally_closed,
        normal=normal,
        found=tuple(capped),
        primary_certificate=primary,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Cross-validation harness: classifier vs oracle over a bounded graph family.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphFamily:
    """All labeled graphs on up to max_vertices vertices (at least one
    edge), each present edge weighted from the given set."""

    max_vertices: int
    weights: tuple

    def __post_init__(self):
        if self.max_vertices < 2:
            raise ValueError("need max_vertices >= 2")
        ws = tuple(sorted(set(self.weights)))
        if not ws or any(not isinstance(w, int) or w < 1 for w in ws):
            raise ValueError("weights must be a nonempty set of positive integers")
        object.__setattr__(self, "weights", ws)


@dataclass(frozen=True)
class CrossValidationReport:
    family: GraphFamily
    t_max: int
    graphs_checked: int
    classes_checked: int
    disagreements: tuple
    skipped: tuple
    normal_classes: int
    closed_not_normal_classes: int
    not_closed_classes: int
    note: str

    @property
    def agreed(self):
        return not self.disagreements


DEFAULT_FAMILY_BUDGET = 2 * 10**6

_SCAN_BOUND_NOTE = (
    "oracle scans are bounded at t_max; 'normal' verdicts for larger powers "
    "rest on the forbidden-configuration characterization"
)


def _pair_index_maps(n, pairs):
    index = {p: i for i, p in enumerate(pairs)}
    maps = []
    for perm in permutations(range(1, n + 1)):
        image = lambda v: perm[v - 1]  # noqa: E731
        scatter = [0] * len(pairs)
        for i, (u, v) in enumerate(pairs):
            a, b = image(u), image(v)
            scatter[i] = index[(a, b) if a < b else (b, a)]
        maps.append(tuple(scatter))
    return maps


def _graph_from_tuple(n, pairs, tup):
    return WeightedGraph(
        n, [(u, v, w) for (u, v), w in zip(pairs, tup) if w]
    )


def graph_as_dict(G):
    """Plain-dict form of a graph, used in report payloads."""
    return {"vertices": G.n, "edges": [list(e) for e in G.edge_list()]}


def cross_validate(
    family,
    t_max=3,
    box_budget=DEFAULT_BOX_BUDGET,
    family_budget=DEFAULT_FAMILY_BUDGET,
):
    """Check the classifier against the LP oracle over a whole family.

    For every labeled graph: the integral-closedness verdict must equal
    the oracle's answer at power 1; a "not normal" verdict must come with
    a certificate the oracle verifies; a "normal" verdict must survive
    normality_scan up to t_max.  Oracle work is deduplicated by canonical
    edge set (relabelings share one representative).  Any disagreement is
    reported with the graph serialized; oracle resource errors skip the
    class with a logged reason, never a silent pass.
    """
    total = sum(
        (len(family.weights) + 1) ** (n * (n - 1) // 2) - 1
        for n in range(2, family.max_vertices + 1)
    )
    if total > family_budget:
        raise ResourceLimitError(
            f"family has {total} labeled graphs, over the budget {family_budget}"
        )

    disagreements = []
    skipped = []
    graphs_checked = 0
    classes_checked = 0
    normal_classes = 0
    closed_not_normal = 0
    not_closed = 0
    states = (0,) + family.weights

    for n in range(2, family.max_vertices + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        scatters = _pair_index_maps(n, pairs)
        rep_of = {}
        reps = []
        for tup in product(states, repeat=len(pairs)):
            if not any(tup):
                continue
            if tup in rep_of:
                continue
            reps.append(tup)
            for scatter in scatters:
                image = [0] * len(pairs)
                for i, w in enumerate(tup):
                    image[scatter[i]] = w
                rep_of[tuple(image)] = tup

        rep_verdicts = {}
        for rep in reps:
            G = _graph_from_tuple(n, pairs, rep)
            report = classify(G)
            classes_checked += 1
            entry = (report.integrally_closed, report.normal)
            rep_verdicts[rep] = entry
            try:
                oracle_closed, _ = is_power_integrally_closed(
                    edge_ideal(G), 1, box_budget=box_budget
                )
                if oracle_closed != report.integrally_closed:
                    disagreements.append(
                        {
                            "graph": graph_as_dict(G),
                            "issue": "integral-closedness verdicts differ",
                            "classifier": report.integrally_closed,
                            "oracle": oracle_closed,
                        }
                    )
                    continue
                if not report.normal:
                    cert = verify_certificate(
                        G, report.primary_certificate, box_budget=box_budget
                    )
                    if cert.verified == "unverified":
                        skipped.append(
                            {"graph": graph_as_dict(G), "reason": cert.note}
                        )
                    elif cert.verified != "verified":
                        disagreements.append(
                            {
                                "graph": graph_as_dict(G),
                                "issue": "certificate failed verification",
                                "certificate": {
                                    "kind": cert.config.kind,
                                    "t": cert.t,
                                    "witness": list(cert.witness),
                                },
                                "detail": cert.note,
                            }
                        )
                else:
                    verdict = normality_scan(
                        edge_ideal(G), t_max=t_max, box_budget=box_budget
                    )
                    if verdict.status != "normal_up_to":
                        disagreements.append(
                            {
                                "graph": graph_as_dict(G),
                                "issue": "classifier says normal but oracle found a counterexample",
                                "t": verdict.t,
                                "witness": list(verdict.witness),
                            }
                        )
                if report.integrally_closed and report.normal:
                    normal_classes += 1
                elif report.integrally_closed:
                    closed_not_normal += 1
                else:
                    not_closed += 1
            except ResourceLimitError as exc:
                skipped.append({"graph": graph_as_dict(G), "reason": str(exc)})

        for tup, rep in rep_of.items():
            graphs_checked += 1
            if tup == rep:
                continue
            G = _graph_from_tuple(n, pairs, tup)
            report = classify(G)
            if (report.integrally_closed, report.normal) != rep_verdicts[rep]:
                disagreements.append(
                    {
                        "graph": graph_as_dict(G),
                        "issue": "verdicts differ from canonical relabeling",
                        "labeled": (report.integrally_closed, report.normal),
                        "canonical": rep_verdicts[rep],
                    }
                )

    return CrossValidationReport(
        family=family,
        t_max=t_max,
        graphs_checked=graphs_checked,
        classes_checked=classes_checked,
        disagreements=tuple(disagreements),
        skipped=tuple(skipped),
        normal_classes=normal_classes,
        closed_not_normal_classes=closed_not_normal,
        not_closed_classes=not_closed,
        note=_SCAN_BOUND_NOTE,
    )
