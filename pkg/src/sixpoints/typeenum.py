"""Enumeration and classification of the 90 configuration types.

A configuration type records which degenerate positions six (possibly
infinitely near) points occupy: a pairwise-nonnegative set of square -2
classes orthogonal to the canonical class, drawn from a 36-element pool
(15 differences E_i - E_j, 20 three-point line classes, one six-point conic
class), taken up to relabelling of the points.  Enumeration grows sets one
class at a time, keeping one canonical representative per relabelling orbit,
and the result is matched against the shipped, human-audited table that
fixes ids and labels.  The match is one-to-one apart from one documented
pair of rows that the sources print twice (see DUPLICATE_CATALOG_ROWS).
Each type carries its intersection graph (an ADE diagram) and the torsion of
the quotient of the orthogonal complement of the canonical class by the
type's span.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from .curves import NegCurveSet, candidate_families, full_neg
from .errors import ConsistencyError, ValidationError
from .lattice import DivisorClass, K, N_POINTS, intersect
from .notation import format_negset, parse_negset


@lru_cache(maxsize=1)
def candidate_pool() -> tuple[DivisorClass, ...]:
    """The 36 candidate classes, in fixed order: 15 differences E_i - E_j with
    i < j, then 20 line classes L - E_i - E_j - E_k with i < j < k, then the
    conic class 2L - E1 - ... - E6.  Index order within each block is
    lexicographic on the point indices."""
    fam = candidate_families()
    return fam.Vpp + fam.Lpp + fam.Qpp


@lru_cache(maxsize=1)
def _pool_index() -> dict[DivisorClass, int]:
    return {c: i for i, c in enumerate(candidate_pool())}


def _perm_table() -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """For each permutation of the point labels, where each pool class goes.

    Entry -1 marks a difference class whose image E_j - E_i with j > i left
    the pool; such a permutation cannot witness an orbit equivalence for a
    set containing that class.
    """
    pool = candidate_pool()
    index = _pool_index()
    pairs = list(itertools.combinations(range(1, N_POINTS + 1), 2))
    triples = list(itertools.combinations(range(1, N_POINTS + 1), 3))
    table = []
    for sigma in itertools.permutations(range(1, N_POINTS + 1)):
        row = [0] * len(pool)
        for k, (i, j) in enumerate(pairs):
            a, b = sigma[i - 1], sigma[j - 1]
            row[k] = index[_root(a, b)] if a < b else -1
        for k, t in enumerate(triples):
            img = tuple(sorted(sigma[p - 1] for p in t))
            row[15 + k] = 15 + triples.index(img)
        row[35] = 35
        table.append((sigma, tuple(row)))
    return tuple(table)


def _root(i: int, j: int) -> DivisorClass:
    m = [0] * N_POINTS
    m[i - 1] = 1
    m[j - 1] = -1
    return DivisorClass(0, m)


@lru_cache(maxsize=1)
def _perms() -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    return _perm_table()


def _canonical_indices(idxs: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lexicographically smallest relabelled image of a pool-index set, with a
    witness permutation.  Only permutations keeping every class in the pool
    compete; the identity always does."""
    best = None
    witness = None
    for sigma, row in _perms():
        mapped = []
        ok = True
        for i in idxs:
            v = row[i]
            if v < 0:
                ok = False
                break
            mapped.append(v)
        if not ok:
            continue
        mapped.sort()
        t = tuple(mapped)
        if best is None or t < best:
            best = t
            witness = sigma
    assert best is not None and witness is not None
    return best, witness


def canonicalize(classes: Iterable[DivisorClass]) -> tuple[tuple[DivisorClass, ...], tuple[int, ...]]:
    """Canonical representative of a candidate set under point relabelling,
    plus one permutation achieving it."""
    idxs = _to_pool_indices(classes)
    canon, sigma = _canonical_indices(idxs)
    pool = candidate_pool()
    return tuple(pool[i] for i in canon), sigma


def _to_pool_indices(classes: Iterable[DivisorClass]) -> tuple[int, ...]:
    index = _pool_index()
    out = []
    for c in classes:
        i = index.get(c)
        if i is None:
            raise ValidationError(f"{c} is not one of the 36 candidate classes")
        if i in out:
            raise ValidationError(f"duplicate class {c}")
        out.append(i)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# integer linear algebra


def smith_invariant_factors(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Nonzero diagonal of the Smith normal form, in divisibility order.

    Smallest-pivot elimination with exact integer arithmetic; a final
    gcd/lcm pass on the diagonal enforces the divisibility chain.
    """
    A = [list(r) for r in rows]
    if not A or not A[0]:
        return ()
    m, n = len(A), len(A[0])
    diag: list[int] = []
    top = 0
    while top < min(m, n):
        pivot = None
        for i in range(top, m):
            for j in range(top, n):
                v = A[i][j]
                if v and (pivot is None or abs(v) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        while True:
            pi, pj = pivot
            A[top], A[pi] = A[pi], A[top]
            for r in A:
                r[top], r[pj] = r[pj], r[top]
            if A[top][top] < 0:
                A[top] = [-x for x in A[top]]
            p = A[top][top]
            dirty = False
            for i in range(top + 1, m):
                if A[i][top]:
                    q = A[i][top] // p
                    A[i] = [x - q * y for x, y in zip(A[i], A[top])]
                    dirty = dirty or bool(A[i][top])
            for j in range(top + 1, n):
                if A[top][j]:
                    q = A[top][j] // p
                    for i in range(m):
                        A[i][j] -= q * A[i][top]
                    dirty = dirty or bool(A[top][j])
            if not dirty:
                break
            pivot = None
            for i in range(top, m):
                for j in range(top, n):
                    v = A[i][j]
                    if v and (pivot is None or abs(v) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
        diag.append(A[top][top])
        top += 1
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = math.gcd(a, b)
            diag[i], diag[j] = g, (a * b // g if g else 0)
    return tuple(diag)


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    return len(smith_invariant_factors(rows))


_KPERP_RANK = 6


def kperp_coordinates(c: DivisorClass) -> tuple[int, ...]:
    """Coordinates of a class orthogonal to K in the fixed basis
    E1-E2, ..., E5-E6, L-E1-E2-E3."""
    if intersect(c, K) != 0:
        raise ValidationError(f"{c} is not orthogonal to the canonical class")
    d = c.d
    resid = [c[i + 1] + (d if i < 3 else 0) for i in range(N_POINTS)]
    coords = list(itertools.accumulate(resid[:5]))
    coords.append(d)
    return tuple(coords)


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class TorsionGroup:
    """Torsion of the quotient of K-perp by the span of a type, as invariant
    factors greater than 1 (empty means torsion free)."""

    invariant_factors: tuple[int, ...]

    def text(self) -> str:
        if not self.invariant_factors:
            return "0"
        return "x".join(f"Z{f}" for f in self.invariant_factors)


@dataclass(frozen=True)
class DynkinGraph:
    """Intersection graph of a type: 0/1 adjacency over its classes, the
    multiset of ADE component labels, and the compact name string."""

    adjacency: tuple[tuple[int, ...], ...]
    components: tuple[str, ...]
    name: str


@dataclass(frozen=True)
class ConfigurationType:
    """One of the 90 types.  ``classes`` is the canonical representative of
    the relabelling orbit; ``neg_label`` is the letter notation of the audited
    catalog row, which is an equivalent but generally different representative."""

    id: int
    label: str
    neg_label: str
    classes: tuple[DivisorClass, ...]
    graph: DynkinGraph
    torsion: TorsionGroup

    def neg_set(self) -> NegCurveSet:
        return full_neg(self.classes)

    def canonical_label(self) -> str:
        return format_negset(self.classes)


def torsion(classes: Iterable[DivisorClass]) -> TorsionGroup:
    rows = [kperp_coordinates(c) for c in classes]
    factors = smith_invariant_factors(rows)
    return TorsionGroup(tuple(f for f in factors if f > 1))


def _component_label(vertices: list[int], adj) -> str:
    k = len(vertices)
    deg = {v: sum(adj[v][w] for w in vertices if w != v) for v in vertices}
    edges = sum(deg.values()) // 2
    if edges != k - 1:
        raise ConsistencyError("intersection graph component is not a tree")
    branch = [v for v in vertices if deg[v] > 2]
    if not branch:
        if k > 5:
            raise ConsistencyError(f"path component of length {k} is not an allowed diagram")
        return f"A_{k}"
    if len(branch) == 1 and deg[branch[0]] == 3:
        b = branch[0]
        legs = []
        for start in (w for w in vertices if adj[b][w]):
            length, prev, cur = 1, b, start
            while True:
                nxt = [w for w in vertices if adj[cur][w] and w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            legs.append(length)
        legs.sort()
        shape = {(1, 1, 1): "D_4", (1, 1, 2): "D_5", (1, 2, 2): "E_6"}.get(tuple(legs))
        if shape:
            return shape
    raise ConsistencyError("intersection graph component is not an allowed ADE diagram")


def _label_key(label: str) -> tuple[str, int]:
    family, rank = label.split("_")
    return family, int(rank)


def _graph_name(labels: Sequence[str]) -> str:
    counts: dict[str, int] = {}
    for lab in labels:
        counts[lab] = counts.get(lab, 0) + 1
    parts = []
    for lab in sorted(counts, key=_label_key):
        n = counts[lab]
        parts.append((str(n) if n > 1 else "") + lab)
    return "".join(parts)


def dynkin_graph(classes: Sequence[DivisorClass]) -> DynkinGraph:
    """Intersection graph with components identified among A1..A5, D4, D5, E6."""
    k = len(classes)
    adj = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            w = intersect(classes[i], classes[j])
            if w not in (0, 1):
                raise ConsistencyError(
                    f"classes {classes[i]} and {classes[j]} meet in {w}; "
                    "a type allows at most one edge between two vertices"
                )
            adj[i][j] = adj[j][i] = w
    unseen = set(range(k))
    labels = []
    while unseen:
        stack = [unseen.pop()]
        comp = list(stack)
        while stack:
            v = stack.pop()
            for w in list(unseen):
                if adj[v][w]:
                    unseen.remove(w)
                    stack.append(w)
                    comp.append(w)
        labels.append(_component_label(comp, adj))
    labels.sort(key=_label_key)
    return DynkinGraph(
        adjacency=tuple(tuple(r) for r in adj),
        components=tuple(labels),
        name=_graph_name(labels),
    )


# ---------------------------------------------------------------------------
# the shipped table and the enumeration that must reproduce it


@dataclass(frozen=True)
class TableRow:
    id: int
    label: str
    neg: str
    torsion: str


# Catalog rows that are one relabelling orbit even though they are printed as
# separate entries: 67 and 71 are carried onto each other by renumbering the
# points 4 -> 6, 5 -> 4, 6 -> 5, and every finer structural reading (towers,
# cluster levels, line incidences) is isomorphic as well.  The ids stay in the
# catalog because downstream references use them; both resolve to the same
# canonical classes.  (Exhaustive enumeration of all pairwise-nonnegative
# pool subsets gives 89 orbits, one fewer than the catalog has rows.)
#
# Row 48 of the shipped table is also a repair: the sources print
# "0: BC, CD; 1: ABC, DEF", which is not a configuration at all (the DEF line
# passes through the infinitely near point D but misses C below it, so it
# meets the curve with class E3 - E4 negatively).  The unique minimal fix,
# "0: BC, CD; 1: ABC, AEF", is valid, has the printed label's graph and the
# printed torsion, and is a representative of the one orbit the other 89 rows
# miss.
DUPLICATE_CATALOG_ROWS: tuple[frozenset[int], ...] = (frozenset({67, 71}),)


def table1_text() -> str:
    """Raw contents of the shipped type table (tab separated, with header)."""
    return resources.files(__package__).joinpath("data/table1.tsv").read_text(
        encoding="utf-8"
    )


@lru_cache(maxsize=1)
def table_rows() -> tuple[TableRow, ...]:
    rows = []
    lines = table1_text().splitlines()
    for line in lines[1:]:
        if not line:
            continue
        id_s, label, neg, tor = line.split("\t")
        rows.append(TableRow(int(id_s), label, neg, tor))
    return tuple(rows)


def _enumerate_orbits() -> list[tuple[int, ...]]:
    """All pairwise-nonnegative subsets of the pool, one canonical index tuple
    per orbit, grown one class at a time for six rounds."""
    pool = candidate_pool()
    n = len(pool)
    compat = [
        [intersect(pool[i], pool[j]) >= 0 for j in range(n)] for i in range(n)
    ]
    orbits: list[tuple[int, ...]] = [()]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(N_POINTS):
        grown = set()
        for t in frontier:
            for c in range(n):
                if c in t:
                    continue
                if all(compat[c][i] for i in t):
                    canon, _ = _canonical_indices(t + (c,))
                    grown.add(canon)
        frontier = sorted(grown)
        orbits.extend(frontier)
    return orbits


def build_types(rows: Sequence[TableRow]) -> tuple[ConfigurationType, ...]:
    """Run the enumeration and match it against the catalog rows.

    The matching must be one-to-one apart from the documented duplicate rows,
    every orbit must be covered, and each row's computed graph and torsion
    must agree with its printed label and torsion column.  Any other mismatch
    is a fatal consistency error; this is the self-test of the whole
    classification.
    """
    pool = candidate_pool()
    by_canon: dict[tuple[int, ...], list[TableRow]] = {}
    for row in rows:
        classes = parse_negset(row.neg)
        canon, _ = _canonical_indices(_to_pool_indices(classes))
        by_canon.setdefault(canon, []).append(row)
    shared = {
        frozenset(r.id for r in group)
        for group in by_canon.values() if len(group) > 1
    }
    if shared != set(DUPLICATE_CATALOG_ROWS):
        raise ConsistencyError(
            f"catalog rows sharing an orbit: {sorted(map(sorted, shared))}; "
            f"expected exactly {sorted(map(sorted, DUPLICATE_CATALOG_ROWS))}"
        )
    orbits = _enumerate_orbits()
    extra = [o for o in orbits if o not in by_canon]
    if extra:
        sample = tuple(pool[i] for i in extra[0])
        raise ConsistencyError(
            f"enumeration found {len(extra)} orbit(s) missing from the catalog, "
            f"e.g. {format_negset(sample)!r}"
        )
    if set(by_canon) - set(orbits):
        missing = [g[0].id for c, g in by_canon.items() if c not in set(orbits)]
        raise ConsistencyError(f"catalog rows {missing} match no enumerated orbit")
    types = []
    for canon in orbits:
        classes = tuple(pool[i] for i in canon)
        graph = dynkin_graph(classes)
        tor = torsion(classes)
        if integer_rank([kperp_coordinates(c) for c in classes]) != len(classes):
            raise ConsistencyError(f"classes of orbit {canon} are linearly dependent")
        for row in by_canon[canon]:
            expected_name = "" if row.id == 1 else (
                row.label[:-1] if row.label[-1].islower() else row.label
            )
            if graph.name != expected_name:
                raise ConsistencyError(
                    f"type {row.id}: computed graph {graph.name!r} does not match label {row.label!r}"
                )
            if tor.text() != row.torsion:
                raise ConsistencyError(
                    f"type {row.id}: computed torsion {tor.text()} does not match catalog {row.torsion}"
                )
            types.append(ConfigurationType(row.id, row.label, row.neg, classes, graph, tor))
    types.sort(key=lambda t: t.id)
    if [t.id for t in types] != list(range(1, len(rows) + 1)):
        raise ConsistencyError("catalog ids are not consecutive from 1")
    return tuple(types)


def distinct_orbit_count() -> int:
    """Number of distinct relabelling orbits behind the catalog (the catalog
    has one more row than there are orbits; see DUPLICATE_CATALOG_ROWS)."""
    return len({tuple(_pool_index()[c] for c in t.classes) for t in enumerate_types()})


@lru_cache(maxsize=1)
def enumerate_types() -> tuple[ConfigurationType, ...]:
    """The 90 configuration types, enumerated and checked against the catalog."""
    return build_types(table_rows())


all_types = enumerate_types


@lru_cache(maxsize=1)
def _types_by_canon() -> dict[tuple[int, ...], ConfigurationType]:
    # duplicate catalog rows resolve to the smaller id
    index = _pool_index()
    out: dict[tuple[int, ...], ConfigurationType] = {}
    for t in enumerate_types():
        out.setdefault(tuple(index[c] for c in t.classes), t)
    return out


def type_by_id(type_id: int) -> ConfigurationType:
    types = enumerate_types()
    if not 1 <= type_id <= len(types):
        raise ValidationError(f"type id {type_id} out of range 1..{len(types)}")
    return types[type_id - 1]


def classify(neg: Iterable[DivisorClass]) -> tuple[ConfigurationType, tuple[int, ...]]:
    """Match a candidate neg set to its type; also returns the relabelling
    that carries the input onto the type's canonical classes."""
    idxs = _to_pool_indices(neg)
    pool = candidate_pool()
    for a, b in itertools.combinations(idxs, 2):
        if intersect(pool[a], pool[b]) < 0:
            raise ValidationError(
                f"classes {pool[a]} and {pool[b]} meet negatively; not a valid neg set"
            )
    canon, sigma = _canonical_indices(idxs)
    t = _types_by_canon().get(canon)
    if t is None:
        raise ConsistencyError("canonical set missing from the enumerated types")
    return t, sigma
