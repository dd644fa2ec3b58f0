import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sixpoints import (
    ConsistencyError,
    DivisorClass,
    ValidationError,
    canonicalize,
    candidate_pool,
    classify,
    dynkin_graph,
    e,
    enumerate_types,
    parse_negset,
    permute_points,
    smith_invariant_factors,
    torsion,
    type_by_id,
)
from sixpoints.typeenum import (
    DUPLICATE_CATALOG_ROWS,
    TableRow,
    build_types,
    distinct_orbit_count,
    integer_rank,
    kperp_coordinates,
    table_rows,
)


def test_pool_order():
    pool = candidate_pool()
    assert len(pool) == 36
    assert pool[0] == e(1) - e(2)
    assert pool[14] == e(5) - e(6)
    assert pool[15] == DivisorClass(1, (-1, -1, -1, 0, 0, 0))
    assert pool[35] == DivisorClass(2, (-1, -1, -1, -1, -1, -1))


def test_canonicalize_identifies_equivalent_pairs():
    a, _ = canonicalize([e(1) - e(3), e(2) - e(4)])
    b, _ = canonicalize([e(1) - e(2), e(3) - e(4)])
    assert a == b


def test_canonicalize_trivial():
    assert canonicalize([])[0] == ()
    for i, j in itertools.combinations(range(1, 7), 2):
        canon, _ = canonicalize([e(i) - e(j)])
        assert canon == (e(1) - e(2),)


def test_canonicalize_witness_and_idempotence():
    classes = parse_negset("0: DE; 1: ABC")
    canon, sigma = canonicalize(classes)
    assert {permute_points(c, sigma) for c in classes} == set(canon)
    again, _ = canonicalize(canon)
    assert again == canon


perms = st.permutations(list(range(1, 7)))


@settings(max_examples=50, deadline=None)
@given(st.sets(st.sampled_from(candidate_pool()), max_size=4), perms)
def test_canonicalize_is_orbit_invariant(subset, sigma):
    classes = sorted(subset)
    image = [permute_points(c, tuple(sigma)) for c in classes]
    pool = set(candidate_pool())
    if not all(c in pool for c in image):
        return
    assert canonicalize(classes)[0] == canonicalize(image)[0]


def test_smith_invariant_factors():
    assert smith_invariant_factors([]) == ()
    assert smith_invariant_factors([[0, 0], [0, 0]]) == ()
    assert smith_invariant_factors([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == (1, 1, 1)
    assert smith_invariant_factors([[2, 0], [0, 3]]) == (1, 6)
    assert smith_invariant_factors([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]) == (2, 2, 156)


def test_integer_rank():
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([kperp_coordinates(c) for c in candidate_pool()]) == 6


def test_torsion_examples():
    assert torsion(parse_negset("0: BC, DE; 1: ABC, ADE")).invariant_factors == (2,)
    assert torsion(parse_negset("0: AB, BC, DE, EF; 1: ABC, DEF")).invariant_factors == (3,)
    assert torsion([e(1) - e(2)]).invariant_factors == ()


def test_torsion_rejects_classes_off_kperp():
    with pytest.raises(ValidationError):
        torsion([e(1)])


def test_dynkin_examples():
    assert dynkin_graph(parse_negset("0: AB, BC")).name == "A_2"
    assert dynkin_graph(parse_negset("0: AB, BC, CD, DE, EF; 1: ABC")).name == "E_6"
    assert dynkin_graph(parse_negset("0: BC, CD, DE; 1: ABC")).name == "D_4"
    assert dynkin_graph(parse_negset("0: AB, BC, CD, DE; 1: ABC")).name == "D_5"
    assert dynkin_graph([]).name == ""
    assert dynkin_graph(parse_negset("0: AB, BC, DE, EF; 1: ABC")).name == "A_12A_2"


def test_enumeration_counts():
    types = enumerate_types()
    assert len(types) == 90
    assert [t.id for t in types] == list(range(1, 91))
    assert distinct_orbit_count() == 89
    singletons = [t.id for t in types if len(t.classes) == 1]
    assert singletons == [2, 3, 4]
    assert max(len(t.classes) for t in types) == 6
    labels = [t.label for t in types]
    assert len(set(labels)) == 90


def test_catalog_rows_round_trip_through_letters():
    from sixpoints import format_negset

    for row in table_rows():
        classes = parse_negset(row.neg)
        assert format_negset(classes) == row.neg


def test_every_type_is_linearly_independent():
    for t in enumerate_types():
        rows = [kperp_coordinates(c) for c in t.classes]
        assert integer_rank(rows) == len(t.classes)


def test_edge_weights_are_simple():
    from sixpoints import intersect

    for t in enumerate_types():
        for a, b in itertools.combinations(t.classes, 2):
            assert intersect(a, b) in (0, 1)


def test_graph_determines_torsion():
    by_graph = {}
    for t in enumerate_types():
        by_graph.setdefault(t.graph.name, set()).add(t.torsion.invariant_factors)
    assert all(len(v) == 1 for v in by_graph.values())


def test_classify_examples():
    t, _ = classify(parse_negset("0: AB, CD; 2: ABCDEF"))
    assert (t.id, t.label) == (16, "3A_1d")
    t, _ = classify([])
    assert t.id == 1
    t, _ = classify([e(1) - e(2)])
    assert (t.id, t.label) == (2, "A_1a")


def test_classify_witness_maps_input_to_canonical():
    classes = parse_negset("0: DE; 1: ABC")
    t, sigma = classify(classes)
    assert t.id == 7
    assert {permute_points(c, sigma) for c in classes} == set(t.classes)


def test_classify_resolves_duplicate_rows_to_smaller_id():
    # rows 67 and 71 of the published catalog are the same configuration
    r67 = type_by_id(67)
    r71 = type_by_id(71)
    assert r67.classes == r71.classes
    t, _ = classify(parse_negset(r71.neg_label))
    assert t.id == 67


def test_classify_errors():
    with pytest.raises(ValidationError, match="candidate"):
        classify([e(1)])
    with pytest.raises(ValidationError, match="negatively"):
        classify([e(1) - e(2), e(1) - e(3)])


def test_labels_agree_with_graphs():
    for t in enumerate_types():
        if t.id == 1:
            assert t.graph.name == ""
            continue
        expected = t.label[:-1] if t.label[-1].islower() else t.label
        assert t.graph.name == expected


def test_twenty_graphs():
    names = {t.graph.name for t in enumerate_types() if t.graph.name}
    assert len(names) == 20


def test_build_types_rejects_corrupted_catalog():
    rows = list(table_rows())
    # moving row 2 onto row 3's orbit creates an undeclared duplicate
    bad = rows.copy()
    bad[1] = TableRow(2, "A_1a", "1: ABC", "0")
    with pytest.raises(ConsistencyError):
        build_types(bad)
    # torsion disagreeing with the computed group
    bad = rows.copy()
    bad[4] = TableRow(5, "2A_1a", "0: AB, CD", "Z2")
    with pytest.raises(ConsistencyError):
        build_types(bad)


def test_duplicate_rows_constant_matches_catalog():
    assert DUPLICATE_CATALOG_ROWS == (frozenset({67, 71}),)
