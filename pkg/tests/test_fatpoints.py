import math
import random

import pytest

from sixpoints import (
    DivisorClass,
    FatPointScheme,
    K,
    ValidationError,
    e,
    enumerate_types,
    fatpoint_class,
    generator_degrees,
    hilbert_I,
    hilbert_function,
    minimal_resolution,
    permute_points,
    proximity_reduce,
    resolution,
    table2,
    type_by_id,
)
from sixpoints.typeenum import candidate_pool


def test_proximity_reduce_examples():
    t2 = type_by_id(2)
    assert proximity_reduce((1, 2, 0, 0, 0, 0), t2) == (2, 1, 0, 0, 0, 0)
    t1 = type_by_id(1)
    assert proximity_reduce((3, 1, 4, 1, 5, 9), t1) == (3, 1, 4, 1, 5, 9)
    assert proximity_reduce((0, 0, 0, 0, 0, 0), t2) == (0, 0, 0, 0, 0, 0)


def test_proximity_reduce_chain():
    t90 = type_by_id(90)
    reduced = proximity_reduce((0, 0, 0, 0, 0, 6), t90)
    assert sum(reduced) == 6
    roots = [(i, j) for i in range(1, 7) for j in range(1, 7)
             if e(i) - e(j) in t90.classes]
    assert all(reduced[i - 1] >= reduced[j - 1] for i, j in roots)


def test_proximity_reduce_rejects_negative():
    with pytest.raises(ValidationError):
        proximity_reduce((1, -1, 0, 0, 0, 0), type_by_id(1))


def test_fatpoint_class():
    assert fatpoint_class((1,) * 6, 3) == -K
    assert fatpoint_class((0,) * 6, 0) == DivisorClass(0, (0,) * 6)
    assert fatpoint_class((3,) * 6, 9) == -3 * K


def test_hilbert_type_86_triple():
    t = type_by_id(86)
    hf = hilbert_function(t.classes, (3,) * 6)
    assert [hf.h_ideal(k) for k in range(8)] == [0, 0, 0, 0, 0, 0, 1, 3]
    for k in range(8, 14):
        assert hf.h_ideal(k) == math.comb(k + 2, 2) - 36
    assert hf.deg_z == 36


def test_hilbert_uniform_single():
    hf = hilbert_function(type_by_id(1).classes, (1,) * 6)
    assert hf.quotient_values() == (1, 3, 6)
    hf = hilbert_function(type_by_id(4).classes, (1,) * 6)
    assert hf.quotient_values() == (1, 3, 5, 6)


def test_hilbert_empty_scheme():
    hf = hilbert_function(type_by_id(5).classes, (0,) * 6)
    assert hf.deg_z == 0 and hf.tail_from == 0
    assert all(hf.h_ideal(k) == math.comb(k + 2, 2) for k in range(6))


def test_generator_degrees_examples():
    assert generator_degrees(type_by_id(1).classes, (1,) * 6) == ((3, 4),)
    assert generator_degrees(type_by_id(4).classes, (1,) * 6) == ((2, 1), (3, 1))
    assert generator_degrees(type_by_id(86).classes, (3,) * 6) == ((6, 1), (8, 3), (9, 3))


def test_resolution_examples():
    res = minimal_resolution(type_by_id(1).classes, (1,) * 6)
    assert res.f0 == ((3, 4),) and res.f1 == ((4, 3),)
    res = minimal_resolution(type_by_id(2).classes, (2,) * 6)
    assert res.f0 == ((5, 3), (6, 1)) and res.f1 == ((7, 3),)
    res = minimal_resolution(type_by_id(86).classes, (3,) * 6)
    assert res.f0 == ((6, 1), (8, 3), (9, 3)) and res.f1 == ((9, 3), (10, 3))


def test_empty_scheme_resolution():
    res = minimal_resolution(type_by_id(1).classes, (0,) * 6)
    assert res.f0 == ((0, 1),) and res.f1 == ()


def test_scheme_wrappers():
    s = FatPointScheme(type_by_id(86), (3,) * 6)
    assert hilbert_I(s).deg_z == 36
    assert resolution(s).f1 == ((9, 3), (10, 3))
    with pytest.raises(ValidationError):
        FatPointScheme(type_by_id(1), (1, 2, 3))


def _random_cases(count, seed):
    rng = random.Random(seed)
    types = enumerate_types()
    for _ in range(count):
        t = rng.choice(types)
        mults = tuple(rng.randint(0, 3) for _ in range(6))
        yield t, mults


def test_duality_and_monotonicity_on_samples():
    for t, mults in _random_cases(12, seed=1):
        hf = hilbert_function(t.classes, mults)
        values = [hf.h_quotient(k) for k in range(hf.tail_from + 3)]
        assert all(a <= b for a, b in zip(values, values[1:]))
        for k in range(hf.tail_from + 3):
            assert hf.h_ideal(k) + hf.h_quotient(k) == math.comb(k + 2, 2)


def test_resolution_identities_on_samples():
    for t, mults in _random_cases(10, seed=2):
        hf = hilbert_function(t.classes, mults)
        res = minimal_resolution(t.classes, mults)
        assert sum(g for _, g in res.f0) - sum(s for _, s in res.f1) == 1
        if res.f1:
            assert min(j for j, _ in res.f1) >= 1 + min(j for j, _ in res.f0)
        top = max([j for j, _ in res.f0] + [j for j, _ in res.f1])
        for k in range(top + 6):
            assert res.dim_f0(k) - res.dim_f1(k) == hf.h_ideal(k)


def test_proximity_reduction_is_transparent():
    t = type_by_id(84)  # long chain of infinitely near points
    raw = (0, 1, 0, 2, 0, 3)
    reduced = proximity_reduce(raw, t)
    assert proximity_reduce(reduced, t) == reduced
    assert hilbert_function(t.classes, raw) == hilbert_function(t.classes, reduced)
    assert minimal_resolution(t.classes, raw) == minimal_resolution(t.classes, reduced)


def test_permutation_equivariance_spot():
    rng = random.Random(3)
    pool = set(candidate_pool())
    done = 0
    types = enumerate_types()
    while done < 6:
        t = rng.choice(types)
        sigma = tuple(rng.sample(range(1, 7), 6))
        image = [permute_points(c, sigma) for c in t.classes]
        if not all(c in pool for c in image):
            continue
        mults = tuple(rng.randint(0, 2) for _ in range(6))
        moved = [0] * 6
        for i in range(6):
            moved[sigma[i] - 1] = mults[i]
        assert hilbert_function(t.classes, mults) == hilbert_function(image, moved)
        assert minimal_resolution(t.classes, mults) == minimal_resolution(image, moved)
        done += 1


def test_table2_shape():
    report = table2()
    assert set(report.cases) == {"1", "2a", "2b1", "2b2", "2b3"}
    assert sum(len(v) for v in report.cases.values()) == 90
    assert report.cases["2a"] == (34, 68, 87)
    assert report.cases["2b3"] == (17, 41, 45, 65, 75, 77, 80, 86)
