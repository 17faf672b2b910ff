import random

import pytest

from ahtorus.errors import PreconditionError, ZeroDirection
from ahtorus.fixed_points import (
    FINITE,
    INFINITE,
    SubtorusDirection,
    directions,
    fixed_components,
    fixed_locus_survey,
    oracle_fixed_points_linear,
)
from ahtorus.polyhedra import Polyhedron
from ahtorus.presentation import ah_presentation, presentation_from_coefficients

EX10 = [[1, 0], [-1, 0], [0, 1], [0, -1]]
EX12 = [[1, 1], [1, 1], [-1, 0], [0, -1]]
EX13 = [[6, 0], [-6, 2], [0, -1], [3, 0], [2, 0]]


def labels(report):
    return [str(l) for l in report.fixed_labels]


def test_example_10_directions():
    pres = ah_presentation(EX10)
    assert labels(fixed_components(pres, (1, 0))) == ["H1"]
    assert labels(fixed_components(pres, (0, 1))) == ["H2"]
    assert labels(fixed_components(pres, (1, 1))) == []


def test_all_point_coefficients_fix_nothing():
    pres = presentation_from_coefficients({(1, 0): Polyhedron.point((0, 1)), (0, 1): Polyhedron.point((2, 0))}, 2)
    for d in directions(2, 2):
        assert fixed_components(pres, d).fixed_labels == ()


def test_isotropy_partition():
    pres = ah_presentation(EX12)
    r = fixed_components(pres, (1, -1))
    assert set(r.isotropy) == {t.label for t in pres.terms}
    assert all(v in (FINITE, INFINITE) for v in r.isotropy.values())
    assert [l for l, v in r.isotropy.items() if v == INFINITE] == list(r.fixed_labels)


def test_oracle_examples():
    assert oracle_fixed_points_linear(EX10, (1, 0)) == {3, 4}
    assert oracle_fixed_points_linear(EX10, (1, 1)) == set()
    assert oracle_fixed_points_linear(EX13, (0, 1)) == {1, 4, 5}


def test_survey_example_10():
    reports = fixed_locus_survey(ah_presentation(EX10), 1)
    assert [r.direction.ell for r in reports] == [(0, 1), (1, -1), (1, 0), (1, 1)]
    assert [r.direction.ell for r in reports if r.fixed_labels] == [(0, 1), (1, 0)]


def test_survey_full_dimensional_label():
    pres = ah_presentation(EX12)
    assert all("E1" in labels(r) for r in fixed_locus_survey(pres, 1))


def test_survey_rejects_zero_height():
    with pytest.raises(ValueError):
        fixed_locus_survey(ah_presentation(EX10), 0)


def test_direction_validation():
    with pytest.raises(ZeroDirection):
        SubtorusDirection((0, 0))
    with pytest.raises(ValueError):
        SubtorusDirection((2, 4))
    assert SubtorusDirection((-1, 2)).canonical().ell == (1, -2)


def test_reports_invariant_under_sign():
    pres = ah_presentation(EX12)
    for d in directions(2, 2):
        a = fixed_components(pres, d.ell)
        b = fixed_components(pres, tuple(-x for x in d.ell))
        assert a.fixed_labels == b.fixed_labels and a.fixed_locus_dim == b.fixed_locus_dim


def test_contracted_exceptional_divisor():
    # on Example 12 the simplex has positive width along (1,1) but E1 is
    # contracted to the origin, so only the origin is fixed
    pres = ah_presentation(EX12)
    r = fixed_components(pres, (1, 1))
    assert labels(r) == ["E1"]
    assert r.fixed_locus_dim == 0
    assert oracle_fixed_points_linear(EX12, (1, 1)) == set()


def test_fixed_locus_dim_matches_oracle_on_random_weights():
    rng = random.Random(7)
    checked = 0
    while checked < 25:
        F = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(rng.choice([4, 5]))]
        try:
            pres = ah_presentation(F)
        except (PreconditionError, ValueError):
            continue
        checked += 1
        for d in directions(2, 2):
            assert fixed_components(pres, d).fixed_locus_dim == len(oracle_fixed_points_linear(F, d)), (F, d)
