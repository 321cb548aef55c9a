"""Cone validity, chamber identification, walls and the figure model."""

from fractions import Fraction as Q

import pytest

from ruledcone.cone import (ChamberId, active_walls, area, chamber_of,
                            figure_data, is_valid, normalized, same_chamber,
                            validity_violations)
from ruledcone.lattice import B, E, F, parse_class


def oracle_chamber_index(mu: Q, c: Q) -> int:
    """Independent inequality scan over both chamber families."""
    matches = []
    top = int(mu) + 2
    for k in range(0, top):
        if area(normalized(mu, c), B - k * F) > 0 and \
           area(normalized(mu, c), B - k * F - E) <= 0:
            matches.append(2 * k)
        if area(normalized(mu, c), B - k * F - E) > 0 and \
           area(normalized(mu, c), B - (k + 1) * F) <= 0:
            matches.append(2 * k + 1)
    assert len(matches) == 1, (mu, c, matches)
    return matches[0]


def test_area_examples():
    u = normalized(Q(5, 2), Q(3, 10))
    assert area(u, B - 2 * F - E) == Q(1, 5)
    assert area(u, F) == 1
    # on the slanted wall by construction
    for k in range(0, 5):
        c = Q(1, 3)
        assert area(normalized(k + c, c), B - k * F - E) == 0


def test_validity():
    assert is_valid(normalized(2, Q(1, 2)))
    assert not is_valid(normalized(2, 1))
    assert any("e_1 < 1" in v for v in validity_violations(normalized(2, 1)))
    assert not is_valid(normalized(Q(1, 2), Q(1, 4)))
    assert any("policy" in v
               for v in validity_violations(normalized(Q(1, 2), Q(1, 4))))
    # the policy violation is the only failure for that point
    assert is_valid(normalized(Q(1, 2), Q(1, 4)), policy=False)
    assert not is_valid(normalized(1, 2), policy=False)
    assert not is_valid(normalized(Q(1, 2), Q(3, 4)), policy=False)  # e >= mu


def test_validity_multi_blowup():
    from ruledcone.cone import NormalizedClass
    ok = NormalizedClass(Q(3), (Q(1, 3), Q(1, 4)))
    assert is_valid(ok)
    assert not is_valid(NormalizedClass(Q(3), (Q(1, 4), Q(1, 3))))  # unsorted
    assert not is_valid(NormalizedClass(Q(3), (Q(2, 3), Q(1, 2))))  # sum >= 1


def test_chamber_examples():
    assert chamber_of(normalized(Q(5, 2), Q(3, 10))).index == 5
    assert chamber_of(normalized(1, Q(1, 2))).index == 1
    assert chamber_of(normalized(3, Q(1, 2))).index == 5
    assert chamber_of(normalized(Q(5, 2), Q(2, 5))).index == 5
    assert chamber_of(normalized(Q(11, 5), Q(3, 10))).index == 4


def test_wall_points_belong_to_the_left_chamber():
    # a point with mu = k lies on the wall B-kF and lands in chamber 2k-1
    for k in range(1, 6):
        for c in (Q(1, 4), Q(1, 2), Q(7, 8)):
            assert chamber_of(normalized(k, c)).index == 2 * k - 1
    # a point on the slanted wall mu = k + c lands in chamber 2k
    for k in range(1, 5):
        for c in (Q(1, 4), Q(1, 2)):
            assert chamber_of(normalized(k + c, c)).index == 2 * k


def test_chamber_matches_oracle_on_grid():
    step = Q(1, 16)
    mu = 1 + step
    while mu <= 4:
        c = step
        while c < 1:
            u = normalized(mu, c)
            assert chamber_of(u).index == oracle_chamber_index(mu, c)
            c += step
        mu += step


def test_chamber_requires_validity():
    with pytest.raises(ValueError):
        chamber_of(normalized(Q(1, 2), Q(1, 4)))


def test_chamber_id_fields():
    cid = ChamberId(5)
    assert cid.k == 2 and not cid.is_even
    assert cid.inequalities() == ["mu > 2 + c", "mu <= 3"]
    left, right = cid.defining_classes()
    assert left == parse_class("B-2F-E") and right == parse_class("B-3F")
    with pytest.raises(ValueError):
        ChamberId(0)


def test_same_chamber():
    a = normalized(Q(5, 2), Q(3, 10))
    assert same_chamber(a, a)
    assert same_chamber(a, normalized(Q(5, 2), Q(2, 5)))
    assert not same_chamber(a, normalized(Q(11, 5), Q(3, 10)))


def test_chamber_locally_constant():
    # small moves that cross no wall keep the index
    u = normalized(Q(5, 2), Q(3, 10))
    idx = chamber_of(u).index
    for dmu, dc in [(Q(1, 64), 0), (-Q(1, 64), 0), (0, Q(1, 64)),
                    (0, -Q(1, 64)), (Q(1, 128), Q(1, 128))]:
        assert chamber_of(normalized(u.mu + dmu, u.c + dc)).index == idx


def test_active_walls():
    assert active_walls(normalized(2, Q(1, 2)), 8) == \
        [w for w in active_walls(normalized(2, Q(1, 2)), 8)]
    names = [w.name for w in active_walls(normalized(2, Q(1, 2)), 8)]
    assert names == ["B-2F"]
    names = [w.name for w in active_walls(normalized(Q(7, 4), Q(3, 4)), 8)]
    assert names == ["B-F-E"]
    assert active_walls(normalized(2, Q(1, 3))) == \
        active_walls(normalized(2, Q(1, 3)), 3)
    assert not active_walls(normalized(Q(5, 2), Q(3, 10)), 8)


def test_figure_walls_for_window():
    model = figure_data(4)
    verticals = [seg for seg in model.walls if seg.start[0] == seg.end[0]]
    slants = [seg for seg in model.walls if seg.start[0] != seg.end[0]]
    assert [str(s.curve_class) for s in verticals] == ["B-F", "B-2F", "B-3F"]
    assert [s.start[0] for s in verticals] == [1, 2, 3]
    assert [str(s.curve_class) for s in slants] == ["B-E", "B-F-E", "B-2F-E"]
    assert [(s.start, s.end) for s in slants] == \
        [((0, 0), (1, 1)), ((1, 0), (2, 1)), ((2, 0), (3, 1))]
    assert [str(s.curve_class) for s in model.boundaries] == ["E", "F-E"]


def test_figure_explicit_k_max():
    model = figure_data(4, k_max=3)
    verticals = [s for s in model.walls if s.start[0] == s.end[0]]
    slants = [s for s in model.walls if s.start[0] != s.end[0]]
    assert len(verticals) == 3 and len(slants) == 3


def test_figure_segments_lie_on_zero_loci():
    model = figure_data(5)
    for seg in model.walls + model.boundaries:
        pts = [seg.start, seg.end,
               ((seg.start[0] + seg.end[0]) / 2, (seg.start[1] + seg.end[1]) / 2)]
        for mu, c in pts:
            u = normalized(mu, c)  # may be invalid (boundary); area is linear anyway
            assert area(u, seg.curve_class) == 0


def test_figure_slant_passes_through_midpoint():
    model = figure_data(4)
    slant1 = [s for s in model.walls
              if str(s.curve_class) == "B-F-E"][0]
    mid = ((slant1.start[0] + slant1.end[0]) / 2,
           (slant1.start[1] + slant1.end[1]) / 2)
    assert mid == (Q(3, 2), Q(1, 2))


def test_figure_labels_sit_in_their_chambers():
    model = figure_data(Q(9, 2))
    for label in model.labels:
        mu, c = label.position
        assert chamber_of(normalized(mu, c)).index == label.chamber.index


def test_figure_even_region_between_vertical_and_slant():
    # the region left of the slant with the same k is even
    model = figure_data(4)
    for label in model.labels:
        if label.chamber.is_even:
            k = label.chamber.k
            mu, c = label.position
            assert k < mu <= k + c


def test_figure_output_deterministic():
    a, b = figure_data(4), figure_data(4)
    assert a.to_csv() == b.to_csv()
    assert a.to_svg() == b.to_svg()
    assert a.to_csv().startswith("wall_class,x1,y1,x2,y2\n")
    assert a.to_svg(scale=50) != a.to_svg(scale=100)


def test_figure_rejects_small_window():
    with pytest.raises(ValueError):
        figure_data(1)


def test_wall_sign_determines_index_threshold():
    # area(u, B-kF) > 0 exactly on chambers of index >= 2k, and
    # area(u, B-kF-E) > 0 exactly on chambers of index >= 2k+1
    step = Q(1, 8)
    mu = 1 + step
    while mu <= 5:
        c = step
        while c < 1:
            u = normalized(mu, c)
            idx = chamber_of(u).index
            for k in range(1, 6):
                assert (area(u, B - k * F) > 0) == (idx >= 2 * k)
                assert (area(u, B - k * F - E) > 0) == (idx >= 2 * k + 1)
            c += step
        mu += step
