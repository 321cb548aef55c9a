"""Negative class enumeration, admissibility, stratum labels."""

from fractions import Fraction as Q

import pytest

from ruledcone.cone import normalized, same_chamber
from ruledcone.lattice import (B, E, F, SurfaceParams, adjunction_genus, codim,
                               pair)
from ruledcone.strata import (IN_FAMILIES, OPEN_LABEL, OUTSIDE_FAMILIES,
                              cod_of_set, is_admissible, label_for,
                              negative_classes, stratum_labels,
                              wide_negative_classes)

P2 = SurfaceParams(2)
U = normalized(Q(5, 2), Q(3, 10))


def test_negative_classes_enumeration():
    classes = negative_classes(U, P2, 20)
    names = [str(a) for a in classes]
    for required in ("E", "F-E", "B-F", "B-2F", "B-F-E", "B-2F-E"):
        assert required in names
    assert "B-3F" not in names  # area 5/2 - 3 <= 0
    assert "B-3F-E" not in names
    # sorted by codimension then k
    codims = [codim(a, P2) for a in classes]
    assert codims == sorted(codims)


def test_negative_classes_always_contain_exceptional_pair():
    for mu, c in [(Q(3, 2), Q(1, 8)), (Q(7), Q(9, 10)), (Q(1), Q(1, 2))]:
        classes = negative_classes(normalized(mu, c), P2, 4)
        assert E in classes and F - E in classes


def test_negative_classes_cod_max_zero():
    assert negative_classes(U, P2, 0) == [E, F - E]


def test_negative_classes_genus_and_adjunction():
    for a in negative_classes(normalized(Q(13, 2), Q(1, 3)), P2, 60):
        genus = adjunction_genus(a, P2)
        assert genus in (0, P2.g)
        assert pair(a, a) < 0


def test_admissibility():
    assert not is_admissible([B - 2 * F, B - 3 * F])  # pairing -5
    assert is_admissible([B - 2 * F - E, E])  # pairing 1
    assert is_admissible([])
    assert is_admissible([B - 4 * F])
    assert is_admissible([E, F - E])
    assert not is_admissible([B - F, B - F - E])
    assert not is_admissible([B - F - E, B - 2 * F - E])


def test_admissibility_monotone_under_subsets():
    import itertools
    classes = [E, F - E, B - 2 * F - E]
    assert is_admissible(classes)
    for r in range(len(classes) + 1):
        for sub in itertools.combinations(classes, r):
            assert is_admissible(sub)


def test_cod_of_set():
    assert cod_of_set([B - F - E], P2) == 8
    assert cod_of_set([E, F - E], P2) == 0
    for k in range(1, 4):
        assert cod_of_set([B - k * F, E], P2) == codim(B - k * F, P2)
    with pytest.raises(ValueError):
        cod_of_set([B - 2 * F, B - 3 * F], P2)


def test_stratum_labels_enumeration():
    labels = stratum_labels(U, P2, 12)
    as_pairs = [(lb.name, lb.codim) for lb in labels]
    assert as_pairs == [
        ("open", 0), ("B-E", 4), ("B-F", 6), ("B-F-E", 8),
        ("B-2F", 10), ("B-2F-E", 12),
    ]
    # no label carries two section-type classes: they pair negatively
    for lb in labels:
        assert len(lb.core) <= 1


def test_stratum_labels_cod_max_zero():
    assert stratum_labels(U, P2, 0) == [OPEN_LABEL]


def test_stratum_labels_constant_on_chambers():
    for (m1, c1), (m2, c2) in [
        ((Q(5, 2), Q(3, 10)), (Q(5, 2), Q(2, 5))),
        ((Q(5, 2), Q(3, 10)), (Q(23, 8), Q(1, 2))),
        ((Q(9, 8), Q(1, 4)), (Q(15, 8), Q(15, 16))),
    ]:
        u1, u2 = normalized(m1, c1), normalized(m2, c2)
        assert same_chamber(u1, u2)
        assert negative_classes(u1, P2) == negative_classes(u2, P2)
        assert stratum_labels(u1, P2) == stratum_labels(u2, P2)


def test_enumeration_constant_per_chamber_exhaustive():
    # one enumeration per chamber index over a whole grid, no exceptions
    from ruledcone.cone import chamber_of

    per_chamber = {}
    step = Q(1, 8)
    mu = 1 + step
    while mu <= 4:
        c = step
        while c < 1:
            u = normalized(mu, c)
            idx = chamber_of(u).index
            key = tuple(negative_classes(u, P2))
            per_chamber.setdefault(idx, set()).add(key)
            c += step
        mu += step
    assert per_chamber
    for idx, variants in per_chamber.items():
        assert len(variants) == 1, f"chamber {idx} saw {len(variants)} sets"


def test_label_full_classes_and_names():
    lb = label_for([B - 2 * F], P2)
    assert lb.codim == 10
    assert lb.name == "B-2F"
    assert set(lb.classes()) == {B - 2 * F, E, F - E}
    assert OPEN_LABEL.name == "open" and OPEN_LABEL.is_open
    with pytest.raises(ValueError):
        label_for([E], P2)  # codim 0 is implicit, not a core


def test_label_json_shape():
    lb = label_for([B - 2 * F], P2)
    assert lb.as_json() == {"core": ["B-2F"], "codim": 10}


def test_wide_scan_reduces_to_families_for_sections():
    found = wide_negative_classes(U, P2, 3)
    family = {a for a, status in found if status == IN_FAMILIES}
    assert family == set(negative_classes(U, P2))
    # every p <= 1 survivor is in the families
    for a, status in found:
        if a.p <= 1:
            assert status == IN_FAMILIES


def test_wide_scan_surfaces_multisection_candidates():
    found = dict(wide_negative_classes(U, P2, 3))
    two_b_minus_e = 2 * B - E
    assert found.get(two_b_minus_e) == OUTSIDE_FAMILIES
    assert adjunction_genus(two_b_minus_e, P2) == 2 * P2.g - 1
