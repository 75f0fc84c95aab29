import itertools

import pytest

from conjlab.surfaces import (
    EmbeddingClass,
    RotationSystem,
    all_k5_systems,
    classify_k5,
    face_lengths,
    genus,
    relabel_system,
    reverse_system,
    trace_faces,
)

PLANAR_K4 = RotationSystem(((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)))


def test_rotation_validation():
    with pytest.raises(ValueError):
        RotationSystem(((1,), ()))          # not symmetric
    with pytest.raises(ValueError):
        RotationSystem(((0,),))             # loop
    with pytest.raises(ValueError):
        RotationSystem(((1, 1), (0, 0)))    # repeated dart


def test_text_roundtrip():
    text = PLANAR_K4.to_text()
    assert RotationSystem.from_text(text) == PLANAR_K4


def test_trace_faces_k4_planar():
    faces = trace_faces(PLANAR_K4)
    assert face_lengths(PLANAR_K4) == [3, 3, 3, 3]
    darts = [d for f in faces for d in f]
    assert len(darts) == len(set(darts)) == 12  # darts partitioned
    assert genus(PLANAR_K4) == 0


def test_cycle_has_two_faces():
    for n in (3, 5, 8):
        rs = RotationSystem(tuple(((i - 1) % n, (i + 1) % n) for i in range(n)))
        assert face_lengths(rs) == [n, n]
        assert genus(rs) == 0


def test_disconnected_refused():
    two_edges = RotationSystem(((1,), (0,), (3,), (2,)))
    with pytest.raises(ValueError):
        trace_faces(two_edges)


def test_dart_conservation_on_k5_sample():
    for rs in all_k5_systems()[::500]:
        faces = trace_faces(rs)
        darts = [d for f in faces for d in f]
        assert len(darts) == len(set(darts)) == 20


def test_reversal_involution_and_invariance():
    systems = all_k5_systems()
    for rs in systems[::351]:
        assert reverse_system(reverse_system(rs)) == rs.canonical()
        assert genus(reverse_system(rs)) == genus(rs)
        perm = (2, 0, 4, 1, 3)
        assert genus(relabel_system(rs, perm)) == genus(rs)


def test_classify_k5():
    cls = classify_k5()
    assert sum(cls.genus_counts.values()) == 7776
    assert min(cls.genus_counts) == 1          # K5 is toroidal, not planar
    assert cls.genus_counts[1] == 462
    # the maximum-genus layer has 13 classes under relabelling + reversal
    assert cls.class_counts(True)[3] == 13
    assert cls.class_counts(False)[3] == 24
    assert 0 not in cls.genus_counts
    for g, classes in cls.classes_with_reversal.items():
        assert sum(c.orbit_size for c in classes) == cls.genus_counts[g]
        for c in classes:
            assert genus(c.representative) == g


def test_orbit_sizes_partition_without_reversal():
    cls = classify_k5()
    total = sum(c.orbit_size
                for classes in cls.classes_without_reversal.values()
                for c in classes)
    assert total == 7776
