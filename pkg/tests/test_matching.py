import json

import pytest

from hypermorse import faces, matching
from hypermorse.matching import EMPTY, MatchParams, VectorField

P21 = MatchParams(2, 1)

# the worked pairs for n=8, k=3 with m0=2, m1=1
EXAMPLE_PAIRS = [
    ("0100*0*1", "1a", "0100*0**", "2a"),
    ("0*00*0*1", "1b", "0*00*0**", "2b"),
    ("***0*0*1", "1c", "***0*0**", "2c"),
    ("0100*1*0", "3", "*100*1*0", "4"),
    ("0****0*1", "5", "*****0*1", "6"),
    ("0****0**", "7", "*****0**", "8"),
    ("10010100", "9", "1*010*00", "10"),
]


@pytest.mark.parametrize("lo,lo_tag,hi,hi_tag", EXAMPLE_PAIRS)
def test_worked_example_pairs(lo, lo_tag, hi, hi_tag):
    assert matching.classify(lo, 8, 3, P21) == lo_tag
    assert matching.classify(hi, 8, 3, P21) == hi_tag
    assert matching.partner(lo, 8, 3, P21) == hi
    assert matching.partner(hi, 8, 3, P21) == lo


def test_base_vertex_pairs_with_empty():
    assert matching.classify("11100000", 8, 3, P21) == "V0"
    assert matching.partner("11100000", 8, 3, P21) == EMPTY
    assert matching.partner(EMPTY, 8, 3, P21) == "11100000"
    assert matching.classify(EMPTY, 8, 3, P21) == "V0-partner"


def test_rules_partition_faces():
    for n in range(2, 7):
        for k in range(1, n):
            v0 = matching.base_vertex(n, k)
            for p in matching.valid_params(n, k):
                for w in faces.iter_faces(n, k):
                    tags = matching.guards(w, n, k, p)
                    if w == v0:
                        assert tags == [], (w, p, tags)
                    else:
                        assert len(tags) == 1, (w, p, tags)


def test_involution_and_dimension_step():
    for n in range(2, 8):
        for k in range(1, n):
            for p in matching.valid_params(n, k):
                for w in faces.iter_faces(n, k):
                    mate = matching.partner(w, n, k, p)
                    assert matching.partner(mate, n, k, p) == w
                    dw = matching._dim(w, n, k)
                    dm = matching._dim(mate, n, k)
                    assert abs(dw - dm) == 1


def test_partner_moves_to_the_adjacent_square():
    for n in range(3, 6):
        for k in range(1, n):
            for p in matching.valid_params(n, k):
                for w in faces.iter_faces(n, k, include_vertices=False):
                    tag = matching.classify(w, n, k, p)
                    mate = matching.partner(w, n, k, p)
                    if "*" not in mate:
                        assert tag == "10"
                        continue
                    assert faces.square_of(mate) == matching.partner_square(
                        tag, *faces.square_of(w)
                    )


def test_small_complete_matching():
    vf = matching.build_vector_field(3, 1, MatchParams(0, 0))
    assert len(vf.pairs) == 4
    assert (EMPTY, "100") in vf.pairs
    assert vf.unmatched == []
    assert matching.verify_complete(vf)
    ok, cycle = matching.verify_acyclic(vf)
    assert ok and cycle is None


def test_adversarial_field_fails_with_witness_cycle():
    # A=100, B=010, C=001; AB=**0, BC=0**, AC=*0*
    v1 = VectorField(3, 1, [("100", "**0"), ("010", "0**"), ("001", "*0*")])
    assert not matching.verify_complete(v1)  # *** and EMPTY unmatched
    ok, cycle = matching.verify_acyclic(v1)
    assert not ok
    assert cycle[0] == cycle[-1]
    assert set(cycle) == {"100", "010", "001", "**0", "0**", "*0*"}
    assert len(cycle) == 7


def test_soundness_sweep_small():
    for n in range(2, 7):
        for k in range(1, n):
            for p in matching.valid_params(n, k):
                vf = matching.build_vector_field(n, k, p)
                assert matching.verify_complete(vf)
                ok, _ = matching.verify_acyclic(vf)
                assert ok


def test_worked_example_field_is_complete_and_acyclic():
    vf = matching.build_vector_field(8, 3, P21)
    assert matching.verify_complete(vf)
    ok, _ = matching.verify_acyclic(vf)
    assert ok
    assert ("0100*0*1", "0100*0**") in vf.pairs  # (lower, upper)
    assert ("10010100", "1*010*00") in vf.pairs  # the vertex-edge pair


def test_check_covers_rejects_broken_pairs():
    good = matching.build_vector_field(4, 2, MatchParams(0, 0))
    good.check_covers()
    bad = VectorField(3, 1, [("100", "***")])  # a vertex is not a facet of the top
    with pytest.raises(ValueError):
        bad.check_covers()
    bad = VectorField(3, 1, [(EMPTY, "**0")])
    with pytest.raises(ValueError):
        bad.check_covers()


def test_restricted_field_records_unmatched():
    from hypermorse import diagrams

    D = diagrams.diagram_of_triple(6, 3, diagrams.Triple(3, 2, 2))
    p = diagrams.canonical_params(D)
    vf = matching.build_vector_field(6, 3, p, D)
    assert not matching.verify_complete(vf)
    ok, _ = matching.verify_acyclic(vf)
    assert ok
    by_square = {}
    for w in vf.unmatched:
        by_square.setdefault(faces.square_of(w), 0)
        by_square[faces.square_of(w)] += 1
    assert by_square == dict(diagrams.unmatched_squares(D))


def test_classify_counts_match_naive_classification():
    for n in range(3, 7):
        for k in range(1, n):
            for p in matching.valid_params(n, k):
                for a in range(n - k):
                    for b in range(k):
                        naive = {}
                        for w in faces.iter_square(n, k, a, b):
                            t = matching.classify(w, n, k, p)
                            naive[t] = naive.get(t, 0) + 1
                        fast = matching.classify_counts_in_square(n, k, p, a, b)
                        assert fast == naive


def test_params_validation():
    MatchParams(0, 0).check(5, 2)
    MatchParams(2, 1).check(5, 2)
    with pytest.raises(ValueError):
        MatchParams(3, 1).check(5, 2)  # m0 > n-k-1
    with pytest.raises(ValueError):
        MatchParams(0, 2).check(5, 2)  # m1 > k-1
    with pytest.raises(ValueError):
        MatchParams(1, 0).check(5, 2)  # m1=0 only as (0,0)
    assert len(matching.valid_params(5, 2)) == 1 + 3 * 1


def test_vector_field_json_roundtrip():
    vf = matching.build_vector_field(4, 2, MatchParams(1, 1))
    data = json.loads(json.dumps(vf.to_json()))
    back = VectorField.from_json(data)
    assert back.pairs == vf.pairs
    assert back.params == vf.params
    bare = VectorField.from_json([["100", "**0"]], n=3, k=1)
    assert bare.pairs == [("100", "**0")]
