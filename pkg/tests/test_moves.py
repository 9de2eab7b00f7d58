"""Bridge enumeration, bridge replacement, and RII reduction."""

import random

import pytest

from gaussgenus import (
    OVER,
    UNDER,
    Bridge,
    GaussCodeError,
    bridge_at,
    bridge_replace,
    canonical_form,
    enumerate_bridges,
    find_bridge,
    flip_passes,
    genus,
    knotoid_genus,
    parse_gauss,
    remove_chords,
    rii_reduce,
    strictly_decreases,
)
from gaussgenus.moves import _cancellable_pairs
from helpers import (
    EIGHT_20,
    EIGHT_20_GUIDE_45,
    EIGHT_20_MOVED_45,
    RII_PAIR,
    TREFOIL,
    braid_knot_code,
    knot_fingerprint,
    random_code,
)


# -- bridges -----------------------------------------------------------------


def test_enumerate_over_bridges_eight_20():
    code = parse_gauss(EIGHT_20)
    found = enumerate_bridges(code, "over", min_len=2)
    assert [b.labels for b in found] == [(8, 1), (4, 5), (2, 6)]
    assert found[0].positions == (15, 0)  # wrap-around run
    assert all(b.maximal for b in found)


def test_enumerate_under_bridges_eight_20():
    code = parse_gauss(EIGHT_20)
    found = enumerate_bridges(code, "under", min_len=2)
    assert [b.labels for b in found] == [(2, 3), (1, 6), (8, 5)]


def test_trefoil_has_no_long_bridges():
    assert enumerate_bridges(parse_gauss(TREFOIL), "both", min_len=2) == []
    assert len(enumerate_bridges(parse_gauss(TREFOIL), "both", min_len=1)) == 6


def test_empty_code_has_no_bridges():
    assert enumerate_bridges(parse_gauss(""), "both", min_len=1) == []


def test_bridge_at_maximality():
    code = parse_gauss(EIGHT_20)
    assert not bridge_at(code, 3, 1).maximal  # inside the O4+O5- run
    assert bridge_at(code, 3, 2).maximal
    with pytest.raises(GaussCodeError):
        bridge_at(code, 2, 2)  # U3+,O4+ mixes passes


def test_find_bridge_requires_maximal_label_set():
    code = parse_gauss(EIGHT_20)
    assert find_bridge(code, (4, 5)).positions == (3, 4)
    assert find_bridge(code, (4,)).kind == UNDER  # the lone U4+ run
    with pytest.raises(GaussCodeError, match="maximal bridge"):
        find_bridge(code, (4, 1))


# -- strict-decrease predicate -------------------------------------------


def test_strictly_decreases_fixtures():
    code = parse_gauss(EIGHT_20)
    assert strictly_decreases(code, find_bridge(code, (4, 5)))
    assert strictly_decreases(code, find_bridge(code, (8, 1)))
    assert not strictly_decreases(code, find_bridge(code, (2, 6)))
    trefoil = parse_gauss(TREFOIL)
    assert not strictly_decreases(trefoil, bridge_at(trefoil, 0, 1))


def test_strictly_decreases_matches_ground_truth_random():
    rng = random.Random(64)
    for _ in range(150):
        code = random_code(rng, rng.randint(1, 10))
        for bridge in enumerate_bridges(code, "both", 1):
            truth = genus(code) > genus(remove_chords(code, bridge.labels))
            assert strictly_decreases(code, bridge) == truth


# -- knotoid genus ---------------------------------------------------------


def test_knotoid_genus_fixtures():
    code = parse_gauss(EIGHT_20)
    assert knotoid_genus(code, find_bridge(code, (4, 5))) == 2
    trefoil = parse_gauss(TREFOIL)
    assert knotoid_genus(trefoil, bridge_at(trefoil, 0, 1)) == 1
    full = parse_gauss("O1+O2+U1+U2+")
    assert knotoid_genus(full, find_bridge(full, (1, 2))) == 0


# -- bridge replacement ------------------------------------------------------


def test_replace_eight_20_bridge_45_exactly():
    code = parse_gauss(EIGHT_20)
    outcome = bridge_replace(code, find_bridge(code, (4, 5)))
    assert outcome.result.serialize() == EIGHT_20_MOVED_45
    assert str(outcome.anchor) == "U3+"
    assert outcome.pattern_labels == (3, 2)
    assert outcome.inserted_labels == (9, 10, 11, 12)
    assert outcome.removed_labels == (4, 5)
    assert outcome.guide_text() == EIGHT_20_GUIDE_45
    assert outcome.strict_decrease_predicted
    assert genus(outcome.result) == 2


def test_replace_trefoil_single_bridge():
    # Both passes of the anchor's own crossing lie on the guide here; the
    # departing chord step still counts, so two pattern crossings appear.
    code = parse_gauss(TREFOIL)
    outcome = bridge_replace(code, bridge_at(code, 0, 1))
    assert outcome.pattern_labels == (3, 2)
    assert outcome.result.n == 6
    assert genus(outcome.result) == 1
    assert knot_fingerprint(outcome.result) == knot_fingerprint(code)


def test_replace_bridge_covering_all_labels():
    code = parse_gauss("O1+O2+U1+U2+")
    outcome = bridge_replace(code, find_bridge(code, (1, 2)))
    assert outcome.result.n == 0
    assert outcome.pattern_labels == ()
    assert outcome.anchor is None


def test_replace_requires_signs():
    bare = parse_gauss("O1?O2?U1?U2?")
    with pytest.raises(GaussCodeError, match="signed"):
        bridge_replace(bare, find_bridge(bare, (1, 2)))


def test_replace_rejects_foreign_bridge():
    code = parse_gauss(EIGHT_20)
    alien = Bridge(kind=OVER, positions=(3, 4), labels=(4, 6), maximal=True)
    with pytest.raises(GaussCodeError):
        bridge_replace(code, alien)


def test_replace_genus_contract_random():
    rng = random.Random(911)
    for _ in range(250):
        code = random_code(rng, rng.randint(1, 11))
        for bridge in enumerate_bridges(code, "both", 1):
            outcome = bridge_replace(code, bridge)
            assert genus(outcome.result) == genus(remove_chords(code, bridge.labels))
            assert genus(outcome.result) <= genus(code)
            assert len(set(outcome.pattern_labels)) == len(outcome.pattern_labels)


def test_replace_mirror_symmetry():
    rng = random.Random(333)
    for _ in range(100):
        code = random_code(rng, rng.randint(1, 9))
        for bridge in enumerate_bridges(code, "under", 1):
            flipped = Bridge(OVER, bridge.positions, bridge.labels, bridge.maximal)
            ours = bridge_replace(code, bridge).result
            theirs = bridge_replace(flip_passes(code), flipped).result
            assert flip_passes(theirs) == ours


def test_replace_preserves_knot_type_on_realizable_codes():
    # Strong regression guard: on braid closures every move must keep the
    # knot group's Alexander fingerprint, which genus checks cannot see.
    rng = random.Random(1234)
    for _ in range(50):
        code = braid_knot_code(rng)
        fp = knot_fingerprint(code)
        for bridge in enumerate_bridges(code, "both", 1):
            outcome = bridge_replace(code, bridge)
            assert knot_fingerprint(outcome.result) == fp
            assert knot_fingerprint(rii_reduce(outcome.result)) == fp


# -- RII reduction -----------------------------------------------------------


def test_rii_parallel_fixture():
    code = parse_gauss(RII_PAIR)
    assert genus(code) == 1
    reduced = rii_reduce(code)
    assert reduced.n == 0
    assert genus(reduced) == 0


def test_rii_antiparallel_pair():
    assert rii_reduce(parse_gauss("O1+O2-U2-U1+")).n == 0


def test_rii_same_sign_pair_is_kept():
    code = parse_gauss("O1+O2+U2+U1+")
    assert rii_reduce(code) == code


def test_rii_trefoil_is_fixed_point():
    code = parse_gauss(TREFOIL)
    assert rii_reduce(code) == code


def test_rii_requires_signs():
    with pytest.raises(GaussCodeError, match="signed"):
        rii_reduce(parse_gauss("O1?U1?"))


def test_rii_is_rotation_invariant():
    rng = random.Random(21)
    for _ in range(60):
        code = random_code(rng, rng.randint(1, 9))
        reduced = canonical_form(rii_reduce(code))
        for r in range(0, len(code), 2):
            assert canonical_form(rii_reduce(code.rotated(r))) == reduced


def test_rii_result_has_no_cancellable_pair():
    rng = random.Random(22)
    for _ in range(120):
        code = random_code(rng, rng.randint(1, 10))
        reduced = rii_reduce(code)
        assert not _cancellable_pairs(reduced)
        assert genus(reduced) <= genus(code)
        assert (code.n - reduced.n) % 2 == 0


def test_rii_preserves_knot_type_on_realizable_codes():
    rng = random.Random(4321)
    for _ in range(60):
        code = braid_knot_code(rng)
        assert knot_fingerprint(rii_reduce(code)) == knot_fingerprint(code)
