import pytest

from quiverhecke.algebra import (
    braid_assumption_holds,
    braid_closed_form,
    braid_defect,
    dihedral_stabilizer,
    sigma_word,
)
from quiverhecke.presets import preset_skew
from quiverhecke.rootcore import alternating_word


def test_nilhecke_braid_relation_holds(nilhecke_a2, nilhecke_b2):
    for ctx in (nilhecke_a2, nilhecke_b2):
        defect = braid_defect(ctx, 0, 0, 1)
        assert defect.coefficients == {}
        assert braid_closed_form(ctx, 0, 0, 1) == {}


def test_skew_a2_coefficients(skew_a2):
    defect = braid_defect(skew_a2, 0, 0, 1)
    values = defect.by_word(skew_a2.datum)
    assert set(values) == {(0,), (1,)}
    assert values[(0,)] == 1
    assert values[(1,)] == -1
    assert defect.all_polynomial
    assert defect.m == 3


def test_skew_b2_coefficients(skew_b2):
    defect = braid_defect(skew_b2, 0, 0, 1)
    values = defect.by_word(skew_b2.datum)
    assert set(values) == {(0, 1), (1, 0)}
    assert values[(0, 1)] == 2
    assert values[(1, 0)] == -2
    assert defect.m == 4


def test_swapping_the_pair_negates(skew_a2):
    forward = braid_defect(skew_a2, 0, 0, 1).by_word(skew_a2.datum)
    backward = braid_defect(skew_a2, 0, 1, 0).by_word(skew_a2.datum)
    assert set(forward) == set(backward)
    for word, value in forward.items():
        assert backward[word] == -value


@pytest.mark.parametrize("name", ["skew_a2", "skew_b2", "nilhecke_b2", "half_integral"])
def test_closed_forms_agree(request, name):
    ctx = request.getfixturevalue(name)
    for i in ctx.table.indices:
        defect = braid_defect(ctx, i, 0, 1)
        if braid_assumption_holds(ctx, i, 0, 1):
            assert defect.all_polynomial
        predicted = braid_closed_form(ctx, i, 0, 1)
        if predicted is not None:
            assert set(predicted) == set(defect.coefficients)
            for w, f in predicted.items():
                assert defect.coefficients[w] == f


def test_defect_reassembles(skew_b2):
    ctx = skew_b2
    defect = braid_defect(ctx, 0, 0, 1)
    difference = sigma_word(ctx, 0, alternating_word(0, 1, 4)) - sigma_word(ctx, 0, alternating_word(1, 0, 4))
    rebuilt = None
    for word, q in defect.by_word(ctx.datum).items():
        term = sigma_word(ctx, 0, word).scale(q)
        rebuilt = term if rebuilt is None else rebuilt + term
    assert rebuilt == difference


def test_free_index_has_no_defect(half_integral):
    ctx = half_integral
    for i in ctx.table.indices:
        stabilizer = dihedral_stabilizer(ctx, i, 0, 1)
        assert () in stabilizer
        if len(stabilizer) == 1:
            assert braid_defect(ctx, i, 0, 1).coefficients == {}


def test_defect_json(skew_a2):
    payload = braid_defect(skew_a2, 0, 0, 1).to_json(skew_a2.datum)
    assert payload["m"] == 3
    assert [c["word"] for c in payload["coefficients"]] == [[0], [1]]
    assert all(c["polynomial"] for c in payload["coefficients"])
    assert payload["coefficients"][0]["coefficient"] == {"numerator": [[[0, 0], "1"]], "denominator": [[[0, 0], "1"]]}


def test_g2_skew_defect_is_constant():
    ctx = preset_skew("G2").build()
    defect = braid_defect(ctx, 0, 0, 1)
    assert defect.m == 6
    assert not braid_assumption_holds(ctx, 0, 0, 1)
    # σ(s) = s - 1 here, so every coefficient is a constant
    assert defect.all_polynomial
