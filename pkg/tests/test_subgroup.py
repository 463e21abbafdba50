from fractions import Fraction

import pytest

from quiverhecke.exceptions import ConfigError
from quiverhecke.rootcore import all_elements, build_root_datum
from quiverhecke.subgroup import (
    GENERIC,
    TORSION,
    TorusConstraint,
    build_coset_table,
    canonical_representative,
    coset_table_check,
    factorization_check,
    fixed_subsystem,
    is_canonical,
    length_comparison_check,
    member_of_W,
    s_adapted,
)


def half_integral_sub():
    datum = build_root_datum("A2")
    return fixed_subsystem(datum, [TorusConstraint(TORSION, (Fraction(1, 2), Fraction(0)))])


def test_no_constraints_keeps_everything():
    datum = build_root_datum("B2")
    sub = fixed_subsystem(datum)
    assert set(sub.roots) == set(datum.roots)
    assert set(sub.simples) == set(datum.simple_roots)
    table = build_coset_table(sub)
    assert len(table) == 1
    assert table.rep(0).is_identity
    assert all(table.is_stabilized(0, j) for j in range(datum.rank))


def test_torsion_constraint():
    sub = half_integral_sub()
    assert set(sub.roots) == {(0, 1), (0, -1)}
    assert sub.simples == ((0, 1),)
    assert sub.group_order == 2
    table = build_coset_table(sub)
    assert len(table) == 3
    assert table.rep(0).is_identity
    assert coset_table_check(table).passed
    assert length_comparison_check(sub).passed


def test_generic_constraint_separates_positions():
    datum = build_root_datum({"gl": 3})
    sub = fixed_subsystem(datum, [TorusConstraint(GENERIC, (0, 0, 1))])
    assert set(sub.roots) == {(1, -1, 0), (-1, 1, 0)}
    table = build_coset_table(sub)
    assert len(table) == 3
    assert coset_table_check(table).passed


def test_canonical_representatives():
    sub = half_integral_sub()
    table = build_coset_table(sub)
    for w in all_elements(sub.datum):
        x = canonical_representative(sub, w)
        assert is_canonical(sub, x)
        assert x == table.rep(table.coset_of(w))
    for u in sub.elements():
        assert member_of_W(sub, u)


def test_action_on_indices():
    sub = half_integral_sub()
    table = build_coset_table(sub)
    datum = sub.datum
    for i in table.indices:
        for j in range(datum.rank):
            assert table.act_simple(table.act_simple(i, j), j) == i
            assert table.act_word(i, (j, j)) == i
            assert table.act(i, datum.simple_reflection(j)) == table.act_simple(i, j)
    # s_1 fixes the coset of the identity and s_0 moves it
    assert table.is_stabilized(0, 1)
    assert not table.is_stabilized(0, 0)


def test_orbit_is_a_coset():
    sub = half_integral_sub()
    table = build_coset_table(sub)
    seen = set()
    for i in table.indices:
        orbit = table.orbit(i)
        assert len(orbit) == sub.group_order
        seen.update(orbit)
    assert len(seen) == len(all_elements(sub.datum))


def test_factorization_on_adapted_subsets():
    sub = half_integral_sub()
    assert s_adapted(sub, ())
    assert s_adapted(sub, (0, 1))
    report = factorization_check(sub, (1,), (0, 1))
    assert "skipped" not in report.details
    assert report.passed


def test_factorization_skips_non_adapted():
    datum = build_root_datum("B2")
    sub = fixed_subsystem(datum, [TorusConstraint(TORSION, (Fraction(1, 2), Fraction(1, 2)))])
    for J in [(), (0,), (1,), (0, 1)]:
        for K in [(), (0,), (1,), (0, 1)]:
            report = factorization_check(sub, J, K)
            if "skipped" not in report.details:
                assert report.passed


@pytest.mark.parametrize(
    "data",
    [{"kind": "other", "values": [0, 0]}, {"values": [0, 0]}, {"kind": TORSION, "values": ["x"]}],
)
def test_bad_torus_constraints(data):
    with pytest.raises(ConfigError):
        TorusConstraint.from_json(data)


def test_constraint_length_is_checked():
    with pytest.raises(ConfigError):
        fixed_subsystem(build_root_datum("A2"), [TorusConstraint(GENERIC, (0, 0, 0))])


def test_constraint_json():
    c = TorusConstraint(TORSION, (Fraction(1, 2), 0))
    assert c.to_json() == {"kind": "torsion", "values": ["1/2", "0"]}
    assert TorusConstraint.from_json(c.to_json()) == c
