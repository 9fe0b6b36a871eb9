import pytest

from ecamech import (
    canonical_rules,
    complement_rule,
    encode_outputs,
    mirror_rule,
    parse_rule,
    rule_symmetries,
)

# rule 26 is (00011010) in binary, read from neighborhood 111 down to 000
RULE_26_TABLE = {
    (1, 1, 1): 0,
    (1, 1, 0): 0,
    (1, 0, 1): 0,
    (1, 0, 0): 1,
    (0, 1, 1): 1,
    (0, 1, 0): 0,
    (0, 0, 1): 1,
    (0, 0, 0): 0,
}

# 110 = (01101110) expanded by hand, 111 down to 000
RULE_110_TABLE = {
    (1, 1, 1): 0,
    (1, 1, 0): 1,
    (1, 0, 1): 1,
    (1, 0, 0): 0,
    (0, 1, 1): 1,
    (0, 1, 0): 1,
    (0, 0, 1): 1,
    (0, 0, 0): 0,
}


def test_parse_rule_26():
    assert parse_rule(26).table == RULE_26_TABLE


def test_parse_rule_zero():
    assert all(bit == 0 for bit in parse_rule(0).table.values())


def test_parse_rule_110():
    assert parse_rule(110).table == RULE_110_TABLE


def test_table_has_eight_entries():
    assert len(parse_rule(90).table) == 8


@pytest.mark.parametrize("bad", [-1, 256, 300])
def test_parse_rule_out_of_range(bad):
    with pytest.raises(ValueError):
        parse_rule(bad)


def test_round_trip_all_rules():
    for n in range(256):
        assert encode_outputs(parse_rule(n).outputs) == n


def test_callable_matches_table():
    rule = parse_rule(30)
    for (left, center, right), out in rule.table.items():
        assert rule(left, center, right) == out


def test_symmetries_identity_rule():
    assert rule_symmetries(204) == {204}


def test_symmetries_zero_rule():
    assert rule_symmetries(0) == {0, 255}


def test_symmetries_rule_110():
    assert rule_symmetries(110) == {110, 124, 137, 193}


def test_mirror_and_complement_are_involutions():
    for n in range(256):
        assert mirror_rule(mirror_rule(n)) == n
        assert complement_rule(complement_rule(n)) == n
        assert mirror_rule(complement_rule(n)) == complement_rule(mirror_rule(n))


def test_canonical_88_rules():
    rules = canonical_rules()
    assert len(rules) == 88
    assert 0 in rules and 255 not in rules
    assert 110 in rules and 124 not in rules


def test_canonical_orbits_partition_all_rules():
    seen = set()
    for rule in canonical_rules():
        orbit = rule_symmetries(rule)
        assert rule == min(orbit)
        assert len(orbit) in (1, 2, 4)
        assert not seen & orbit
        seen |= orbit
    assert seen == set(range(256))
