import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from gqam import dump_function, function_to_dict, parse_function
from gqam.errors import InvariantViolation, MalformedSpec
from gqam.specio import dump_continuous, parse_continuous

from conftest import generators

J_DOC = {
    "interval": {"left": "0", "right": "2"},
    "segments": [{"from": "0", "to": "1", "value_from": "0", "value_to": "1"},
                 {"from": "1", "to": "2", "value_from": "2", "value_to": "3"}],
    "nodes": [{"x": "1", "value": "1"}],
}


def test_parse_j(J):
    f = parse_function(json.dumps(J_DOC))
    assert f == J
    assert f.left_limit(1) == 1 and f.right_limit(1) == 2


def test_identity_doc(ident):
    doc = {"interval": {"left": "0", "right": "2"},
           "segments": [{"from": "0", "to": "2", "value_from": "0", "value_to": "2"}]}
    f = parse_function(doc)
    assert f == ident and not f.jumps


def test_node_outside_gap():
    doc = json.loads(json.dumps(J_DOC))
    doc["nodes"][0]["value"] = "5"
    with pytest.raises(InvariantViolation):
        parse_function(doc)


def test_missing_jump_node():
    doc = dict(J_DOC, nodes=[])
    with pytest.raises(InvariantViolation):
        parse_function(doc)


def test_knot_node_optional(kinked):
    doc = function_to_dict(kinked)
    doc["nodes"] = []
    assert parse_function(doc) == kinked


@pytest.mark.parametrize("text", ["", "[1]", '{"segments": []}', '{"interval": {"left": "0"}}'])
def test_malformed(text):
    with pytest.raises(MalformedSpec):
        parse_function(text)


def test_decimal_rejected():
    doc = json.loads(json.dumps(J_DOC))
    doc["segments"][0]["value_to"] = "1.0"
    with pytest.raises(MalformedSpec):
        parse_function(doc)


def test_unbounded_anchor_consistency():
    doc = {"interval": {"left": "-inf", "right": "1"},
           "segments": [{"from": "-inf", "to": "1", "anchor_x": "0", "anchor_value": "1", "slope": "2",
                         "value_to": "3"}]}
    assert parse_function(doc)(Fraction(1, 2)) == 2
    doc["segments"][0]["value_to"] = "4"
    with pytest.raises(InvariantViolation):
        parse_function(doc)


@settings(max_examples=100, deadline=None)
@given(generators())
def test_roundtrip(f):
    assert parse_function(dump_function(f)) == f
    assert parse_continuous(dump_continuous(f.inverse)) == f.inverse
