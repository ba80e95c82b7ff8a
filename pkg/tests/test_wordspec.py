import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvgroups.errors import (
    InfiniteBackendUnsupported,
    SchemaError,
    UnknownGenerator,
    ValidationError,
    WordSyntaxError,
)
from mvgroups.groups import FreeGroup
from mvgroups.mvalued import CosetGroup, DoubleCosetGroup, NatGroup
from mvgroups.wordspec import (
    build_instance,
    evaluate_word,
    load_instance,
    nat_element,
    parse_config,
    parse_word,
    render_word,
)


# ---------------------------------------------------------------------------
# word parsing


def test_parse_basic_word():
    assert parse_word("g1*g2^-1*g1^2") == (("g1", 1), ("g2", -1), ("g1", 2))


def test_parse_identity():
    assert parse_word("e") == ()
    assert parse_word("  e  ") == ()
    assert parse_word("g1*e*g2") == (("g1", 1), ("g2", 1))


def test_parse_zero_exponent_drops_term():
    assert parse_word("g1^0*g2") == (("g2", 1),)


def test_parse_whitespace_insensitive():
    assert parse_word(" g1 * g2 ^ -3 ") == (("g1", 1), ("g2", -3))


def test_parse_numeric_literal():
    assert parse_word("5") == (("5", 1),)
    assert nat_element(parse_word("5")) == 5
    assert nat_element(parse_word("e")) == 0


def test_parse_error_position():
    with pytest.raises(WordSyntaxError) as exc:
        parse_word("g1**g2")
    assert exc.value.position == 3

    with pytest.raises(WordSyntaxError):
        parse_word("")
    with pytest.raises(WordSyntaxError):
        parse_word("g1^x")
    with pytest.raises(WordSyntaxError):
        parse_word("e^2")
    with pytest.raises(WordSyntaxError):
        parse_word("g1 g2")
    with pytest.raises(WordSyntaxError):
        parse_word("-3")


def test_render_word():
    assert render_word(()) == "e"
    assert render_word((("g1", 1), ("g2", -2))) == "g1*g2^-2"


@given(st.lists(
    st.tuples(st.sampled_from(["g1", "g2", "a", "b_2"]),
              st.integers(min_value=-9, max_value=9).filter(lambda k: k != 0)),
    max_size=8))
def test_parse_render_round_trip(word):
    assert parse_word(render_word(tuple(word))) == tuple(word)


def test_evaluate_word():
    f = FreeGroup(2)
    g = evaluate_word(f, parse_word("g1*g2^-1"))
    assert g == f.mul(f.gen(0), f.inv(f.gen(1)))
    with pytest.raises(UnknownGenerator):
        evaluate_word(f, parse_word("g3"))


def test_nat_element_rejects_words():
    with pytest.raises(ValidationError):
        nat_element(parse_word("g1"))


# ---------------------------------------------------------------------------
# config documents


def minimal_nat_config():
    return {"schema": 1, "mv": {"kind": "builtin_nat"}}


def test_minimal_nat_config():
    config = parse_config(minimal_nat_config())
    inst = build_instance(config)
    assert isinstance(inst.X, NatGroup)
    assert inst.x_generators == [1]  # default generating set {1}
    assert config.default_radius == 8
    assert config.default_budget == 10 ** 6


def test_all_golden_configs_build(config_dir, instances):
    assert len(instances) == 10
    for name, inst in instances.items():
        assert inst.config.schema == 1
        assert inst.X.n >= 2, name


def test_golden_coset_configs_have_expected_shape(instances):
    assert isinstance(instances["z_pm1"].X, CosetGroup)
    assert instances["z_pm1"].X.n == 2
    assert isinstance(instances["s3_doublecoset"].X, DoubleCosetGroup)
    assert instances["heis_swap"].backend.kind == "heisenberg"
    assert instances["z3xF2_example46"].backend.kind == "direct_product"


def test_schema_field_required():
    with pytest.raises(SchemaError):
        parse_config({"mv": {"kind": "builtin_nat"}})
    with pytest.raises(SchemaError):
        parse_config({"schema": 2, "mv": {"kind": "builtin_nat"}})


def test_unknown_top_level_field_rejected():
    doc = minimal_nat_config()
    doc["surprise"] = True
    with pytest.raises(SchemaError) as exc:
        parse_config(doc)
    assert "surprise" in str(exc.value)


def test_unknown_mv_kind_rejected():
    with pytest.raises(SchemaError) as exc:
        parse_config({"schema": 1, "mv": {"kind": "mystery"}})
    assert exc.value.path == "mv.kind"


def test_builtin_nat_takes_no_group():
    doc = minimal_nat_config()
    doc["group"] = {"kind": "free", "rank": 1}
    with pytest.raises(SchemaError):
        parse_config(doc)


def coset_doc(images, inverse_images):
    return {
        "schema": 1,
        "group": {"kind": "free_abelian", "rank": 2},
        "automorphisms": [{"name": "a", "images": images,
                           "inverse_images": inverse_images}],
        "mv": {"kind": "coset"},
    }


def test_automorphism_must_cover_all_generators():
    doc = coset_doc({"g1": "g2"}, {"g1": "g2", "g2": "g1"})
    with pytest.raises(SchemaError) as exc:
        parse_config(doc)
    assert "g2" in str(exc.value)  # the missing generator is named


def test_automorphism_rejects_undeclared_generator():
    doc = coset_doc({"g1": "g2", "g2": "g1", "g3": "g1"},
                    {"g1": "g2", "g2": "g1"})
    with pytest.raises(SchemaError) as exc:
        parse_config(doc)
    assert "g3" in str(exc.value)


def test_coset_requires_a_seed():
    with pytest.raises(SchemaError):
        parse_config({"schema": 1, "group": {"kind": "free_abelian", "rank": 1},
                      "mv": {"kind": "coset"}})


def test_double_coset_requires_subgroup():
    with pytest.raises(SchemaError):
        parse_config({"schema": 1,
                      "group": {"kind": "permutation", "degree": 3,
                                "gens": ["t"], "gen_images": [[1, 0, 2]]},
                      "mv": {"kind": "double_coset"}})


def test_double_coset_on_infinite_backend_fails():
    config = parse_config({
        "schema": 1,
        "group": {"kind": "free", "rank": 2},
        "mv": {"kind": "double_coset", "subgroup": ["g1"]},
    })
    with pytest.raises(InfiniteBackendUnsupported):
        build_instance(config)


def test_bad_defaults_rejected():
    doc = minimal_nat_config()
    doc["defaults"] = {"radius": -1}
    with pytest.raises(SchemaError):
        parse_config(doc)
    doc["defaults"] = {"radius": 4, "budget": 0}
    with pytest.raises(SchemaError):
        parse_config(doc)


def test_bad_word_in_config_names_path():
    doc = coset_doc({"g1": "g2", "g2": "g1*"}, {"g1": "g2", "g2": "g1"})
    with pytest.raises(SchemaError) as exc:
        parse_config(doc)
    assert "images.g2" in (exc.value.path or "")


def test_load_instance_from_file(tmp_path):
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(minimal_nat_config()))
    inst = load_instance(path)
    assert isinstance(inst.X, NatGroup)


def test_instance_element_lookup(instances):
    inst = instances["z_pm1"]
    assert inst.element("g1^-3").rep == (3,)  # projection picks the class rep
    assert inst.backend_element("g1^-3") == (-3,)
    assert inst.element("e") == inst.X.unit

    nat = instances["nat"]
    assert nat.element("7") == 7
    assert nat.backend_element("7") == 7
