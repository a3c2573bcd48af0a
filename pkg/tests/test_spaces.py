import pytest

from isograss.core.errors import ParameterError
from isograss.core.spaces import (
    ComplexGrass,
    IsotropicOriented,
    RealOriented,
    Sphere,
    dimension,
    normalize,
    parse_space,
    sort_key,
    space_adapter,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("I:8,2", IsotropicOriented(n=4, k=2)),
        ("RG:7,3", RealOriented(m=7, l=3)),
        ("CG:4,2", ComplexGrass(n=4, k=2)),
        ("S:5", Sphere(d=5)),
        (" I:10,3 ", IsotropicOriented(n=5, k=3)),
    ],
)
def test_parse(text, expected):
    space = parse_space(text)
    assert space == expected
    assert parse_space(space.label) == space


@pytest.mark.parametrize(
    "text",
    ["I:7,2", "I:8,5", "I:8", "S:3,1", "RG:5", "RG:5,5", "X:3", "I:8,-2", "S:0", ""],
)
def test_malformed(text):
    with pytest.raises(ParameterError):
        parse_space(text)


@pytest.mark.parametrize(
    "text, dim",
    [("I:8,2", 11), ("I:4,2", 3), ("I:10,3", 18), ("RG:7,3", 12), ("CG:4,2", 8), ("S:5", 5)],
)
def test_dimension(text, dim):
    assert dimension(parse_space(text)) == dim


@pytest.mark.parametrize(
    "text, sphere",
    [
        ("I:8,1", "S:7"),
        ("RG:8,7", "S:7"),
        ("RG:5,1", "S:4"),
        ("CG:2,1", "S:2"),
        ("I:8,2", "I:8,2"),
    ],
)
def test_normalize(text, sphere):
    assert normalize(parse_space(text)).label == sphere


def test_discriminated_union_round_trip():
    space = RealOriented(m=7, l=3)
    data = space.model_dump()
    assert data == {"kind": "real", "m": 7, "l": 3}
    assert space_adapter.validate_python(data) == space


def test_sort_key_orders_kinds_then_parameters():
    spaces = [
        Sphere(d=3),
        RealOriented(m=5, l=2),
        IsotropicOriented(n=5, k=3),
        IsotropicOriented(n=4, k=2),
    ]
    ordered = sorted(spaces, key=sort_key)
    assert [s.label for s in ordered] == ["I:8,2", "I:10,3", "RG:5,2", "S:3"]


def test_spaces_are_hashable():
    assert len({parse_space("I:8,2"), parse_space("I:8,2")}) == 1
