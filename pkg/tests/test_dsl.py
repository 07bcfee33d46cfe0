from __future__ import annotations

import pytest

from corona.dsl import IntRange, expand, parse_grid, parse_pattern, parse_spec
from corona.errors import ParseError, SpecError
from corona.graphs import (
    Bristle,
    Complete,
    CompleteBipartite,
    Corona,
    Cycle,
    Explicit,
    GraphUnion,
    Null,
    Path,
    Star,
    build,
)


def test_parse_examples():
    fig1 = parse_spec("corona(path(3), graph(7; 1-2,2-3,2-4,3-5,5-6,5-7))")
    assert fig1 == Corona(Path(3), Explicit(7, ((1, 2), (2, 3), (2, 4), (3, 5), (5, 6), (5, 7))))
    assert parse_spec("bristle(cycle(3), 2)") == Bristle(Cycle(3), 2)
    assert parse_spec("union(complete(4), null(3))") == GraphUnion((Complete(4), Null(3)))
    assert parse_spec("kbip(2,3)") == CompleteBipartite(2, 3)
    assert parse_spec("star(4)") == Star(4)
    assert parse_spec("graph(3)") == Explicit(3, ())


def test_parse_ok_build_fails():
    spec = parse_spec("corona(cycle(2), null(1))")
    with pytest.raises(SpecError):
        build(spec)


def test_case_and_whitespace():
    assert parse_spec("  CORONA ( Path( 3 ) ,\n\tKBIP(1 , 2) ) ") == Corona(Path(3), CompleteBipartite(1, 2))


@pytest.mark.parametrize(
    "text, pos, expected",
    [
        ("corona(path(3) null(2))", 15, "','"),
        ("path(3", 6, "')'"),
        ("pth(3)", 0, "path"),
        ("path(x)", 5, "integer"),
        ("path(3) extra", 8, "end of input"),
        ("path(1..3)", 6, "',' or ')'"),
    ],
)
def test_parse_errors(text, pos, expected):
    with pytest.raises(ParseError) as err:
        parse_spec(text)
    assert err.value.position == pos
    assert expected in err.value.expected


def test_bad_character():
    with pytest.raises(ParseError) as err:
        parse_spec("path(3) + path(2)")
    assert err.value.position == 8


def test_pattern_and_expand():
    pat = parse_pattern("kbip(1..2, 3)")
    assert pat == CompleteBipartite(IntRange(1, 2), 3)
    assert expand(pat) == [CompleteBipartite(1, 3), CompleteBipartite(2, 3)]
    assert expand(parse_pattern("union(path(1..2), null(1..2))")) == [
        GraphUnion((Path(1), Null(1))),
        GraphUnion((Path(1), Null(2))),
        GraphUnion((Path(2), Null(1))),
        GraphUnion((Path(2), Null(2))),
    ]


def test_grid():
    specs = parse_grid("path(1..3) x {null(1..2), path(2..3), complete(2..3)}")
    assert len(specs) == 18
    assert specs[0] == Corona(Path(1), Null(1))
    assert specs[-1] == Corona(Path(3), Complete(3))
    assert parse_grid("cycle(3..4) x path(2)") == [Corona(Cycle(3), Path(2)), Corona(Cycle(4), Path(2))]
    assert parse_grid("corona(cycle(3), cycle(3))") == [Corona(Cycle(3), Cycle(3))]
    assert parse_grid("path(3..2) x null(1)") == []
