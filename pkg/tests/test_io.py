import pytest

from splicezeta.diagram import multiplicities, validate
from splicezeta.errors import DegenerateBranch, ParseError, ValidationError
from splicezeta.refine import reduce
from splicezeta.sdio import (
    EXAMPLES,
    builder_cusp,
    builder_monomial,
    builder_nv_example2,
    example,
    parse_sd,
    random_diagram,
    write_sd,
)
from splicezeta.splice import splice

CUSP_DOC = """\
# cusp with form x^4 y^5
node n1
node n2
node n3
edge n1 n2 1 3
edge n2 n3 2 2
arrow n2 1 1 1
arrow n1 1 0 5
arrow n3 1 0 6
"""


def test_parse_cusp_document():
    d = parse_sd(CUSP_DOC)
    assert d == builder_cusp(4, 5)


def test_unknown_node_reference_reported():
    with pytest.raises(ValidationError) as err:
        parse_sd("node a\nedge a b 1 1\narrow a 1 1 1\n")
    assert any("unknown node" in v for v in err.value.violations)


def test_validation_error_on_bad_decoration():
    with pytest.raises(ValidationError) as err:
        parse_sd("node a\nnode b\nedge a b 0 1\narrow a 1 1 1\n")
    assert any("decoration" in v for v in err.value.violations)


def test_parse_error_syntax():
    with pytest.raises(ParseError) as err:
        parse_sd("node a\nfrob a b\n")
    assert err.value.line == 2


def test_parse_error_bad_integer():
    with pytest.raises(ParseError):
        parse_sd("node a\narrow a 1 x 1\n")


def test_parse_error_duplicate_node():
    with pytest.raises(ParseError):
        parse_sd("node a\nnode a\n")


def test_roundtrip_identity_canonical():
    for name in EXAMPLES:
        d = example(name)
        text = write_sd(d)
        assert write_sd(parse_sd(text)) == text


def test_write_canonicalizes_idempotently():
    scrambled = """\
arrow n3 1 0 6
node n3
edge n2 n3 2 2
node n1
arrow n1 1 0 5
edge n1 n2 1 3
node n2
arrow n2 1 1 1
"""
    once = write_sd(parse_sd(scrambled))
    assert once != scrambled
    assert write_sd(parse_sd(once)) == once


def test_roundtrip_preserves_caches():
    d = builder_cusp(4, 5).with_caches(multiplicities(builder_cusp(4, 5)))
    text = write_sd(d)
    assert "N=6 nu=28" in text
    assert parse_sd(text).cache("n2") == (6, 28)


def test_roundtrip_spliced_diagram():
    r = splice(builder_nv_example2(1, 1, 1, 1), ("n3", "n4"))
    for half in (r.left, r.right):
        text = write_sd(half)
        back = parse_sd(text)
        assert back == half


def test_builders_match_figure_data():
    m = builder_monomial(1, 1, 1, 1)
    assert len(m.nodes) == 1 and len(m.arrows) == 2
    assert all(a.dec == 1 and (a.N, a.nu) == (1, 1) for a in m.arrows)

    c = builder_cusp(4, 5)
    pairs = sorted((a.N, a.nu) for a in c.arrows)
    assert pairs == [(0, 5), (0, 6), (1, 1)]

    nv = builder_nv_example2(1, 1, 1, 1)
    decs = sorted([e.du for e in nv.edges] + [e.dv for e in nv.edges])
    assert {3, 4, 1, 66, 5} <= set(decs)
    assert validate(nv) == []


def test_builders_reject_degenerate_branches():
    with pytest.raises(DegenerateBranch):
        builder_monomial(0, 0, 0, 0)
    with pytest.raises(DegenerateBranch):
        builder_nv_example2(0, 1, 1, 1)


def test_random_diagram_seed_zero_moves():
    d = random_diagram(1, 0)
    assert len(d.nodes) == 1
    assert validate(d) == []


def test_random_diagram_always_valid():
    for seed in range(60):
        d = random_diagram(seed, seed % 9)
        assert validate(d) == []
        assert validate(reduce(d)) == []


def test_random_diagrams_exercise_nontrivial_determinants():
    from splicezeta.diagram import edge_determinant

    found = 0
    for seed in range(40):
        d = reduce(random_diagram(seed, 6))
        if any(edge_determinant(d, e) > 1 for e in d.edges):
            found += 1
    assert found > 10
