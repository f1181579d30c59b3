"""Definition-file parsing, canonical printing, and diagnostics."""

from fractions import Fraction

import pytest

from superbialg import catalog
from superbialg.errors import ParseError, ValidationError
from superbialg.parser import (
    format_algebra,
    format_dual,
    parse_dual_statements,
    parse_text,
)
from superbialg.poly import as_poly
from superbialg.scalars import GScalar


def same_coeff(a, b):
    return (as_poly(a) - as_poly(b)).is_zero()


def same_tensor(fa, fb):
    keys = set(fa) | set(fb)
    return all(same_coeff(fa.get(k, GScalar(0)), fb.get(k, GScalar(0)))
               for k in keys)


def test_round_trip_every_shipped_algebra():
    defs = catalog.load_definitions()
    for name in catalog.algebra_ids():
        g = defs.algebras[name].build()
        text = format_algebra(g)
        reparsed = parse_text(text)
        assert list(reparsed.algebras) == [g.name]
        g2 = reparsed.algebras[g.name].build()
        assert g2.dims == g.dims
        assert set(g2.params) == set(g.params)
        assert same_tensor(g2.f, g.f), name


def test_round_trip_catalog_duals():
    for entry_id in ("t4-03", "t5-04", "t6-24", "t6-36"):
        pd = catalog.resolve_entry(entry_id)
        g = catalog.resolve_algebra(pd.primal_name)[1].build()
        d = pd.build_dual(g)
        text = format_dual(d)
        d2 = parse_dual_statements(text, g, extra_params=pd.params)
        assert same_tensor(d2.ft, d.ft), entry_id


def test_grading_violation_is_located():
    bad = (
        "algebra Bad {\n"
        "  bosons: X1;\n"
        "  fermions: X2;\n"
        "  [X1, X2] = X1;\n"
        "}\n"
    )
    with pytest.raises(ParseError) as err:
        parse_text(bad)
    assert err.value.line == 4 and err.value.column == 14
    assert "grading" in str(err.value)


def test_bracket_shape_must_match_parities():
    with pytest.raises(ParseError, match="curly brackets"):
        parse_text(
            "algebra W {\n  bosons: X1;\n  fermions: X2;\n"
            "  [X2, X2] = i*X1;\n}\n"
        )
    with pytest.raises(ParseError, match="curly brackets"):
        parse_text(
            "algebra W {\n  bosons: X1;\n  fermions: X2;\n"
            "  {X1, X2} = X2;\n}\n"
        )


def test_reference_errors_are_located():
    with pytest.raises(ParseError, match="unknown generator 'X9'"):
        parse_text("algebra W {\n  bosons: X1;\n  [X1, X9] = X1;\n}\n")
    with pytest.raises(ParseError, match="unknown parameter"):
        parse_text(
            "algebra W {\n  bosons: X1;\n  fermions: X2;\n"
            "  [X1, X2] = q*X2;\n}\n"
        )
    with pytest.raises(ParseError, match="declaration order"):
        parse_text(
            "algebra W {\n  bosons: X1;\n  fermions: X2;\n"
            "  [X2, X1] = X2;\n}\n"
        )
    with pytest.raises(ParseError, match="duplicate bracket"):
        parse_text(
            "algebra W {\n  bosons: X1;\n  fermions: X2;\n"
            "  [X1, X2] = X2;\n  [X1, X2] = 2*X2;\n}\n"
        )


def test_reality_violation_surfaces_in_validation():
    # reality is a verification concern, not well-formedness: the file
    # parses, the built algebra reports the problem, and the explicit
    # flag waives it
    parsed = parse_text(
        "algebra W {\n  bosons: X1;\n  fermions: X2;\n"
        "  {X2, X2} = X1;\n}\n"
    )
    problems = parsed.algebras["W"].build().validate_structure()
    assert problems and any(p.kind == "reality" for p in problems)
    waived = parse_text(
        "algebra W {\n  bosons: X1;\n  fermions: X2;\n"
        "  flags: nonstandard_reality;\n  {X2, X2} = X1;\n}\n"
    )
    assert waived.algebras["W"].build().validate_structure() == []


def test_sample_outside_declared_range_is_rejected():
    text = (
        'pair "x-01" {\n'
        "  table: 6;\n"
        "  primal: C1_p;\n"
        "  samples: p = 0, 1;\n"
        "  dual: { };\n"
        "}\n"
    )
    algebras = catalog.load_definitions().algebras
    with pytest.raises(ParseError, match="outside declared range"):
        parse_text(text, algebras=algebras)


def test_dual_statements_default_and_custom_names():
    g = catalog.resolve_algebra("C1_p")[1].build()
    d = parse_dual_statements("{Xt3, Xt3} = i*Xt1;", g)
    assert d.ft_get(3, 3, 1) == GScalar(0, 1)
    d2 = parse_dual_statements(
        "{X3, X3} = i*X1", g, gen_names=("X1", "X2", "X3")
    )
    assert same_tensor(d.ft, d2.ft)
    with pytest.raises(ValidationError):
        parse_dual_statements("{X3, X3} = i*X1", g, gen_names=("X1", "X2"))


def test_dual_statements_obey_grading_too():
    g = catalog.resolve_algebra("B")[1].build()
    with pytest.raises(ParseError, match="grading"):
        parse_dual_statements("[Xt1, Xt2] = Xt1;", g)


def test_formatted_text_is_stable():
    g = catalog.resolve_algebra("C1_half")[1].build()
    once = format_algebra(g)
    again = format_algebra(parse_text(once).algebras[g.name].build())
    assert once == again
