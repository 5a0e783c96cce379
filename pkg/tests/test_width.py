import pytest
from hypothesis import given, strategies as st

from oracles import width_by_sections
from helpers import in_span, random_specs
from zkinv import make_spec
from zkinv.modalg import make_ring
from zkinv.poly import parse_laurent
from zkinv.width import (
    CoefficientId,
    LinearForm,
    NotConvertible,
    build_generic_sections,
    get_relations,
    laurent_to_w,
    make_module,
    module_generators,
    pi_star,
    solve_relations,
    solved_sections,
    width,
)

A = lambda r, s: CoefficientId("A", r, s)
B = lambda r, s: CoefficientId("B", r, s)


def rows(poly):
    out = {}
    for (s, r) in poly:
        out.setdefault(r, []).append(s)
    return {r: sorted(v) for r, v in out.items()}


def test_generic_sections_worked_example():
    sec = build_generic_sections(make_spec(2, 3, "u"))
    assert (sec.alpha, sec.gamma) == (3, 2)
    assert rows(sec.b) == {r: list(range(0, 2 * r + 4)) for r in range(3)}
    assert rows(sec.a) == {r: list(range(0, 2 * r + 2)) for r in range(1, 4)}


def test_generic_sections_split_cases():
    sec = build_generic_sections(make_spec(1, 2, "0"))
    assert (sec.alpha, sec.gamma) == (2, 0)
    assert rows(sec.b) == {0: [0, 1, 2]}
    assert rows(sec.a) == {2: [0]}
    sec = build_generic_sections(make_spec(2, 0, "0"))
    assert rows(sec.a) == {0: [0]} and rows(sec.b) == {0: [0]}


def test_relations_worked_example():
    rels = get_relations(make_spec(2, 3, "u"), build_generic_sections(make_spec(2, 3, "u")))
    assert LinearForm({A(1, 0): 1, B(0, 3): 1}) in rels
    assert LinearForm({A(1, 1): 1}) in rels
    for rel in rels:
        assert rel[rel.pivot()] == 1


def test_relation_k1():
    spec = make_spec(1, 2, "u")
    assert LinearForm({A(1, 0): 1, B(0, 2): 1}) in get_relations(spec, build_generic_sections(spec))


def test_pivot_rule():
    assert LinearForm({A(1, 0): 2, B(0, 3): 1}).pivot() == A(1, 0)
    assert LinearForm({B(0, 3): 1, B(1, 0): 1, B(0, 5): 3}).pivot() == B(1, 0)
    assert LinearForm().pivot() is None


def test_solve_relations_substitutes_pivots():
    sec = build_generic_sections(make_spec(2, 3, "u"))
    solved = solve_relations(sec, [LinearForm({A(1, 0): 1, B(0, 3): 1}), LinearForm({A(1, 1): 1})])
    assert solved.substitutions[A(1, 0)] == LinearForm({B(0, 3): -1})
    assert (1, 1) not in solved.a
    a, b = solved.specialize(B(0, 3))
    assert a == parse_laurent("-u") and b == parse_laurent("z^3")
    same = solve_relations(sec, [])
    assert same.a == sec.a and same.b == sec.b and set(same.free) == set(sec.variables)


def test_solve_discards_dependent_relations():
    sec = build_generic_sections(make_spec(2, 3, "u"))
    r = LinearForm({A(1, 0): 1, B(0, 3): 1})
    solved = solve_relations(sec, [r, r.scale(2)])
    assert len(solved.substitutions) == 1


@pytest.mark.parametrize("s,r,k,expect", [(0, 1, 2, (1, 0, 0)), (2, 2, 2, (1, 0, 1)), (4, 3, 2, (1, 0, 2))])
def test_pi_star_examples(s, r, k, expect):
    assert pi_star(s, r, k) == expect


def test_pi_star_rejects():
    with pytest.raises(NotConvertible):
        pi_star(3, 1, 2)


@given(st.integers(1, 6), st.integers(0, 8), st.data())
def test_pi_star_degrees(k, r, data):
    s = data.draw(st.integers(0, k * r))
    n = pi_star(s, r, k)
    assert sum(n) == r and sum(i * x for i, x in enumerate(n)) == s


def test_make_module_reproduces_worked_generators():
    spec = make_spec(2, 3, "u")
    cols, uexp = module_generators(spec, solved_sections(spec))
    ring = make_ring(2)
    shift = lambda p: laurent_to_w(parse_laurent(p).shift(0, uexp), 2)
    expected = [[{}, shift("1")], [{}, shift("z")], [{}, shift("z^2")], [shift("-u"), shift("z^3")]]
    for col in cols:
        assert in_span(ring, expected, col, 2)
    for col in expected:
        assert in_span(ring, cols, col, 2)


def test_make_module_trivial_bundle_is_free():
    spec = make_spec(2, 0, "0")
    M = make_module(spec, solved_sections(spec))
    assert M.ngens == 2 and M.relations == []


def test_make_module_never_needs_nonconvertible_monomials():
    for k, j, p in [(2, 3, "u"), (2, 7, "z^-1*u + z*u^2"), (3, 5, "z^-1*u + z^4*u"), (1, 3, "z^2*u^4")]:
        spec = make_spec(k, j, p)
        cols, _ = module_generators(spec, solved_sections(spec))
        assert cols


@pytest.mark.parametrize(
    "k,j,p,w",
    [(2, 3, "u", 1), (2, 7, "z^-1*u + z*u^2", 2), (1, 2, "0", 3), (2, 0, "0", 0), (4, 0, "0", 0), (3, 1, "0", 0)],
)
def test_width_examples(k, j, p, w):
    assert width(make_spec(k, j, p)) == w


@pytest.mark.parametrize("k,j,p", [(2, 3, "u"), (1, 3, "z*u^2"), (2, 6, "z^-2*u"), (3, 5, "z^-1*u + z^4*u")])
@pytest.mark.parametrize("extra", [1, 2])
def test_width_invariant_under_extra_u_power(k, j, p, extra):
    spec = make_spec(k, j, p)
    assert width(spec, extra_u=extra) == width(spec)


@pytest.mark.parametrize("k,j,p", [(2, 3, "u + z^3*u"), (2, 6, "z*u + z^7*u + u^6"), (1, 3, "z^2*u^4 + z^5*u")])
def test_width_unchanged_by_normalization(k, j, p):
    from zkinv.bundle import validate

    raw = validate(k, j, p)
    assert width(raw) == width(make_spec(k, j, p))


@pytest.mark.parametrize("spec", random_specs(40, 11), ids=str)
def test_width_matches_sections_oracle(spec):
    assert width(spec) == width_by_sections(spec)
