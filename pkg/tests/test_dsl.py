import pytest
from hypothesis import given, strategies as st

from expcrit.dsl import GroupSpec, build, parse_spec
from expcrit.errors import PreconditionViolated, SpecSyntaxError


def test_examples():
    s = parse_spec("dihedral 16")
    assert s == GroupSpec("dihedral", (16,))
    s = parse_spec('perm "(1 2 3)" "(1 2)"')
    assert s.kind == "perm" and len(s.args) == 2
    s = parse_spec("UmodD p=3 m=2")
    assert s.kind == "UmodD" and s.param("p") == 3 and s.param("m") == 2


def test_nested_specs():
    s = parse_spec("familyB p=5 a=1 mna=(alt 4)")
    assert s.param("mna") == GroupSpec("alt", (4,))
    s = parse_spec("directprod(cyclic 5, quotient(dihedral 16, center))")
    assert s.children[1].kind == "quotient" and s.children[1].args == ("center",)
    assert build(s).order == 40


@pytest.mark.parametrize("text,order", [
    ("cyclic 6", 6), ("quaternion 12", 12), ("sym 4", 24), ("alt 5", 60), ("abelian 4 2 2", 16),
    ('perm "(1 2 3 4)" "(1 3)"', 8), ("extraspecial 3 1 -", 27), ("extraspecial 2 1 +", 8),
    ("mnapq p=2 k=2 q=3", 12), ("familyC3 p=3 m=2 k=1 q=2 n=1", 54),
    ("familyC4 q=3 shape=elementary k=2 p=2 a=3", 72), ("typeB p=2 alpha=1 beta=1 rho=1 sigma=1", 8),
    ("present <a, b | a^2, b^3, (a*b)^4>", 24), ("quotient(sym 4, derived)", 2), ("quotient(dihedral 8, ids 1)", 2),
    ("U p=2 m=2", 16), ("UmodN p=2 m=3 index=0", 64),
])
def test_build_orders(text, order):
    assert build(text).order == order


@pytest.mark.parametrize("text", ["", "dihedral", "dihedral x", "foo 3", "cyclic 4 5", "familyB p=5 a=1",
                                  "familyB p=5 a=1 a=2 mna=(alt 4)", "familyC2 p=2 m=2 k=2 q=3 z=1",
                                  'perm "(1 2', "quotient(sym 3, nothing)", "directprod(cyclic 2 cyclic 3)",
                                  "present <a | a^2"])
def test_syntax_errors(text):
    with pytest.raises(SpecSyntaxError):
        parse_spec(text)


def test_error_position():
    with pytest.raises(SpecSyntaxError) as e:
        parse_spec("directprod(cyclic 2, blah 3)")
    assert e.value.position == 21


def test_build_errors():
    with pytest.raises(PreconditionViolated):
        build("familyC3 p=3 m=1 k=1 q=2")
    with pytest.raises(ValueError):
        build("quotient(cyclic 4, ids 9)")


atoms = st.one_of(
    st.builds(lambda k, n: f"{k} {n}", st.sampled_from(["cyclic", "dihedral", "sym", "alt"]), st.integers(1, 6)),
    st.builds(lambda ns: "abelian " + " ".join(map(str, ns)), st.lists(st.integers(1, 5), min_size=1, max_size=3)),
    st.builds(lambda p, m: f"U p={p} m={m}", st.sampled_from([2, 3]), st.integers(2, 3)),
    st.just("familyB p=5 a=1 mna=(quaternion 12)"),
    st.just('perm "(1 2)(3 4)" "(1 3)"'),
    st.just("extraspecial 3 1 +"),
    st.just("present <a, b | a^2, b^2>"),
)
specs = st.recursive(
    atoms,
    lambda inner: st.one_of(
        st.builds(lambda a, b: f"directprod({a}, {b})", inner, inner),
        st.builds(lambda a, r: f"quotient({a}, {r})", inner, st.sampled_from(["center", "derived", "frattini", "ids 0"])),
    ),
    max_leaves=4,
)


@given(specs)
def test_round_trip(text):
    s = parse_spec(text)
    assert parse_spec(str(s)) == s
    assert str(parse_spec(str(s))) == str(s)
