from fractions import Fraction

import pytest

import thetagr


def test_tables_pass():
    for n, cells in ((3, 25), (4, 36)):
        rows = thetagr.verify_tables(n)
        assert len(rows) == cells
        assert all(r["pass"] for r in rows)


def test_theta_component_adjoint():
    t = thetagr.theta_component("g", "g", 3)
    assert t["multiplicities"] == {"adj": 2, "T": 1}
    assert t["remainder_dim"] == 47


def test_hom_dims():
    assert thetagr.hom_dim("g", "g", "g", 4) == 2
    assert thetagr.hom_dim("S", "S", "g", 4) == 0
    assert all(e["pass"] for e in thetagr.verify_homs(3))


def test_bad_input():
    with pytest.raises(ValueError):
        thetagr.verify_tables(5)
    with pytest.raises(ValueError):
        thetagr.theta_component("W", "g", 3)


def test_catalog_roundtrip_through_decompose():
    acts = thetagr.catalog(4, "V")
    assert len(acts) == 15
    assert isinstance(acts[0][0][0], Fraction)
    assert thetagr.decompose(4, acts) == {"V": 1}


def test_non_theta_constituent():
    s, v = thetagr.catalog(3, "S"), thetagr.catalog(3, "V")

    def kron_sum(a, b):
        da, db = len(a), len(b)
        m = [[Fraction(0)] * (da * db) for _ in range(da * db)]
        for i in range(da):
            for j in range(da):
                for k in range(db):
                    m[i * db + k][j * db + k] += a[i][j]
        for i in range(da):
            for k in range(db):
                for l in range(db):
                    m[i * db + k][i * db + l] += b[k][l]
        return m

    with pytest.raises(thetagr.NonThetaConstituent):
        thetagr.decompose(3, [kron_sum(a, b) for a, b in zip(s, v)])


def test_sl7_example():
    ex = thetagr.Example("sl2n+1", 3)
    assert ex.dim == 48
    assert ex.dims() == {"A": 2, "C": 1, "C'": 1, "E": 3, "E'": 3, "D": 2}
    assert ex.round_trip() == {"pairs": 2304, "mismatches": 0, "pass": True}
    j = ex.jacobi("full")
    assert j["pass"] and j["triples"] == 17296
    assert ex.grading()["pass"]
    assert ex.condition()
    assert all(c["pass"] for c in ex.structure() if c["asserted"])
    assert all(m["detected"] for m in ex.mutations(10, 3))


def test_sl9_sampled_and_known_failures():
    ex = thetagr.Example("sl2n+1", 4)
    j = ex.jacobi("sampled", 5000, 7)
    assert j["pass"] and j["seed"] == 7
    failing = {c["name"] for c in ex.structure() if c["asserted"] and not c["pass"]}
    assert failing == {"gamma-antiautomorphism", "eta-antiautomorphism", "bimodule-B+B'"}
    with pytest.raises(ValueError):
        ex.condition()


def test_products_are_exact():
    ex = thetagr.Example("slnk", 3, 1)
    keys = ex.products()
    assert keys
    m = ex.product(keys[0])
    assert all(isinstance(x, Fraction) for row in m for x in row)
    with pytest.raises(KeyError):
        ex.product("nope")
