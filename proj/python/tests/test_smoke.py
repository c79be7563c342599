import math

import pytest

import lspec


def test_field_basics():
    K = lspec.NumberField("x^3 - 2")
    assert K.degree == 3
    assert K.signature == (1, 1)
    assert K.discriminant == -108
    assert [P.label for P in K.factor_prime(5)] == ["5:0", "5:1"]
    assert [P.inertia_degree for P in K.factor_prime(5)] == [1, 2]


def test_split_symbols_over_rationals():
    Q = lspec.NumberField("x - 1")
    assert lspec.split_symbol(Q.prime("3:0"), Q, "5") == "inert"
    assert lspec.split_symbol(Q.prime("11:0"), Q, "5") == "split"
    assert lspec.split_symbol(Q.prime("5:0"), Q, "5") == "ramified"
    assert lspec.frobenius_vector(Q.prime("7:0"), Q, ["5", "13"]) == "1,1"


def test_gap_tuples():
    Q = lspec.NumberField("x - 1")
    assert lspec.target_primes(Q, ["5"], "1", 50) == [3, 7, 13, 17, 23, 37, 43, 47]
    assert lspec.gap_tuples(Q, ["5"], "1", 50, 2, 4) == [[3, 7], [13, 17], [43, 47]]


def test_zeta_and_volume():
    Q = lspec.NumberField("x - 1")
    z = lspec.dedekind_zeta_2(Q, 10_000)
    assert abs(float(z["value"]) - math.pi**2 / 6) <= float(z["epsilon"])
    G = lspec.NumberField("x^2 + 1")
    v = lspec.borel_volume(G, ["3:0", "7:0"], 100_000)
    assert v["norm_product"] == "384"
    assert abs(float(v["mid"]) - 117.24) < 0.05


def test_geodesic_and_errors():
    K = lspec.NumberField("x^3 - 2")
    g = lspec.trace_to_geodesic(K, "3")
    assert abs(float(g["length"]["mid"]) - 2 * math.log((3 + math.sqrt(5)) / 2)) < 1e-12
    with pytest.raises(lspec.LspecError) as info:
        lspec.trace_to_geodesic(K, "2")
    assert info.value.kind == "NotLoxodromic"


def test_torsion_and_embedding():
    K = lspec.NumberField("x^3 - 2")
    good = lspec.torsion_free_check(K, ["real:0", "109:0"])
    assert good["torsion_free"]
    bad = lspec.torsion_free_check(K, ["real:0", "5:0"])
    assert [r["witness"] for r in bad["rows"]] == ["FAIL", "5:0"]
    cert = lspec.admits_embedding(K, ["real:0", "5:0"], "trace:a")
    assert cert["admits"]


def test_twins_round_trip():
    request = """
[field]
poly: x^3 - 2
disc: -108
[algebra]
ram_real: [0]
ram_primes: ["5:0"]
[extensions]
trace: a
[search]
k: 2
window: 12
height: 400
zeta_cutoff: 1000
"""
    report = lspec.construct_twins(request)
    assert report["schema_version"] == 1
    assert len(report["tuples"]) >= 1
    assert lspec.verify_report(report)["ok"]
