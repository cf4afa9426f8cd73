import pytest

import msetforge as mf

FIB = [-1, -1, 1]


def test_primes_and_factoring():
    assert mf.is_prime(2**61 - 1)
    assert not mf.is_prime(6765)
    sign, factors, complete, rest = mf.factorize(-6765)
    assert sign == -1 and complete and rest == []
    assert factors == [(3, 1), (5, 1), (11, 1), (41, 1)]
    assert mf.mult_order(2, 7) == 3


def test_polynomials():
    assert mf.cyclotomic(6) == [1, -1, 1]
    assert mf.resultant(FIB, mf.cyclotomic(7)) == 29
    assert mf.parse_poly("-1, -1, 1") == FIB
    assert mf.pretty_poly(FIB) == "X^2 - X - 1"


def test_big_integers_round_trip():
    u = mf.lehmer_u(5, 1, 300)
    assert u > 2**64
    assert u % 6765 == 0
    assert mf.lehmer_u(5, 1, 20) == 6765


def test_lehmer():
    assert mf.phi_value(5, 1, 20) == 41
    assert mf.rank_of_appearance(5, 1, 41) == 20
    assert mf.rank_of_appearance(3, 2, 2) is None
    assert mf.primitive_divisors(5, 1, 20) == [41]
    assert mf.has_primitive_divisor(5, 1, 7)
    assert mf.two_squares(5, 20) == (4, 5)


def test_aurifeuille():
    assert mf.aurifeuille_applicable(5, 5) == "c1"
    F, G = mf.aurifeuillian_pair(5, 5)
    assert (F, G) == ([1, 3, 1], [1, 1])
    with pytest.raises(mf.DomainError):
        mf.aurifeuillian_pair(20, 5)


def test_witness_and_verify():
    w = mf.find_witness(1, -1, m=7)
    assert (w["p"], w["a"], w["route"]) == (29, 24, "cond3")
    assert all(ok for _, ok in w["checks"])
    assert mf.verify_witness(w)
    assert not mf.verify_witness(dict(w, a=8))
    nc = mf.find_witness(1, -1, m=12)
    assert "not_covered" in nc


def test_scan_agrees_with_orbit():
    hits = mf.mset_scan(FIB, 30, threads=2)
    for count, (M, init) in hits.items():
        residues, _, _ = mf.orbit(FIB, init, M)
        assert len(residues) == count


def test_errors_are_typed():
    with pytest.raises(ValueError):
        mf.lehmer_u(1, 1, 3)
    with pytest.raises(mf.DomainError):
        mf.find_witness(1, -1, g=[1, 0, 1], m=7)
    assert mf.zsigmondy_witness(2, 6) is None
    assert mf.zsigmondy_witness(2, 5) == 31
