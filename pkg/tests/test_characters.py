import math

import pytest
from sympy import divisors, mobius, totient

from lbounds.bound.census import primitive_census
from lbounds.characters.character import (character_from_label, conductor_parity, enumerate_characters,
                                          enumerate_primitive, unit_group)
from lbounds.characters.gauss import gauss_root, gauss_sum
from lbounds.interval.cinterval import ComplexInterval
from tools.exception import DomainError, NotPrimitive


@pytest.mark.parametrize("q, even, odd", [(3, 0, 1), (4, 0, 1), (5, 1, 2), (8, 1, 1), (12, 1, 0)])
def test_primitive_counts_small(q, even, odd):
    chars = enumerate_primitive(q)
    assert sum(1 for c in chars if c.parity == 0) == even
    assert sum(1 for c in chars if c.parity == 1) == odd


def test_no_primitive_characters_mod_two_or_6():
    assert enumerate_primitive(6) == []
    assert enumerate_primitive(2) == []


def test_conductor_of_character_mod_6():
    nontrivial = [c for c in enumerate_characters(6) if not c.is_principal]
    assert len(nontrivial) == 1
    meta = conductor_parity(nontrivial[0])
    assert meta.conductor == 3
    assert not meta.is_primitive
    assert meta.a == 1


def test_census_matches_enumeration():
    for q in range(3, 65):
        expected = sum(int(mobius(q // d)) * int(totient(d)) for d in divisors(q))
        census = primitive_census(q)
        assert census.total == expected
        chars = enumerate_primitive(q)
        assert len(chars) == expected
        assert census.odd == sum(c.parity for c in chars)


def test_unit_group_size():
    for q in (7, 9, 16, 20, 63):
        assert unit_group(q).size == int(totient(q))


def test_values_are_multiplicative_and_periodic():
    for chi in enumerate_characters(20):
        for m in range(1, 20):
            for n in range(1, 20):
                tm, tn, tmn = chi.turns(m), chi.turns(n), chi.turns(m * n)
                if tm is None or tn is None:
                    assert tmn is None
                else:
                    assert tmn == (tm + tn) % 1
        assert chi.turns(7) == chi.turns(27)


def test_orthogonality():
    q = 15
    chars = list(enumerate_characters(q))
    assert len(chars) == int(totient(q))
    for chi in chars:
        if chi.is_principal:
            continue
        total = ComplexInterval(0.0)
        for n in chi.value_table:
            total = total + chi(n)
        assert total.contains(0)


def test_label_round_trip():
    for chi in enumerate_characters(24):
        again = character_from_label(chi.label)
        assert again == chi
        assert again.conj().conj() == chi


def test_bad_label():
    with pytest.raises(DomainError):
        character_from_label("7.99")
    with pytest.raises(DomainError):
        character_from_label("seven")


def test_real_and_order():
    chi = enumerate_primitive(3)[0]
    assert chi.is_real and chi.order == 2
    quartic = [c for c in enumerate_primitive(5) if c.order == 4]
    assert len(quartic) == 2 and not quartic[0].is_real
    assert quartic[0].conj() == quartic[1]


def test_one_per_pair():
    full = enumerate_primitive(13)
    half = enumerate_primitive(13, one_per_pair=True)
    real = [c for c in full if c.is_real]
    assert len(half) == len(real) + (len(full) - len(real)) // 2


def test_gauss_sums_known_values(chi3, chi4):
    tau3, tau4 = gauss_sum(chi3), gauss_sum(chi4)
    assert tau3.re.contains(0) and abs(tau3.im.mid - math.sqrt(3)) < 1e-12
    assert tau4.re.contains(0) and tau4.im.contains(2)
    assert gauss_root(chi3).epsilon.contains(1)


def test_root_numbers_unimodular():
    for q in (5, 7, 8, 11, 16, 21):
        for chi in enumerate_primitive(q):
            assert gauss_root(chi).epsilon.abs2().contains(1.0)


def test_gauss_root_needs_primitive():
    chi = next(c for c in enumerate_characters(9) if not c.is_principal and c.conductor == 3)
    with pytest.raises(NotPrimitive):
        gauss_root(chi)
