import random

import pytest

from symbalg.eisenstein import (
    ONE,
    UNITS,
    EisensteinInt,
    cubic_residue_symbol,
    factor_rational_prime,
    residue_field,
)
from symbalg.intmath import primes_below
from symbalg.local import (
    LocalAlgebraSpec,
    artin_symbol,
    classify,
    classify_report,
    is_norm,
    power_spec,
    report_inert_prime_power,
    report_split_prime_power,
    residual_degree,
)

PI7 = factor_rational_prime(7)
PI5 = factor_rational_prime(5)


def spec_for(alpha, num, den=ONE, p=7):
    return LocalAlgebraSpec(
        EisensteinInt(alpha) if isinstance(alpha, int) else alpha,
        EisensteinInt(num) if isinstance(num, int) else num,
        EisensteinInt(den) if isinstance(den, int) else den,
        factor_rational_prime(p),
    )


# -------------------------------------------------------------- ingredients


def test_residual_degree_examples():
    f, data = residual_degree(EisensteinInt(2), PI7)
    assert f == 3 and (data.e, data.f, data.g) == (1, 3, 1)
    f, data = residual_degree(EisensteinInt(2), PI5)
    assert f == 1 and (data.e, data.f, data.g) == (1, 1, 3)
    with pytest.raises(ValueError):
        residual_degree(EisensteinInt(7), PI7)
    with pytest.raises(ValueError):
        residual_degree(EisensteinInt(2), factor_rational_prime(3))


def test_is_norm_examples():
    cert = is_norm(spec_for(2, 7**3))
    assert (cert.f, cert.m, cert.divides) == (3, 3, True)
    cert = is_norm(spec_for(2, 7))
    assert (cert.f, cert.m, cert.divides) == (3, 1, False)
    cert = is_norm(spec_for(2, 5))
    assert (cert.m, cert.divides) == (0, True)


def test_artin_symbol_examples():
    for l in (1, 2, 3):
        result = artin_symbol(spec_for(2, 7 ** (3 * l)))
        assert result.exponent == 0
    result = artin_symbol(power_spec(EisensteinInt(4), 11, 2))
    assert result.exponent == 0
    result = artin_symbol(spec_for(2, 7))
    assert (result.f, result.exponent) == (3, 1)


def test_classify_examples():
    assert classify(spec_for(2, 7**3)).outcome == "split"
    verdict = classify(spec_for(2, 7))
    assert verdict.outcome == "division"
    assert (verdict.certificate.f, verdict.certificate.m) == (3, 1)
    assert classify(spec_for(2, 5)).outcome == "split"


def test_spec_validation():
    with pytest.raises(ValueError):
        spec_for(7, 5)  # pi divides alpha
    with pytest.raises(ValueError):
        spec_for(2, 0)  # beta = 0
    with pytest.raises(ValueError):
        spec_for(2, 5, p=3)  # ramified prime
    with pytest.raises(ValueError):
        spec_for(2, 5, p=2)  # p too small


# ------------------------------------------------------------- named cases


def test_inert_power_report():
    report = report_inert_prime_power(2, 5, 1)
    assert report == {
        "verdict": "split",
        "f": 1,
        "m": 3,
        "artin_exponent": 0,
        "efg": [1, 1, 3],
        "case": "3.2",
        "symbol": "eps^0",
    }
    report = report_inert_prime_power(7, 11, 2)
    assert report["f"] == 1 and report["m"] == 6 and report["verdict"] == "split"


def test_inert_power_report_rejects_bad_input():
    with pytest.raises(ValueError):
        report_inert_prime_power(2, 7, 1)  # 7 = 1 mod 3
    with pytest.raises(ValueError):
        report_inert_prime_power(5, 5, 1)  # alpha not coprime
    with pytest.raises(ValueError):
        report_inert_prime_power(2, 3, 1)


def test_rational_alpha_always_trivial_at_inert_primes():
    # alpha^((p^2-1)/3) = (alpha^(p-1))^((p+1)/3) = 1 for rational alpha
    for p in (5, 11, 17, 23):
        prime = factor_rational_prime(p)
        for alpha in range(2, 12):
            if alpha % p == 0:
                continue
            assert cubic_residue_symbol(EisensteinInt(alpha), prime).is_trivial


def test_split_power_report_case_one():
    report = report_split_prime_power(EisensteinInt(2), 7, 1)
    assert report["case"] == "3.3-1"
    assert report["f"] == 3 and report["m"] == 3
    assert report["verdict"] == "split" and report["artin_exponent"] == 0


def test_split_power_report_p13_case_from_oracle():
    prime = factor_rational_prime(13)
    field = residue_field(prime)
    image = field.reduce(EisensteinInt(2))
    is_cube = any(field.pow(x, 3) == image for x in field.elements())
    report = report_split_prime_power(EisensteinInt(2), 13, 1)
    assert report["case"] == ("3.3-2" if is_cube else "3.3-1")
    assert report["verdict"] == "split"


def test_split_power_report_rejects_divisible_alpha():
    with pytest.raises(ValueError):
        report_split_prime_power(EisensteinInt(7), 7, 1)
    with pytest.raises(ValueError):
        report_split_prime_power(EisensteinInt(2), 5, 1)


def test_non_rational_alpha_at_inert_prime_is_reported_honestly():
    # a generator-like residue can have a nontrivial symbol at an inert
    # prime; the classifier must surface it and still conclude split for
    # beta = p^(3l)
    prime = factor_rational_prime(5)
    field = residue_field(prime)
    nontrivial = None
    for a in range(5):
        for b in range(5):
            z = EisensteinInt(a, b)
            if field.reduce(z) == field.zero:
                continue
            if not cubic_residue_symbol(z, prime).is_trivial:
                nontrivial = z
                break
        if nontrivial:
            break
    assert nontrivial is not None
    spec = power_spec(nontrivial, 5, 1)
    report = classify_report(spec)
    assert report["symbol"] != "eps^0"
    assert report["f"] == 3
    assert report["verdict"] == "split"  # f = 3 divides m = 3


# --------------------------------------------------------------- invariants


def test_consistency_triangle_on_grid():
    for p in primes_below(60):
        if p <= 3:
            continue
        prime = factor_rational_prime(p)
        for alpha in (2, 3, 5, 11):
            if alpha % p == 0:
                continue
            for m in range(-3, 4):
                num = prime.pi ** m if m >= 0 else ONE
                den = ONE if m >= 0 else prime.pi ** (-m)
                spec = LocalAlgebraSpec(EisensteinInt(alpha), num, den, prime)
                cert = is_norm(spec)
                assert cert.m == m
                verdict = classify(spec)
                artin = artin_symbol(spec)
                assert (verdict.outcome == "split") == cert.divides == (artin.exponent == 0)


def test_unit_scaling_never_changes_the_verdict():
    rng = random.Random(2)
    for _ in range(30):
        p = rng.choice([5, 7, 11, 13, 19, 23])
        prime = factor_rational_prime(p)
        alpha = EisensteinInt(rng.randint(2, 20))
        if prime.divides(alpha):
            continue
        m = rng.randint(0, 5)
        base = prime.pi ** m
        base_verdict = classify(LocalAlgebraSpec(alpha, base, ONE, prime)).outcome
        for u in UNITS:
            scaled = classify(LocalAlgebraSpec(alpha, base * u, ONE, prime)).outcome
            assert scaled == base_verdict


def test_beta_times_pi_cubed_is_invariant():
    for p in (7, 13, 19):
        prime = factor_rational_prime(p)
        for m in range(0, 4):
            spec = LocalAlgebraSpec(EisensteinInt(2), prime.pi ** m, ONE, prime)
            shifted = LocalAlgebraSpec(EisensteinInt(2), prime.pi ** (m + 3), ONE, prime)
            assert classify(spec).outcome == classify(shifted).outcome


def test_division_only_when_f_three_and_m_not_divisible():
    for p in (7, 13):
        prime = factor_rational_prime(p)
        for alpha in (2, 3, 4, 5, 6, 8):
            if alpha % p == 0 or prime.divides(EisensteinInt(alpha)):
                continue
            f, _ = residual_degree(EisensteinInt(alpha), prime)
            for m in range(0, 6):
                spec = LocalAlgebraSpec(EisensteinInt(alpha), prime.pi ** m, ONE, prime)
                verdict = classify(spec)
                if verdict.outcome == "division":
                    assert f == 3 and m % 3 != 0


def test_power_spec_requires_positive_l():
    with pytest.raises(ValueError):
        power_spec(EisensteinInt(2), 7, 0)
