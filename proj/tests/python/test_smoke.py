"""Smoke tests for the pellben extension module.

Runnable directly (python3 test_smoke.py) or under pytest.
"""

import math

import pellben as pb


def test_fundamental_unit():
    unit = pb.fundamental_unit(29)
    assert (unit.value.x, unit.value.y) == (9801, 1820)
    assert unit.norm_minus_one is not None
    assert (unit.norm_minus_one.x, unit.norm_minus_one.y) == (70, 13)
    assert pb.fundamental_unit(2).value == pb.QuadInt(2, 3, 2)
    assert pb.fundamental_unit(77).norm_minus_one is None

    cf = pb.cf_sqrt(29)
    assert cf.a0 == 5
    assert cf.period == [2, 1, 1, 2, 10]
    assert pb.convergent(cf, 4) == (70, 13)


def test_quadint_arithmetic():
    a = pb.QuadInt(77, 8, 1)
    b = pb.QuadInt(77, 351, 40)
    c = a * b
    assert (c.x, c.y) == (5888, 671)
    assert c.norm() == -13
    assert a.conj().y == -1
    assert (-a).x == -8
    assert str(pb.QuadInt(77, -8, 1)) == "-8+1*sqrt(77)"
    assert pb.QuadInt.parse("-8+1*sqrt(77)") == pb.QuadInt(77, -8, 1)

    big = pb.QuadInt(29, 9801, 1820) ** 200
    assert big.norm() == 1
    assert big.x > 10 ** 700  # arbitrary precision round trip
    assert pb.isqrt(10 ** 200) == 10 ** 100


def test_orbit_partition():
    partition = pb.orbit_partition(29, 140)
    assert len(partition.fundamentals) == 12

    p77 = pb.orbit_partition(77, -13)
    values = {(f.value.x, f.value.y) for f in p77.fundamentals}
    assert values == {(8, 1), (-8, 1)}
    assert p77.fundamentals[0].conjugate_partner == 1
    assert not p77.fundamentals[0].ambiguous

    element = pb.QuadInt(77, 272, 31)
    assert pb.associated(element, pb.QuadInt(77, -8, 1))
    assert not pb.associated(element, pb.QuadInt(77, 8, 1))
    assert pb.classify(element, p77) == 1

    assert pb.orbit_partition(2, 3).fundamentals == []

    box = pb.search_bounds(29, 140, pb.fundamental_unit(29))
    assert (box.u_max, box.v_max) == (828, 153)
    assert len(pb.solutions_in_box(29, 140, box)) == 12


def test_sequences():
    unit = pb.fundamental_unit(2)
    terms = pb.generate(pb.QuadInt(2, 1, 0), unit.value, pb.Variant.T1, 3)
    assert [(t.x, t.y) for t in terms] == [(3, 2), (17, 12), (99, 70)]

    z = pb.enumerate_norm_class(77, -13, 4)
    assert len(z) == 32
    assert all(t.norm() == -13 for t in z)

    merged = pb.interleave([terms, terms])
    assert [t.x for t in merged] == [3, 3, 17, 17, 99, 99]

    assert pb.check_characteristic_roots(unit.value)


def test_benford():
    assert abs(pb.expected_prob([1]) - math.log10(2)) < 1e-12
    assert abs(pb.expected_prob([1]) - 0.3010) < 5e-5
    assert abs(pb.second_digit_marginal(0) - 0.1197) < 5e-5
    assert pb.leading_digits(-33461, 1) == [3]
    assert pb.leading_digits(4133368, 3) == [4, 1, 3]
    assert pb.log10_mantissa(1000) == 0.0
    assert pb.star_discrepancy([0.5]) == 0.5
    assert abs(pb.empirical_density([0.1, 0.5, 0.9], 0.5) - 2 / 3) < 1e-12

    xs = [t.x for t in pb.generate(pb.QuadInt(2, 1, 0), pb.fundamental_unit(2).value,
                                   pb.Variant.T1, 500)]
    report = pb.benford_report(xs, 1)
    assert report.total == 500
    assert report.max_abs_deviation < 0.05
    assert report.star_discrepancy < 0.05
    assert sum(report.stats.counts.values()) == 500
    assert abs(sum(report.expected.values()) - 1.0) < 1e-12


def test_error_paths():
    for bad in (lambda: pb.Radicand(4),
                lambda: pb.orbit_partition(2, 0),
                lambda: pb.leading_digits(0, 1),
                lambda: pb.QuadInt(2, 1, 1) * pb.QuadInt(3, 1, 1)):
        try:
            bad()
        except (ValueError, RuntimeError):
            pass
        else:
            raise AssertionError("expected an exception")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"PASS {name}")
            except AssertionError as exc:
                failures += 1
                print(f"FAIL {name}: {exc}")
    raise SystemExit(1 if failures else 0)
