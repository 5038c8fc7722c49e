import json
from fractions import Fraction

import pytest

from aztec_triangles.exact import Matrix
from aztec_triangles.paths import d_submatrix
from aztec_triangles.verify import (
    check_degree_and_leading,
    check_detprop,
    check_gamma6,
    check_id1,
    check_id2,
    check_main,
    check_step1,
    check_step2,
    check_step3,
    check_step4,
    gamma6_irreducible_factor,
    leading_coefficient,
    run_suite,
    step_parameter_grid,
    suite_kernels,
)

HALF = Fraction(1, 2)


def test_step1_examples():
    report = check_step1(2, 0, 0)
    assert report.residuals == (0, 0)
    assert report.passed
    assert check_step1(4, 1, 0).passed
    assert check_step1(3, 1, 1).passed


def test_step2_examples():
    assert check_step2(1, 0, 0).passed
    assert check_step2(3, 1, 0).passed
    assert check_step2(2, 1, 1).passed


def test_step3_examples():
    assert d_submatrix(2, -1, 1) == Matrix([[5, -25], [1, -5]])
    assert check_step3(2, 0, 0).passed
    assert check_step3(4, 1, 0).passed
    assert check_step3(4, 2, 1).passed


def test_step4_examples():
    assert check_step4(3, 1, 0, "odd").passed
    assert check_step4(5, 1, 0, "even").passed
    assert check_step4(7, 2, 1, "odd").passed


def test_step_preconditions():
    with pytest.raises(ValueError):
        check_step1(3, 1, 0)  # parity mismatch
    with pytest.raises(ValueError):
        check_step2(2, 1, 0)  # parity match where mismatch required
    with pytest.raises(ValueError):
        check_step3(3, 2, 0)  # k too small
    with pytest.raises(ValueError):
        check_step4(3, 1, 1, "odd")  # needs a < s
    with pytest.raises(ValueError):
        check_step4(3, 1, 0, "sideways")


def test_full_legal_grid_small():
    records = suite_kernels(6)
    assert records and all(r["pass"] for r in records)


def test_grid_contains_expected_points():
    grid = set(step_parameter_grid(4))
    assert ("step1", 2, 0, 0, None) in grid
    assert ("step3", 4, 2, 1, None) in grid
    assert ("step4", 3, 1, 0, "odd") in grid
    assert ("step4", 4, 1, 0, "odd") in grid
    assert ("step4", 3, 1, 0, "even") not in grid  # needs k >= 5


def test_id_identities():
    assert check_id1(3, 1) == 0
    assert check_id1(8, 2) == 0
    assert check_id2(5, 1) == 0
    assert check_id2(9, 2) == 0
    with pytest.raises(ValueError):
        check_id1(2, 1)
    with pytest.raises(ValueError):
        check_id2(4, 1)


def test_detprop():
    assert check_detprop(0, 4)
    assert check_detprop(1, -2)
    assert check_detprop(2, 3)
    for k in range(5):
        for n in range(-3, 7):
            assert check_detprop(k, n), (k, n)


def test_main_instances():
    assert check_main(1, Fraction(7, 2))
    assert check_main(2, 2)
    assert check_main(0, Fraction(22, 7))
    for k in range(4):
        for n in [-2, 0, 3, HALF, Fraction(11, 2), Fraction(-3, 2)]:
            assert check_main(k, n), (k, n)


def test_degree_and_leading():
    assert leading_coefficient(1) == 2
    assert leading_coefficient(2) == Fraction(8, 3)
    assert check_degree_and_leading(1)
    assert check_degree_and_leading(2)
    assert check_degree_and_leading(3)
    with pytest.raises(ValueError):
        check_degree_and_leading(0)


def test_gamma6():
    assert check_gamma6(3, 1)
    assert check_gamma6(10, 2)
    for s in range(1, 5):
        for k in range(4 * s - 1, 21):
            assert gamma6_irreducible_factor(k, s) % 2 == 1
            assert check_gamma6(k, s)
    with pytest.raises(ValueError):
        check_gamma6(2, 1)


def test_run_suite_json_round_trip():
    records = run_suite("degree", 3)
    assert all(r["pass"] for r in records)
    assert json.loads(json.dumps(records)) == records
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_failing_report_carries_residual():
    report = check_step1(2, 0, 0)
    fake = type(report)(report.suite, report.params, (Fraction(1, 3), 0))
    record = fake.to_json()
    assert record["pass"] is False
    assert record["residual"] == ["1/3", "0"]
