"""End-to-end checks of the compiled python module."""

import cmath
import math

import pytest

import mocposite as mp


def left_arc(radius, n=96):
    """Arc from radius*i to -radius*i through the left half plane."""
    pts = [complex(0, radius)]
    for k in range(1, n):
        theta = math.pi / 2 + math.pi * k / n
        pts.append(radius * cmath.exp(1j * theta))
    pts.append(complex(0, -radius))
    return pts


def test_branch_values():
    assert mp.eval_f2(2 + 0j) == pytest.approx(-1j * math.sqrt(3), abs=1e-14)
    assert mp.eval_f3(0j) == 1
    assert mp.eval_f1(1j) == pytest.approx(math.sqrt(2), abs=1e-14)
    assert mp.eval_cos_sqrt((math.pi / 2) ** 2) == pytest.approx(0, abs=1e-12)
    assert mp.joukowski(0.5 + 0j) == pytest.approx(1.25, abs=1e-14)
    assert mp.evaluate_branch("f2", 2 + 0j) == mp.eval_f2(2 + 0j)


def test_domain_errors_reach_python_as_subclasses():
    with pytest.raises(mp.DomainError):
        mp.eval_f2(0.5 + 0j)
    with pytest.raises(mp.Error):
        mp.eval_f1(1 - 1j)
    with pytest.raises(mp.UsageError):
        mp.crack_integral(2 + 0j, 4)


def test_crack_integral_matches_reconstruction():
    for z in (2 + 0j, 0.5 + 1.2j, -0.3 - 2j):
        ref = z - 1j * mp.eval_f2(z)
        assert mp.crack_integral(z, 400) == pytest.approx(ref, abs=1e-10)


def test_bessel_value_and_agreement():
    assert mp.bessel_j0_series(2 + 0j) == pytest.approx(0.2238907791412356, abs=1e-13)
    z = 1.5 - 0.5j
    assert mp.bessel_j0_quadrature(z, 128) == pytest.approx(
        mp.bessel_j0_series(z), abs=1e-11
    )


def test_continuation_standard_loops():
    g = lambda z: 1 - z * z
    w0 = mp.eval_f2(2 + 0j)

    # Radius-2 diamond encloses both branch points: even count, same sheet.
    trace = mp.continue_sqrt(g, [2 + 0j, 2j, -2 + 0j, -2j], True, w0)
    assert trace["terminal"] == pytest.approx(w0, abs=1e-9)
    assert trace["samples"][0][0] == 2 + 0j
    assert trace["samples"][-1][0] == 2 + 0j
    assert trace["refinements"] >= 0

    # A loop around +1 only flips the sheet.
    tight = [2 + 0j, 1 + 0.9j, 0.2 + 0j, 1 - 0.9j]
    assert mp.monodromy_of_loop("sqrt", g, tight, w0) == -1
    assert mp.monodromy_of_loop("sqrt", g, [2 + 0j, 2j, -2 + 0j, -2j], w0) == 1


def test_continue_log_winds_once():
    square = [1 + 0j, 1j, -1 + 0j, -1j]
    trace = mp.continue_log(lambda z: z, square, True, 0j)
    assert trace["terminal"] == pytest.approx(2j * math.pi, abs=1e-9)


def test_parity_probe_classifies_the_slit_exterior_as_odd():
    assert mp.parity_probe("slit_interval", 2j, left_arc(2.0)) == "odd"


def test_estimate_order_of_a_python_callable():
    order = mp.estimate_order(lambda z: mp.eval_cos_sqrt(z), [1e2, 1e3, 1e4])
    assert abs(order - 0.5) < 0.05


def test_run_suite_reports():
    report = mp.run_suite("branches")
    assert report["total"] > 20
    assert report["passed"] == report["total"]
    names = [rec["name"] for rec in report["records"]]
    assert names == sorted(names)
    assert all(rec["pass"] for rec in report["records"])
    with pytest.raises(mp.UsageError):
        mp.run_suite("bogus")
