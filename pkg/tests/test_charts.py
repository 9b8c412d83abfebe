import math

import numpy as np
import pytest

from cp2ricci.charts import perturbed_ruled_chart, ruled_chart, sphere_chart

RULED_SAMPLES = [(0.6, 1.0, 2.0), (0.35, 5.9, 0.2), (1.1, 3.0, 4.5), (-0.8, 2.2, 1.3)]
SPHERE_SAMPLES = [(0.3, 0.7, 0.4), (5.0, 1.1, 2.0), (2.0, 0.5, 5.5)]


def _fd_partials(chart, q, h=1e-5):
    out = []
    for a in range(3):
        qp = list(q)
        qp[a] += h
        qm = list(q)
        qm[a] -= h
        out.append((chart.evaluate(*qp).z - chart.evaluate(*qm).z) / (2 * h))
    return out


def _check_chart_basics(chart, samples, tol_fd=1e-9):
    for q in samples:
        p = chart.evaluate(*q)
        assert abs(p.norm() - 1.0) < 1e-14
        parts = chart.partials(*q)
        for w in parts:
            assert abs(w.real_inner(p)) < 1e-14  # derivative of unit norm
        for w, fd in zip(parts, _fd_partials(chart, q)):
            assert np.max(np.abs(w.z - fd)) < tol_fd


def test_ruled_chart_point_and_partials():
    chart = ruled_chart()
    assert np.allclose(chart.evaluate(0.0, 0.0, 0.0).z, [1, 0, 0])
    _check_chart_basics(chart, RULED_SAMPLES)


def test_ruled_vertical_components():
    # hand differentiation: z_theta . conj(z) = i sin^2 u, z_u . conj(z) = 0
    chart = ruled_chart()
    for u, v, t in RULED_SAMPLES:
        p = chart.evaluate(u, v, t)
        du, dv, dt = chart.partials(u, v, t)
        ip = p.times_i()
        assert abs(dt.real_inner(ip) - math.sin(u) ** 2) < 1e-14
        assert abs(du.real_inner(ip)) < 1e-14
        assert abs(dv.real_inner(ip)) < 1e-14


def test_sphere_chart_point_and_partials():
    chart = sphere_chart(math.pi / 4)
    s2 = math.sqrt(2) / 2
    assert np.allclose(chart.evaluate(0.0, math.pi / 4, 0.0).z, [s2, 0.5, 0.5])
    _check_chart_basics(chart, SPHERE_SAMPLES)


def test_sphere_first_component_modulus_is_cos_r():
    for r in (0.4, math.pi / 4, 1.2):
        chart = sphere_chart(r)
        for q in SPHERE_SAMPLES:
            assert abs(abs(chart.evaluate(*q).c1) - math.cos(r)) < 1e-14


def test_sphere_phi_partial_vertical_component():
    # hand differentiation: z_phi . conj(z) = i cos^2 r
    for r in (0.5, math.pi / 4):
        chart = sphere_chart(r)
        for q in SPHERE_SAMPLES:
            p = chart.evaluate(*q)
            dphi = chart.partials(*q)[0]
            assert abs(dphi.real_inner(p.times_i()) - math.cos(r) ** 2) < 1e-14


def test_sphere_radius_domain():
    with pytest.raises(ValueError):
        sphere_chart(0.0)
    with pytest.raises(ValueError):
        sphere_chart(math.pi / 2)
    with pytest.raises(ValueError):
        sphere_chart(-0.3)


def test_singular_predicates():
    rc = ruled_chart()
    assert rc.is_singular(0.0, 1.0, 2.0)
    assert rc.is_singular(math.pi / 2, 1.0, 2.0)
    assert not rc.is_singular(0.6, 1.0, 2.0)
    sc = sphere_chart(0.7)
    assert sc.is_singular(1.0, 0.0, 2.0)
    assert sc.is_singular(1.0, math.pi / 2, 2.0)
    assert not sc.is_singular(1.0, 0.7, 2.0)


def test_sample_boxes_avoid_singular_loci():
    for chart in (ruled_chart(), sphere_chart(0.9)):
        for q in chart.sample_box.grid(4):
            assert chart.domain.contains(q) or chart is not None
            assert not chart.is_singular(*q)


def test_perturbed_chart_is_exact_and_seeded():
    chart = perturbed_ruled_chart(0.05, seed=123)
    _check_chart_basics(chart, RULED_SAMPLES, tol_fd=1e-9)
    again = perturbed_ruled_chart(0.05, seed=123)
    other = perturbed_ruled_chart(0.05, seed=124)
    q = (0.6, 1.0, 2.0)
    assert np.array_equal(chart.evaluate(*q).z, again.evaluate(*q).z)
    assert not np.allclose(chart.evaluate(*q).z, other.evaluate(*q).z)


def test_zero_perturbation_is_the_ruled_chart():
    base = ruled_chart()
    chart = perturbed_ruled_chart(0.0, seed=5)
    for q in RULED_SAMPLES:
        assert np.max(np.abs(chart.evaluate(*q).z - base.evaluate(*q).z)) < 1e-15
        for w, wb in zip(chart.partials(*q), base.partials(*q)):
            assert np.max(np.abs(w.z - wb.z)) < 1e-14


def test_grid_requires_two_points_per_axis():
    with pytest.raises(ValueError):
        list(ruled_chart().sample_box.grid(1))
