import math

import numpy as np
import pytest

import spindefect as sd


def test_bound_state_energy():
    spec = sd.ChainSpec(n_sites=201, alpha=-2.0)
    values, vectors = sd.diagonalize(spec)
    assert values.shape == (201,)
    assert vectors.shape == (201, 201)
    assert abs(values[0] - (2.0 - math.sqrt(5.0))) < 1e-8
    state = sd.localized_state(spec.lattice())
    assert state.energy == pytest.approx(2.0 - math.sqrt(5.0))


def test_hamiltonian_is_symmetric():
    h = sd.hamiltonian(sd.ChainSpec(n_sites=9, alpha=-1.0, defect_site=3))
    assert np.allclose(h, h.T)
    assert h[3, 3] == pytest.approx(1.0)
    assert h[0, 8] == pytest.approx(-0.5)


def test_localization_threshold():
    assert sd.inverse_localization_length(-math.sinh(1.0)) == pytest.approx(1.0, abs=1e-12)
    lat = sd.DefectLattice(alpha=-2.0)
    assert sd.localized_concurrence(lat, 0, 1) == pytest.approx(0.422291236, abs=1e-8)


def test_integral_matches_ring():
    spec = sd.ChainSpec(n_sites=241, alpha=-2.0)
    numeric = sd.transition_amplitude_numeric(spec, -5, 3, 10.0)
    integral = sd.transition_amplitude_integral(spec.lattice(), -5, 3, 10.0)
    assert isinstance(integral, complex)
    assert abs(numeric - integral) < 1e-6


def test_free_limit_and_asymptotics():
    lat = sd.DefectLattice(alpha=0.0)
    f = sd.transition_amplitude_integral(lat, 0, 4, 7.0)
    assert abs(abs(f) - abs(sd.bessel_j(4, 7.0))) < 1e-8
    assert sd.asymptotic_concurrence(-50.0, 0, 0, 0, 3.0) == pytest.approx(0.9998)


def test_transport():
    res = sd.transport_sweep([0.0, -1.0], -10, sd.ChainSpec(n_sites=801, alpha=0.0))
    assert res[0].T == pytest.approx(0.5, abs=0.02)
    assert res[1].T == pytest.approx(0.5 * sd.analytic_transmission_reference(-1.0), abs=0.03)
    for r in res:
        assert r.T + r.R + r.residual == pytest.approx(1.0, abs=1e-6)


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        sd.ChainSpec(n_sites=2)
    with pytest.raises(ValueError):
        sd.localized_state(sd.DefectLattice(alpha=0.0))
