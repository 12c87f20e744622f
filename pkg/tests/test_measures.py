import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ame_lab import channels, measures, states
from ame_lab.errors import EmptySubset, IndexOutOfRange, NotPSD
from ame_lab.measures import Bipartition
from ame_lab.numerics import I2
from ame_lab.states import DensityMatrix
from conftest import random_density, random_unitary
from oracles import entropy_bits, jacobi_eigenvalues, partial_trace_loops, partial_transpose_loops


def test_bipartition_validation():
    b = Bipartition(5, (3, 1))
    assert b.subset_a == (1, 3)
    assert b.subset_b == (2, 4, 5)
    assert b.label() == "1-3"
    with pytest.raises(IndexOutOfRange):
        Bipartition(3, (4,))
    with pytest.raises(IndexOutOfRange):
        Bipartition(3, (1, 1))
    with pytest.raises(EmptySubset):
        Bipartition(3, ())
    with pytest.raises(EmptySubset):
        Bipartition(3, (1, 2, 3))


def test_partial_trace_examples(rng):
    bell = states.density(states.bell())
    assert np.allclose(measures.partial_trace(bell, [1]).matrix, I2 / 2, atol=1e-15)
    z = states.density(states.ame5_logical_zero())
    for a in [(1, 2), (1, 5), (2, 4), (3, 4)]:
        assert np.allclose(measures.partial_trace(z, a).matrix, np.eye(4) / 4, atol=1e-12)
    ra, rb = random_density(1, rng), random_density(2, rng)
    prod = DensityMatrix(3, np.kron(ra, rb))
    assert np.allclose(measures.partial_trace(prod, [1]).matrix, ra, atol=1e-12)
    assert np.allclose(measures.partial_trace(prod, [2, 3]).matrix, rb, atol=1e-12)
    with pytest.raises(EmptySubset):
        measures.partial_trace(bell, [])
    with pytest.raises(IndexOutOfRange):
        measures.partial_trace(bell, [3])


@pytest.mark.parametrize("keep", [(1,), (2,), (3,), (1, 3), (2, 3), (1, 2, 4), (4,)])
def test_partial_trace_matches_loops(keep, rng):
    rho = random_density(4, rng)
    got = measures.partial_trace(DensityMatrix(4, rho), keep).matrix
    assert np.max(np.abs(got - partial_trace_loops(rho, 4, keep))) <= 1e-12


@pytest.mark.parametrize("a", [(1,), (2,), (1, 3), (2, 3)])
def test_partial_transpose_matches_loops(a, rng):
    rho = random_density(4, rng)
    part = Bipartition(4, a)
    got = measures.partial_transpose(DensityMatrix(4, rho), part)
    assert np.max(np.abs(got - partial_transpose_loops(rho, 4, part.subset_b))) <= 1e-12


def test_partial_transpose_examples(rng):
    bell = states.density(states.bell())
    pt = measures.partial_transpose(bell, Bipartition(2, (1,)))
    assert np.allclose(jacobi_eigenvalues(pt), [-0.5, 0.5, 0.5, 0.5], atol=1e-12)
    ra, rb = random_density(1, rng), random_density(1, rng)
    prod = DensityMatrix(2, np.kron(ra, rb))
    pt = measures.partial_transpose(prod, Bipartition(2, (1,)))
    assert np.allclose(pt, np.kron(ra, rb.T))
    assert np.linalg.eigvalsh(pt)[0] >= -1e-12
    rho = DensityMatrix(3, random_density(3, rng))
    part = Bipartition(3, (2,))
    twice = measures.partial_transpose(DensityMatrix(3, measures.partial_transpose(rho, part)), part)
    assert np.allclose(twice, rho.matrix)
    assert np.trace(measures.partial_transpose(rho, part)) == pytest.approx(1)


def test_entropy_examples():
    assert measures.von_neumann_entropy(DensityMatrix(1, np.diag([1, 0]))) == 0
    assert measures.von_neumann_entropy(DensityMatrix(2, np.eye(4) / 4)) == pytest.approx(2, abs=1e-12)
    expected = -(0.75 * math.log2(0.75) + 0.25 * math.log2(0.25))
    assert expected == pytest.approx(0.8112781244591328, abs=1e-15)
    assert measures.von_neumann_entropy(DensityMatrix(1, np.diag([0.75, 0.25]))) == pytest.approx(expected, abs=1e-12)


def test_entropy_clamping_and_notpsd():
    # eigenvalue -5e-11 is rounding noise
    assert measures.von_neumann_entropy(DensityMatrix(1, np.diag([1 + 5e-11, -5e-11]))) == pytest.approx(0, abs=1e-9)
    with pytest.raises(NotPSD) as info:
        measures.von_neumann_entropy(DensityMatrix(1, np.diag([1.001, -0.001])))
    assert info.value.min_eigenvalue == pytest.approx(-0.001)


def test_log_negativity_examples():
    bell = states.density(states.bell())
    assert measures.log_negativity(bell, Bipartition(2, (1,))) == pytest.approx(1, abs=1e-12)
    z = states.density(states.ame5_logical_zero())
    assert measures.log_negativity(z, Bipartition(5, (2, 4))) == pytest.approx(2, abs=1e-12)


@pytest.mark.parametrize("p", [0.0, 0.1, 0.25, 0.5, 0.75, 1.0])
def test_dephased_bell_log_negativity(p):
    rho = channels.apply_symmetric(states.density(states.bell()), channels.dephasing_z(p))
    assert measures.log_negativity(rho, Bipartition(2, (1,))) == pytest.approx(
        math.log2(1 + (1 - p) ** 2), abs=1e-12
    )


def test_coherent_information_examples(rng):
    ci = measures.coherent_information(states.density(states.bell()), Bipartition(2, (1,)))
    assert ci.a_to_b == pytest.approx(1, abs=1e-12)
    assert ci.b_to_a == pytest.approx(1, abs=1e-12)
    assert ci.max == max(ci.a_to_b, ci.b_to_a)

    ra, rb = random_density(1, rng), random_density(2, rng)
    prod = DensityMatrix(3, np.kron(ra, rb))
    ci = measures.coherent_information(prod, Bipartition(3, (1,)))
    s_a = entropy_bits(jacobi_eigenvalues(ra))
    s_b = entropy_bits(jacobi_eigenvalues(rb))
    assert ci.a_to_b == pytest.approx(-s_a, abs=1e-9)
    assert ci.b_to_a == pytest.approx(-s_b, abs=1e-9)

    z = states.density(states.ame5_logical_zero())
    ci = measures.coherent_information(z, Bipartition(5, (1, 3)))
    assert ci.a_to_b == pytest.approx(2, abs=1e-9)
    assert ci.b_to_a == pytest.approx(2, abs=1e-9)


def test_measure_record_matches_separate_calls():
    rho = channels.apply_symmetric(states.density(states.phi5_prime()), channels.dephasing_z(0.3))
    part = Bipartition(5, (2, 5))
    rec = measures.measure(rho, part)
    ci = measures.coherent_information(rho, part)
    assert rec.log_negativity == measures.log_negativity(rho, part)
    assert (rec.coherent_info_a_to_b, rec.coherent_info_b_to_a) == (ci.a_to_b, ci.b_to_a)
    assert rec.coherent_info_max == ci.max


def test_is_ame_examples():
    assert measures.is_ame(states.ghz3())
    assert measures.is_ame(states.ame6())
    ghz4 = states.ghz(4)
    assert not measures.is_ame(ghz4)
    cut = {c.subset: c for c in measures.cut_entropies(ghz4)}
    assert cut[(1, 2)].entropy == pytest.approx(1, abs=1e-12)
    assert cut[(1, 2)].deficit == pytest.approx(1, abs=1e-12)


def test_cut_entropies_count():
    assert len(measures.cut_entropies(states.phi5())) == 15
    assert len(measures.cut_entropies(states.ame6())) == 41


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@settings(max_examples=20, deadline=None)
@given(seeds, st.sampled_from([(1,), (2,), (1, 2), (1, 3)]))
def test_pt_side_symmetry(seed, a):
    rho = DensityMatrix(4, random_density(4, np.random.default_rng(seed)))
    part = Bipartition(4, a)
    assert measures.log_negativity(rho, part) == pytest.approx(measures.log_negativity(rho, part.swapped()), abs=1e-9)


@settings(max_examples=20, deadline=None)
@given(seeds, st.sampled_from([(1,), (3,), (1, 2), (2, 4)]))
def test_schmidt_symmetry(seed, a):
    rho = DensityMatrix(4, random_density(4, np.random.default_rng(seed), rank=1))
    part = Bipartition(4, a)
    s_a = measures.von_neumann_entropy(measures.partial_trace(rho, part.subset_a))
    s_b = measures.von_neumann_entropy(measures.partial_trace(rho, part.subset_b))
    assert s_a == pytest.approx(s_b, abs=1e-9)


def _all_cuts(n):
    from itertools import combinations

    return [Bipartition(n, a) for m in range(1, n // 2 + 1) for a in combinations(range(1, n + 1), m)]


@pytest.mark.parametrize("state", [states.ghz3, states.phi5, states.phi5_prime])
@pytest.mark.parametrize(
    "channel", [channels.depolarizing(0.3), channels.dephasing_z(0.4), channels.pauli_channel(0.05, 0.05, 0.2)]
)
def test_entropy_chain_and_bounds(state, channel):
    rho0 = states.density(state())
    rho = channels.apply_symmetric(rho0, channel)
    assert measures.von_neumann_entropy(rho) >= measures.von_neumann_entropy(rho0) - 1e-9
    for part in _all_cuts(state().num_qubits):
        s_b0 = measures.von_neumann_entropy(measures.partial_trace(rho0, part.subset_b))
        s_b = measures.von_neumann_entropy(measures.partial_trace(rho, part.subset_b))
        assert s_b >= s_b0 - 1e-9
        rec = measures.measure(rho, part)
        assert rec.coherent_info_a_to_b >= rec.coherent_info_b_to_a - 1e-9
        assert rec.coherent_info_max <= rec.log_negativity + 1e-9
        assert rec.log_negativity >= -1e-12


def test_luo_invariance_of_measures(rng):
    base = states.phi5()
    rotated = base
    for q in range(1, 6):
        rotated = states.apply_single_qubit_unitary(rotated, q, random_unitary(2, rng))
    r0, r1 = states.density(base), states.density(rotated)
    for part in _all_cuts(5):
        a, b = measures.measure(r0, part), measures.measure(r1, part)
        assert a.log_negativity == pytest.approx(b.log_negativity, abs=1e-9)
        assert a.coherent_info_a_to_b == pytest.approx(b.coherent_info_a_to_b, abs=1e-9)
        assert a.coherent_info_b_to_a == pytest.approx(b.coherent_info_b_to_a, abs=1e-9)
