import itertools
import math

import numpy as np
import pytest

from lcmoments.errors import DomainError
from lcmoments.simplex import (
    WeightVector,
    density_at_zero,
    density_at_zero_residue,
    geometry_oracle_volume,
    maximize_section,
    section_volume,
)


def _pair_normal(n, j, k, sign=1.0):
    a = np.zeros(n + 1)
    a[j], a[k] = sign, -sign
    return WeightVector(a / math.sqrt(2.0))


class TestWeightVector:
    def test_strict_validation(self):
        with pytest.raises(DomainError):
            WeightVector(np.array([1.0, -1.0]))  # not unit norm
        with pytest.raises(DomainError):
            WeightVector(np.array([1.0, 0.0]) )  # nonzero sum
        with pytest.raises(DomainError):
            WeightVector(np.array([1.0]))

    def test_projection(self):
        w = WeightVector.from_raw([3.0, 1.0, -1.0], project=True)
        assert abs(w.a.sum()) < 1e-14
        assert np.linalg.norm(w.a) == pytest.approx(1.0, abs=1e-14)

    def test_projection_degenerate(self):
        with pytest.raises(DomainError):
            WeightVector.from_raw([1.0, 1.0, 1.0], project=True)

    def test_array_read_only(self):
        w = _pair_normal(2, 0, 1)
        with pytest.raises(ValueError):
            w.a[0] = 2.0


class TestDensityAtZero:
    def test_two_point_equality_case(self):
        assert density_at_zero(_pair_normal(1, 0, 1)) == pytest.approx(
            1.0 / math.sqrt(2.0), abs=1e-9
        )

    def test_equality_case_with_zero_weight(self):
        assert density_at_zero(_pair_normal(2, 0, 2)) == pytest.approx(
            1.0 / math.sqrt(2.0), abs=1e-9
        )

    def test_all_transpositions_attain_bound(self):
        for j, k in itertools.combinations(range(6), 2):
            value = density_at_zero(_pair_normal(5, j, k))
            assert value == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-9)

    def test_permutation_and_negation_invariance(self):
        rng = np.random.default_rng(5)
        base = WeightVector.from_raw(rng.standard_normal(5), project=True)
        value = density_at_zero(base)
        permuted = WeightVector(base.a[rng.permutation(5)])
        negated = WeightVector(-base.a)
        assert density_at_zero(permuted) == pytest.approx(value, abs=1e-10)
        assert density_at_zero(negated) == pytest.approx(value, abs=1e-10)

    def test_repeated_weights_use_inversion(self):
        w = WeightVector.from_raw([2.0, -1.0, -1.0], project=True)
        value = density_at_zero(w)
        with pytest.raises(DomainError):
            density_at_zero_residue(w)
        assert 0.0 < value < 1.0 / math.sqrt(2.0)

    def test_routes_agree_on_random_vectors(self):
        rng = np.random.default_rng(11)
        checked = 0
        while checked < 100:
            dim = int(rng.integers(2, 8))
            raw = rng.standard_normal(dim)
            raw -= raw.mean()
            norm = np.linalg.norm(raw)
            if norm < 1e-6:
                continue
            w = WeightVector(raw / norm)
            try:
                residue = density_at_zero_residue(w)
            except DomainError:
                continue
            fourier = density_at_zero(w)  # internally cross-checked at 1e-8
            assert residue == pytest.approx(fourier, abs=1e-8)
            checked += 1

    def test_all_zero_rejected(self):
        with pytest.raises(DomainError):
            density_at_zero_residue(np.zeros(3))


class TestSectionVolume:
    def test_triangle_section(self):
        w = _pair_normal(2, 0, 1)
        assert section_volume(w, 2) == pytest.approx(math.sqrt(1.5), rel=1e-9)

    def test_tetrahedron_edge_section(self):
        w = _pair_normal(3, 0, 1)
        assert section_volume(w, 3) == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-9)

    def test_scaling_factor_exact(self):
        for n in (2, 3, 4):
            w = _pair_normal(n, 0, 1)
            ratio = section_volume(w, n) / density_at_zero(w)
            assert ratio == pytest.approx(math.sqrt(n + 1.0) / math.factorial(n - 1), rel=1e-14)

    def test_dimension_guards(self):
        with pytest.raises(DomainError):
            section_volume(_pair_normal(1, 0, 1), 1)
        with pytest.raises(DomainError):
            section_volume(_pair_normal(2, 0, 1), 3)


class TestGeometryOracle:
    def test_triangle_matches_formula(self):
        w = _pair_normal(2, 0, 1)
        assert geometry_oracle_volume(w, 2) == pytest.approx(section_volume(w, 2), abs=1e-10)

    def test_triangle_generic_normal(self):
        w = WeightVector.from_raw([2.0, -0.7, -1.3], project=True)
        assert geometry_oracle_volume(w, 2) == pytest.approx(section_volume(w, 2), abs=1e-10)

    def test_tetrahedron_matches_formula(self):
        for raw in ([1.0, -1.0, 0.0, 0.0], [2.0, -1.0, -1.0, 0.3], [1.0, 0.7, -0.4, -1.3]):
            w = WeightVector.from_raw(raw, project=True)
            assert geometry_oracle_volume(w, 3) == pytest.approx(section_volume(w, 3), abs=1e-8)

    def test_barycentre_on_every_triangle_section(self):
        rng = np.random.default_rng(3)
        centre = np.ones(3) / 3.0
        for _ in range(20):
            w = WeightVector.from_raw(rng.standard_normal(3), project=True)
            from lcmoments.simplex import _section_polytope_vertices

            ends = _section_polytope_vertices(w.a)
            assert len(ends) == 2
            gap = np.linalg.norm(ends[0] - centre) + np.linalg.norm(centre - ends[1])
            assert gap == pytest.approx(np.linalg.norm(ends[0] - ends[1]), rel=1e-9)

    def test_unsupported_dimension(self):
        with pytest.raises(DomainError):
            geometry_oracle_volume(_pair_normal(4, 0, 1), 4)


class TestMaximizeSection:
    def test_triangle_optimum(self):
        result = maximize_section(2, restarts=20, seed=0)
        assert result.value == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-6)
        ordered = np.sort(np.abs(result.a_star.a))[::-1]
        assert abs(ordered[0] - 1.0 / math.sqrt(2.0)) < 1e-4
        assert abs(ordered[1] - 1.0 / math.sqrt(2.0)) < 1e-4
        assert ordered[2:].max(initial=0.0) < 1e-4

    def test_no_candidate_above_bound(self):
        result = maximize_section(2, restarts=20, seed=1)
        assert result.max_evaluated <= 1.0 / math.sqrt(2.0) + 1e-9

    def test_restart_floor_enforced(self):
        with pytest.raises(DomainError):
            maximize_section(2, restarts=5, seed=0)

    def test_deterministic_given_seed(self):
        first = maximize_section(2, restarts=20, seed=9)
        second = maximize_section(2, restarts=20, seed=9)
        assert np.array_equal(first.a_star.a, second.a_star.a)
        assert first.value == second.value
