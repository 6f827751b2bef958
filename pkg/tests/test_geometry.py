import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rbf_pielm.geometry import (
    MAX_NEAREST_WALL_DISTANCE,
    BoundarySide,
    CollocationSet,
    cavity_collocation,
    chebyshev_nodes,
    tensor_grid,
    uniform_grid,
    wall_distances,
)


class TestChebyshevNodes:
    def test_n3(self):
        np.testing.assert_allclose(chebyshev_nodes(3), [0.0, 0.5, 1.0], atol=1e-15)

    def test_n2_endpoints_only(self):
        np.testing.assert_array_equal(chebyshev_nodes(2), [0.0, 1.0])

    def test_n5_values(self):
        expected = [0.0, 0.146447, 0.5, 0.853553, 1.0]
        np.testing.assert_allclose(chebyshev_nodes(5), expected, atol=5e-7)
        nodes = chebyshev_nodes(5)
        assert nodes[1] + nodes[3] == pytest.approx(1.0, abs=1e-14)

    def test_exact_endpoints(self):
        for n in (2, 3, 17, 60):
            nodes = chebyshev_nodes(n)
            assert nodes[0] == 0.0
            assert nodes[-1] == 1.0

    def test_invalid_n(self):
        with pytest.raises(ValueError):
            chebyshev_nodes(1)
        with pytest.raises(ValueError):
            chebyshev_nodes(0)

    @given(st.integers(min_value=2, max_value=300))
    @settings(max_examples=40, deadline=None)
    def test_symmetry_and_monotone(self, n):
        nodes = chebyshev_nodes(n)
        assert np.all(np.diff(nodes) > 0)
        np.testing.assert_allclose(nodes + nodes[::-1], 1.0, atol=1e-14)

    @given(st.integers(min_value=5, max_value=300))
    @settings(max_examples=40, deadline=None)
    def test_boundary_spacing_smaller_than_interior(self, n):
        nodes = chebyshev_nodes(n)
        mid = int(np.ceil(n / 2))
        assert nodes[1] - nodes[0] < nodes[mid] - nodes[mid - 1]


class TestTensorGrid:
    def test_3x3(self):
        grid = tensor_grid([0, 0.5, 1], [0, 0.5, 1])
        assert grid.n_interior == 1
        assert grid.n_boundary == 8
        np.testing.assert_array_equal(grid.interior, [[0.5, 0.5]])

    def test_corners_only(self):
        grid = tensor_grid([0, 1], [0, 1])
        assert grid.n_interior == 0
        assert grid.n_boundary == 4

    def test_60x60_counts(self):
        nodes = chebyshev_nodes(60)
        grid = tensor_grid(nodes, nodes)
        assert grid.n_interior == 3364  # 58^2
        assert grid.n_boundary == 236   # 4*60 - 4

    def test_partition_is_exact(self):
        for nx, ny in ((2, 5), (7, 3), (10, 10)):
            grid = tensor_grid(np.linspace(0, 1, nx), np.linspace(0, 1, ny))
            assert grid.n_interior + grid.n_boundary == nx * ny

    def test_corner_precedence_bottom_top(self):
        grid = tensor_grid([0, 0.5, 1], [0, 0.5, 1])
        tags = {tuple(p): BoundarySide(s)
                for p, s in zip(grid.boundary, grid.boundary_sides)}
        assert tags[(0.0, 0.0)] == BoundarySide.BOTTOM
        assert tags[(1.0, 0.0)] == BoundarySide.BOTTOM
        assert tags[(0.0, 1.0)] == BoundarySide.TOP
        assert tags[(1.0, 1.0)] == BoundarySide.TOP
        assert tags[(0.0, 0.5)] == BoundarySide.LEFT
        assert tags[(1.0, 0.5)] == BoundarySide.RIGHT

    def test_side_points_lie_on_their_wall(self):
        grid = uniform_grid(9, 7)
        for point, side in zip(grid.boundary, grid.boundary_sides):
            side = BoundarySide(side)
            if side == BoundarySide.BOTTOM:
                assert point[1] == 0.0
            elif side == BoundarySide.TOP:
                assert point[1] == 1.0
            elif side == BoundarySide.LEFT:
                assert point[0] == 0.0
            else:
                assert point[0] == 1.0

    def test_rejects_bad_nodes(self):
        with pytest.raises(ValueError):
            tensor_grid([], [0, 1])
        with pytest.raises(ValueError):
            tensor_grid([0, 0.5], [0, 1])  # missing 1
        with pytest.raises(ValueError):
            tensor_grid([0, 0.7, 0.5, 1], [0, 1])  # not increasing


class TestWallDistances:
    def test_center(self):
        assert wall_distances((0.5, 0.5)) == (0.5, 0.5)

    def test_on_wall(self):
        l_min, l_max = wall_distances((0.0, 0.3))
        assert l_min == 0.0
        assert l_max == MAX_NEAREST_WALL_DISTANCE

    def test_generic_point(self):
        l_min, l_max = wall_distances((0.1, 0.4))
        assert l_min == pytest.approx(0.1)
        assert l_max == 0.5

    def test_outside_raises(self):
        with pytest.raises(ValueError):
            wall_distances((1.2, 0.5))
        with pytest.raises(ValueError):
            wall_distances((0.5, -0.01))

    @given(st.floats(0, 1), st.floats(0, 1))
    @settings(max_examples=50, deadline=None)
    def test_bounds(self, x, y):
        l_min, l_max = wall_distances((x, y))
        assert 0.0 <= l_min <= l_max == 0.5


class TestCavityCollocation:
    def test_default_totals(self):
        pts = cavity_collocation()
        assert pts.n_interior == 2304  # 48^2
        assert pts.n_boundary == 384   # 4 * 96
        assert pts.n_points == 2688

    def test_split_configurable(self):
        pts = cavity_collocation(n_interior=10, n_boundary=20)
        assert pts.n_interior == 100
        assert pts.n_boundary == 80

    def test_per_wall_counts(self):
        pts = cavity_collocation(n_interior=10, n_boundary=20)
        sides, counts = np.unique(pts.boundary_sides, return_counts=True)
        assert len(sides) == 4
        assert np.all(counts == 20)

    def test_corners_belong_to_horizontal_walls(self):
        pts = cavity_collocation(n_interior=4, n_boundary=8)
        corner_tags = {
            tuple(p): BoundarySide(s)
            for p, s in zip(pts.boundary, pts.boundary_sides)
            if tuple(p) in {(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)}
        }
        assert len(corner_tags) == 4
        assert all(side.is_horizontal for side in corner_tags.values())


class TestCollocationSetValidation:
    def test_interior_point_on_wall_rejected(self):
        with pytest.raises(ValueError):
            CollocationSet(interior=[[0.0, 0.5]], boundary=np.empty((0, 2)),
                           boundary_sides=[])

    def test_boundary_point_off_wall_rejected(self):
        with pytest.raises(ValueError):
            CollocationSet(interior=np.empty((0, 2)), boundary=[[0.5, 0.5]],
                           boundary_sides=[BoundarySide.LEFT])

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            CollocationSet(interior=[[0.5, 0.5], [0.5, 0.5]],
                           boundary=np.empty((0, 2)), boundary_sides=[])

    def test_arrays_read_only(self):
        pts = uniform_grid(3, 3)
        with pytest.raises(ValueError):
            pts.interior[0, 0] = 0.9
