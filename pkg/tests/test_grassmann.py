import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassdt import grassmann as gr
from grassdt.quiver import exchange_matrix

I819 = gr.PluckerIndex(8, 19, (2, 3, 5, 6, 7, 14, 15, 19))


class TestPluckerIndex:
    def test_validation(self):
        with pytest.raises(ValueError):
            gr.PluckerIndex(2, 4, (1, 1))
        with pytest.raises(ValueError):
            gr.PluckerIndex(2, 4, (0, 2))
        with pytest.raises(ValueError):
            gr.PluckerIndex(2, 4, (1, 2, 3))

    def test_text_round_trip(self):
        assert gr.PluckerIndex.parse(I819.to_text(), 8, 19) == I819


class TestYoungDiagram:
    def test_example_357(self):
        idx = gr.PluckerIndex(3, 7, (3, 5, 7))
        assert gr.young_diagram(idx).rows == (4, 3, 2)

    def test_initial_index_is_empty(self):
        idx = gr.PluckerIndex(3, 7, (1, 2, 3))
        assert gr.young_diagram(idx).is_empty()

    def test_example_819(self):
        assert gr.young_diagram(I819).rows == (11, 8, 8, 2, 2, 2, 1, 1)

    @pytest.mark.parametrize("k,n", [(2, 6), (3, 7)])
    def test_shape_invariants(self, k, n):
        for idx in gr.all_plucker_indices(k, n):
            d = gr.young_diagram(idx)
            assert all(a >= b for a, b in zip(d.rows, d.rows[1:]))
            assert all(0 <= r <= n - k for r in d.rows)


class TestPeaksValleys:
    def test_example_819(self):
        peaks, valleys = gr.peaks_valleys(gr.young_diagram(I819))
        assert peaks == frozenset({(1, 11), (3, 8), (6, 2), (8, 1)})
        assert valleys == frozenset({(1, 8), (3, 2), (6, 1)})

    def test_single_box(self):
        peaks, valleys = gr.peaks_valleys(gr.YoungDiagram((1, 0, 0), 4))
        assert peaks == frozenset({(1, 1)}) and not valleys

    def test_full_rectangle(self):
        peaks, valleys = gr.peaks_valleys(gr.YoungDiagram((4, 4, 4), 4))
        assert peaks == frozenset({(3, 4)}) and not valleys

    def test_empty_raises(self):
        with pytest.raises(ValueError, match="no boxes"):
            gr.peaks_valleys(gr.YoungDiagram((0, 0), 4))

    @pytest.mark.parametrize("k,n", [(2, 6), (3, 7), (4, 9)])
    def test_one_more_peak_than_valleys(self, k, n):
        for idx in gr.all_plucker_indices(k, n):
            diagram = gr.young_diagram(idx)
            if diagram.is_empty():
                continue
            peaks, valleys = gr.peaks_valleys(diagram)
            assert len(peaks) - len(valleys) == 1


class TestRectangles:
    def test_example_3x8(self):
        assert gr.rectangle_to_plucker(3, 8, 8, 19).entries == (1, 2, 3, 4, 5, 14, 15, 16)

    def test_example_2x3_gr49(self):
        assert gr.rectangle_to_plucker(2, 3, 4, 9).entries == (1, 2, 6, 7)

    def test_bottom_left(self):
        assert gr.rectangle_to_plucker(4, 1, 4, 9).entries == (2, 3, 4, 5)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            gr.rectangle_to_plucker(5, 1, 4, 9)

    def test_inverse_on_rectangles(self):
        for k, n in [(2, 5), (3, 7), (4, 9)]:
            for rows in range(1, k + 1):
                for cols in range(1, n - k + 1):
                    idx = gr.rectangle_to_plucker(rows, cols, k, n)
                    assert gr.plucker_rectangle_shape(idx) == (rows, cols)

    def test_shape_of_non_rectangle(self):
        assert gr.plucker_rectangle_shape(I819) is None
        assert gr.plucker_rectangle_shape(gr.PluckerIndex(3, 7, (1, 2, 3))) is None


class TestTriangularSeed:
    def test_gr37_shape(self):
        seed = gr.triangular_seed(3, 7)
        assert seed.num_vertices == 13
        assert seed.num_vertices - seed.num_mutable == 7
        assert seed.num_mutable == 6

    def test_gr37_spot_arrows(self):
        seed = gr.triangular_seed(3, 7)

        def vid(entries):
            target = gr.PluckerIndex(3, 7, entries)
            return next(
                i for i in range(1, 14) if seed.plucker(i) == target
            )

        arrows = seed.quiver.arrows
        assert (vid((3, 4, 5)), vid((1, 3, 4))) in arrows  # diagonal
        assert (vid((1, 2, 4)), vid((1, 3, 4))) in arrows  # vertical
        assert (vid((1, 2, 3)), vid((1, 2, 4))) in arrows  # from the exceptional vertex

    def test_gr49_mutable_part_is_grid(self):
        seed = gr.triangular_seed(4, 9)
        grid = gr.grid_quiver(4, 9)
        r = grid.num_mutable
        sub = tuple(sorted(a for a in seed.quiver.arrows if a[0] <= r and a[1] <= r))
        assert sub == grid.arrows

    def test_gr24_single_mutable(self):
        seed = gr.triangular_seed(2, 4)
        assert seed.num_mutable == 1
        assert seed.plucker(1).entries == (1, 3)

    def test_decoration_flagged(self):
        plain = gr.triangular_seed(3, 7, decorated=False)
        decorated = gr.triangular_seed(3, 7)
        extra = set(decorated.quiver.arrows) - set(plain.quiver.arrows)
        m = plain.num_vertices
        assert extra == {(m, gr.seed_vertex_id(1, 3, 3, 7)), (m, gr.seed_vertex_id(4, 1, 3, 7))}

    def test_principal_part_skew(self):
        seed = gr.triangular_seed(3, 7)
        b = exchange_matrix(seed.quiver)
        r = seed.num_mutable
        for i in range(r):
            for j in range(r):
                assert b[i][j] == -b[j][i]

    def test_grid_ids_round_trip(self):
        for k, n in [(3, 7), (4, 9)]:
            for vid in range(1, (k - 1) * (n - k - 1) + 1):
                x, y = gr.grid_vertex_xy(vid, k, n)
                assert gr.grid_vertex_id(x, y, k, n) == vid

    def test_bad_kn(self):
        with pytest.raises(ValueError):
            gr.triangular_seed(1, 5)
        with pytest.raises(ValueError):
            gr.triangular_seed(4, 5)


class TestGVector:
    def test_initial_label_is_basis_of_exceptional_vertex(self):
        vec = gr.g_vector_plucker(gr.PluckerIndex(4, 9, (1, 2, 3, 4)))
        m = 4 * 5 + 1
        assert vec == tuple(0 if i != m - 1 else 1 for i in range(m))

    def test_example_819_support(self):
        seed = gr.triangular_seed(8, 19)
        vec = gr.g_vector_plucker(I819)
        support = {seed.plucker(i + 1).entries: c for i, c in enumerate(vec) if c}
        assert support == {
            (1, 2, 3, 4, 5, 6, 7, 19): 1,
            (1, 2, 3, 4, 5, 14, 15, 16): 1,
            (1, 2, 5, 6, 7, 8, 9, 10): 1,
            (2, 3, 4, 5, 6, 7, 8, 9): 1,
            (1, 2, 3, 4, 5, 6, 7, 16): -1,
            (1, 2, 3, 4, 5, 8, 9, 10): -1,
            (1, 2, 4, 5, 6, 7, 8, 9): -1,
        }

    @pytest.mark.parametrize("k,n", [(2, 5), (3, 7), (4, 9)])
    def test_seed_labels_get_own_basis_vector(self, k, n):
        seed = gr.triangular_seed(k, n)
        m = seed.num_vertices
        for vid in range(1, m + 1):
            vec = gr.g_vector_plucker(seed.plucker(vid))
            assert vec == tuple(1 if i == vid - 1 else 0 for i in range(m))


class TestNoncrossing:
    def test_crossing_pair(self):
        a = gr.PluckerIndex(2, 4, (1, 3))
        b = gr.PluckerIndex(2, 4, (2, 4))
        assert not gr.noncrossing(a, b)

    def test_reflexive(self):
        a = gr.PluckerIndex(2, 4, (1, 3))
        assert gr.noncrossing(a, a)

    def test_seed_list_pairwise_noncrossing(self):
        seed = gr.triangular_seed(3, 7)
        labels = [seed.plucker(i) for i in range(1, 14)]
        for i, a in enumerate(labels):
            for b in labels[i + 1 :]:
                assert gr.noncrossing(a, b)

    def test_mismatched_grassmannians(self):
        with pytest.raises(ValueError):
            gr.noncrossing(gr.PluckerIndex(2, 4, (1, 3)), gr.PluckerIndex(2, 5, (1, 3)))

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_symmetric(self, data):
        n = data.draw(st.integers(min_value=4, max_value=9))
        k = data.draw(st.integers(min_value=2, max_value=n - 2))
        pick = st.permutations(range(1, n + 1)).map(lambda p: tuple(sorted(p[:k])))
        a = gr.PluckerIndex(k, n, data.draw(pick))
        b = gr.PluckerIndex(k, n, data.draw(pick))
        assert gr.noncrossing(a, b) == gr.noncrossing(b, a)


class TestPluckerCluster:
    def test_seed_list_is_cluster(self):
        seed = gr.triangular_seed(3, 7)
        assert gr.is_plucker_cluster([seed.plucker(i) for i in range(1, 14)])

    def test_wrong_cardinality(self):
        seed = gr.triangular_seed(3, 7)
        assert not gr.is_plucker_cluster([seed.plucker(i) for i in range(1, 13)])

    def test_crossing_pair_inside(self):
        indices = gr.all_plucker_indices(2, 4)  # contains (1,3) and (2,4)
        assert not gr.is_plucker_cluster(indices)


class TestJKSProfile:
    def test_initial_interval_projective(self):
        idx = gr.PluckerIndex(4, 9, (1, 2, 3, 4))
        assert gr.jks_profile(idx).is_projective

    def test_non_interval_not_projective(self):
        assert not gr.jks_profile(gr.PluckerIndex(2, 4, (1, 3))).is_projective

    def test_wrapping_interval_projective(self):
        assert gr.jks_profile(gr.PluckerIndex(2, 4, (1, 4))).is_projective

    def test_rim_heights_example_819(self):
        prof = gr.jks_profile(I819)
        assert prof.rim_heights == (
            3, 4, 3, 2, 3, 2, 1, 0, 1, 2, 3, 4, 5, 6, 5, 4, 5, 6, 7, 6,
        )

    def test_arrow_weights(self):
        prof = gr.jks_profile(gr.PluckerIndex(2, 4, (1, 3)))
        assert prof.x_weights == ("t", "1", "t", "1")
        assert prof.y_weights == ("1", "t", "1", "t")

    @pytest.mark.parametrize("k,n", [(2, 6), (3, 7)])
    def test_projective_iff_full_height_rectangle(self, k, n):
        # cyclic intervals are exactly the indices whose diagram is empty or a
        # rectangle with k rows or n-k columns
        for idx in gr.all_plucker_indices(k, n):
            diagram = gr.young_diagram(idx)
            shape = gr.plucker_rectangle_shape(idx)
            combinatorial = diagram.is_empty() or (
                shape is not None and (shape[0] == k or shape[1] == n - k)
            )
            assert combinatorial == gr.is_cyclic_interval(idx)
