import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from centrotensor import (
    BOTH,
    CENTRO,
    NEITHER,
    SKEW,
    CauchySpec,
    DenseTensor,
    add,
    check_commutation,
    check_structure,
    check_via_J,
    decompose,
    hadamard,
    materialize,
    random_structured,
    row_sums,
    verify_poly_reflection,
    verify_row_sum_symmetry,
)


class TestCheckStructure:
    def test_centro_matrix(self, sym_matrix):
        report = check_structure(sym_matrix)
        assert report.verdict == CENTRO
        assert report.max_violation == 0.0

    def test_skew_matrix(self, skew_matrix):
        assert check_structure(skew_matrix).verdict == SKEW

    def test_neither_matrix(self):
        report = check_structure(DenseTensor(np.array([[1.0, 2.0], [3.0, 4.0]])))
        assert report.verdict == NEITHER
        assert report.max_violation == 3.0  # |1 - 4| beats every other centro gap

    def test_zero_tensor_is_both(self):
        report = check_structure(DenseTensor.zeros(3, 3))
        assert report.verdict == BOTH
        assert report.is_centro and report.is_skew

    def test_worst_index_is_one_based(self):
        report = check_structure(DenseTensor(np.array([[1.0, 2.0], [3.0, 4.0]])))
        assert report.worst_index in ((1, 1), (2, 2))

    def test_negative_tolerance_rejected(self, sym_matrix):
        with pytest.raises(ValueError):
            check_structure(sym_matrix, -1.0)

    def test_as_dict_schema(self, sym_matrix):
        obj = check_structure(sym_matrix).as_dict()
        assert set(obj) == {"verdict", "max_violation", "worst_index", "tolerance_used"}


class TestWitnessPaths:
    def test_sandwich_identity_is_centro(self):
        assert check_via_J(DenseTensor.identity(3, 3)).verdict == CENTRO

    def test_sandwich_skew_example(self, skew_matrix):
        # J A J for A = diag(1, -1) flips the diagonal: equals -A.
        j = np.array([[0.0, 1.0], [1.0, 0.0]])
        assert np.array_equal(j @ skew_matrix.data @ j, -skew_matrix.data)
        assert check_via_J(skew_matrix).verdict == SKEW

    def test_commutation_on_materialized_cauchy(self):
        tensor = materialize(CauchySpec(np.array([1.0, 2.0, 1.0]), 2))
        assert check_commutation(tensor).verdict == CENTRO

    def test_commutation_skew_example(self, skew_matrix):
        aj = skew_matrix.data @ np.array([[0.0, 1.0], [1.0, 0.0]])
        assert aj.tolist() == [[0.0, 1.0], [-1.0, 0.0]]
        assert check_commutation(skew_matrix).verdict == SKEW

    def test_commutation_zero_tensor(self):
        assert check_commutation(DenseTensor.zeros(2, 3)).verdict == BOTH

    @pytest.mark.parametrize("kind", ["centro", "skew", "general"])
    def test_three_paths_agree(self, kind, rng):
        for _ in range(40):
            order = int(rng.integers(2, 5))
            dim = int(rng.integers(2, 6))
            a = random_structured(order, dim, kind, rng)
            v = check_structure(a).verdict
            assert check_via_J(a).verdict == v
            assert check_commutation(a).verdict == v

    def test_order_one_rejected_by_product_paths(self):
        vec = DenseTensor(np.array([1.0, 2.0]))
        with pytest.raises(ValueError):
            check_via_J(vec)
        with pytest.raises(ValueError):
            check_commutation(vec)


class TestDecompose:
    def test_hand_example(self):
        parts = decompose(DenseTensor(np.array([[1.0, 2.0], [3.0, 4.0]])))
        assert parts.centro.data.tolist() == [[2.5, 2.5], [2.5, 2.5]]
        assert parts.skew.data.tolist() == [[-1.5, -0.5], [0.5, 1.5]]

    def test_centro_input_has_zero_skew_part(self, sym_matrix):
        parts = decompose(sym_matrix)
        assert np.all(parts.skew.data == 0.0)

    def test_skew_input_has_zero_centro_part(self, skew_matrix):
        parts = decompose(skew_matrix)
        assert np.all(parts.centro.data == 0.0)

    @given(
        st.integers(2, 4),
        st.integers(2, 4),
        st.integers(0, 10_000),
    )
    @settings(max_examples=60, deadline=None)
    def test_split_and_reconstruction(self, order, dim, seed):
        a = random_structured(order, dim, "general", seed)
        parts = decompose(a)
        scale_a = max(1.0, float(np.max(np.abs(a.data))))
        assert check_structure(parts.centro, 1e-13 * scale_a).is_centro
        assert check_structure(parts.skew, 1e-13 * scale_a).is_skew
        err = np.max(np.abs(add(parts.centro, parts.skew).data - a.data))
        assert err <= 1e-14 * scale_a


class TestRandomStructured:
    def test_same_seed_is_identical(self):
        a = random_structured(3, 4, "skew", seed=99)
        b = random_structured(3, 4, "skew", seed=99)
        assert np.array_equal(a.data, b.data)

    def test_centro_generator_has_zero_violation(self):
        report = check_structure(random_structured(3, 4, "centro", seed=1))
        assert report.verdict == CENTRO
        assert report.max_violation == 0.0

    @pytest.mark.parametrize("order,dim", [(2, 3), (3, 3), (3, 5), (4, 5)])
    def test_skew_odd_dim_central_entry_is_zero(self, order, dim):
        a = random_structured(order, dim, "skew", seed=7)
        center = (dim - 1) // 2
        assert a.data[(center,) * order] == 0.0
        r = row_sums(a)
        assert abs(r[center]) <= 1e-12

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            random_structured(2, 2, "diagonal", seed=0)


class TestRowSumSymmetry:
    def test_random_centro(self):
        ok, witness = verify_row_sum_symmetry(random_structured(3, 4, "centro", seed=3))
        assert ok and witness is None

    def test_random_skew_odd_dim(self):
        a = random_structured(2, 3, "skew", seed=5)
        ok, witness = verify_row_sum_symmetry(a)
        assert ok and witness is None
        assert abs(row_sums(a)[1]) <= 1e-12

    def test_forced_assumption_yields_witness(self):
        a = DenseTensor(np.array([[1.0, 2.0], [3.0, 4.0]]))
        ok, witness = verify_row_sum_symmetry(a, assume="centro")
        assert not ok
        assert witness == 1  # r = (3, 7)

    def test_unclassified_requires_assume(self):
        a = DenseTensor(np.array([[1.0, 2.0], [3.0, 4.0]]))
        with pytest.raises(ValueError):
            verify_row_sum_symmetry(a)


class TestPolyReflection:
    def test_centro_hand_values(self, sym_matrix):
        # f(x) = f(Jx) = 14 at x = (1, 2).
        from centrotensor import flip_vector, poly_eval

        x = np.array([1.0, 2.0])
        assert poly_eval(sym_matrix, x) == 14.0
        assert poly_eval(sym_matrix, flip_vector(x)) == 14.0
        assert verify_poly_reflection(sym_matrix, trials=25, seed=0)

    def test_skew_hand_values(self, skew_matrix):
        from centrotensor import flip_vector, poly_eval

        x = np.array([1.0, 2.0])
        assert poly_eval(skew_matrix, x) == -3.0
        assert poly_eval(skew_matrix, flip_vector(x)) == 3.0
        assert verify_poly_reflection(skew_matrix, trials=25, seed=0)

    def test_palindromic_argument_is_fixed_point(self, rng):
        from centrotensor import flip_vector, poly_eval

        a = random_structured(3, 3, "general", rng)
        x = np.array([0.4, -2.0, 0.4])
        assert poly_eval(a, x) == poly_eval(a, flip_vector(x))

    def test_neither_tensor_rejected(self):
        with pytest.raises(ValueError):
            verify_poly_reflection(DenseTensor(np.array([[1.0, 2.0], [3.0, 4.0]])))

    @pytest.mark.parametrize("kind", ["centro", "skew"])
    def test_random_structured_tensors(self, kind, rng):
        for _ in range(20):
            order = int(rng.integers(2, 5))
            dim = int(rng.integers(2, 6))
            a = random_structured(order, dim, kind, rng)
            assert verify_poly_reflection(a, trials=10, seed=rng)


class TestHadamardParity:
    @pytest.mark.parametrize(
        "kind_a,kind_b,expect_centro",
        [("centro", "centro", True), ("skew", "skew", True), ("centro", "skew", False)],
    )
    def test_parity_table(self, kind_a, kind_b, expect_centro, rng):
        for _ in range(15):
            order = int(rng.integers(2, 5))
            dim = int(rng.integers(2, 6))
            a = random_structured(order, dim, kind_a, rng)
            b = random_structured(order, dim, kind_b, rng)
            report = check_structure(hadamard(a, b), 1e-12)
            assert report.is_centro if expect_centro else report.is_skew
