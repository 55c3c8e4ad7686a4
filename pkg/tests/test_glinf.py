"""
Testes das matrizes de banda, do cocíclo padrão e do recuo γ_λ.
"""

from fractions import Fraction

import numpy as np
import pytest

from src.core import WindowTooSmallError
from src.forms import BasisIndex
from src.glinf import (
    BandedWindowMatrix,
    WedgeIndexMap,
    commutator,
    homomorphism_check,
    matmul,
    phi_lambda,
    pullback_cocycle,
    pullcyc_coefficients,
    pullcyc_raw_values,
    random_banded,
    std_cocycle,
    std_cocycle_check,
    verify_pullcyc,
)


def A(n, r=1):
    return BasisIndex(0, n, r)


def e(n, r=1):
    return BasisIndex(-1, n, r)


class TestBandedMatrices:
    """Testes das matrizes de banda na janela."""

    def test_wedge_index_map(self):
        """Testa ι(n, r) = Kn + r − 1 e a inversa."""
        index = WedgeIndexMap(2)
        assert index.index(0, 1) == 0
        assert index.index(-1, 2) == -1
        assert index.inverse(-1) == (-1, 2)
        with pytest.raises(ValueError):
            index.index(0, 3)

    def test_unit_and_entry(self):
        """Testa E_{i,j} e o acesso fora da janela."""
        m = BandedWindowMatrix.unit(3, -1, 1)
        assert m.entry(-1, 1) == 1
        assert m.band == 2
        with pytest.raises(IndexError):
            m.entry(3, 0)

    def test_declared_band_enforced(self):
        """Testa a recusa de entradas fora da banda declarada."""
        with pytest.raises(ValueError):
            BandedWindowMatrix.from_entries(3, {(0, 2): 1}, band=1)

    def test_diagonal(self):
        """Testa A_r(μ) = Σ μ_i E_{i,i+r}."""
        m = BandedWindowMatrix.diagonal(3, 1, lambda i: i)
        assert m.entry(1, 2) == 1
        assert m.entry(-2, -1) == -2
        assert m.band == 1

    def test_matmul_shrinks_valid_region(self):
        """Testa que o produto encolhe a região exata."""
        shift = BandedWindowMatrix.diagonal(5, 1, lambda i: 1)
        product = matmul(shift, shift)
        assert product.band == 2
        assert product.valid == 4
        assert product.entry(0, 2) == 1

    def test_to_dict(self):
        """Testa a exportação em tripletas ordenadas."""
        m = BandedWindowMatrix.from_entries(2, {(1, 0): Fraction(1, 2), (-1, -2): 3})
        assert m.to_dict() == {"window": [-2, 2], "band": 1, "triplets": [[-1, -2, "3"], [1, 0, "1/2"]]}


class TestStdCocycle:
    """Testes do cocíclo padrão de ḡl(∞)."""

    def test_elementary_pair(self):
        """Testa α(E_{−1,0}, E_{0,−1}) = −1."""
        a = BandedWindowMatrix.unit(4, -1, 0)
        b = BandedWindowMatrix.unit(4, 0, -1)
        assert std_cocycle(a, b) == -1
        assert std_cocycle(b, a) == 1

    def test_window_too_small(self):
        """Testa a recusa em vez de aproximação."""
        a = BandedWindowMatrix.unit(4, 0, 3)
        with pytest.raises(WindowTooSmallError) as info:
            std_cocycle(a, a)
        assert info.value.required == 6

    def test_diagonal_matrices(self):
        """Testa α nulo entre matrizes diagonais."""
        a = BandedWindowMatrix.diagonal(4, 0, lambda i: i)
        b = BandedWindowMatrix.diagonal(4, 0, lambda i: 1)
        assert std_cocycle(a, b) == 0

    def test_antisymmetry(self):
        """Testa α(A, B) = −α(B, A) em matrizes aleatórias."""
        rng = np.random.default_rng(3)
        a, b = random_banded(8, 2, rng), random_banded(8, 2, rng)
        assert std_cocycle(a, b) == -std_cocycle(b, a)

    def test_random_triples(self):
        """Testa a condição de cocíclo e a multiplicatividade."""
        report = std_cocycle_check(count=10, seed=1, half_width=10, band=2)
        assert report.passed
        assert len(report.records) == 20

    @pytest.mark.slow
    def test_check_full_sample(self):
        """Testa cocíclo e multiplicatividade em 50 triplas com janela válida."""
        report = std_cocycle_check(count=50, seed=4, half_width=12, band=2)
        assert report.passed, [r.to_dict() for r in report.failures[:3]]

    def test_commutator_of_shifts(self):
        """Testa [S, S⁻¹] com S a translação."""
        up = BandedWindowMatrix.diagonal(6, 1, lambda i: 1)
        down = BandedWindowMatrix.diagonal(6, -1, lambda i: 1)
        assert std_cocycle(up, down) == -1
        assert commutator(up, down).equals_on(BandedWindowMatrix.from_entries(6, {}), 4)


class TestPullback:
    """Testes do mergulho Φ_λ e de γ_λ."""

    @pytest.mark.parametrize("weight,expected", [
        (0, (Fraction(-1), Fraction(-1, 2), Fraction(-2))),
        (1, (Fraction(-1), Fraction(1, 2), Fraction(-2))),
        (2, (Fraction(-1), Fraction(3, 2), Fraction(-26))),
    ])
    def test_coefficients(self, weight, expected):
        """Testa (−1, −(1−2λ)/2, −2(6λ²−6λ+1))."""
        assert pullcyc_coefficients(weight) == expected

    def test_phi_of_constant(self, classical):
        """Testa Φ_λ(1) = identidade."""
        m = phi_lambda(classical, 0, A(0), 5)
        assert m.band == 0
        assert all(m.entry(i, i) == 1 for i in range(-5, 5))

    def test_phi_of_function(self, classical):
        """Testa Φ_0(A_1) como translação de um passo."""
        m = phi_lambda(classical, 0, A(1), 5)
        assert m.band == 1
        assert m.entry(1, 0) == 1
        assert m.entry(0, 1) == 0

    def test_phi_refuses_small_window(self, classical):
        """Testa a recusa quando a banda excede a meia-largura."""
        with pytest.raises(WindowTooSmallError) as info:
            phi_lambda(classical, 0, A(3), 2)
        assert (info.value.required, info.value.given) == (3, 2)
        assert phi_lambda(classical, 0, A(3), 3).band == 3

    @pytest.mark.parametrize("weight", [0, 1])
    def test_raw_values_classical(self, classical, weight):
        """Testa os cinco valores de nível zero de γ_λ."""
        gamma = pullback_cocycle(classical, weight, half_width=8)
        expected = pullcyc_raw_values(weight)
        assert gamma(A(1), A(-1)) == expected["A1,A-1"]
        assert gamma(e(1), e(-1)) == expected["e1,e-1"]
        assert gamma(e(2), e(-2)) == expected["e2,e-2"]
        assert gamma(e(1), A(-1)) == expected["e1,A-1"]
        assert gamma(e(-1), A(1)) == expected["e-1,A1"]

    def test_window_grows(self, classical):
        """Testa a ampliação automática da janela de ḡl(∞)."""
        gamma = pullback_cocycle(classical, 0, half_width=1)
        assert gamma(A(3), A(-3)) == pullback_cocycle(classical, 0, half_width=10)(A(3), A(-3))

    def test_homomorphism(self, two_in):
        """Testa Φ_λ([x, y]) = [Φ_λ(x), Φ_λ(y)]."""
        pairs = [(e(1), A(1, 2)), (e(-1, 2), e(1)), (A(1), A(-1, 2))]
        assert homomorphism_check(two_in, 1, pairs, half_width=16).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("weight", [0, 1])
    def test_verify_pullcyc(self, two_in, weight):
        """Testa γ_λ como combinação dos separadores em I = (0, 1)."""
        report = verify_pullcyc(two_in, weight, half_width=12, decomposition_window=2)
        assert report.passed, [r.to_dict() for r in report.failures]

    @pytest.mark.slow
    @pytest.mark.parametrize("config", ["classical", "two_in"])
    @pytest.mark.parametrize("weight", [-1, 0, 1, 2, 3])
    def test_verify_pullcyc_all_weights(self, request, config, weight):
        """Testa valores de nível zero, coeficientes e decomposição de γ_λ."""
        cfg = request.getfixturevalue(config)
        report = verify_pullcyc(cfg, weight)
        assert report.passed, [r.to_dict() for r in report.failures]
        coefficient_ids = [r.id for r in report.records if r.id.startswith("pullcyc:coefficient:")]
        assert len(coefficient_ids) == 3

    def test_verify_pullcyc_classical(self, classical):
        """Testa γ_0 na situação clássica."""
        assert verify_pullcyc(classical, 0, half_width=8, decomposition_window=2).passed
