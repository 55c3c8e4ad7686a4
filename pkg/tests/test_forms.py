"""
Testes de configurações, da base graduada, do pareamento e da graduação invertida.
"""

from fractions import Fraction

import pytest

from src.core import INFINITY, ArithmeticDomainError, ConfigValidationError, RatFunc, WeightMismatchError
from src.forms import (
    BasisIndex,
    Form,
    MarkedConfig,
    ensure_valid,
    format_form,
    get_basis,
    inverted_config,
    inverted_grading_report,
    kn_pairing,
    validate_config,
)


def factors(constant, exponents):
    return RatFunc.from_factors(constant, {Fraction(k): v for k, v in exponents.items()})


class TestMarkedConfig:
    """Testes de validação de configurações."""

    def test_classical(self, classical):
        """Testa I = (0), O = (∞)."""
        assert classical.K == 1
        assert classical.M == 1
        assert classical.has_infinity
        assert str(classical) == "I=(0) O=(inf)"

    @pytest.mark.parametrize("ins,outs,code", [
        (["0", "0"], ["inf"], "duplicate_point"),
        (["0"], ["0"], "duplicate_point"),
        (["inf"], ["0"], "infinity_in"),
        ([], ["inf"], "empty_in"),
        (["0"], [], "empty_out"),
    ])
    def test_invalid_codes(self, ins, outs, code):
        """Testa os códigos de violação."""
        validation = validate_config(MarkedConfig.build(ins, outs))
        assert not validation['valid']
        assert code in validation['codes']

    def test_duplicate_message(self):
        """Testa que a mensagem cita o ponto repetido."""
        with pytest.raises(ConfigValidationError, match="duplicate point"):
            ensure_valid(MarkedConfig.build(["0", "1"], ["1"]))

    def test_balanced_warning(self):
        """Testa o aviso de N − K > K."""
        validation = validate_config(MarkedConfig.build(["0"], ["1", "inf"]))
        assert validation['valid']
        assert validation['warnings']

    def test_from_dict(self):
        """Testa a leitura do documento JSON."""
        cfg = MarkedConfig.from_dict({"in_points": ["0", "1/2"], "out_points": ["inf"]})
        assert cfg.in_point(2).value == Fraction(1, 2)
        assert cfg.to_dict() == {"in_points": ["0", "1/2"], "out_points": ["inf"]}

    def test_in_point_out_of_range(self, two_in):
        """Testa índices 1-based."""
        with pytest.raises(ValueError):
            two_in.in_point(3)


class TestBasis:
    """Testes dos elementos de base f^λ_{n,p}."""

    @pytest.mark.parametrize("weight,degree,expected", [
        (-1, 2, "z^3 d/dz"),
        (-1, 0, "z d/dz"),
        (0, 2, "z^2"),
        (0, -3, "z^-3"),
        (1, 0, "z^-1 dz"),
        (2, 0, "z^-2 dz^2"),
    ])
    def test_classical_monomials(self, classical, weight, degree, expected):
        """Testa que a base clássica é z^{n−λ} dz^λ."""
        form = get_basis(classical).element(weight, degree, 1)
        assert format_form(form, [0]) == expected

    @pytest.mark.parametrize("degree,point,exponents", [
        (1, 1, {0: 1, 1: 2}),
        (1, 2, {0: 2, 1: 1}),
        (3, 1, {0: 3, 1: 4}),
        (3, 2, {0: 4, 1: 3}),
    ])
    def test_two_point_functions(self, two_in, degree, point, exponents):
        """Testa A_{n,p} em I = (0, 1), O = (∞)."""
        assert get_basis(two_in).element(0, degree, point).func == factors(1, exponents)

    def test_normalization_constant(self, two_in):
        """Testa a normalização z_p^{n−λ}(1 + …) no ponto P_p."""
        form = get_basis(two_in).element(1, -1, 1)
        assert form.func == factors(-1, {0: -2, 1: -1})

    @pytest.mark.parametrize("weight", [-1, 0, 1, 2])
    @pytest.mark.parametrize("degree", [-2, 0, 3])
    def test_orders_match_prescription(self, any_config, weight, degree):
        """Testa ordens em todos os pontos e a soma total −2λ."""
        basis = get_basis(any_config)
        for p in range(1, any_config.K + 1):
            prescription = basis.order_prescription(weight, degree, p)
            assert prescription.total == -2 * weight
            form = basis.element(weight, degree, p)
            orders = prescription.in_orders + prescription.out_orders
            for point, order in zip(any_config.points, orders):
                assert form.order_at(point) == order

    @pytest.mark.parametrize("weight", [-1, 0, 1, 2])
    def test_balanced_recipe_total(self, weight):
        """Testa a receita balanceada com mais pontos de saída que de entrada."""
        cfg = MarkedConfig.build(["0"], ["1", "-1", "inf"])
        basis = get_basis(cfg)
        for degree in range(-3, 4):
            prescription = basis.order_prescription(weight, degree, 1)
            assert prescription.total == -2 * weight
            assert max(prescription.out_orders) - min(prescription.out_orders) <= 1

    def test_invalid_point_index(self, classical):
        """Testa p fora de 1..K."""
        with pytest.raises(ValueError):
            get_basis(classical).element(0, 0, 2)

    def test_cache_returns_same_form(self, two_in):
        """Testa o cache por configuração."""
        assert get_basis(two_in) is get_basis(two_in)
        assert get_basis(two_in).element(0, 2, 1) is get_basis(two_in).element(0, 2, 1)


class TestPairing:
    """Testes do pareamento de Krichever–Novikov."""

    def test_explicit_value(self, two_in):
        """Testa ⟨A_{1,1}, ω^{−1,1}⟩ = 1."""
        basis = get_basis(two_in)
        assert basis.pair(basis.element(0, 1, 1), basis.element(1, -1, 1)) == 1

    @pytest.mark.parametrize("weight", [-1, 0, 1, 2])
    def test_duality_grid(self, any_config, weight):
        """Testa ⟨f^λ_{n,p}, f^{1−λ}_{−m,r}⟩ = δ_{n,m} δ_{p,r}."""
        basis = get_basis(any_config)
        K = any_config.K
        for n in range(-2, 3):
            for m in range(-2, 3):
                for p in range(1, K + 1):
                    for r in range(1, K + 1):
                        value = basis.pair(basis.element(weight, n, p), basis.dual_element(weight, m, r))
                        assert value == (1 if (n, p) == (m, r) else 0)

    @pytest.mark.slow
    @pytest.mark.parametrize("weight", [-1, 0, 1, 2])
    def test_duality_full_window(self, any_config, weight):
        """Testa ⟨f^λ_{n,p}, f^{1−λ}_{m,r}⟩ = δ_{−n}^m δ_p^r para n, m ∈ [−6, 6]."""
        basis = get_basis(any_config)
        K = any_config.K
        for n in range(-6, 7):
            for p in range(1, K + 1):
                left = basis.element(weight, n, p)
                for m in range(-6, 7):
                    for r in range(1, K + 1):
                        value = basis.pair(left, basis.element(1 - weight, m, r))
                        assert value == (1 if (m, r) == (-n, p) else 0), (n, p, m, r)

    def test_weight_mismatch(self, classical):
        """Testa pesos que não somam 1."""
        basis = get_basis(classical)
        with pytest.raises(WeightMismatchError):
            kn_pairing(classical, basis.element(0, 0, 1), basis.element(0, 0, 1))

    def test_pole_outside_marked_points(self, classical):
        """Testa que polos fora de A são recusados."""
        stray = Form(0, RatFunc.from_factors(1, {Fraction(2): -1}))
        with pytest.raises(ArithmeticDomainError):
            get_basis(classical).pair(stray, Form(1, RatFunc.constant(1)))


class TestExpansion:
    """Testes de expansão na base e reconstrução."""

    def test_product_of_two_point_functions(self, two_in):
        """Testa A_{1,1}·A_{1,2} = −A_{3,1} + A_{3,2}."""
        basis = get_basis(two_in)
        product = Form(0, basis.element(0, 1, 1).func * basis.element(0, 1, 2).func)
        assert basis.expand(product) == {
            BasisIndex(0, 3, 1): Fraction(-1),
            BasisIndex(0, 3, 2): Fraction(1),
        }

    def test_zero_form(self, classical):
        """Testa a forma nula."""
        assert get_basis(classical).expand(Form.zero(0)) == {}

    @pytest.mark.parametrize("weight", [-1, 0, 2])
    def test_reconstruction(self, any_config, weight):
        """Testa que a expansão de uma combinação devolve os coeficientes."""
        basis = get_basis(any_config)
        coefficients = {
            BasisIndex(weight, -1, 1): Fraction(2),
            BasisIndex(weight, 2, any_config.K): Fraction(-1, 3),
        }
        form = basis.reconstruct(coefficients, weight)
        assert basis.expand(form) == coefficients
        assert basis.matches(coefficients, form)

    def test_support_contains_degrees(self, three_in):
        """Testa que a janela a priori cobre os graus presentes."""
        basis = get_basis(three_in)
        form = basis.element(-1, 2, 3) + basis.element(-1, -1, 1)
        lo, hi = basis.expansion_support(form)
        assert lo <= -1 and hi >= 2

    def test_stray_pole(self, two_in):
        """Testa a recusa de polos fora dos pontos marcados."""
        with pytest.raises(ArithmeticDomainError):
            get_basis(two_in).expand(Form(0, RatFunc.from_factors(1, {Fraction(3): -2})))


class TestInvertedGrading:
    """Testes da graduação invertida."""

    def test_inverted_config_moves_infinity(self, classical):
        """Testa que I* = φ(O) fica finito."""
        inv = inverted_config(classical)
        assert all(p.is_finite for p in inv.config.in_points)
        assert INFINITY in inv.config.out_points

    @pytest.mark.parametrize("weight", [0, -1])
    def test_classical_report(self, classical, weight):
        """Testa a reexpansão na situação clássica."""
        assert inverted_grading_report(classical, weight, (-2, 2)).passed

    def test_two_point_report(self, two_two):
        """Testa a reexpansão com pontos de saída finitos."""
        assert inverted_grading_report(two_two, 0, (-1, 1)).passed
