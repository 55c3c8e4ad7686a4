"""
Testes dos cocíclos: geométricos, cobordos, propriedades, localidade,
nível zero e decomposição.
"""

from fractions import Fraction

import pytest

from src.core import NotBoundedError, PropertyViolation, RatFunc, ReconstructionError
from src.cocycles import (
    SEPARATING,
    AffConn,
    CoboundaryData,
    CocycleKind,
    CycleSpec,
    absorb_into_connection,
    absorption_check,
    affine_connection_default,
    check_cocycle_properties,
    coboundary_cocycle,
    connection_locality_check,
    connection_transform_check,
    decompose_bounded,
    decomposition_roundtrip_check,
    extend_function_cocycle_to_d1,
    extract_level_zero,
    finiteness_check,
    function_property_equivalence_check,
    geometric_cocycle,
    growth_witness_check,
    independence_check,
    level_pairs,
    level_zero_formula_check,
    locality_scan,
    non_geometric_function_form,
    parse_cycle,
    point_cocycles,
    schwarzian,
    separating_witness_check,
    single_in_point_check,
    split_d1_cocycle,
    synthetic_cocycle,
    zero_cocycle,
)
from src.forms import BasisIndex, MarkedConfig


def A(n, r=1):
    return BasisIndex(0, n, r)


def e(n, r=1):
    return BasisIndex(-1, n, r)


class TestCycles:
    """Testes da sintaxe de ciclos."""

    @pytest.mark.parametrize("text,expected", [
        ("sep", "sep"),
        ("P:1", "P:1"),
        ("P:1+2*P:2", "P:1+2*P:2"),
        ("2*P:1-1*Q:1", "2*P:1-Q:1"),
    ])
    def test_parse_and_render(self, text, expected):
        """Testa a leitura e a forma textual."""
        assert str(parse_cycle(text)) == expected

    @pytest.mark.parametrize("text", ["X:1", "P:", "P:x"])
    def test_parse_rejects(self, text):
        """Testa termos mal formados."""
        with pytest.raises(ValueError):
            parse_cycle(text)

    def test_repeated_terms_sum(self, two_in):
        """Testa que termos repetidos somam pesos."""
        points = parse_cycle("P:1+P:1-P:2").points(two_in)
        assert [w for _, w in points] == [2, -1]

    def test_separating_uses_all_in_points(self, three_in):
        """Testa C_S = Σ_i C_{P_i}."""
        assert len(SEPARATING.points(three_in)) == 3


class TestConnections:
    """Testes das conexões e da lei de transformação."""

    def test_default_affine(self, classical):
        """Testa T⁰ = 0 com ∞ ∈ O e 2/(z − q₁) com O finito."""
        assert affine_connection_default(classical).func.is_zero
        finite = MarkedConfig.build(["0"], ["2"])
        expected = RatFunc.constant(2) / (RatFunc.z() - RatFunc.constant(2))
        assert affine_connection_default(finite).func == expected

    def test_schwarzian_of_mobius(self):
        """Testa S(1/z) = 0 e S(z²) = −3/(2z²)."""
        z = RatFunc.z()
        assert schwarzian(RatFunc.constant(1) / z).is_zero
        assert schwarzian(z * z) == RatFunc.from_factors(Fraction(-3, 2), {Fraction(0): -2})

    @pytest.mark.parametrize("base", [RatFunc.zero(), RatFunc.constant(2) / (RatFunc.z() - RatFunc.constant(2))])
    def test_affine_law(self, base):
        """Testa T_w·f′ = T_z + f″/f′."""
        assert connection_transform_check(AffConn(base), "affine").passed

    def test_affine_pole_at_infinity(self):
        """Testa T_w = 2/w para T_z = 0."""
        report = connection_transform_check(AffConn(), "affine")
        orders = [r.witness["order"] for r in report.records if r.id.endswith("order_at_infinity")]
        assert orders == ["-1"]

    def test_unknown_kind(self):
        """Testa tipo de conexão inválido."""
        with pytest.raises(ValueError, match="affine"):
            connection_transform_check(AffConn(), "conformal")


class TestGeometricCocycles:
    """Testes dos valores dos cocíclos geométricos."""

    @pytest.mark.parametrize("n", range(-4, 5))
    def test_virasoro(self, classical, n):
        """Testa γ_S(e_n, e_{−n}) = (n³ − n)/12."""
        gamma = geometric_cocycle(classical, "vector")
        assert gamma(e(n), e(-n)) == Fraction(n ** 3 - n, 12)

    def test_vector_off_diagonal(self, classical):
        """Testa γ_S(e_n, e_m) = 0 com n + m ≠ 0."""
        gamma = geometric_cocycle(classical, "vector")
        assert gamma(e(2), e(-1)) == 0

    @pytest.mark.slow
    def test_virasoro_full_window(self, classical):
        """Testa γ_S(e_n, e_m) = (n³ − n)/12·δ_{n+m,0} para |n|, |m| ≤ 20."""
        gamma = geometric_cocycle(classical, "vector")
        for n in range(-20, 21):
            for m in range(-20, 21):
                expected = Fraction(n ** 3 - n, 12) if n + m == 0 else 0
                assert gamma(e(n), e(m)) == expected, (n, m)

    @pytest.mark.parametrize("x,y,expected", [
        (A(-1), A(1), 1),
        (A(2), A(1), 0),
        (A(-3), A(3), 3),
    ])
    def test_function_values(self, classical, x, y, expected):
        """Testa γ_S(A_{−n}, A_n) = n e zero fora do nível 0."""
        assert geometric_cocycle(classical, "function")(x, y) == expected

    def test_function_different_points(self, two_in):
        """Testa γ_S(A_{−1,1}, A_{1,2}) = 0."""
        assert geometric_cocycle(two_in, "function")(A(-1, 1), A(1, 2)) == 0

    @pytest.mark.parametrize("x,y,expected", [
        (e(1), A(-1), 2),
        (e(-1), A(1), 0),
        (e(-3), A(3), 6),
    ])
    def test_mixing_values(self, classical, x, y, expected):
        """Testa γ_S(e_{−n}, A_n) = n(n − 1)."""
        assert geometric_cocycle(classical, "mixing")(x, y) == expected

    def test_mixing_antisymmetric_extension(self, classical):
        """Testa γ(g, e) = −γ(e, g)."""
        gamma = geometric_cocycle(classical, "mixing")
        assert gamma(A(-1), e(1)) == -2

    def test_d1_kind_refused(self, classical):
        """Testa que d1 não é um tipo geométrico."""
        with pytest.raises(ValueError):
            geometric_cocycle(classical, "d1")

    def test_point_cocycles_sum_to_separating(self, three_in):
        """Testa Σ_i γ_{C_i} = γ_S."""
        total = point_cocycles(three_in, "function")
        gamma = total[0] + total[1] + total[2]
        separating = geometric_cocycle(three_in, "function")
        for x, y in [(A(-1, 1), A(1, 1)), (A(-2, 2), A(1, 3)), (A(0, 1), A(-1, 3))]:
            assert gamma(x, y) == separating(x, y)

    def test_linear_combination(self, classical):
        """Testa a combinação 3γ − γ = 2γ."""
        gamma = geometric_cocycle(classical, "vector")
        combined = gamma * 3 - gamma
        assert combined(e(2), e(-2)) == 1
        assert (-gamma)(e(2), e(-2)) == Fraction(-1, 2)

    def test_zero_cocycle(self, classical):
        """Testa o cocíclo nulo."""
        assert zero_cocycle(classical)(e(1), A(2)) == 0


class TestCoboundaries:
    """Testes de D_W e E_V."""

    @pytest.mark.parametrize("n", [1, 2, -3])
    def test_vector_coboundary(self, classical, n):
        """Testa D_W(e_n, e_{−n}) = −2n com W = Ω^{0}."""
        gamma = coboundary_cocycle(classical, CoboundaryData.of("W", {(0, 1): 1}))
        assert gamma(e(n), e(-n)) == -2 * n

    @pytest.mark.parametrize("n", [1, 2, -3])
    def test_mixing_coboundary(self, classical, n):
        """Testa E_V(e_n, A_{−n}) = −n com V = ω^0."""
        gamma = coboundary_cocycle(classical, CoboundaryData.of("V", {(0, 1): 1}))
        assert gamma(e(n), A(-n)) == -n

    def test_equal_fields_vanish(self, classical):
        """Testa [e, e] = 0."""
        gamma = coboundary_cocycle(classical, CoboundaryData.of("W", {(0, 1): 1, (2, 1): "1/3"}))
        assert gamma(e(2), e(2)) == 0

    def test_from_dict(self):
        """Testa a leitura com termos repetidos somados e nulos descartados."""
        data = CoboundaryData.from_dict({"kind": "V", "terms": [[0, 1, "1/2"], [0, 1, "1/2"], [2, 1, 0]]})
        assert data.as_mapping() == {(0, 1): Fraction(1)}
        assert data.cocycle_kind is CocycleKind.MIXING

    def test_invalid_kind(self):
        """Testa tipo de cobordo desconhecido."""
        with pytest.raises(ValueError, match="V, W"):
            CoboundaryData.of("U", {})

    def test_mixed_kinds_refused(self):
        """Testa soma de cobordos de tipos diferentes."""
        with pytest.raises(ValueError):
            CoboundaryData.of("V", {(0, 1): 1}) + CoboundaryData.of("W", {(0, 1): 1})


class TestProperties:
    """Testes das propriedades de cocíclo em amostras."""

    @pytest.mark.parametrize("kind", ["function", "vector", "mixing"])
    def test_geometric_cocycle_condition(self, two_in, kind):
        """Testa antissimetria e a condição de cocíclo."""
        gamma = geometric_cocycle(two_in, kind)
        assert check_cocycle_properties(gamma, "antisymmetry", window=(-3, 3), count=8).passed
        assert check_cocycle_properties(gamma, "cocycle_condition", window=(-3, 3), count=6).passed

    @pytest.mark.parametrize("prop", ["multiplicative", "l_invariant"])
    def test_function_cocycle_properties(self, classical, prop):
        """Testa que γ_S^{(f)} é multiplicativo e L-invariante."""
        gamma = geometric_cocycle(classical, "function")
        assert check_cocycle_properties(gamma, prop, window=(-6, 6), count=15).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("prop", ["multiplicative", "l_invariant"])
    def test_function_cocycle_properties_full_sample(self, any_config, prop):
        """Testa γ_S^{(f)} e γ_{C_i}^{(f)} em 200 triplas aleatórias."""
        for gamma in [geometric_cocycle(any_config, "function")] + point_cocycles(any_config, "function"):
            report = check_cocycle_properties(gamma, prop, window=(-6, 6), count=200, seed=7)
            assert len(report.records) == 200
            assert report.passed, [r.to_dict() for r in report.failures[:3]]

    def test_coboundary_is_cocycle(self, two_two):
        """Testa a condição de cocíclo para D_W."""
        gamma = coboundary_cocycle(two_two, CoboundaryData.of("W", {(0, 1): 1, (1, 2): -2}))
        assert check_cocycle_properties(gamma, "cocycle_condition", window=(-2, 2), count=6).passed

    def test_non_geometric_form_fails(self, classical):
        """Testa que a forma γ(A_0, A_3) = 1 viola a multiplicatividade."""
        gamma = non_geometric_function_form(classical)
        samples = [(A(0), A(0), A(3))]
        report = check_cocycle_properties(gamma, "multiplicative", samples)
        assert not report.passed
        assert "residual" in report.failures[0].witness

    def test_unknown_property(self, classical):
        """Testa a mensagem com as propriedades disponíveis."""
        with pytest.raises(ValueError, match="antisymmetry"):
            check_cocycle_properties(geometric_cocycle(classical, "function"), "associative")

    @pytest.mark.slow
    def test_equivalence(self, two_in):
        """Testa multiplicativo ⇔ L-invariante nos limitados."""
        assert function_property_equivalence_check(two_in, count=2).passed


class TestD1Split:
    """Testes de separação e extensão em D¹."""

    def test_split(self, classical):
        """Testa γ = γ^{(f)} + γ^{(m)} + γ^{(v)}."""
        gamma = (geometric_cocycle(classical, "function") + geometric_cocycle(classical, "mixing")
                 + geometric_cocycle(classical, "vector"))
        fn, mix, vec = split_d1_cocycle(gamma)
        for x, y in [(A(-1), A(1)), (e(1), A(-1)), (e(2), e(-2)), (A(-1), e(1))]:
            assert gamma(x, y) == fn(x, y) + mix(x, y) + vec(x, y)
        assert fn(e(2), e(-2)) == 0

    def test_extension(self, classical):
        """Testa a extensão de γ_S^{(f)} a D¹."""
        extended = extend_function_cocycle_to_d1(geometric_cocycle(classical, "function"))
        assert extended.kind is CocycleKind.D1
        assert extended(e(1), A(-1)) == 0
        assert check_cocycle_properties(extended, "cocycle_condition", window=(-3, 3), count=4).passed

    def test_extension_refused(self, classical):
        """Testa a recusa com a tripla violadora."""
        with pytest.raises(PropertyViolation) as info:
            extend_function_cocycle_to_d1(non_geometric_function_form(classical), samples=[(e(-1), A(1), A(3))])
        assert info.value.witness


class TestLocality:
    """Testes da varredura de localidade."""

    def test_separating_is_local(self, classical):
        """Testa γ_S^{(f)} não nulo apenas no nível 0."""
        scan = locality_scan(geometric_cocycle(classical, "function"), (-10, 10), threads=2)
        assert scan.nonzero_levels == (0,)
        assert scan.is_local
        assert scan.to_dict()["window_relative"] is True

    def test_coboundary_level_zero(self, classical):
        """Testa D_W com W = Ω^{0,1} só no nível 0."""
        scan = locality_scan(coboundary_cocycle(classical, CoboundaryData.of("W", {(0, 1): 1})), (-6, 6))
        assert scan.nonzero_levels == (0,)

    def test_point_cocycle_below_zero(self, two_in):
        """Testa que γ_{C_1} tem valores abaixo do nível −1 onde γ_S se anula."""
        scan = locality_scan(geometric_cocycle(two_in, "function", CycleSpec.point(1)), (-6, 2), threads=2)
        assert scan.upper_bound == 0
        assert scan.lower_bound <= -2

    def test_point_cocycle_bounded_above(self, two_in):
        """Testa γ_{C_1} em [−8, 0]: limitado por 0, não nulo no nível mais baixo."""
        scan = locality_scan(geometric_cocycle(two_in, "function", CycleSpec.point(1)), (-8, 0), threads=2)
        assert scan.upper_bound == 0
        assert -8 in scan.nonzero_levels
        assert scan.nonzero_above == ()
        assert scan.verdict == "bounded-above-only"

    def test_top_level_alone_is_not_unbounded(self, classical):
        """Testa que um valor no topo da janela não decide o veredito."""
        scan = locality_scan(geometric_cocycle(classical, "function"), (-3, 0))
        assert scan.nonzero_levels == (0,)
        assert scan.verdict == "local-in-window"

    def test_unbounded_verdict(self, classical):
        """Testa o veredito quando γ não se anula acima da janela."""
        scan = locality_scan(geometric_cocycle(classical, "function"), (-3, -1))
        assert scan.nonzero_levels == ()
        assert scan.nonzero_above == (0,)
        assert scan.verdict == "unbounded-in-window"

    def test_levels_above_must_be_positive(self, classical):
        """Testa a recusa de levels_above < 1."""
        with pytest.raises(ValueError):
            locality_scan(geometric_cocycle(classical, "function"), (-2, 2), levels_above=0)

    def test_invalid_window(self, classical):
        """Testa janela invertida."""
        with pytest.raises(ValueError):
            locality_scan(geometric_cocycle(classical, "function"), (2, -2))

    @pytest.mark.slow
    def test_connection_locality(self, two_in):
        """Testa a localidade com conexões deslocadas."""
        assert connection_locality_check(two_in, (-6, 3), threads=2).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("kind", ["function", "vector", "mixing"])
    def test_separating_locality_full_window(self, two_in, kind):
        """Testa limite superior 0 e limite inferior finito em [−12, 12]."""
        scan = locality_scan(geometric_cocycle(two_in, kind), (-12, 12), degree_range=(-12, 12), threads=4)
        assert scan.upper_bound == 0
        assert scan.lower_bound is not None
        assert scan.nonzero_above == ()

    @pytest.mark.slow
    def test_point_cocycle_witness_full_window(self, two_in):
        """Testa um par de nível ≤ −2 com γ_{C_1} ≠ 0 e γ_S = 0 em [−12, 12]."""
        point = geometric_cocycle(two_in, "function", CycleSpec.point(1))
        separating = geometric_cocycle(two_in, "function")
        scan = locality_scan(point, (-12, 12), degree_range=(-12, 12), threads=4)
        assert scan.upper_bound == 0
        assert scan.lower_bound <= -2
        pairs = (p for level in range(-12, -1) for p in level_pairs(two_in, "function", level, (-12, 12)))
        assert any(point(x, y) != 0 and separating(x, y) == 0 for x, y in pairs)

    def test_finiteness(self, classical):
        """Testa cobordos finitos locais."""
        assert finiteness_check(classical, (0, 1), (-4, 4)).passed


class TestLevelZero:
    """Testes dos parâmetros de nível zero."""

    @pytest.mark.parametrize("kind", ["function", "vector", "mixing"])
    def test_classical_parameters(self, classical, kind):
        """Testa α = 1 e b = 0 para os separadores."""
        params = extract_level_zero(geometric_cocycle(classical, kind))
        assert params.alpha == (Fraction(1),)
        assert params.b == (() if kind == "function" else (Fraction(0),))

    def test_linearity(self, three_in):
        """Testa α_r = 3 para 3γ_S^{(f)}."""
        params = extract_level_zero(geometric_cocycle(three_in, "function") * 3)
        assert params.alpha == (Fraction(3),) * 3
        assert params.uniform_alpha

    @pytest.mark.parametrize("kind", ["function", "vector", "mixing"])
    def test_formula(self, two_in, kind):
        """Testa as fórmulas fechadas de nível zero."""
        report = level_zero_formula_check(geometric_cocycle(two_in, kind), degree_window=(-5, 5))
        assert report.passed

    def test_coboundary_shifts_b(self, classical):
        """Testa que E_V com V = ω^0 altera b e não α."""
        gamma = geometric_cocycle(classical, "mixing") + coboundary_cocycle(
            classical, CoboundaryData.of("V", {(0, 1): 1}))
        params = extract_level_zero(gamma, "mixing")
        assert params.alpha == (Fraction(1),)
        assert params.b == (Fraction(1),)

    def test_kind_mismatch(self, classical):
        """Testa a recusa de tipos incompatíveis."""
        with pytest.raises(ValueError):
            extract_level_zero(geometric_cocycle(classical, "function"), "vector")


class TestDecomposition:
    """Testes da decomposição de cocíclos limitados."""

    def test_separating_vector(self, two_in):
        """Testa γ_S^{(v)} → α = (1, 1), W = 0."""
        result = decompose_bounded(geometric_cocycle(two_in, "vector"), window=3)
        assert result.alpha == (Fraction(1), Fraction(1))
        assert result.coboundary.is_empty

    def test_mixing_roundtrip(self, two_in):
        """Testa γ_{C_1} + 2γ_{C_2} + E_V com V = {(−1,1): 5}."""
        data = CoboundaryData.of("V", {(-1, 1): 5})
        gamma = synthetic_cocycle(two_in, "mixing", [1, 2], data)
        result = decompose_bounded(gamma, window=4)
        assert result.alpha == (Fraction(1), Fraction(2))
        assert result.coboundary == data

    def test_coboundary_only(self, classical):
        """Testa D_W puro → α = 0 e W recuperado."""
        data = CoboundaryData.of("W", {(1, 1): 2, (-1, 1): "1/2"})
        result = decompose_bounded(coboundary_cocycle(classical, data), "vector", window=3)
        assert result.alpha == (Fraction(0),)
        assert result.coboundary == data

    def test_function_kind(self, three_in):
        """Testa a decomposição de funções sem cobordo."""
        gamma = synthetic_cocycle(three_in, "function", [2, -1, "1/2"])
        result = decompose_bounded(gamma, window=2)
        assert result.alpha == (Fraction(2), Fraction(-1), Fraction(1, 2))
        assert result.coboundary is None

    def test_not_bounded(self, classical):
        """Testa a recusa quando o nível mais alto não se anula."""
        data = CoboundaryData.of("W", {(3, 1): 1})
        with pytest.raises(NotBoundedError):
            decompose_bounded(coboundary_cocycle(classical, data), "vector", window=3)

    def test_function_property_required(self, classical):
        """Testa que a forma não geométrica não é decomposta."""
        with pytest.raises((PropertyViolation, ReconstructionError)):
            decompose_bounded(non_geometric_function_form(classical), window=4)

    def test_absorption(self, two_in):
        """Testa R = R⁰ + (12/α)W e α·γ_{S,R} = γ."""
        gamma = (geometric_cocycle(two_in, "vector") * 2
                 + coboundary_cocycle(two_in, CoboundaryData.of("W", {(0, 1): 1})))
        result = decompose_bounded(gamma, window=3)
        alpha, connection = absorb_into_connection(result)
        assert alpha == 2
        assert connection.func == CoboundaryData.of("W", {(0, 1): 1}).form(two_in).func.scale(6)

    def test_absorption_check(self, classical):
        """Testa a absorção de E_V na conexão afim."""
        gamma = geometric_cocycle(classical, "mixing") * 3 + coboundary_cocycle(
            classical, CoboundaryData.of("V", {(1, 1): 2}))
        assert absorption_check(gamma, window=3).passed

    def test_absorption_needs_uniform_alpha(self, two_in):
        """Testa a recusa com α_i diferentes."""
        result = decompose_bounded(synthetic_cocycle(two_in, "mixing", [1, 2]), window=3)
        with pytest.raises(ValueError):
            absorb_into_connection(result)

    def test_independence(self, any_config):
        """Testa γ_{C_i}(A_{−1,r}, A_{1,r}) = δ_{ir}."""
        assert independence_check(any_config).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("kind", ["function", "vector", "mixing"])
    def test_roundtrip_report(self, two_in, kind):
        """Testa a ida e volta com combinações aleatórias."""
        assert decomposition_roundtrip_check(two_in, kind, count=2, window=4).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("kind", ["function", "vector", "mixing"])
    def test_roundtrip_full_sample(self, two_in, kind):
        """Testa 20 combinações com cobordo de suporte ≤ 6."""
        report = decomposition_roundtrip_check(two_in, kind, count=20, seed=3, support=6, window=4)
        assert len(report.records) == 20
        assert report.passed, [r.to_dict() for r in report.failures[:3]]

    def test_single_in_point(self, classical):
        """Testa γ_{C_1} = γ_S com K = 1."""
        assert single_in_point_check(classical, (-4, 3)).passed


class TestWitnesses:
    """Testes dos elementos-testemunha."""

    def test_separating_witnesses(self, three_in):
        """Testa γ_{C_k} = n, γ_{C_1} = −n e γ_S = 0."""
        assert separating_witness_check(three_in, max_n=4).passed

    def test_growth_witnesses(self):
        """Testa e_n·g_n′ = n·z⁻¹ e [e_n, f_n] = 2n·z(z−1)."""
        assert growth_witness_check(max_n=12).passed

    @pytest.mark.slow
    def test_growth_witnesses_full_range(self):
        """Testa as identidades dos elementos-testemunha para n ≤ 30."""
        report = growth_witness_check(max_n=30)
        assert report.passed, [r.to_dict() for r in report.failures[:3]]
