"""
Testes do núcleo exato: racionais, polinômios, funções racionais, Laurent e resíduos.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core import (
    INFINITY,
    ArithmeticDomainError,
    CheckRecord,
    CheckReport,
    Poly,
    RatFunc,
    RiemannPoint,
    clear_expansion_cache,
    format_point,
    format_rat,
    laurent_coeffs,
    order_at,
    parse_point,
    parse_rat,
    rat_func_arith,
    residue_1form,
    residue_of_product,
)
from src.core.ratfunc import linear_power

small_ints = st.integers(min_value=-6, max_value=6)
roots = st.sampled_from([Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2)])


@st.composite
def polys(draw, max_degree=3):
    return Poly(draw(st.lists(small_ints, min_size=1, max_size=max_degree + 1)))


@st.composite
def ratfuncs(draw):
    """Funções racionais com raízes e polos racionais escolhidos."""
    exponents = draw(st.dictionaries(roots, st.integers(min_value=-3, max_value=3), max_size=3))
    constant = draw(st.integers(min_value=1, max_value=5)) * draw(st.sampled_from([-1, 1]))
    return RatFunc.from_factors(constant, exponents)


def z():
    return RatFunc.z()


class TestRationals:
    """Testes de leitura e escrita de racionais e pontos."""

    @pytest.mark.parametrize("text,expected", [
        ("3", Fraction(3)),
        ("3/6", Fraction(1, 2)),
        ("-4/2", Fraction(-2)),
        (" 7/3 ", Fraction(7, 3)),
    ])
    def test_parse_rat(self, text, expected):
        """Testa a leitura de "p" e "p/q"."""
        assert parse_rat(text) == expected

    @pytest.mark.parametrize("text", ["1.5", "1e3", "", "abc"])
    def test_parse_rat_rejects_inexact(self, text):
        """Testa que decimais e lixo são recusados."""
        with pytest.raises(ValueError):
            parse_rat(text)

    def test_format_rat(self):
        """Testa a forma canônica da serialização."""
        assert format_rat(Fraction(-1, 2)) == "-1/2"
        assert format_rat(4) == "4"
        assert format_rat(Fraction(6, 3)) == "2"

    def test_points(self):
        """Testa o ponto no infinito e pontos finitos."""
        assert parse_point("inf") == INFINITY
        assert parse_point("1/2") == RiemannPoint.finite(Fraction(1, 2))
        assert format_point(INFINITY) == "inf"
        assert format_point(RiemannPoint.finite(-3)) == "-3"

    @given(st.fractions(max_denominator=50))
    def test_format_parse_identity(self, value):
        """Testa que a leitura inverte a escrita."""
        assert parse_rat(format_rat(value)) == value


class TestPoly:
    """Testes de polinômios exatos."""

    def test_linear_and_power(self):
        """Testa z − a e potências."""
        square = Poly.linear(1) ** 2
        assert square == Poly([1, -2, 1])
        assert square.root_multiplicity(1) == 2

    def test_divmod(self):
        """Testa a divisão euclidiana."""
        q, r = Poly([-1, 0, 1]).divmod(Poly.linear(1))
        assert q == Poly([1, 1])
        assert r.is_zero

    def test_gcd_is_monic(self):
        """Testa o mdc mônico."""
        a = Poly.linear(1) * Poly.linear(2)
        b = Poly.linear(1) * Poly.linear(3)
        assert Poly.gcd(a * 5, b) == Poly.linear(1)

    def test_to_string(self):
        """Testa a renderização."""
        assert Poly([1, 0, -2]).to_string() == "-2*z^2 + 1"

    @given(polys(), polys(), polys())
    @settings(max_examples=50)
    def test_ring_axioms(self, a, b, c):
        """Testa distributividade e associatividade."""
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)

    @given(polys(), polys())
    @settings(max_examples=50)
    def test_derivative_leibniz(self, a, b):
        """Testa (ab)′ = a′b + ab′."""
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


class TestRatFunc:
    """Testes de funções racionais."""

    def test_canonical_form(self):
        """Testa a redução automática pelo mdc."""
        f = RatFunc(Poly([-1, 0, 1]), Poly.linear(1))
        assert f == RatFunc(Poly([1, 1]))
        assert f.is_polynomial

    def test_zero_denominator(self):
        """Testa o erro de domínio."""
        with pytest.raises(ArithmeticDomainError):
            RatFunc(1, 0)

    def test_division_by_zero_function(self):
        """Testa divisão pela função zero."""
        with pytest.raises(ArithmeticDomainError):
            rat_func_arith(z(), RatFunc.zero(), "div")

    def test_unknown_operation(self):
        """Testa a mensagem com as operações disponíveis."""
        with pytest.raises(ValueError, match="add"):
            rat_func_arith(z(), z(), "pow")

    @pytest.mark.parametrize("point,expected", [
        (RiemannPoint.finite(0), 1),
        (RiemannPoint.finite(1), -2),
        (INFINITY, 1),
    ])
    def test_order_at(self, point, expected):
        """Testa a ordem de z/(z−1)² nos pontos."""
        f = RatFunc.from_factors(1, {Fraction(0): 1, Fraction(1): -2})
        assert order_at(f, point) == expected

    def test_compose_mobius_inversion(self):
        """Testa f(1/z) para f = z/(z − 1)."""
        f = z() / (z() - 1)
        assert f.compose_mobius(0, 1, 1, 0) == RatFunc(1) / (1 - z())

    @given(ratfuncs(), ratfuncs(), ratfuncs())
    @settings(max_examples=40, deadline=None)
    def test_field_axioms(self, a, b, c):
        """Testa axiomas de corpo em funções com raízes racionais."""
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert (a / b) * b == a

    @given(ratfuncs(), ratfuncs())
    @settings(max_examples=40, deadline=None)
    def test_quotient_rule(self, a, b):
        """Testa (a/b)′ = (a′b − ab′)/b²."""
        assert (a / b).derivative() == (a.derivative() * b - a * b.derivative()) / (b * b)


class TestLaurent:
    """Testes de expansões de Laurent e resíduos."""

    def test_geometric_series(self):
        """Testa 1/(1 − z) em 0."""
        f = RatFunc(1) / (1 - z())
        assert laurent_coeffs(f, RiemannPoint.finite(0), 0, 5).coefficients == (1,) * 5

    def test_expansion_at_infinity(self):
        """Testa z = w^−1 no infinito."""
        piece = laurent_coeffs(z(), INFINITY, -1, 3)
        assert piece.coefficients == (1, 0, 0)

    def test_slice_precision(self):
        """Testa que expoentes fora da fatia são recusados."""
        piece = laurent_coeffs(z(), RiemannPoint.finite(0), 0, 2)
        assert piece.coefficient(-3) == 0
        with pytest.raises(ValueError):
            piece.coefficient(2)

    @pytest.mark.parametrize("point,expected", [
        (RiemannPoint.finite(0), 1),
        (INFINITY, -1),
    ])
    def test_residue_of_dz_over_z(self, point, expected):
        """Testa dz/z em 0 e no infinito."""
        assert residue_1form(RatFunc(1) / z(), point) == expected

    @given(ratfuncs())
    @settings(max_examples=40, deadline=None)
    def test_residue_theorem(self, f):
        """Testa que a soma dos resíduos de f dz sobre P¹ é zero."""
        points = [RiemannPoint.finite(r) for r in (0, 1, -1, 2, Fraction(1, 2))] + [INFINITY]
        assert sum(residue_1form(f, p) for p in points) == 0

    @given(ratfuncs(), ratfuncs(), st.integers(min_value=0, max_value=2))
    @settings(max_examples=40, deadline=None)
    def test_residue_of_product_matches_materialized(self, f, g, k):
        """Testa o caminho rápido contra o produto materializado."""
        materialized = f * g
        derived = f
        for _ in range(k):
            derived = derived.derivative()
        for point in (RiemannPoint.finite(0), RiemannPoint.finite(1), INFINITY):
            fast = residue_of_product(((f, k), (g, 0)), point)
            assert fast == residue_1form(derived * g, point)
            assert residue_of_product(((materialized, 0),), point) == residue_1form(materialized, point)

    def test_clear_expansion_cache(self):
        """Testa o esvaziamento dos caches sem alterar os coeficientes."""
        f = RatFunc.from_factors(1, {Fraction(3, 7): -2})
        point = RiemannPoint.finite(Fraction(3, 7))
        before = laurent_coeffs(f, point, -2, 3).coefficients
        assert clear_expansion_cache() > 0
        assert clear_expansion_cache() == 0
        assert laurent_coeffs(f, point, -2, 3).coefficients == before

    def test_linear_power_shared_between_threads(self):
        """Testa que threads concorrentes recebem a mesma potência memoizada."""
        clear_expansion_cache()
        with ThreadPoolExecutor(max_workers=8) as executor:
            powers = list(executor.map(lambda _: linear_power(Fraction(1, 3), 5), range(32)))
        assert all(p is powers[0] for p in powers)
        assert powers[0] == Poly.linear(Fraction(1, 3)) ** 5


class TestSympyOracle:
    """Coeficientes de Laurent conferidos contra sympy."""

    @pytest.mark.parametrize("center", [0, 1, -2])
    def test_coefficients_match_sympy(self, center):
        """Testa (z² + 1)/((z − 1)²(z + 2)) em vários centros."""
        sp = pytest.importorskip("sympy")
        t, w = sp.symbols("t w")
        f = (z() * z() + 1) / ((z() - 1) * (z() - 1) * (z() + 2))
        expr = (w ** 2 + 1) / ((w - 1) ** 2 * (w + 2))
        local = sp.series(expr.subs(w, t + center), t, 0, 4).removeO()
        first = order_at(f, RiemannPoint.finite(center))
        piece = laurent_coeffs(f, RiemannPoint.finite(center), first, 4 - first)
        for k in range(first, 4):
            c = sp.Rational(local.coeff(t, k))
            assert piece.coefficient(k) == Fraction(int(c.p), int(c.q))

    def test_residue_matches_sympy(self):
        """Testa resíduos de (z² + 1)/((z − 1)²(z + 2))."""
        sp = pytest.importorskip("sympy")
        w = sp.symbols("w")
        f = (z() * z() + 1) / ((z() - 1) * (z() - 1) * (z() + 2))
        expr = (w ** 2 + 1) / ((w - 1) ** 2 * (w + 2))
        for center in (1, -2):
            c = sp.Rational(sp.residue(expr, w, center))
            assert residue_1form(f, RiemannPoint.finite(center)) == Fraction(int(c.p), int(c.q))


class TestReports:
    """Testes de registros de verificação."""

    def test_witness_stringified(self):
        """Testa que testemunhas racionais viram strings."""
        record = CheckRecord.build("x", False, value=Fraction(1, 3), pair=[1, Fraction(2)])
        assert record.witness == {"value": "1/3", "pair": ["1", "2"]}
        assert not record.passed

    def test_report_aggregation(self):
        """Testa passed e failures."""
        report = CheckReport("r")
        report.add(CheckRecord.build("a", True))
        report.add(CheckRecord.build("b", False))
        assert not report.passed
        assert [r.id for r in report.failures] == ["b"]
        assert report.to_dict()["name"] == "r"
