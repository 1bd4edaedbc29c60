"""
Independent recomputation of the family curvature with sympy, as an oracle for the exact engine
"""
import pytest

sympy = pytest.importorskip("sympy")

from src.fixtures import FAMILY_SCALARS, family_scalar  # noqa: E402

N = 5
HALF = sympy.Rational(1, 2)
METRIC = [[1 if i == j and i in (0, 1, 4) else -1 if i == j else 0 for j in range(N)] for i in range(N)]


def _brackets(l1, l2, l3, l4, m1, m2):
    c = [[[0] * N for _ in range(N)] for _ in range(N)]
    first = [-l1, -l2, l3, l4, 2 * m1]
    second = [-l3, -l4, -l1, -l2, 2 * m2]
    for (i, j), coeffs in {(0, 1): first, (2, 3): [-v for v in first],
                           (0, 3): second, (1, 2): [-v for v in second]}.items():
        for k, value in enumerate(coeffs):
            c[i][j][k] = value
            c[j][i][k] = -value
    return c


def _inverse(g):
    return [[sympy.Rational(1, g[i][i]) if i == j else 0 for j in range(N)] for i in range(N)]


def _koszul(c, g):
    """gamma[i][j][k]: E_k component of ∇_{E_i}E_j for a diagonal metric"""
    g_inv = _inverse(g)
    gamma = [[[0] * N for _ in range(N)] for _ in range(N)]
    for i in range(N):
        for j in range(N):
            for k in range(N):
                lowered = HALF * (c[i][j][k] * g[k][k] + c[k][i][j] * g[j][j] + c[k][j][i] * g[i][i])
                gamma[i][j][k] = sympy.expand(lowered * g_inv[k][k])
    return gamma


def _scalar_curvature(c, g):
    """Curvature and full contraction written out directly"""
    g_inv = _inverse(g)
    gamma = _koszul(c, g)

    def nabla(i, v):
        return [sympy.expand(sum(v[j] * gamma[i][j][k] for j in range(N))) for k in range(N)]

    tau = 0
    for i in range(N):
        for j in range(N):
            e_j = [1 if k == j else 0 for k in range(N)]
            # R(E_i, E_j)E_j
            first = [0] * N
            for a, coeff in enumerate(nabla(j, e_j)):
                if coeff != 0:
                    first = [x + coeff * y for x, y in zip(first, nabla(i, [1 if k == a else 0 for k in range(N)]))]
            second = [0] * N
            for a, coeff in enumerate(nabla(i, e_j)):
                if coeff != 0:
                    second = [x + coeff * y for x, y in zip(second, nabla(j, [1 if k == a else 0 for k in range(N)]))]
            third = [0] * N
            for m in range(N):
                if c[i][j][m] != 0:
                    third = [x + c[i][j][m] * y for x, y in zip(third, nabla(m, e_j))]
            r = [sympy.expand(a - b - d) for a, b, d in zip(first, second, third)]
            # ρ(E_j,E_j) contribution g^{ii} R(E_i,E_j,E_j,E_i)
            tau += g_inv[j][j] * g_inv[i][i] * r[i] * g[i][i]
    return sympy.expand(tau)


def test_scalar_curvature_matches_sympy():
    symbols = sympy.symbols("l1 l2 l3 l4 m1 m2")
    tau = _scalar_curvature(_brackets(*symbols), METRIC)
    expected = sympy.expand(sympy.sympify(FAMILY_SCALARS["tau"].replace("^", "**")))
    assert sympy.expand(tau - expected) == 0


def test_golden_scalar_agrees_with_sympy_at_fixc():
    value = family_scalar(FAMILY_SCALARS["tau_D"]).evaluate({"l1": 1, "l2": 0, "l3": 0, "l4": 0, "m1": 1, "m2": 0})
    sym = sympy.sympify(FAMILY_SCALARS["tau_D"].replace("^", "**")).subs(
        {"l1": 1, "l2": 0, "l3": 0, "l4": 0, "m1": 1, "m2": 0})
    assert value == int(sym) == -24


def test_koszul_coefficients_match_engine(family):
    symbols = sympy.symbols("l1 l2 l3 l4 m1 m2")
    gamma = _koszul(_brackets(*symbols), METRIC)
    for i in range(N):
        for j in range(N):
            engine = family.nabla.along(i, j)
            for k in range(N):
                expected = sympy.sympify(str(engine[k]).replace("^", "**"))
                assert sympy.expand(gamma[i][j][k] - expected) == 0, (i + 1, j + 1, k + 1)
