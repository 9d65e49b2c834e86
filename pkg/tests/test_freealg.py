import numpy as np
import pytest

from sklyrep.freealg import (
    Coef,
    EvalError,
    NcPoly,
    ParseError,
    eval_ncpoly,
    parse_ncpoly,
)

GENS = ("x", "y", "z")


def test_parse_sklyanin_style_relation():
    p = parse_ncpoly("x*y + y*x + c*z^2", GENS, ("c",))
    assert set(p.terms) == {(0, 1), (1, 0), (2, 2)}
    assert p.terms[(0, 1)] == Coef.const(1.0)
    assert p.terms[(2, 2)] == Coef.param("c")


def test_parse_zero_and_cancellation():
    assert parse_ncpoly("0", GENS).is_zero()
    p = parse_ncpoly("x*y - y*x + y*x - x*y", GENS)
    assert p.is_zero()
    assert p.terms == {}


def test_power_of_sum_is_expanded():
    p = parse_ncpoly("(x+y)^2", ("x", "y"))
    q = parse_ncpoly("x^2 + x*y + y*x + y^2", ("x", "y"))
    assert p == q


def test_power_binds_tighter_than_mul_and_unary_minus():
    p = parse_ncpoly("-2*x^2", ("x",))
    assert p.terms[(0, 0)] == Coef.const(-2.0)
    assert parse_ncpoly("- x + x", ("x",)).is_zero()


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_ncpoly("x*y + w", GENS)
    assert err.value.pos == 6
    with pytest.raises(ParseError):
        parse_ncpoly("x*", GENS)
    with pytest.raises(ParseError):
        parse_ncpoly("x^(2)", GENS)  # exponent must be a literal integer
    with pytest.raises(ParseError):
        parse_ncpoly("x + ?", GENS)


def _random_poly(rng, gens, params):
    terms = {}
    for _ in range(int(rng.integers(1, 7))):
        word = tuple(int(g) for g in rng.integers(0, len(gens), size=int(rng.integers(0, 5))))
        coef = complex(rng.standard_normal(), rng.standard_normal())
        if rng.uniform() < 0.3 and params:
            name = params[int(rng.integers(len(params)))]
            terms[word] = Coef({((name, 1),): coef})
        else:
            terms[word] = Coef.const(coef)
    return NcPoly(gens, params, terms)


def test_print_parse_round_trip_exact(rng):
    for _ in range(1000):
        p = _random_poly(rng, GENS, ("c", "z4"))
        q = parse_ncpoly(str(p), GENS, ("c", "z4"))
        assert q == p


def test_addition_of_p_and_minus_p_is_empty(rng):
    for _ in range(100):
        p = _random_poly(rng, GENS, ("c",))
        assert (p + (-p)).terms == {}


def test_eval_is_a_homomorphism(rng):
    for _ in range(200):
        p = _random_poly(rng, GENS, ())
        q = _random_poly(rng, GENS, ())
        mats = [rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)) for _ in GENS]
        lhs = eval_ncpoly(p * q, mats)
        ep, eq = eval_ncpoly(p, mats), eval_ncpoly(q, mats)
        bound = 1e-10 * (1.0 + np.linalg.norm(ep) * np.linalg.norm(eq))
        assert np.linalg.norm(lhs - ep @ eq) <= bound
        assert np.linalg.norm(
            eval_ncpoly(p + q, mats) - (ep + eq)
        ) <= 1e-10 * (1.0 + np.linalg.norm(ep) + np.linalg.norm(eq))


def test_eval_examples():
    zero2 = np.zeros((2, 2))
    p = parse_ncpoly("x*y + y*x", ("x", "y"))
    assert np.linalg.norm(eval_ncpoly(p, [zero2, zero2])) == 0.0
    # anti-commuting pair: x diagonal anti-symmetric, y anti-diagonal
    alpha, beta = 0.7 - 0.2j, 1.3 + 0.4j
    x = np.diag([-alpha, alpha])
    y = np.array([[0.0, 1.0], [beta, 0.0]])
    assert np.linalg.norm(eval_ncpoly(p, [x, y])) <= 1e-15
    # squared nilpotent
    n = np.array([[0.0, 1.0], [0.0, 0.0]])
    assert np.linalg.norm(eval_ncpoly(parse_ncpoly("x^2", ("x",)), [n])) == 0.0


def test_eval_with_parameter_environment():
    p = parse_ncpoly("c*x^2", ("x",), ("c",))
    m = np.eye(2)
    out = eval_ncpoly(p, [m], {"c": 2.5 - 1j})
    assert np.allclose(out, (2.5 - 1j) * np.eye(2))
    with pytest.raises(EvalError):
        eval_ncpoly(p, [m])


def test_eval_dimension_mismatch():
    p = parse_ncpoly("x*y", ("x", "y"))
    with pytest.raises(EvalError):
        eval_ncpoly(p, [np.eye(2), np.eye(3)])
    with pytest.raises(EvalError):
        eval_ncpoly(p, [np.eye(2)])


def test_complex_literal_coefficients_round_trip():
    p = parse_ncpoly("(2.5-0.75i)*x + 1.5i*y", ("x", "y"))
    assert p.terms[(0,)] == Coef.const(2.5 - 0.75j)
    assert p.terms[(1,)] == Coef.const(1.5j)
    assert parse_ncpoly(str(p), ("x", "y")) == p
