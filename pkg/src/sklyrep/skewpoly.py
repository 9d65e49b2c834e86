"""The skew polynomial ring C_{-1}[x,y] = C<x,y>/(xy + yx).

A worked second example exercising the whole pipeline on a known answer:
the one-dimensional representations live on the two coordinate axes, and
every two-dimensional irreducible representation is equivalent to one
with x diagonal anti-symmetric and y an anti-diagonal matrix, irreducible
exactly when the product of the two parameters is nonzero.  The center is
the polynomial ring on x^2 and y^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .freealg import eval_ncpoly, parse_ncpoly
from .reptheory import Presentation, Rep, is_irreducible_burnside, relation_residual

__all__ = [
    "SkewRepSpec",
    "skew_presentation",
    "skew_rep",
    "skew_center_point",
    "skew_plane_slice",
]

_PRESENTATION = None


def skew_presentation() -> Presentation:
    """Two generators x, y and the single relation xy + yx."""
    global _PRESENTATION
    if _PRESENTATION is None:
        gens = ("x", "y")
        _PRESENTATION = Presentation(gens, (), (parse_ncpoly("x*y + y*x", gens),))
    return _PRESENTATION


@dataclass(frozen=True)
class SkewRepSpec:
    """Which representation to build: a 1-dimensional one supported on the
    x-axis or y-axis, or the 2-dimensional family; the 2-dimensional one is
    irreducible iff alpha * beta != 0."""

    kind: str  # one_dim_x | one_dim_y | two_dim
    alpha: complex = 0.0
    beta: complex = 0.0


def skew_rep(spec: SkewRepSpec) -> Rep:
    alpha = complex(spec.alpha)
    beta = complex(spec.beta)
    if spec.kind == "one_dim_x":
        return Rep(1, {"x": [[alpha]], "y": [[0.0]]}, {"alpha": alpha})
    if spec.kind == "one_dim_y":
        return Rep(1, {"x": [[0.0]], "y": [[beta]]}, {"beta": beta})
    if spec.kind == "two_dim":
        x = np.diag([-alpha, alpha]).astype(complex)
        y = np.array([[0.0, 1.0], [beta, 0.0]], dtype=complex)
        return Rep(2, {"x": x, "y": y}, {"alpha": alpha, "beta": beta})
    raise ValueError(f"unknown kind {spec.kind!r}")


def skew_center_point(rep: Rep, tol: float = 1e-8):
    """Values (u1, u2) of the central generators x^2, y^2 on a solution rep.

    Scalarity of the central images is enforced on irreducible reps.
    """
    pres = skew_presentation()
    res = relation_residual(pres, rep)
    if res > tol:
        raise ValueError(f"not a solution representation (residual {res:.3e})")
    mats = rep.matrices(pres.generators)
    irreducible = is_irreducible_burnside(rep)
    values = []
    for text in ("x^2", "y^2"):
        m = eval_ncpoly(parse_ncpoly(text, pres.generators), mats)
        if rep.n == 2:
            deviation = max(abs(m[0, 1]), abs(m[1, 0]), abs(m[0, 0] - m[1, 1]))
            if irreducible and deviation > tol * (1.0 + np.linalg.norm(m)):
                raise ValueError("central element is not scalar on an irreducible rep")
        values.append(np.trace(m) / rep.n)
    return tuple(values)


def skew_plane_slice(grid) -> str:
    """CSV map of the parametrizing affine plane (u1, u2), axes marked.

    Each row is ``u1,u2,kind`` with kind one of ``origin`` (trivial rep),
    ``u1_axis``/``u2_axis`` (nontrivial 1-dimensional reps) or ``azumaya``
    (2-dimensional irreducibles).
    """
    lo, hi, steps = grid
    axis = np.linspace(float(lo), float(hi), int(steps))
    lines = ["u1,u2,kind"]
    for u1 in axis:
        for u2 in axis:
            if u1 == 0.0 and u2 == 0.0:
                kind = "origin"
            elif u2 == 0.0:
                kind = "u1_axis"
            elif u1 == 0.0:
                kind = "u2_axis"
            else:
                kind = "azumaya"
            lines.append("%.17g,%.17g,%s" % (u1, u2, kind))
    return "\n".join(lines) + "\n"
