"""Numerical rediscovery of the two-dimensional representation classification.

With the first generator image fixed in one of the two Jordan shapes, the
defining relations become a quadratic system in the remaining matrix
entries.  The solver runs damped Gauss-Newton from many random starts on
that system augmented with a few random affine slices (the slices spread
the starts across the positive-dimensional solution components), then
re-polishes every endpoint on the unsliced system, keeps the points that
satisfy the relations, deduplicates them up to simultaneous conjugation,
and matches each irreducible solution to a representative family through
its central character.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import sklyanin
from .matkit import DEFAULT_RTOL
from .reptheory import (
    Presentation,
    Rep,
    classify,
    find_conjugator,
    fingerprint,
    is_irreducible_burnside,
    relation_residual,
    rep_to_json,
)
from .skewpoly import SkewRepSpec, skew_center_point, skew_presentation, skew_rep

__all__ = [
    "DEFAULT_SLICES",
    "SolveTask",
    "Solution",
    "SolveReport",
    "solve_reps",
    "one_dim_solutions",
    "report_to_json",
]

DEFAULT_SLICES = {"one_block": 2, "two_blocks": 3}

KEEP_RESIDUAL = 1e-9
CONVERGE_RESIDUAL = 1e-11
MAX_STEPS = 100

# probability that one slice is a coordinate-vanishing functional e_j . u = 0;
# those keep the coordinate-degenerate solution components inside the sliced
# set, which dense slices alone essentially never reach
COORD_SLICE_PROB = 0.45

# endpoints with every image below this norm are snapped to the exact zero
# (trivial) solution, which Newton approaches only algebraically
ZERO_SNAP = 1e-5

# a non-zero endpoint whose central character is this close to the origin sits
# at working precision on the reducible stratum and cannot be certified
DEGENERATE_CHAR = 1e-6


@dataclass(frozen=True)
class SolveTask:
    """One solve run: algebra ("sklyanin" or "skew"), the Jordan shape of the
    first generator image, and the randomized-search budget."""

    algebra: str
    jordan_kind: str  # one_block | two_blocks
    c: complex = None
    num_starts: int = 200
    seed: int = 0
    slice_count: int = None

    def slices(self):
        if self.slice_count is not None:
            return int(self.slice_count)
        return DEFAULT_SLICES[self.jordan_kind]

    def presentation(self) -> Presentation:
        if self.algebra == "sklyanin":
            if self.c is None:
                raise ValueError("sklyanin tasks need c")
            return sklyanin.s11c_presentation(self.c)
        if self.algebra == "skew":
            return skew_presentation()
        raise ValueError(f"unknown algebra {self.algebra!r}")


@dataclass
class Solution:
    rep: Rep
    residual: float
    irreducible: bool
    matched_family: str = None
    fitted_params: dict = None
    branch: str = None
    conjugator: np.ndarray = None
    multiplicity: int = 1


@dataclass
class SolveReport:
    task: SolveTask
    solutions: list
    stats: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# quadratic residual systems


class _QuadSystem:
    """Equations r_k(u) = C_k + B_k.u + u^T T_k u with complex coefficients."""

    def __init__(self, T, B, C):
        self.T = T  # (k, n, n), symmetric in the last two axes
        self.B = B  # (k, n)
        self.C = C  # (k,)

    @property
    def n_unknowns(self):
        return self.B.shape[1]

    def residual(self, u):
        return self.C + self.B @ u + np.einsum("kij,i,j->k", self.T, u, u)

    def jacobian(self, u):
        return self.B + 2.0 * np.einsum("kij,j->ki", self.T, u)

    def with_affine(self, rows, targets):
        k_extra = rows.shape[0]
        T = np.concatenate(
            [self.T, np.zeros((k_extra,) + self.T.shape[1:], dtype=complex)]
        )
        B = np.concatenate([self.B, rows])
        C = np.concatenate([self.C, -np.asarray(targets, dtype=complex)])
        return _QuadSystem(T, B, C)


def _poly_add(a, b):
    out = dict(a)
    for key, val in b.items():
        s = out.get(key, 0j) + val
        if s == 0:
            out.pop(key, None)
        else:
            out[key] = s
    return out


def _poly_mul(a, b):
    out = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            key = tuple(sorted(k1 + k2))
            if len(key) > 2:
                raise ValueError("relation of degree > 2 in the unknowns")
            s = out.get(key, 0j) + v1 * v2
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
    return out


def _layout(gens, jordan_kind, n):
    """Unknown-entry layout: per generator a 2x2 (or 1x1) grid whose cells are
    either an unknown index or a complex constant."""
    if n == 1:
        return gens, {g: [[("u", i)]] for i, g in enumerate(gens)}
    grids = {}
    if jordan_kind == "one_block":
        grids[gens[0]] = [[("u", 0), ("k", 1.0)], [("k", 0.0), ("u", 0)]]
        base = 1
    elif jordan_kind == "two_blocks":
        grids[gens[0]] = [[("u", 0), ("k", 0.0)], [("k", 0.0), ("u", 1)]]
        base = 2
    else:
        raise ValueError(f"unknown jordan_kind {jordan_kind!r}")
    for g in gens[1:]:
        grids[g] = [
            [("u", base), ("u", base + 1)],
            [("u", base + 2), ("u", base + 3)],
        ]
        base += 4
    return gens, grids


def _poly_grid(grid):
    n = len(grid)
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            kind, val = grid[i][j]
            out[i, j] = {(val,): 1.0 + 0j} if kind == "u" else ({(): complex(val)} if val else {})
    return out


def _poly_matmul(a, b):
    n = a.shape[0]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            acc = {}
            for k in range(n):
                acc = _poly_add(acc, _poly_mul(a[i, k], b[k, j]))
            out[i, j] = acc
    return out


def _build_system(pres: Presentation, jordan_kind, n):
    gens, grids = _layout(tuple(pres.generators), jordan_kind, n)
    n_unknowns = 1 + max(
        idx for grid in grids.values() for row in grid for kind, idx in row if kind == "u"
    )
    mats = {g: _poly_grid(grids[g]) for g in gens}
    equations = []
    for relation in pres.relations:
        acc = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                acc[i, j] = {}
        for word, coef in relation.terms.items():
            value = coef.evaluate({})
            prod = None
            for g_idx in word:
                m = mats[gens[g_idx]]
                prod = m if prod is None else _poly_matmul(prod, m)
            if prod is None:  # empty word
                prod = np.empty((n, n), dtype=object)
                for i in range(n):
                    for j in range(n):
                        prod[i, j] = {(): 1.0 + 0j} if i == j else {}
            for i in range(n):
                for j in range(n):
                    scaled = {k: value * v for k, v in prod[i, j].items()}
                    acc[i, j] = _poly_add(acc[i, j], scaled)
        for i in range(n):
            for j in range(n):
                equations.append(acc[i, j])
    k = len(equations)
    T = np.zeros((k, n_unknowns, n_unknowns), dtype=complex)
    B = np.zeros((k, n_unknowns), dtype=complex)
    C = np.zeros(k, dtype=complex)
    for e, poly in enumerate(equations):
        for key, val in poly.items():
            if len(key) == 0:
                C[e] = val
            elif len(key) == 1:
                B[e, key[0]] += val
            else:
                i, j = key
                if i == j:
                    T[e, i, i] += val
                else:
                    T[e, i, j] += val / 2.0
                    T[e, j, i] += val / 2.0
    return gens, grids, _QuadSystem(T, B, C)


def _rep_from_unknowns(u, gens, grids, env, n):
    images = {}
    for g in gens:
        m = np.zeros((n, n), dtype=complex)
        for i in range(n):
            for j in range(n):
                kind, val = grids[g][i][j]
                m[i, j] = u[val] if kind == "u" else val
        images[g] = m
    return Rep(n, images, dict(env))


def _gauss_newton(system, u0, max_steps=MAX_STEPS, tol=CONVERGE_RESIDUAL):
    u = np.asarray(u0, dtype=complex).copy()
    r = system.residual(u)
    rn = np.linalg.norm(r)
    for _ in range(max_steps):
        if rn <= tol:
            break
        jac = system.jacobian(u)
        step, *_ = np.linalg.lstsq(jac, -r, rcond=None)
        t = 1.0
        improved = False
        for _halving in range(30):
            u_try = u + t * step
            r_try = system.residual(u_try)
            rn_try = np.linalg.norm(r_try)
            if rn_try < rn:
                u, r, rn = u_try, r_try, rn_try
                improved = True
                break
            t *= 0.5
        if not improved:
            break
    return u, rn, rn <= tol


def _disk_samples(rng, shape, radius=2.0):
    radii = radius * np.sqrt(rng.uniform(size=shape))
    angles = rng.uniform(0.0, 2.0 * np.pi, size=shape)
    return radii * np.exp(1j * angles)


# ---------------------------------------------------------------------------
# matching discovered solutions to the representative families


def _sqrt_pair(z):
    r = np.sqrt(complex(z))
    return (r, -r) if abs(r) > 0 else (r,)


def _family_candidates(task, char):
    c = complex(task.c)
    u1, u2, u3 = char.u1, char.u2, char.u3
    cands = []
    if task.jordan_kind == "one_block":
        z3 = -c * u2
        if abs(z3) > 1e-8:
            cands.append(("t3f1", {"z2": (u3 - 1.0) / z3, "z3": z3}))
        for z4 in _sqrt_pair(u3):
            if abs(z4) > 1e-8:
                cands.append(("t3f2", {"z4": z4}))
        return cands
    for x1 in _sqrt_pair(u1):
        if abs(x1) <= 1e-10:
            continue
        cands.append(("t4f2", {"x4": x1}))
        y4_f1 = c * u3 / (2.0 * x1)
        for z4 in _sqrt_pair(u3):
            cands.append(("t4f1", {"y4": y4_f1, "z4": z4}))
        z4_f3 = c * u2 / (2.0 * x1)
        for y4 in _sqrt_pair(u2):
            cands.append(("t4f3", {"y4": y4, "z4": z4_f3}))
        z4 = c * u2 / (2.0 * x1)
        y4 = c * u3 / (2.0 * x1)
        quad = np.array(
            [
                2.0 * x1 * z4 - c * y4 ** 2,
                c ** 2 * x1 ** 2 + 2.0 * c * y4 * z4,
                2.0 * x1 * y4 - c * z4 ** 2,
            ],
            dtype=complex,
        )
        if np.max(np.abs(quad)) > 1e-12:
            for z3 in np.roots(quad):
                if np.isfinite(z3):
                    cands.append(("t4f4", {"y4": y4, "z3": z3, "z4": z4}))
    return cands


def _char_gap(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return float(np.max(np.abs(a - b)) / (1.0 + max(np.linalg.norm(a), np.linalg.norm(b))))


def _match_sklyanin(task, rep, tol, char):
    """Match an irreducible solution to a representative family member.

    A strict conjugator search runs first; a looser second pass (for
    solutions polished right next to a component junction) additionally
    demands that the central characters agree, so it cannot merge distinct
    classes.
    """
    for loose_tol in (tol, 1e-6):
        for fid, params in _family_candidates(task, char):
            env = {"c": complex(task.c), **params}
            for branch in ("principal", "negated"):
                try:
                    member = sklyanin.family(fid, env, branch=branch)
                except (sklyanin.ConstraintError, sklyanin.DenominatorError,
                        sklyanin.InvalidParametersError):
                    continue
                if loose_tol > tol:
                    try:
                        member_char = sklyanin.central_character(member, tol=1e-6)
                    except ValueError:
                        continue
                    if _char_gap(char.point, member_char.point) > 1e-5:
                        continue
                q = find_conjugator(rep, member, loose_tol)
                if q is not None:
                    return fid, params, branch, q
                if not sklyanin.FAMILIES[fid].has_radical:
                    break
    return None


def _match_skew(rep, tol):
    try:
        u1, u2 = skew_center_point(rep, tol=1e-6)
    except ValueError:
        return None
    for alpha in _sqrt_pair(u1):
        if abs(alpha) <= 1e-10:
            continue
        member = skew_rep(SkewRepSpec("two_dim", alpha, u2))
        q = find_conjugator(rep, member, tol)
        if q is not None:
            return "psi", {"alpha": alpha, "beta": u2}, None, q
    return None


def _fingerprint_sort_key(rep):
    fp = fingerprint(rep)
    return tuple(v for z in fp for v in (round(z.real, 9), round(z.imag, 9)))


def solve_reps(task: SolveTask, tol: float = DEFAULT_RTOL) -> SolveReport:
    """Run the randomized solve described in the module docstring.

    Deterministic for a fixed task (including the seed).  Every reported
    solution satisfies the unsliced relations with normalized residual at
    most 1e-9; irreducible solutions are matched against the representative
    families (``t3f*``/``t4f*`` for S(1,1,c), ``psi`` for the skew ring)
    when the match is confirmed by an explicit conjugator.
    """
    pres = task.presentation()
    n = 2
    gens, grids, base = _build_system(pres, task.jordan_kind, n)
    env = {"c": complex(task.c)} if task.algebra == "sklyanin" else {}
    rng = np.random.default_rng(task.seed)
    n_u = base.n_unknowns
    k_slices = task.slices()

    kept = []
    degenerate = 0
    for _start in range(task.num_starts):
        rows = np.zeros((k_slices, n_u), dtype=complex)
        targets = np.zeros(k_slices, dtype=complex)
        for i in range(k_slices):
            if rng.uniform() < COORD_SLICE_PROB:
                rows[i, int(rng.integers(n_u))] = 1.0
            else:
                row = rng.standard_normal(n_u) + 1j * rng.standard_normal(n_u)
                rows[i] = row / np.linalg.norm(row)
                targets[i] = _disk_samples(rng, ())
        u0 = _disk_samples(rng, n_u)
        u_mid, _, _ = _gauss_newton(base.with_affine(rows, targets), u0)
        u_fin, _, _ = _gauss_newton(base, u_mid)
        # Newton endpoints that cling to a degenerate stratum (some unknowns
        # tiny but not zero) belong to classes at parameter magnitudes far
        # outside numeric reach; pin the tiny unknowns to exactly zero and
        # re-polish, keeping the stratum point when it still solves the
        # relations
        scale = max(1.0, float(np.max(np.abs(u_fin))))
        tiny = [j for j in range(n_u) if 0.0 < abs(u_fin[j]) <= 1e-4 * scale]
        if tiny:
            hold = np.zeros((len(tiny), n_u), dtype=complex)
            for i, j in enumerate(tiny):
                hold[i, j] = 1.0
            u_try = u_fin.copy()
            u_try[tiny] = 0.0
            u_try, _, _ = _gauss_newton(base.with_affine(hold, np.zeros(len(tiny))), u_try)
            rep_try = _rep_from_unknowns(u_try, gens, grids, env, n)
            if relation_residual(pres, rep_try) <= KEEP_RESIDUAL:
                u_fin = u_try
        if np.max(np.abs(u_fin)) <= ZERO_SNAP:
            u_fin = np.zeros_like(u_fin)
        rep = _rep_from_unknowns(u_fin, gens, grids, env, n)
        rr = relation_residual(pres, rep)
        if rr <= KEEP_RESIDUAL:
            kept.append((rep, rr))

    classes = classify([rep for rep, _ in kept], tol)
    solutions = []
    for cls in classes:
        rep, rr = kept[cls.representative]
        irreducible = is_irreducible_burnside(rep, tol)
        char = None
        if irreducible and task.algebra == "sklyanin":
            try:
                char = sklyanin.central_character(rep, tol=1e-6)
            except ValueError:
                degenerate += len(cls.members)
                continue
            if np.linalg.norm(char.point) <= DEGENERATE_CHAR:
                # indistinguishable from the reducible stratum at this precision
                degenerate += len(cls.members)
                continue
        sol = Solution(rep, rr, irreducible, multiplicity=len(cls.members))
        if irreducible:
            match = (
                _match_sklyanin(task, rep, tol, char)
                if task.algebra == "sklyanin"
                else _match_skew(rep, tol)
            )
            if match is not None:
                sol.matched_family, sol.fitted_params, sol.branch, sol.conjugator = match
        solutions.append(sol)
    solutions.sort(key=lambda s: (_fingerprint_sort_key(s.rep), s.residual))

    stats = {
        "starts": int(task.num_starts),
        "converged": len(kept),
        "deduped": len(solutions),
        "degenerate": degenerate,
    }
    return SolveReport(task, solutions, stats)


def one_dim_solutions(pres: Presentation, num_starts: int = 200, seed: int = 0):
    """Scalar (1-dimensional) solutions of the presentation via Newton sweeps.

    Returns deduplicated converged roots as tuples, one complex value per
    generator, sorted deterministically.
    """
    gens, grids, system = _build_system(pres, "one_block", 1)
    rng = np.random.default_rng(seed)
    starts = _disk_samples(rng, (num_starts, system.n_unknowns))
    roots = []
    for u0 in starts:
        u, _, _ = _gauss_newton(system, u0)
        if np.max(np.abs(u)) <= ZERO_SNAP:
            u = np.zeros_like(u)
        rep = _rep_from_unknowns(u, gens, grids, {}, 1)
        if relation_residual(pres, rep) > KEEP_RESIDUAL:
            continue
        if all(np.linalg.norm(u - r) > 1e-4 for r in roots):
            roots.append(u)
    roots.sort(key=lambda u: tuple(v for z in u for v in (round(z.real, 9), round(z.imag, 9))))
    return [tuple(map(complex, u)) for u in roots]


def _complex_pair(z):
    z = complex(z)
    return [z.real, z.imag]


def report_to_json(report: SolveReport) -> dict:
    task = report.task
    out = {
        "task": {
            "algebra": task.algebra,
            "jordan_kind": task.jordan_kind,
            "c": _complex_pair(task.c) if task.c is not None else None,
            "num_starts": int(task.num_starts),
            "seed": int(task.seed),
            "slice_count": task.slices(),
        },
        "stats": dict(report.stats),
        "solutions": [],
    }
    for sol in report.solutions:
        entry = {
            "rep": rep_to_json(sol.rep),
            "residual": sol.residual,
            "irreducible": bool(sol.irreducible),
            "multiplicity": int(sol.multiplicity),
            "matched_family": sol.matched_family,
            "branch": sol.branch,
            "fitted_params": (
                {k: _complex_pair(v) for k, v in sol.fitted_params.items()}
                if sol.fitted_params
                else None
            ),
            "conjugator": (
                [[_complex_pair(z) for z in row] for row in sol.conjugator]
                if sol.conjugator is not None
                else None
            ),
        }
        out["solutions"].append(entry)
    return out
