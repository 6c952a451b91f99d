"""Randomised invariant battery shared by the CLI sweep and the test suite."""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

import numpy as np

from . import geometry as geo
from .exactla import Particular, ones, solve
from .hamming import HammingPointSet, distance_matrix, random_subset
from .mconst import (Measure, NotStrictError, check_bounds, energy, mconst_inverse_route,
                     mconst_reduced, mconst_solveb_route, potential, verify_b_invariance,
                     verify_maximality)
from .negtype import (affinely_independent, check_negative_type, strict_by_inverse,
                      verify_hnstrict_equivalence)
from .oracle import cross_validate

CHECKS = (
    "negtype", "hnstrict", "wolf_sanchez", "routes_agree", "maximality", "sphere_centers",
    "bounds", "b_invariance", "monotone", "lemma1", "lemma2", "energy_identity", "oracle",
)


def derive_seed(*parts: int) -> int:
    """64-bit seed from a tuple of integers; order-independent across cells."""
    return int(np.random.SeedSequence([int(p) & (2 ** 64 - 1) for p in parts])
               .generate_state(1, dtype=np.uint64)[0])


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_measure(m: int, rng: random.Random) -> Measure:
    w = [random_rational(rng) for _ in range(m - 1)]
    return Measure(w + [1 - sum(w)])


def route_values(X: HammingPointSet) -> dict:
    """Exact M(X) from every applicable route (None where the route
    does not apply, i.e. the inverse route on singular D)."""
    D = distance_matrix(X)
    results = {}
    try:
        results["inverse"] = mconst_inverse_route(D)
    except NotStrictError:
        results["inverse"] = None
    results["solveb"] = mconst_solveb_route(D)
    results["reduced"] = mconst_reduced(X)
    results["geometric"] = geo.mconst_geometric(X)
    results["circumcenter"] = geo.mconst_circumcenter(X)
    return results


def run_checks(X: HammingPointSet, seed: int, oracle: bool = True) -> dict:
    """Run every invariant on one instance; returns {check name: bool}."""
    rng = random.Random(seed)
    D = distance_matrix(X)
    out = {}
    verdict = check_negative_type(D)
    out["negtype"] = verdict.is_neg_type
    out["hnstrict"] = verify_hnstrict_equivalence(X)
    out["wolf_sanchez"] = strict_by_inverse(D) == verdict.is_strict

    results = route_values(X)
    values = {r.value for r in results.values() if r is not None}
    out["routes_agree"] = len(values) == 1 and (
        (results["inverse"] is not None) == affinely_independent(X))
    out["maximality"] = all(verify_maximality(D, r) for r in results.values() if r is not None)

    sphere = geo.circumsphere(X)
    from_measure = geo.sphere_center_from_measure(X, results["solveb"].measure)
    foot, _ = geo.project_onto_affine(geo.cube_center(X.n), geo.affine_hull(X))
    M = results["solveb"].value
    out["sphere_centers"] = (sphere.center == from_measure.center == foot
                             and sphere.radius_sq == from_measure.radius_sq == M / 2)

    out["bounds"] = check_bounds(X)
    sol = solve(D.matrix, ones(X.m))
    out["b_invariance"] = verify_b_invariance(D) and (
        not isinstance(sol, Particular) or all(sum(v) == 0 for v in sol.null_basis))
    if X.m >= 3:
        out["monotone"] = mconst_reduced(X.subset(range(X.m - 1))).value <= M
    else:
        out["monotone"] = True

    vecs = X.vectors()
    alpha = random_measure(X.m, rng).weights
    u = tuple(random_rational(rng) for _ in range(X.n))
    out["lemma1"] = geo.lemma1_identity(vecs, alpha, u)
    mu = random_measure(X.m, rng)
    i = rng.randrange(X.m)
    out["lemma2"] = sum(geo.potential_decomposition(X, mu, i)) == potential(D, mu, i)
    out["energy_identity"] = energy(D, mu) == geo.energy_via_center(X, mu)
    if oracle:
        out["oracle"] = cross_validate(X, tol=1e-6, seed=seed)
    return out


def sweep(n_max: int, m_max: int, count: int, seed: int, oracle: bool = True):
    """Yield ``(n, m, index, X, checks)`` for every instance of every cell."""
    for n in range(1, n_max + 1):
        for m in range(2, min(m_max, 2 ** n) + 1):
            for k in range(count):
                s = derive_seed(seed, n, m, k)
                X = random_subset(n, m, s)
                yield n, m, k, X, run_checks(X, s, oracle=oracle)


def summarize(n_max: int, m_max: int, count: int, seed: int, oracle: bool = True):
    """Return (lines, failures) for a whole sweep; deterministic in ``seed``."""
    passed, failed = Counter(), Counter()
    failures = []
    instances = 0
    for n, m, k, X, checks in sweep(n_max, m_max, count, seed, oracle):
        instances += 1
        for name, ok in checks.items():
            (passed if ok else failed)[name] += 1
            if not ok:
                failures.append(f"FAIL {name} n={n} m={m} index={k} points="
                                + ",".join(str(p) for p in X.points))
    lines = [f"{name}: pass={passed[name]} fail={failed[name]}"
             for name in CHECKS if passed[name] or failed[name]]
    total_fail = sum(failed.values())
    lines.append(f"sweep instances={instances} checks={sum(passed.values()) + total_fail} "
                 f"passed={sum(passed.values())} failed={total_fail} "
                 f"result={'PASS' if total_fail == 0 else 'FAIL'}")
    return failures + lines, total_fail
