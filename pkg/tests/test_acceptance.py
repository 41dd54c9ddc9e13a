"""Acceptance suite: one test per criterion, exact checks, seeded randomness.

Each test prints a single pass/fail line (visible with `pytest -s` or in the
captured-output section on failure).  All assertions are exact integer or
rational identities; there are no tolerances anywhere.
"""

from fractions import Fraction
from random import Random

import pytest

from conicring import (
    BrauerClass,
    ConicProduct,
    Place,
    QuadExtElem,
    RingElement,
    Term,
    brauer_class,
    brauer_product,
    canonical_of_product,
    class_add,
    from_conic_product,
    hilbert_symbol,
    new_conic,
    phi_forward,
    power_coefficient_check,
    reduce_generators,
    replay,
    span,
)

from oracles import local_solvable
from test_cli import GOLDEN_CASES, run_cli, DATA

SEED = 20260809


def _report(number: int, name: str, failures: list) -> None:
    status = "PASS" if not failures else f"FAIL ({len(failures)} failures)"
    print(f"criterion {number:2d} [{name}]: {status}")
    assert not failures, failures[:5]


def random_rational(rng: Random, height: int, nonzero: bool = False) -> Fraction:
    num = rng.randint(-height, height)
    while nonzero and num == 0:
        num = rng.randint(-height, height)
    return Fraction(num, rng.randint(1, height))


def random_conic(rng: Random, height: int = 100):
    return new_conic(
        random_rational(rng, height, nonzero=True),
        random_rational(rng, height, nonzero=True),
    )


def random_nonsplit_conic(rng: Random, height: int = 20):
    while True:
        conic = random_conic(rng, height)
        if not brauer_class(conic).is_trivial:
            return conic


PLACE_POOL_6 = [Place.finite(p) for p in (2, 3, 5, 7, 11)] + [Place.real()]


def random_even_class(rng: Random, pool=None) -> BrauerClass:
    pool = pool or PLACE_POOL_6
    size = rng.choice([0, 2, 2, 4])
    return BrauerClass(rng.sample(pool, size))


def random_ring_element(rng: Random, max_terms: int) -> RingElement:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        group = span([random_even_class(rng) for _ in range(rng.randint(0, 2))])
        power = rng.randint(0, 3)
        coeff = rng.choice([-3, -2, -1, 1, 2, 3])
        terms[Term(group, power)] = coeff
    return RingElement(terms)


def test_criterion_1_reciprocity_parity():
    rng = Random(SEED)
    failures = []
    for _ in range(1000):
        conic = random_conic(rng, height=100)
        if len(brauer_class(conic).places) % 2:
            failures.append(conic)
    _report(1, "reciprocity parity", failures)


def test_criterion_2_local_oracle_agreement():
    values = [1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10]
    places = [Place.finite(p) for p in (2, 3, 5, 7)] + [Place.real()]
    failures = []
    for a in values:
        for b in values:
            for v in places:
                expected = 1 if local_solvable(a, b, v) else -1
                if hilbert_symbol(a, b, v) != expected:
                    failures.append((a, b, str(v)))
    _report(2, "local oracle agreement", failures)


def test_criterion_3_phi_identity():
    rng = Random(SEED)
    failures = []
    for _ in range(1000):
        a = random_rational(rng, 9, nonzero=True)
        x = tuple(random_rational(rng, 9) for _ in range(3))
        y = tuple(random_rational(rng, 9) for _ in range(3))
        z1, z2, _ = phi_forward(a, x, y)
        lhs = z1 * z1 - a * (z2 * z2)
        rhs = (x[0] ** 2 - a * x[1] ** 2) * (y[0] ** 2 - a * y[1] ** 2)
        if lhs != QuadExtElem(1, rhs):
            failures.append((a, x, y))
    _report(3, "phi multiplicative identity", failures)


def test_criterion_4_product_additivity():
    rng = Random(SEED)
    failures = []
    for _ in range(200):
        c1 = random_nonsplit_conic(rng)
        c2 = random_nonsplit_conic(rng)
        product = brauer_product(c1, c2)
        want = class_add(brauer_class(c1), brauer_class(c2))
        if brauer_class(product) != want:
            failures.append((c1, c2))
    for _ in range(50):
        conic = random_conic(rng, height=20)
        if not brauer_class(brauer_product(conic, conic)).is_trivial:
            failures.append(("square", conic))
    _report(4, "brauer product additivity", failures)


def test_criterion_5_zero_divisor():
    rng = Random(SEED)
    conics = set()
    while len(conics) < 20:
        conics.add(random_nonsplit_conic(rng))
    lefschetz = RingElement.lefschetz(1)
    failures = []
    for conic in sorted(conics, key=lambda c: (abs(c.a), abs(c.b), c.a, c.b)):
        c = from_conic_product(ConicProduct([conic]))
        if not ((lefschetz - c) * c).is_zero:
            failures.append(("not annihilated", conic))
        if (lefschetz - c).is_zero:
            failures.append(("difference vanished", conic))
    _report(5, "zero divisor identity", failures)


POOL_CLASSES = [
    BrauerClass(),
    BrauerClass([Place.finite(2), Place.real()]),
    BrauerClass([Place.finite(2), Place.finite(3)]),
    BrauerClass([Place.finite(3), Place.real()]),
    BrauerClass([Place.finite(2), Place.finite(5)]),
]
POOL_CONICS = [
    new_conic(1, 1), new_conic(2, 7),
    new_conic(-1, -1), new_conic(-1, -2),
    new_conic(-1, 3), new_conic(3, -1),
    new_conic(-1, -3), new_conic(-3, -1),
    new_conic(2, 5), new_conic(5, 2),
]


def test_criterion_6_two_route_oracle():
    assert {brauer_class(c) for c in POOL_CONICS} == set(POOL_CLASSES)
    rng = Random(SEED)
    failures = []
    for _ in range(100):
        factors = [rng.choice(POOL_CONICS) for _ in range(rng.randint(0, 6))]
        direct = canonical_of_product(ConicProduct(factors))

        classes = [brauer_class(c) for c in factors]
        ops, basis = reduce_generators(classes)
        rewritten = list(factors)
        for op in ops:
            rewritten[op.j] = brauer_product(rewritten[op.i], rewritten[op.j])
        final = [brauer_class(c) for c in rewritten]
        expected = list(basis.basis) + [BrauerClass()] * (len(factors) - basis.dim)
        route = (sum(1 for cls in final if cls.is_trivial), span(final))
        if final != expected or route != direct:
            failures.append(factors)
    _report(6, "two-route normal form", failures)


def test_criterion_7_power_law():
    rng = Random(SEED)
    failures = []
    checked = 0
    while checked < 50:
        x = random_ring_element(rng, max_terms=4)
        if x.is_zero:
            continue
        checked += 1
        for s in (2, 3):
            if not power_coefficient_check(x, s):
                failures.append((x, s))
            if (x ** s).is_zero:
                failures.append(("nilpotent", x, s))
    _report(7, "power coefficient law", failures)


def test_criterion_8_witness_replay():
    rng = Random(SEED)
    failures = []
    for _ in range(100):
        classes = [random_even_class(rng) for _ in range(rng.randint(0, 8))]
        ops, basis = reduce_generators(classes)
        target = span(classes)
        if basis != target:
            failures.append(("basis mismatch", classes))
            continue
        state = list(classes)
        ok = True
        for op in ops:
            state = replay(state, [op])
            if span(state) != target:
                ok = False
                break
        expected = list(basis.basis) + [BrauerClass()] * (len(classes) - basis.dim)
        if not ok or state != expected:
            failures.append(classes)
    _report(8, "transvection witness replay", failures)


def test_criterion_9_ring_laws():
    rng = Random(SEED)
    failures = []
    one = RingElement.one()
    for _ in range(200):
        x = random_ring_element(rng, max_terms=3)
        y = random_ring_element(rng, max_terms=3)
        z = random_ring_element(rng, max_terms=3)
        checks = [
            x * y == y * x,
            (x * y) * z == x * (y * z),
            (x + y) + z == x + (y + z),
            x * (y + z) == x * y + x * z,
            x * one == x,
        ]
        if not all(checks):
            failures.append((x, y, z))
    _report(9, "ring laws", failures)


def test_criterion_10_cli_determinism_and_exit_codes():
    import subprocess
    import sys

    failures = []
    for args, golden in GOLDEN_CASES:
        out = run_cli(*args)
        if out != (DATA / golden).read_bytes():
            failures.append(("golden", args))
        if out != run_cli(*args):
            failures.append(("nondeterministic", args))
    malformed = subprocess.run(
        [sys.executable, "-m", "conicring", "classify", "malformed_zero.txt"],
        capture_output=True, cwd=DATA,
    )
    if malformed.returncode != 1:
        failures.append(("exit code malformed", malformed.returncode))
    bounded = subprocess.run(
        [sys.executable, "-m", "conicring", "classify", "--factor-bound", "10",
         "conics_bigprime.txt"],
        capture_output=True, cwd=DATA,
    )
    if bounded.returncode != 2:
        failures.append(("exit code resource", bounded.returncode))
    _report(10, "cli determinism and exit codes", failures)
