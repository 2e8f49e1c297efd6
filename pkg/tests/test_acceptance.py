"""Acceptance criteria, one test per criterion, all exact (tolerance zero).

Each test prints a single pass/fail line (visible with ``pytest -s`` or by
running this file directly via ``python tests/test_acceptance.py``).
"""

import math
import time
from fractions import Fraction

from umbralcalc import cli
from umbralcalc.registry import bell_egf, run_check
from umbralcalc.sampling import random_delta, rng_for
from umbralcalc.series import exp_t
from umbralcalc.umbral import attached_polynomial, umbral_operator, umbral_shift
from umbralcalc.univar import UnivarPoly
from umbralcalc.virasoro import (
    ladder_value,
    lowest_weight_vector,
    sheffer_pair,
    virasoro,
)

F = Fraction

_SEED = 0


def _report(name, started, ok):
    status = "PASS" if ok else "FAIL"
    print(f"{status} {name} ({time.perf_counter() - started:.2f}s)")
    assert ok, name


def test_criterion_01_faa_higher_derivatives_of_composites():
    started = time.perf_counter()
    result = run_check("FAA", order=12, seed=_SEED)
    _report("1 FAA: 20 random pairs at order 12", started, result.passed)


def test_criterion_02_fdbu_nested_series_form():
    started = time.perf_counter()
    result = run_check("FDBU", order=10, seed=_SEED)
    _report("2 FDBU: expansion and 10 random substitutions", started, result.passed)


def test_criterion_03_bell_numbers():
    started = time.perf_counter()
    computed = [int(v) for v in bell_egf(15)]
    expected_head = [1, 1, 2, 5, 15, 52, 203, 877, 4140]
    oracle = [1]
    for n in range(15):
        oracle.append(sum(math.comb(n, k) * oracle[k] for k in range(n + 1)))
    ok = computed[:9] == expected_head and computed == oracle
    ok = ok and run_check("BELL", order=15, seed=_SEED).passed
    _report("3 Bell: EGF of exp(exp(t)-1) vs recurrence, n <= 15", started, ok)


def test_criterion_04_adjoint_identities():
    started = time.perf_counter()
    ok = all(
        run_check(tag, order=10, seed=_SEED).passed
        for tag in ("ADJ-MUL", "ADJ-DIFF", "ADJ-SUBST", "ADJ-SHIFT")
    )
    _report("4 adjoints: 20 random (A, B), degree <= 8, four kinds", started, ok)


def test_criterion_05_umbral_basis_laws():
    started = time.perf_counter()
    ok = run_check("UMBRAL-BASIS", order=10, seed=_SEED).passed
    bell = exp_t(12) - 1
    ok = ok and attached_polynomial(bell, 2) == UnivarPoly([0, 1, 1])
    rng = rng_for(_SEED, "acceptance-basis")
    for _ in range(5):
        b = random_delta(rng, 12)
        for n in range(11):
            bn = attached_polynomial(b, n)
            ok = ok and umbral_operator(b, UnivarPoly.monomial(n)) == bn
            ok = ok and umbral_shift(b, bn) == attached_polynomial(b, n + 1)
    _report("5 umbral basis laws: theta and shift, n <= 10, 5 random B", started, ok)


def test_criterion_06_virasoro_relations():
    started = time.perf_counter()
    ok = run_check("VIR-BRACKET", order=10, seed=_SEED).passed
    y = lowest_weight_vector()
    ok = ok and virasoro(0, y) == F(1, 2) * y
    ok = ok and run_check("HEIS", order=10, seed=_SEED).passed
    ok = ok and run_check("L0-WEIGHT", order=10, seed=_SEED).passed
    _report(
        "6 Virasoro: brackets with central term, |m|,|n| <= 4, weight <= 8+1/2",
        started,
        ok,
    )


def test_criterion_07_lowering_mode_is_derivation():
    started = time.perf_counter()
    result = run_check("LM1-EQ-D", order=10, seed=_SEED)
    _report("7 L(-1) = D on all monomials of weight <= 8 + 1/2", started, result.passed)


def test_criterion_08_ladder_table():
    started = time.perf_counter()
    ok = run_check("F-CLOSED", order=10, seed=_SEED).passed
    ok = ok and run_check("LADDER", order=10, seed=_SEED).passed
    ok = ok and run_check("RECSQUARE", order=10, seed=_SEED).passed
    for n in range(21):
        ok = ok and ladder_value(0, n) == n + F(1, 2)
        ok = ok and ladder_value(1, n) == n * n
        ok = ok and ladder_value(2, n) == F(n * (n - 1) * (2 * n - 1), 2)
    _report("8 f-table: closed form, spot rows, ladder, summation", started, ok)


def test_criterion_09_level_shift_generating_law():
    started = time.perf_counter()
    result = run_check("GENSHIFT-GF", order=10, seed=_SEED)
    _report("9 level shifts: w-operator law to order 10, m <= 4", started, result.passed)


def test_criterion_10_sheffer_pair():
    started = time.perf_counter()
    ok = run_check("SHEFFER-TS", order=10, seed=_SEED).passed
    t0, _ = sheffer_pair(0, F(-2))
    t1, _ = sheffer_pair(1, F(-2))
    ok = ok and t0 == 1 and t1 == F(-1, 2)
    _report("10 Sheffer pair: closed forms, recursion, boundaries", started, ok)


def test_criterion_11_deterministic_reports(tmp_path):
    started = time.perf_counter()
    first = tmp_path / "first.txt"
    second = tmp_path / "second.txt"
    code1 = cli.main(["verify", "--id", "ALL", "--seed", "7", "--output", str(first)])
    code2 = cli.main(["verify", "--id", "ALL", "--seed", "7", "--output", str(second)])
    ok = code1 == 0 and code2 == 0 and first.read_bytes() == second.read_bytes()
    _report("11 determinism: verify --id ALL --seed 7 twice, byte-identical", started, ok)


def main():
    import inspect
    import sys
    import tempfile
    from pathlib import Path

    failures = 0
    module = sys.modules[__name__]
    tests = sorted(
        (name, fn)
        for name, fn in inspect.getmembers(module, inspect.isfunction)
        if name.startswith("test_criterion")
    )
    for name, fn in tests:
        try:
            if "tmp_path" in inspect.signature(fn).parameters:
                with tempfile.TemporaryDirectory() as tmp:
                    fn(tmp_path=Path(tmp))
            else:
                fn()
        except AssertionError:
            failures += 1
    print("all criteria passed" if not failures else f"{failures} criteria FAILED")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
