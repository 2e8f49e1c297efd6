"""Heisenberg and Virasoro operators on ``y*C[x_1, x_2, ...]``.

Vectors are stored as their ``C[x_1, x_2, ...]`` part (a :class:`MultiPoly`
over the ``x_j`` family); the single lowest-weight factor ``y`` is implicit.
The mode operators are

    h(n) = x_(-n) / (-n-1)!   (n < 0)     [multiplication]
    h(0) = identity                        [y d/dy on y-degree 1]
    h(n) = n! d/dx_n          (n > 0)

with ``[h(m), h(n)] = m delta_(m+n,0)``, and the quadratic sums

    L(m) = (1/2) sum_k h(m-k) h(k)                (m != 0)
    L(0) = (1/2) sum_k h(-|k|) h(|k|)             (normal ordered)

realize the Virasoro relations at central charge 1.  For a fixed monomial
only finitely many k contribute: annihilation indices must match a variable
that is present, and double-creation pairs require ``m <= k <= 0``; the sum
below enumerates exactly that index set.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

from .errors import IndexOutOfRange, NotHomogeneous, OrderTooSmall, UnsupportedVariable
from .polyring import MultiPoly
from .series import TruncatedSeries
from .umbral import attached_basis_expansion, attached_generating_series
from .univar import UnivarPoly

Scalar = Union[int, Fraction]

FockPoly = MultiPoly  # x_j-monomials only; the y factor is implicit

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


def _check_fock(p: MultiPoly) -> None:
    for ys, xs, px, pw in p.terms:
        if ys or px or pw:
            raise UnsupportedVariable(
                "Fock vectors are polynomials in the x_j family only"
            )


def lowest_weight_vector() -> FockPoly:
    """The vector ``y`` itself (stored as the constant polynomial 1)."""
    return MultiPoly.one()


def heisenberg(n: int, p: FockPoly) -> FockPoly:
    """Apply the mode ``h(n)``."""
    _check_fock(p)
    if n == 0:
        return p
    if n < 0:
        factor = MultiPoly.x(-n) * Fraction(1, math.factorial(-n - 1))
        return p * factor
    scale = Fraction(math.factorial(n))
    out: dict = {}
    for (ys, xs, px, pw), c in p.terms.items():
        exps = dict(xs)
        e = exps.get(n, 0)
        if not e:
            continue
        if e == 1:
            exps.pop(n)
        else:
            exps[n] = e - 1
        key = ((), tuple(sorted(exps.items())), 0, 0)
        s = out.get(key, _ZERO) + c * e * scale
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return MultiPoly(out)


def _virasoro_monomial(m: int, key, coeff: Fraction) -> FockPoly:
    mono = MultiPoly({key: coeff})
    indices = {j for j, _ in key[1]}
    if m == 0:
        total = mono * _HALF
        for k in indices:
            total = total + heisenberg(-k, heisenberg(k, mono))
        return total
    candidates = set(indices)
    candidates.update(m - j for j in indices)
    if m < 0:
        candidates.update(range(m, 1))
    total = MultiPoly.zero()
    for k in sorted(candidates):
        total = total + heisenberg(m - k, heisenberg(k, mono))
    return total * _HALF


def virasoro(m: int, p: FockPoly) -> FockPoly:
    """Apply the quadratic mode ``L(m)``; lowers weight by ``m``."""
    _check_fock(p)
    out = MultiPoly.zero()
    for key, c in p.terms.items():
        out = out + _virasoro_monomial(m, key, c)
    return out


def weight(p: FockPoly) -> Fraction:
    """The ``L(0)`` eigenvalue ``1/2 + sum j * e_j`` of a homogeneous vector."""
    _check_fock(p)
    if not p:
        raise NotHomogeneous("the zero vector has no weight")
    weights = {
        _HALF + sum(j * e for j, e in xs) for (ys, xs, px, pw) in p.terms
    }
    if len(weights) != 1:
        raise NotHomogeneous(f"mixed weights {sorted(weights)}")
    return weights.pop()


def fock_derivation(p: FockPoly) -> FockPoly:
    """The derivation ``x_1 + sum_k x_(k+1) d/dx_k`` (the image of ``y`` ships
    along implicitly); must coincide with ``L(-1)``."""
    _check_fock(p)
    out = p * MultiPoly.x(1)
    for (ys, xs, px, pw), c in p.terms.items():
        for j, e in xs:
            exps = dict(xs)
            if e == 1:
                exps.pop(j)
            else:
                exps[j] = e - 1
            exps[j + 1] = exps.get(j + 1, 0) + 1
            key = ((), tuple(sorted(exps.items())), 0, 0)
            out = out + MultiPoly({key: c * e})
    return out


def lowering_powers(n: int) -> list[FockPoly]:
    """The vectors ``[y, L(-1) y, ..., L(-1)^n y]``."""
    out = [lowest_weight_vector()]
    for _ in range(n):
        out.append(virasoro(-1, out[-1]))
    return out


def _partitions(total: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for j in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - j, j):
            yield (j,) + rest


def basis_monomials(max_degree: int) -> list[FockPoly]:
    """All monomials with ``sum j * e_j <= max_degree`` (weight up to
    ``max_degree + 1/2``), in a fixed deterministic order."""
    out = []
    for total in range(max_degree + 1):
        for part in _partitions(total, total):
            exps: dict = {}
            for j in part:
                exps[j] = exps.get(j, 0) + 1
            key = ((), tuple(sorted(exps.items())), 0, 0)
            out.append(MultiPoly({key: Fraction(1)}))
    return out


# -- ladder coefficients -----------------------------------------------------


@lru_cache(maxsize=None)
def ladder_value(m: int, n: int) -> Fraction:
    """``f_m(n)`` from the recurrence ``f_m(n) = f_m(n-1) + (m+1) f_(m-1)(n-1)``
    with boundary ``f_(-1)(n) = 1``, ``f_0(0) = 1/2``, ``f_m(0) = 0`` for m >= 1."""
    if m < -1:
        raise IndexOutOfRange(f"ladder row index must be >= -1, got {m}")
    if n < 0:
        raise IndexOutOfRange(f"ladder column index must be >= 0, got {n}")
    if m == -1:
        return Fraction(1)
    if n == 0:
        return _HALF if m == 0 else _ZERO
    return ladder_value(m, n - 1) + (m + 1) * ladder_value(m - 1, n - 1)


def ladder_closed(m: int, n: Scalar) -> Fraction:
    """Closed polynomial form ``(1/2) n (n-1) ... (n-m+1) (2n - m + 1)``.

    Rational arguments are allowed; the empty product covers ``m = 0``.
    """
    if m < -1:
        raise IndexOutOfRange(f"ladder row index must be >= -1, got {m}")
    if m == -1:
        return Fraction(1)
    z = Fraction(n)
    prod = Fraction(1)
    for i in range(m):
        prod *= z - i
    return prod * (2 * z - m + 1) / 2


class FTable:
    """The rectangle of ladder values ``f_m(n)`` for ``-1 <= m <= max_m``,
    ``0 <= n <= max_n``, built from the recurrence."""

    def __init__(self, max_m: int, max_n: int):
        if max_m < -1 or max_n < 0:
            raise IndexOutOfRange("table bounds must cover m >= -1, n >= 0")
        self.max_m = max_m
        self.max_n = max_n
        self.values = {
            (m, n): ladder_value(m, n)
            for m in range(-1, max_m + 1)
            for n in range(max_n + 1)
        }

    def value(self, m: int, n: int) -> Fraction:
        if not (-1 <= m <= self.max_m and 0 <= n <= self.max_n):
            raise IndexOutOfRange(f"({m}, {n}) outside the table")
        return self.values[(m, n)]

    def rows(self) -> Iterator[tuple[int, list[Fraction]]]:
        for m in range(-1, self.max_m + 1):
            yield m, [self.values[(m, n)] for n in range(self.max_n + 1)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m"] + [str(n) for n in range(self.max_n + 1)])
        for m, row in self.rows():
            writer.writerow([str(m)] + [str(v) for v in row])
        return buf.getvalue()

    def to_json(self) -> str:
        payload = {
            "max_m": self.max_m,
            "max_n": self.max_n,
            "rows": {str(m): [str(v) for v in row] for m, row in self.rows()},
        }
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"


# -- generalized attached shifts ---------------------------------------------


def mode_shift(b: TruncatedSeries, m: int, p: UnivarPoly) -> UnivarPoly:
    """The level-``m`` attached shift: linear extension of
    ``B_n -> f_m(n) B_(n-m)`` (``B_k = 0`` for ``k < 0``).

    ``m = -1`` reproduces the classical umbral shift.
    """
    if m < -1:
        raise IndexOutOfRange(f"mode index must be >= -1, got {m}")
    if not p:
        return UnivarPoly.zero()
    d = p.degree
    top = max(d, d - m)
    if b.order < top:
        raise OrderTooSmall(f"need series order {top}, have {b.order}")
    coords = attached_basis_expansion(b, p)
    gs = attached_generating_series(b, top)
    out = UnivarPoly.zero()
    for n, c in enumerate(coords):
        if not c:
            continue
        k = n - m
        if k < 0:
            continue
        f = ladder_value(m, n)
        if f:
            out = out + gs.coeff(k) * (c * f * Fraction(math.factorial(k)))
    return out


# -- the referee's Sheffer pair ----------------------------------------------


def binom_general(z: Scalar, k: int) -> Fraction:
    """Generalized binomial ``C(z, k)`` via a falling factorial; 0 for k < 0."""
    if k < 0:
        return _ZERO
    zq = Fraction(z)
    prod = Fraction(1)
    for i in range(k):
        prod *= zq - i
    return prod / math.factorial(k)


def sheffer_pair(n: int, xval: Scalar) -> tuple[Fraction, Fraction]:
    """``(t_n(x), s_n(x))`` evaluated at a rational point.

    ``t_n(x) = f_(n-1)(x+n)`` comes from the ladder closed form and
    ``s_n(x) = C(x+n+1, n) - (1/2) C(x+n, n-1)`` from generalized binomials;
    the two are tied by ``s_n = t_n / n!`` and the recursion
    ``s_n(x) = s_(n-1)(x) + s_n(x-1)``.
    """
    if n < 0:
        raise IndexOutOfRange("sheffer index must be >= 0")
    x = Fraction(xval)
    t = ladder_closed(n - 1, x + n)
    s = binom_general(x + n + 1, n) - _HALF * binom_general(x + n, n - 1)
    return t, s


def heuristic_bracket_cells(
    max_l: int, max_m: int, max_n: int
) -> list[tuple[int, int, int, bool]]:
    """Evaluate ``(l-m) f_(l+m)(n) = f_l(n-m) f_m(n) - f_m(n-l) f_l(n)``
    cell by cell through the closed forms.

    The commutator derivation only covers ``l + m <= n``; outside that range
    the identity is a conjecture and callers get the raw per-cell outcomes.
    """
    cells = []
    for l in range(-1, max_l + 1):
        for m in range(-1, max_m + 1):
            if l + m < -1:
                continue
            for n in range(max_n + 1):
                lhs = (l - m) * ladder_closed(l + m, n)
                rhs = ladder_closed(l, n - m) * ladder_closed(m, n) - ladder_closed(
                    m, n - l
                ) * ladder_closed(l, n)
                cells.append((l, m, n, lhs == rhs))
    return cells
