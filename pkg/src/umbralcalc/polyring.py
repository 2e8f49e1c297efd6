"""The sparse ring ``C[..., y_-1, y_0, y_1, ..., x_1, x_2, ...]``.

Monomials may additionally carry the plain variables ``x`` and ``w``,
which only appear as images of the substitution maps.  The ring exists to
host the derivation ``D`` with

    D y_i = y_(i+1) x_1        (i in Z)
    D x_j = x_(j+1)            (j >= 1)

whose exponential ``e^(wD)`` produces the higher-derivative expansion of a
generic composite, together with the substitution homomorphisms that
specialize the generic symbols to the coefficients of concrete series.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Optional, Union

from .errors import IndexOutOfRange, NotDeltaSeries, OrderTooSmall, UnsupportedVariable
from .genseries import GenSeries
from .series import TruncatedSeries
from .univar import UnivarPoly

Scalar = Union[int, Fraction]

# Lowest permitted y-index; anti-derivative identities need y_-1, the margin
# below that is headroom, not silent truncation.
Y_INDEX_FLOOR = -4

_ZERO = Fraction(0)

# A monomial key is (ys, xs, px, pw): sorted ((index, exp), ...) tuples for
# the y- and x-families plus plain-variable exponents.
_EMPTY_KEY = ((), (), 0, 0)


def _merge(exps: tuple, index: int, delta: int) -> tuple:
    """Add ``delta`` to the exponent of ``index`` in a sorted exponent tuple."""
    out = dict(exps)
    e = out.get(index, 0) + delta
    if e < 0:
        raise ValueError("negative exponent")
    if e:
        out[index] = e
    else:
        out.pop(index, None)
    return tuple(sorted(out.items()))


def _key_mul(k1, k2):
    ys1, xs1, px1, pw1 = k1
    ys2, xs2, px2, pw2 = k2
    ys = ys1
    for i, e in ys2:
        ys = _merge(ys, i, e)
    xs = xs1
    for j, e in xs2:
        xs = _merge(xs, j, e)
    return (ys, xs, px1 + px2, pw1 + pw2)


class MultiPoly:
    """Finitely supported rational combination of monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping] = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({_EMPTY_KEY: Fraction(1)})

    @classmethod
    def const(cls, value: Scalar) -> "MultiPoly":
        return cls({_EMPTY_KEY: Fraction(value)})

    @classmethod
    def y(cls, i: int, floor: Optional[int] = None) -> "MultiPoly":
        limit = Y_INDEX_FLOOR if floor is None else floor
        if i < limit:
            raise IndexOutOfRange(f"y-index {i} below floor {limit}")
        return cls({(((i, 1),), (), 0, 0): Fraction(1)})

    @classmethod
    def x(cls, j: int) -> "MultiPoly":
        if j < 1:
            raise IndexOutOfRange(f"x-index must be >= 1, got {j}")
        return cls({((), ((j, 1),), 0, 0): Fraction(1)})

    @classmethod
    def plain_x(cls) -> "MultiPoly":
        return cls({((), (), 1, 0): Fraction(1)})

    @classmethod
    def plain_w(cls) -> "MultiPoly":
        return cls({((), (), 0, 1): Fraction(1)})

    # -- structure queries -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def y_indices(self) -> set:
        return {i for k in self.terms for i, _ in k[0]}

    def x_indices(self) -> set:
        return {j for k in self.terms for j, _ in k[1]}

    @property
    def uses_plain_x(self) -> bool:
        return any(k[2] for k in self.terms)

    @property
    def uses_plain_w(self) -> bool:
        return any(k[3] for k in self.terms)

    def coefficient(self, key) -> Fraction:
        return self.terms.get(key, _ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in rhs.terms.items():
            s = out.get(k, _ZERO) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return MultiPoly.zero()
            return MultiPoly({k: v * q for k, v in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = _key_mul(k1, k2)
                s = out.get(k, _ZERO) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers take nonnegative integer exponents")
        out = MultiPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (ys, xs, px, pw), c in self.sorted_terms():
            factors = []
            for i, e in ys:
                name = f"y{i}" if i >= 0 else f"y({i})"
                factors.append(name if e == 1 else f"{name}^{e}")
            for j, e in xs:
                factors.append(f"x{j}" if e == 1 else f"x{j}^{e}")
            if px:
                factors.append("x" if px == 1 else f"x^{px}")
            if pw:
                factors.append("w" if pw == 1 else f"w^{pw}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts)


def to_univar(p: MultiPoly) -> UnivarPoly:
    """Read a polynomial in the plain variable ``x`` off a MultiPoly."""
    coeffs: dict = {}
    for (ys, xs, px, pw), c in p.terms.items():
        if ys or xs or pw:
            raise UnsupportedVariable("not a polynomial in plain x alone")
        coeffs[px] = coeffs.get(px, _ZERO) + c
    if not coeffs:
        return UnivarPoly.zero()
    top = max(coeffs)
    return UnivarPoly([coeffs.get(n, _ZERO) for n in range(top + 1)])


# -- the derivation and its exponential -------------------------------------


def derivation(p: MultiPoly) -> MultiPoly:
    """Apply ``D`` (``D y_i = y_(i+1) x_1``, ``D x_j = x_(j+1)``) once."""
    acc: dict = {}

    def _bump(key, value):
        s = acc.get(key, _ZERO) + value
        if s:
            acc[key] = s
        else:
            acc.pop(key, None)

    for (ys, xs, px, pw), c in p.terms.items():
        if px or pw:
            raise UnsupportedVariable("derivation domain has no plain x or w")
        for i, e in ys:
            ys2 = _merge(_merge(ys, i, -1), i + 1, 1)
            xs2 = _merge(xs, 1, 1)
            _bump((ys2, xs2, 0, 0), c * e)
        for j, e in xs:
            xs2 = _merge(_merge(xs, j, -1), j + 1, 1)
            _bump((ys, xs2, 0, 0), c * e)
    return MultiPoly(acc)


def derivation_powers(p: MultiPoly, count: int) -> list[MultiPoly]:
    """The list ``[p, Dp, D^2 p, ..., D^count p]``."""
    out = [p]
    for _ in range(count):
        out.append(derivation(out[-1]))
    return out


def exp_derivation(p: MultiPoly, order: int) -> GenSeries:
    """Truncated expansion of ``e^(wD) p``: coefficient of ``w^k`` is ``D^k p / k!``."""
    powers = derivation_powers(p, order)
    return GenSeries(
        [q * Fraction(1, math.factorial(k)) for k, q in enumerate(powers)]
    )


# -- substitution homomorphisms ----------------------------------------------


def _require_delta(b: TruncatedSeries) -> None:
    if not b.is_delta:
        raise NotDeltaSeries("substitution series must be delta")


def specialize_x(p: MultiPoly, b: TruncatedSeries) -> MultiPoly:
    """Substitute ``x_j -> B_j * x`` (EGF coefficient of the delta series ``b``).

    Fixes every ``y_i``; the image lives in ``C[..., y_i, ..., x]``.
    """
    _require_delta(b)
    if p.uses_plain_x or p.uses_plain_w:
        raise UnsupportedVariable("domain of the x-substitution has no plain x or w")
    out: dict = {}
    for (ys, xs, px, pw), c in p.terms.items():
        mult = c
        degree = 0
        for j, e in xs:
            if j > b.order:
                raise OrderTooSmall(
                    f"x-index {j} exceeds series order {b.order}"
                )
            mult *= b.egf(j) ** e
            degree += e
        if not mult:
            continue
        key = (ys, (), degree, 0)
        s = out.get(key, _ZERO) + mult
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return MultiPoly(out)


def specialize_y(
    p: MultiPoly,
    a: TruncatedSeries,
    extension: Optional[Mapping[int, Scalar]] = None,
) -> MultiPoly:
    """Substitute ``y_i -> A_i`` (EGF coefficient of ``a``), fixing plain ``x``.

    Negative indices draw on the extended sequence (default all zero).
    """
    ext = extension or {}
    out: dict = {}
    for (ys, xs, px, pw), c in p.terms.items():
        if xs or pw:
            raise UnsupportedVariable("domain of the y-substitution has no x_j or w")
        mult = c
        for i, e in ys:
            if i < 0:
                value = Fraction(ext.get(i, 0))
            elif i > a.order:
                raise OrderTooSmall(f"y-index {i} exceeds series order {a.order}")
            else:
                value = a.egf(i)
            mult *= value ** e
        if not mult:
            continue
        key = ((), (), px, 0)
        s = out.get(key, _ZERO) + mult
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return MultiPoly(out)


def specialize_fock(p: MultiPoly, b: TruncatedSeries) -> MultiPoly:
    """Project a vector of ``y*C[x_1, x_2, ...]`` to ``C[x]``.

    The implicit lowest-weight factor ``y`` goes to 1 and ``x_j`` goes to
    ``B_j * x``; input monomials may only involve the ``x_j`` family.
    """
    _require_delta(b)
    out: dict = {}
    for (ys, xs, px, pw), c in p.terms.items():
        if ys or px or pw:
            raise UnsupportedVariable(
                "Fock projection expects monomials in the x_j family only"
            )
        mult = c
        degree = 0
        for j, e in xs:
            if j > b.order:
                raise OrderTooSmall(f"x-index {j} exceeds series order {b.order}")
            mult *= b.egf(j) ** e
            degree += e
        if not mult:
            continue
        key = ((), (), degree, 0)
        s = out.get(key, _ZERO) + mult
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return MultiPoly(out)


def generic_composite_series(order: int) -> GenSeries:
    """The nested-series expansion ``sum_n y_n (sum_m w^m x_m / m!)^n / n!``.

    Built directly from the closed form; ``exp_derivation`` of ``y_0`` must
    reproduce it coefficient by coefficient.
    """
    zero = MultiPoly.zero()
    inner = GenSeries(
        [zero]
        + [MultiPoly.x(m) * Fraction(1, math.factorial(m)) for m in range(1, order + 1)]
    )
    total = GenSeries.constant(MultiPoly.y(0), order)
    power = GenSeries.constant(MultiPoly.one(), order)
    for n in range(1, order + 1):
        power = power * inner
        total = total + power * (MultiPoly.y(n) * Fraction(1, math.factorial(n)))
    return total
