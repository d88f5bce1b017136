"""Truncated Laurent series with exact rational coefficients.

A series is known modulo t^N for a finite precision N; coefficients at or
beyond N are unknown, not zero.  Coefficients are exact rationals (kept as
Python ints whenever the denominator is 1, which is the common case for
sampled data).  Values are immutable; all arithmetic returns new objects.

Text form: a sum of ``c*t^e`` terms plus a trailing ``O(t^N)`` marker, e.g.
``3/2*t^-1 + 1 - 2*t^3 + O(t^5)``.  See :func:`parse` / ``str()`` for the
exact grammar; parse(str(s)) round-trips bit-exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

Coeff = Union[int, Fraction]


def _norm(c: Coeff) -> Coeff:
    """Keep exact rationals as ints when possible (cheaper arithmetic)."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


@dataclass(frozen=True)
class AtLeast:
    """Valuation marker: all known coefficients vanish, so val >= bound.

    Returned instead of a number when the true valuation is not observable
    at the current precision.
    """

    bound: int

    def __repr__(self) -> str:
        return f">= {self.bound}"


Valuation = Union[int, AtLeast]


def val_at_least(v: Valuation, bound: int):
    """Three-valued check of ``v >= bound``: True, False, or None (unknown)."""
    if isinstance(v, AtLeast):
        return True if v.bound >= bound else None
    return v >= bound


class PrecisionError(ValueError):
    """A coefficient beyond the known precision was requested."""


class TruncatedLaurentSeries:
    __slots__ = ("_coeffs", "precision")

    def __init__(self, coeffs: Mapping[int, Coeff], precision: int):
        clean = {}
        for e, c in coeffs.items():
            if e >= precision:
                continue
            c = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
            if c:
                clean[e] = c
        object.__setattr__(self, "_coeffs", clean)
        object.__setattr__(self, "precision", precision)

    @classmethod
    def _make(cls, coeffs: dict, precision: int) -> "TruncatedLaurentSeries":
        # fast path for internal arithmetic: exponents already < precision
        self = object.__new__(cls)
        object.__setattr__(self, "_coeffs", {e: _norm(c) for e, c in coeffs.items() if c})
        object.__setattr__(self, "precision", precision)
        return self

    @classmethod
    def zero(cls, precision: int) -> "TruncatedLaurentSeries":
        return cls._make({}, precision)

    @classmethod
    def constant(cls, c: Coeff, precision: int) -> "TruncatedLaurentSeries":
        return cls({0: c}, precision)

    @classmethod
    def t_power(cls, e: int, precision: int, c: Coeff = 1) -> "TruncatedLaurentSeries":
        return cls({e: c}, precision)

    # -- observers ---------------------------------------------------------

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedLaurentSeries is immutable")

    @property
    def low_bound(self) -> int:
        return min(self._coeffs) if self._coeffs else self.precision

    def items(self) -> Iterator[tuple[int, Coeff]]:
        return iter(sorted(self._coeffs.items()))

    def coefficient(self, e: int) -> Coeff:
        if e >= self.precision:
            raise PrecisionError(f"coefficient of t^{e} unknown at precision {self.precision}")
        return self._coeffs.get(e, 0)

    def is_zero(self) -> bool:
        """All *known* coefficients vanish."""
        return not self._coeffs

    def valuation(self) -> Valuation:
        if not self._coeffs:
            return AtLeast(self.precision)
        return min(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return self.precision == other.precision and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.precision, tuple(sorted(self._coeffs.items()))))

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "TruncatedLaurentSeries":
        return TruncatedLaurentSeries._make({e: -c for e, c in self._coeffs.items()}, self.precision)

    def __add__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        prec = min(self.precision, other.precision)
        out = {e: c for e, c in self._coeffs.items() if e < prec}
        for e, c in other._coeffs.items():
            if e < prec:
                s = out.get(e, 0) + c
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return TruncatedLaurentSeries._make(out, prec)

    def __sub__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return self.__add__(-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return TruncatedLaurentSeries._make({}, self.precision)
            return TruncatedLaurentSeries._make(
                {e: c * other for e, c in self._coeffs.items()}, self.precision
            )
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        va = min(a) if a else self.precision
        vb = min(b) if b else other.precision
        prec = min(self.precision + vb, other.precision + va)
        out: dict = {}
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                if e < prec:
                    out[e] = get(e, 0) + c1 * c2
        return TruncatedLaurentSeries._make(out, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedLaurentSeries._make(
                {e: _norm(Fraction(c) / other) for e, c in self._coeffs.items()}, self.precision
            )
        return NotImplemented

    def __pow__(self, k: int) -> "TruncatedLaurentSeries":
        if k < 0:
            raise ValueError("negative powers not supported")
        result = TruncatedLaurentSeries.constant(1, self.precision + max(0, -self.low_bound) * k)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> "TruncatedLaurentSeries":
        """Multiply by t^k (exact: shifts exponents and precision)."""
        return TruncatedLaurentSeries._make(
            {e + k: c for e, c in self._coeffs.items()}, self.precision + k
        )

    def truncate(self, precision: int) -> "TruncatedLaurentSeries":
        """Forget coefficients at or beyond the given (lower) precision."""
        prec = min(precision, self.precision)
        return TruncatedLaurentSeries._make(
            {e: c for e, c in self._coeffs.items() if e < prec}, prec
        )

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return f"O(t^{self.precision})"
        parts = []
        for i, (e, c) in enumerate(self.items()):
            neg = c < 0
            ac = -c if neg else c
            if e == 0:
                body = str(ac)
            else:
                tpart = "t" if e == 1 else f"t^{e}"
                body = tpart if ac == 1 else f"{ac}*{tpart}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        parts.append(f"+ O(t^{self.precision})")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"TruncatedLaurentSeries({self})"


_TERM_RE = re.compile(
    r"""^(?:
        (?P<coeff>\d+(?:/\d+)?)(?:\*(?P<tp1>t(?:\^(?P<e1>-?\d+))?))?
      | (?P<tp2>t(?:\^(?P<e2>-?\d+))?)
    )$""",
    re.VERBOSE,
)


def parse(text: str) -> TruncatedLaurentSeries:
    """Parse the canonical text form produced by ``str()``."""
    text = text.strip()
    m = re.search(r"O\(t\^(-?\d+)\)\s*$", text)
    if m is None:
        raise ValueError(f"missing O(t^N) precision marker in {text!r}")
    precision = int(m.group(1))
    body = text[: m.start()].strip()
    body = body.rstrip("+").strip()
    coeffs: dict[int, Coeff] = {}
    if body:
        # terms are separated by spaced +/- signs; a leading minus (no
        # space) negates the first term, so exponent minuses never split
        first_sign = "+"
        if body.startswith("-"):
            first_sign = "-"
            body = body[1:].lstrip()
        tokens = [first_sign] + re.split(r"\s+([+-])\s+", body)
        if len(tokens) % 2 != 0:
            raise ValueError(f"malformed series {text!r}")
        for sign, term in zip(tokens[::2], tokens[1::2]):
            tm = _TERM_RE.match(term.strip())
            if tm is None:
                raise ValueError(f"malformed term {term!r} in {text!r}")
            if tm.group("coeff") is not None:
                c: Coeff = _norm(Fraction(tm.group("coeff")))
                if tm.group("tp1") is not None:
                    e = int(tm.group("e1")) if tm.group("e1") is not None else 1
                else:
                    e = 0
            else:
                c = 1
                e = int(tm.group("e2")) if tm.group("e2") is not None else 1
            if sign == "-":
                c = -c
            coeffs[e] = coeffs.get(e, 0) + c
    return TruncatedLaurentSeries(coeffs, precision)
