"""Polynomial and finite-field arithmetic over characteristic 2.

Everything downstream works with coefficients in R = Z/2Z[x_1, ..., x_m],
one variable per face of a diagram, or in its fraction field.  A polynomial
with GF(2) coefficients is just a set of monomials, so addition is symmetric
difference and no coefficient bookkeeping is needed.  Rational functions are
kept GCD-free: numerator and denominator grow under arithmetic and equality
is decided by cross multiplication, which stays cheap at the sizes the
symbolic tier ever sees.

For large diagrams the complexes are evaluated instead of manipulated
symbolically: each variable is sent to a random nonzero element of GF(2^k)
and ranks are computed numerically.  Specializing a nonzero rational
function can only kill minors, never create them, so evaluated ranks are
lower bounds that are exact with high probability (Schwartz-Zippel).
GF(2^k) elements are represented as plain ints; a GF2k instance carries the
arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

GF2kElem = int

__all__ = [
    "MultiPoly",
    "RationalFn",
    "GF2k",
    "GF2kElem",
    "EvaluationPoint",
    "ZeroDenominator",
    "area_sum",
    "random_point",
]


class ZeroDenominator(ArithmeticError):
    """A rational function was evaluated at a zero of its denominator."""


def _mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


class MultiPoly:
    """Multivariate polynomial over GF(2).

    Immutable.  `terms` is a frozenset of exponent tuples, each of length
    `nvars`; a term's coefficient is implicitly 1.  The zero polynomial has
    an empty term set.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Iterable[tuple[int, ...]] = ()):
        self.nvars = nvars
        self.terms = frozenset(terms)
        for t in self.terms:
            if len(t) != nvars:
                raise ValueError("exponent tuple length != nvars")

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, [(0,) * nvars])

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range")
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, [tuple(exp)])

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars}

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable universes differ")
        return MultiPoly(self.nvars, self.terms ^ other.terms)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable universes differ")
        acc: set[tuple[int, ...]] = set()
        for s in self.terms:
            for t in other.terms:
                m = _mono_mul(s, t)
                if m in acc:
                    acc.discard(m)
                else:
                    acc.add(m)
        return MultiPoly(self.nvars, acc)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.terms))

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(t) for t in self.terms)

    def evaluate(self, point: "EvaluationPoint") -> GF2kElem:
        if len(point.values) != self.nvars:
            raise ValueError("point dimension != nvars")
        field = point.field
        acc = 0
        for term in self.terms:
            prod = 1
            for i, e in enumerate(term):
                for _ in range(e):
                    prod = field.mul(prod, point.values[i])
            acc ^= prod
        return acc

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for term in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True):
            factors = []
            for i, e in enumerate(term):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            parts.append("*".join(factors) if factors else "1")
        return " + ".join(parts)

    __repr__ = __str__


def area_sum(faces: Iterable[int], nvars: int) -> MultiPoly:
    """Formal area of a region: the sum of the variables of its faces."""
    terms = []
    for f in faces:
        exp = [0] * nvars
        exp[f] = 1
        terms.append(tuple(exp))
    return MultiPoly(nvars, terms)


class RationalFn:
    """GCD-free fraction of two MultiPolys over GF(2).

    No cancellation is attempted; equality is cross multiplication.  The
    denominator is required to be nonzero as a polynomial.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        if num.nvars != den.nvars:
            raise ValueError("variable universes differ")
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "RationalFn":
        return cls(p, MultiPoly.one(p.nvars))

    @classmethod
    def zero(cls, nvars: int) -> "RationalFn":
        return cls(MultiPoly.zero(nvars), MultiPoly.one(nvars))

    @classmethod
    def one(cls, nvars: int) -> "RationalFn":
        return cls(MultiPoly.one(nvars), MultiPoly.one(nvars))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RationalFn") -> "RationalFn":
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.num, self.den * other.den)

    def inv(self) -> "RationalFn":
        if self.num.is_zero():
            raise ZeroDivisionError("inverting zero rational function")
        return RationalFn(self.den, self.num)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        raise TypeError("RationalFn is unhashable; equality is semantic")

    def evaluate(self, point: "EvaluationPoint") -> GF2kElem:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDenominator("denominator vanishes at evaluation point")
        n = self.num.evaluate(point)
        return point.field.mul(n, point.field.inv(d))

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


# Candidate moduli per extension degree.  Each is tried in order; table
# construction verifies that x generates the full multiplicative group, so a
# non-primitive candidate is skipped rather than silently miscomputing.
_MODULUS_CANDIDATES = {
    8: [0x11D, 0x12B, 0x11B],
    12: [0x1053, 0x1069],
    16: [0x1100B, 0x1002D, 0x100C5],
    24: [0x1000087, 0x100001B],
    32: [0x100400007, 0x1000000AF],
}


def _clmul(a: int, b: int) -> int:
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return acc


def _polymod(a: int, mod: int) -> int:
    mbits = mod.bit_length()
    while a.bit_length() >= mbits:
        a ^= mod << (a.bit_length() - mbits)
    return a


def _poly_powmod(base: int, exp: int, mod: int) -> int:
    result = 1
    base = _polymod(base, mod)
    while exp:
        if exp & 1:
            result = _polymod(_clmul(result, base), mod)
        base = _polymod(_clmul(base, base), mod)
        exp >>= 1
    return result


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _polymod(a, b)
    return a


def _is_irreducible(mod: int, k: int) -> bool:
    # x^(2^k) == x mod p, and x^(2^(k/q)) - x coprime to p for prime q | k.
    if _poly_powmod(2, 1 << k, mod) != 2:
        return False
    for q in {p for p in (2, 3, 5, 7, 11, 13) if k % p == 0}:
        t = _poly_powmod(2, 1 << (k // q), mod) ^ 2
        if _poly_gcd(mod, t) != 1:
            return False
    return True


_TABLE_LIMIT = 16  # log/exp tables up to 2^16 entries; beyond that, bitwise ops


class GF2k:
    """The field GF(2^k).  Elements are ints in [0, 2^k)."""

    def __init__(self, k: int):
        if k < 2:
            raise ValueError("need k >= 2")
        self.k = k
        self.order = 1 << k
        self.modulus = self._pick_modulus(k)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if k <= _TABLE_LIMIT:
            self._build_tables()

    @staticmethod
    def _pick_modulus(k: int) -> int:
        candidates = _MODULUS_CANDIDATES.get(k)
        if candidates is None:
            # Scan odd-weight polynomials; fine for the odd custom k.
            candidates = [(1 << k) | rest | 1 for rest in range(2, 1 << 8, 2)]
        for mod in candidates:
            if mod.bit_length() == k + 1 and _is_irreducible(mod, k):
                return mod
        raise ValueError(f"no irreducible modulus found for k={k}")

    def _build_tables(self) -> None:
        size = self.order - 1
        exp = [0] * (2 * size)
        log = [0] * self.order
        v = 1
        for i in range(size):
            exp[i] = v
            exp[i + size] = v
            log[v] = i
            v = _polymod(v << 1, self.modulus)
        if v != 1:
            # x is not primitive for this modulus; fall back to bitwise ops.
            return
        seen = len(set(exp[:size]))
        if seen != size:
            return
        self._exp = exp
        self._log = log

    # Addition is XOR and needs no method in hot loops, but a uniform
    # interface keeps generic elimination code readable.
    @staticmethod
    def add(a: GF2kElem, b: GF2kElem) -> GF2kElem:
        return a ^ b

    sub = add

    def mul(self, a: GF2kElem, b: GF2kElem) -> GF2kElem:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            assert self._log is not None
            return self._exp[self._log[a] + self._log[b]]
        return _polymod(_clmul(a, b), self.modulus)

    def inv(self, a: GF2kElem) -> GF2kElem:
        if a == 0:
            raise ZeroDivisionError("inverting 0 in GF(2^k)")
        if self._exp is not None:
            assert self._log is not None
            return self._exp[self.order - 1 - self._log[a]]
        return _poly_powmod(a, self.order - 2, self.modulus)

    def pow(self, a: GF2kElem, e: int) -> GF2kElem:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF2k) and other.k == self.k and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash((self.k, self.modulus))

    def __repr__(self) -> str:
        return f"GF(2^{self.k})"


@dataclass(frozen=True)
class EvaluationPoint:
    """An assignment of a nonzero field element to each variable."""

    field: GF2k
    values: tuple[GF2kElem, ...]
    seed: int | None = None

    def __post_init__(self):
        for v in self.values:
            if not 0 < v < self.field.order:
                raise ValueError("evaluation values must be nonzero field elements")


def random_point(nvars: int, field: GF2k, seed: int) -> EvaluationPoint:
    """Deterministic pseudo-random point with all coordinates nonzero."""
    rng = random.Random(seed)
    values = tuple(rng.randrange(1, field.order) for _ in range(nvars))
    return EvaluationPoint(field=field, values=values, seed=seed)


def poincare_str(betti: dict[int, int], var: str = "d") -> str:
    """Render {grading: rank} as a readable Laurent polynomial."""
    nonzero = {g: r for g, r in betti.items() if r}
    if not nonzero:
        return "0"
    parts = []
    for g in sorted(nonzero):
        r = nonzero[g]
        coeff = "" if r == 1 else str(r)
        if g == 0:
            parts.append(str(r))
        else:
            parts.append(f"{coeff}{var}^{g}")
    return " + ".join(parts)


def parse_poincare(text: str, var: str = "d") -> dict[int, int]:
    """Inverse of poincare_str, for tests and the comparison path."""
    text = text.strip()
    if text == "0":
        return {}
    result: dict[int, int] = {}
    for part in text.split("+"):
        part = part.strip()
        if var in part:
            coeff_s, _, exp_s = part.partition(var)
            coeff = int(coeff_s) if coeff_s else 1
            exp = int(exp_s.lstrip("^")) if exp_s else 1
        else:
            coeff, exp = int(part), 0
        result[exp] = result.get(exp, 0) + coeff
    return result
