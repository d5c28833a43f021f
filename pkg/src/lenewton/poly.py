"""Sparse polynomial germs with exact rational coefficients.

A germ lives in a fixed number ``n`` of variables ``z1 ... zn``; exponent
vectors are tuples of ``n`` non-negative ints.  The text grammar accepted by
:func:`parse_polynomial` is::

    poly   := [sign] term (sign term)*
    term   := coeff ['*'] factor ('*' factor)*  |  factor ('*' factor)*  |  coeff
    coeff  := INT ['/' INT]
    factor := 'z' INT ['^' INT]

Whitespace is insignificant.
"""
from __future__ import annotations

import warnings
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import InputError, PolynomialSyntaxError

ExponentVector = tuple


class Polynomial:
    """Immutable sparse polynomial vanishing at the origin."""

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Sequence[int], object]):
        if not isinstance(n, int) or n < 1:
            raise InputError(f"variable count must be a positive integer, got {n!r}")
        clean: dict[tuple[int, ...], Fraction] = {}
        for key, c in terms.items():
            alpha = tuple(int(a) for a in key)
            if len(alpha) != n:
                raise InputError(f"exponent {alpha} does not have length {n}")
            if any(a < 0 for a in alpha):
                raise InputError(f"negative exponent in {alpha}")
            c = Fraction(c)
            if c == 0:
                continue
            clean[alpha] = clean.get(alpha, Fraction(0)) + c
            if clean[alpha] == 0:
                del clean[alpha]
        if (0,) * n in clean:
            raise InputError("nonzero constant term: the germ must vanish at the origin")
        self._n = n
        self._terms = dict(sorted(clean.items(), key=_term_key))
        self._hash = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return MappingProxyType(self._terms)

    @property
    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(a) for a in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(a) for a in self._terms}) == 1

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Relabel variables so that the new ``z_k`` is the old ``z_{perm[k-1]}``."""
        perm = list(perm)
        if sorted(perm) != list(range(1, self._n + 1)):
            raise InputError(f"{perm} is not a permutation of 1..{self._n}")
        return Polynomial(
            self._n,
            {tuple(a[p - 1] for p in perm): c for a, c in self._terms.items()},
        )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.n != self._n:
            raise InputError("cannot add polynomials in different numbers of variables")
        terms = dict(self._terms)
        for a, c in other._terms.items():
            terms[a] = terms.get(a, Fraction(0)) + c
        return Polynomial(self._n, terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, tuple(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial(n={self._n}, {str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (alpha, c) in enumerate(self._terms.items()):
            mono = "*".join(
                f"z{k + 1}" if a == 1 else f"z{k + 1}^{a}"
                for k, a in enumerate(alpha) if a
            )
            mag = abs(c)
            body = mono if mag == 1 else f"{mag}*{mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)


def _term_key(item):
    alpha = item[0]
    return (sum(alpha), tuple(-a for a in alpha))


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.pos = 0

    def error(self, message, pos=None):
        return PolynomialSyntaxError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse(self) -> dict:
        terms: dict[tuple[int, ...], Fraction] = {}
        if not self.peek():
            raise self.error("empty polynomial")
        first = True
        while True:
            ch = self.peek()
            sign = 1
            if ch in "+-":
                sign = -1 if ch == "-" else 1
                self.pos += 1
            elif not first:
                if not ch:
                    break
                raise self.error(f"expected '+' or '-', found {ch!r}")
            start = self.pos
            coeff, alpha = self.term()
            if not any(alpha):
                raise InputError(
                    f"nonzero constant term at position {start}: "
                    "the germ must vanish at the origin"
                )
            terms[alpha] = terms.get(alpha, Fraction(0)) + sign * coeff
            first = False
            if not self.peek():
                break
        return terms

    def term(self):
        coeff = Fraction(1)
        alpha = [0] * self.n
        ch = self.peek()
        if ch.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.pos += 1
                den_pos = self.pos
                den = self.integer()
                if den == 0:
                    raise self.error("zero denominator", den_pos)
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                if self.peek() != "z":
                    raise self.error("expected a variable after '*'")
            elif ch != "z":
                return coeff, tuple(alpha)
        elif ch != "z":
            raise self.error(f"expected a term, found {ch!r}" if ch else "unexpected end of input")
        self.factor(alpha)
        while self.peek() == "*":
            self.pos += 1
            if self.peek() != "z":
                raise self.error("expected a variable after '*'")
            self.factor(alpha)
        return coeff, tuple(alpha)

    def factor(self, alpha):
        start = self.pos
        self.pos += 1  # the 'z'
        if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
            raise self.error("expected a variable index after 'z'")
        k = self.integer()
        if not 1 <= k <= self.n:
            raise InputError(
                f"variable z{k} at position {start} is out of range z1..z{self.n}"
            )
        e = 1
        if self.peek() == "^":
            self.pos += 1
            e_pos = self.pos
            e = self.integer()
            if e < 1:
                raise self.error("exponent must be at least 1", e_pos)
        alpha[k - 1] += e


def parse_polynomial(text: str, n: int) -> Polynomial:
    """Parse ``text`` into a :class:`Polynomial` in ``n`` variables.

    Like terms are combined and cancelled terms dropped.  Raises
    :class:`PolynomialSyntaxError` on malformed input and :class:`InputError`
    for out-of-range variables, a constant term or the zero polynomial.
    """
    if not isinstance(n, int) or n < 1:
        raise InputError(f"variable count must be a positive integer, got {n!r}")
    terms = _Parser(text, n).parse()
    f = Polynomial(n, terms)
    if f.is_zero():
        raise InputError("zero polynomial: all terms cancel")
    return f


def monomial(n: int, alpha: Sequence[int], c=1) -> Polynomial:
    return Polynomial(n, {tuple(alpha): c})


def augment(f: Polynomial, alphas: Sequence[int]) -> Polynomial:
    """Return ``f + z1^alphas[0] + ... + zq^alphas[q-1]``."""
    alphas = list(alphas)
    if len(alphas) > f.n:
        raise InputError(f"cannot augment {len(alphas)} variables of a germ in {f.n}")
    for p, a in enumerate(alphas, 1):
        if not isinstance(a, int) or a < 2:
            raise InputError(f"exponent for z{p} must be an integer >= 2, got {a!r}")
    terms = dict(f.terms)
    for p, a in enumerate(alphas):
        alpha = tuple(a if k == p else 0 for k in range(f.n))
        if alpha in terms:
            warnings.warn(
                f"f already contains z{p + 1}^{a}; coefficients are added",
                stacklevel=2,
            )
        terms[alpha] = terms.get(alpha, Fraction(0)) + 1
    return Polynomial(f.n, terms)


def pure_power_indices(f: Polynomial, d: int) -> set[int]:
    """Indices ``i <= d`` such that ``f`` has a term ``c z_i^a`` (a >= 1)."""
    if not 1 <= d <= f.n:
        raise InputError(f"d must lie in 1..{f.n}, got {d}")
    found = set()
    for alpha in f.terms:
        nz = [k for k, a in enumerate(alpha) if a]
        if len(nz) == 1 and nz[0] < d:
            found.add(nz[0] + 1)
    return found


def from_terms(n: int, items: Iterable[tuple[Sequence[int], object]]) -> Polynomial:
    terms: dict = {}
    for alpha, c in items:
        alpha = tuple(alpha)
        terms[alpha] = terms.get(alpha, Fraction(0)) + Fraction(c)
    return Polynomial(n, terms)
