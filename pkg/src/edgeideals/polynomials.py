"""Sparse multivariate polynomials with exact rational coefficients.

A term maps sorted (variable, exponent) pairs to a Fraction; zero
coefficients are never stored. This is the exchange format between graph
code, certificates and the Groebner engine (which converts to dense exponent
vectors internally).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

Term = tuple[tuple[str, int], ...]  # sorted by variable, exponents > 0


class PolynomialParseError(ValueError):
    pass


def _normalize_term(pairs: Iterable[tuple[str, int]]) -> Term:
    acc: dict[str, int] = {}
    for var, exp in pairs:
        if exp < 0:
            raise ValueError(f"negative exponent for {var!r}")
        if exp:
            acc[var] = acc.get(var, 0) + exp
    return tuple(sorted(acc.items()))


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Term, Fraction | int] | None = None):
        clean: dict[Term, Fraction] = {}
        if terms:
            for t, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[_normalize_term(t)] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # immutability
        raise AttributeError("Polynomial is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def constant(c) -> "Polynomial":
        return Polynomial({(): Fraction(c)})

    @staticmethod
    def variable(name: str) -> "Polynomial":
        return Polynomial({((name, 1),): Fraction(1)})

    @staticmethod
    def monomial(variables: Iterable[str], coeff=1) -> "Polynomial":
        """Product of the given variables (repetition raises the exponent)."""
        return Polynomial({_normalize_term((v, 1) for v in variables): Fraction(coeff)})

    @staticmethod
    def edge_monomial(u: str, v: str) -> "Polynomial":
        return Polynomial.monomial([u, v])

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> frozenset[str]:
        return frozenset(v for t in self.terms for v, _ in t)

    def support(self) -> list[Term]:
        return sorted(self.terms)

    def coefficient(self, term: Iterable[tuple[str, int]]) -> Fraction:
        return self.terms.get(_normalize_term(term), Fraction(0))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc = dict(self.terms)
        for t, c in other.terms.items():
            acc[t] = acc.get(t, Fraction(0)) + c
        return Polynomial(acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial({t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial({t: c * other for t, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc: dict[Term, Fraction] = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                t = _normalize_term(t1 + t2)
                acc[t] = acc.get(t, Fraction(0)) + c1 * c2
        return Polynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash(frozenset(self.terms.items()))
            )
        return self._hash

    # -- formatting -------------------------------------------------------

    @staticmethod
    def _term_str(t: Term) -> str:
        if not t:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in t)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        key = lambda tc: (-sum(e for _, e in tc[0]), tc[0])
        for i, (t, c) in enumerate(sorted(self.terms.items(), key=key)):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = self._term_str(t)
            if body == "1":
                chunk = str(mag)
            elif mag == 1:
                chunk = body
            else:
                chunk = f"{mag}*{body}"
            if i == 0:
                parts.append(chunk if sign == "+" else f"-{chunk}")
            else:
                parts.append(f" {sign} {chunk}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def parse_polynomial(text: str) -> Polynomial:
    """Parse e.g. ``"x1*y1 + x3*x4"`` or ``"x^2*y - 3*a*b"``.

    Terms are joined by + or -, a term is an optional rational coefficient
    and variable labels joined with ``*``; exponents use ``^`` or ``**``.
    """
    s = text.strip()
    if not s:
        raise PolynomialParseError("empty polynomial text")
    # split into signed term chunks
    chunks: list[tuple[int, str]] = []
    sign, buf = 1, []
    pending_sign = 1
    i = 0
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and buf and buf[-1] not in "*^(":
            chunks.append((pending_sign, "".join(buf)))
            buf = []
            pending_sign = 1 if ch == "+" else -1
        elif ch in "+-" and depth == 0 and not buf:
            pending_sign *= 1 if ch == "+" else -1
        else:
            buf.append(ch)
    if not buf:
        raise PolynomialParseError(f"dangling sign in {text!r}")
    chunks.append((pending_sign, "".join(buf)))

    total = Polynomial.zero()
    for sgn, chunk in chunks:
        total = total + _parse_term(chunk.strip(), sgn, text)
    return total


def _parse_term(chunk: str, sign: int, original: str) -> Polynomial:
    if not chunk:
        raise PolynomialParseError(f"empty term in {original!r}")
    coeff = Fraction(sign)
    pairs: list[tuple[str, int]] = []
    factors = re.split(r"\*(?!\*)", chunk.replace("**", "^"))
    for factor in factors:
        f = factor.strip()
        if not f:
            raise PolynomialParseError(f"empty factor in {original!r}")
        m = re.fullmatch(r"(\d+(?:/\d+)?)", f)
        if m:
            coeff *= Fraction(m.group(1))
            continue
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?", f)
        if not m:
            raise PolynomialParseError(f"bad factor {f!r} in {original!r}")
        var, exp = m.group(1), int(m.group(2) or 1)
        pairs.append((var, exp))
    return Polynomial({_normalize_term(pairs): coeff})
