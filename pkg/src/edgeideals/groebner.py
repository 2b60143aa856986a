"""Exact Groebner engine and the radical oracle for edge-ideal certificates.

Buchberger completion over the rationals with the coprime and chain pair
criteria and normal (lowest lcm degree first) selection. Radical membership
goes through three sound routes, cheapest first: a squarefree support test
for monomial ideals, a bounded power test against a reduced basis, and a
zero/one counterexample search; the adjoined-variable trick (test whether
1 lies in J + (1 - t*f)) is the complete fallback. A reduction-step guard
turns nontermination risk into an explicit error, never a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from edgeideals.graphs import Graph
from edgeideals.polynomials import Polynomial, Term

#: Default reduction-step budget for one Groebner computation.
DEFAULT_MAX_STEPS = 10**7

#: Radical-membership power test tries f^k for these k before falling back.
_POWER_SCHEDULE = (1, 2, 4, 8, 16, 32)

#: Zero/one counterexample search caps the number of assignments tried.
_POINT_SEARCH_CAP = 1 << 17


class GroebnerBudgetError(RuntimeError):
    """The step guard fired; the computation is indeterminate, not false."""


@dataclass(frozen=True)
class MonomialOrder:
    """Total monomial order: 'grevlex' (default) or 'lex' over a variable
    ranking (first variable ranks highest)."""

    variables: tuple[str, ...]
    kind: str = "grevlex"

    def __post_init__(self) -> None:
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variables in ranking")

    def key(self, expvec: tuple[int, ...]):
        if self.kind == "lex":
            return expvec
        return (sum(expvec), tuple(-e for e in reversed(expvec)))


def default_order(polys: Iterable[Polynomial], kind: str = "grevlex") -> MonomialOrder:
    """Sorted variable labels; internal labels (leading underscore) rank last."""
    vs: set[str] = set()
    for p in polys:
        vs |= p.variables()
    ranked = sorted(v for v in vs if not v.startswith("_")) + sorted(
        v for v in vs if v.startswith("_")
    )
    return MonomialOrder(tuple(ranked), kind)


# ---------------------------------------------------------------------------
# internal dense-exponent representation

_IPoly = dict  # dict[tuple[int, ...], Fraction]


def _to_internal(p: Polynomial, order: MonomialOrder) -> _IPoly:
    idx = {v: i for i, v in enumerate(order.variables)}
    n = len(order.variables)
    out: _IPoly = {}
    for term, coeff in p.terms.items():
        vec = [0] * n
        for var, exp in term:
            if var not in idx:
                raise ValueError(f"variable {var!r} missing from the order")
            vec[idx[var]] = exp
        out[tuple(vec)] = coeff
    return out


def _from_internal(p: _IPoly, order: MonomialOrder) -> Polynomial:
    terms: dict[Term, Fraction] = {}
    for vec, coeff in p.items():
        terms[tuple((order.variables[i], e) for i, e in enumerate(vec) if e)] = coeff
    return Polynomial(terms)


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def _mono_div(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps: int):
        self.left = steps

    def spend(self, n: int = 1) -> None:
        self.left -= n
        if self.left < 0:
            raise GroebnerBudgetError(
                "reduction-step budget exhausted; result indeterminate"
            )


def _leading(p: _IPoly, keyfn) -> tuple[tuple[int, ...], Fraction]:
    m = max(p, key=keyfn)
    return m, p[m]


def _normal_form(f: _IPoly, basis: list[tuple[tuple[int, ...], Fraction, _IPoly]],
                 keyfn, budget: _Budget) -> _IPoly:
    work = dict(f)
    remainder: _IPoly = {}
    while work:
        m = max(work, key=keyfn)
        c = work.pop(m)
        for lm, lc, g in basis:
            if _divides(lm, m):
                budget.spend()
                shift = _mono_div(m, lm)
                scale = c / lc
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    tm = _mono_mul(gm, shift)
                    cur = work.get(tm)
                    nv = (cur if cur is not None else Fraction(0)) - scale * gc
                    if nv:
                        work[tm] = nv
                    elif cur is not None:
                        del work[tm]
                break
        else:
            remainder[m] = c
    return remainder


def _spoly(fi: _IPoly, fj: _IPoly, lmi, lci, lmj, lcj) -> _IPoly:
    lcm = _mono_lcm(lmi, lmj)
    si, sj = _mono_div(lcm, lmi), _mono_div(lcm, lmj)
    out: _IPoly = {}
    for m, c in fi.items():
        tm = _mono_mul(m, si)
        out[tm] = out.get(tm, Fraction(0)) + c / lci
    for m, c in fj.items():
        tm = _mono_mul(m, sj)
        nv = out.get(tm, Fraction(0)) - c / lcj
        if nv:
            out[tm] = nv
        elif tm in out:
            del out[tm]
    return out


def _buchberger(gens: list[_IPoly], keyfn, budget: _Budget) -> list[_IPoly]:
    basis: list[tuple[tuple[int, ...], Fraction, _IPoly]] = []
    for g in gens:
        if g:
            lm, lc = _leading(g, keyfn)
            basis.append((lm, lc, g))
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def lcm_of(i: int, j: int):
        return _mono_lcm(basis[i][0], basis[j][0])

    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(lcm_of(*ij)), keyfn(lcm_of(*ij))))
        pairs.discard((i, j))
        lmi, lmj = basis[i][0], basis[j][0]
        lcm = _mono_lcm(lmi, lmj)
        if lcm == _mono_mul(lmi, lmj):  # coprime leading monomials
            continue
        chain = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(basis[k][0], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pairs and pjk not in pairs:
                    chain = True
                    break
        if chain:
            continue
        s = _spoly(basis[i][2], basis[j][2], lmi, basis[i][1], lmj, basis[j][1])
        r = _normal_form(s, basis, keyfn, budget)
        if r:
            lm, lc = _leading(r, keyfn)
            new = len(basis)
            basis.append((lm, lc, r))
            pairs |= {(k, new) for k in range(new)}
    return _interreduce([g for _, _, g in basis], keyfn, budget)


def _interreduce(polys: list[_IPoly], keyfn, budget: _Budget) -> list[_IPoly]:
    # drop elements whose leading monomial another element's divides
    polys = [p for p in polys if p]
    lead = [_leading(p, keyfn)[0] for p in polys]
    keep = []
    for i, lm in enumerate(lead):
        if not any(
            j != i and _divides(lead[j], lm) and (lead[j] != lm or j < i)
            for j in range(len(polys))
        ):
            keep.append(i)
    reduced: list[_IPoly] = []
    for i in keep:
        others = [
            ( _leading(polys[j], keyfn)[0], _leading(polys[j], keyfn)[1], polys[j])
            for j in keep if j != i
        ]
        r = _normal_form(polys[i], others, keyfn, budget)
        if r:
            _, lc = _leading(r, keyfn)
            reduced.append({m: c / lc for m, c in r.items()})
    reduced.sort(key=lambda p: keyfn(_leading(p, keyfn)[0]))
    return reduced


# ---------------------------------------------------------------------------
# public engine API


def groebner_basis(
    gens: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> list[Polynomial]:
    """Reduced Groebner basis (monic, interreduced, sorted by leading term)."""
    gens = [g for g in gens if not g.is_zero()]
    if order is None:
        order = default_order(gens)
    budget = _Budget(max_steps)
    internal = [_to_internal(g, order) for g in gens]
    gb = _buchberger(internal, order.key, budget)
    return [_from_internal(g, order) for g in gb]


def normal_form(
    f: Polynomial,
    basis: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> Polynomial:
    """Remainder of f on division by the given polynomials (no completion)."""
    if order is None:
        order = default_order(list(basis) + [f])
    budget = _Budget(max_steps)
    ib = []
    for g in basis:
        if g.is_zero():
            continue
        ig = _to_internal(g, order)
        lm, lc = _leading(ig, order.key)
        ib.append((lm, lc, ig))
    return _from_internal(_normal_form(_to_internal(f, order), ib, order.key, budget), order)


def _contains_one(gb: list[_IPoly]) -> bool:
    return any(len(p) == 1 and not any(next(iter(p))) for p in gb)


# ---------------------------------------------------------------------------
# radical membership


def monomial_radical_membership(m: Polynomial, gens: Sequence[Polynomial]) -> bool:
    """Fast path for monomial ideals: m lies in the radical iff the support
    of some generator is contained in the support of m."""
    if not m.is_monomial():
        raise ValueError("first argument must be a monomial")
    for g in gens:
        if not (g.is_zero() or g.is_monomial()):
            raise ValueError("ideal is not generated by monomials")
    (mt,) = m.terms
    msupp = {v for v, _ in mt}
    for g in gens:
        if g.is_zero():
            continue
        (gt,) = g.terms
        if {v for v, _ in gt}.issubset(msupp):
            return True
    return False


def _zero_one_counterexample(
    f: Polynomial, gens: Sequence[Polynomial], cap: int = _POINT_SEARCH_CAP
) -> frozenset[str] | None:
    """Search 0/1 points killing every generator but not f.

    A point is encoded by the set S of variables sent to 1; a polynomial
    evaluates to the sum of coefficients of terms supported inside S.
    Returns a witness S or None (inconclusive). Only sets containing some
    term support of f are worth trying.
    """
    fsupports = [frozenset(v for v, _ in t) for t in f.terms]
    if not fsupports:
        return None
    base = min(fsupports, key=lambda s: (len(s), tuple(sorted(s))))
    gsupports = [
        [(frozenset(v for v, _ in t), c) for t, c in g.terms.items()]
        for g in gens
        if not g.is_zero()
    ]
    allvars = sorted(
        set().union(*fsupports, *(s for g in gsupports for s, _ in g)) - base
    )

    def value(poly, S: frozenset[str]) -> Fraction:
        return sum((c for s, c in poly if s <= S), Fraction(0))

    def fval(S: frozenset[str]) -> Fraction:
        return sum(
            (f.terms[t] for t in f.terms if {v for v, _ in t} <= S), Fraction(0)
        )

    tried = 0
    # grow S = base + subset of the remaining variables, small subsets first
    from itertools import combinations

    for r in range(len(allvars) + 1):
        for extra in combinations(allvars, r):
            tried += 1
            if tried > cap:
                return None
            S = base | frozenset(extra)
            if fval(S) == 0:
                continue
            if all(value(g, S) == 0 for g in gsupports):
                return S
    return None


def radical_membership(
    f: Polynomial,
    gens: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    max_steps: int = DEFAULT_MAX_STEPS,
    _gb_cache: list[Polynomial] | None = None,
) -> bool:
    """Decide f ∈ sqrt((gens)). Exact; raises GroebnerBudgetError when the
    step guard fires before a definitive answer (never a false positive)."""
    if f.is_zero():
        raise ValueError("membership of the zero polynomial is not meaningful")
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    if f.is_monomial() and all(g.is_monomial() for g in gens):
        return monomial_radical_membership(f, gens)

    if order is None:
        order = default_order(list(gens) + [f])
    # route 1: bounded power test against a reduced basis (sound for True)
    gb = _gb_cache if _gb_cache is not None else groebner_basis(gens, order, max_steps)
    if any(len(g.terms) == 1 and not g.support()[0] for g in gb):
        return True  # ideal is the whole ring
    power = f
    last = 0
    for k in _POWER_SCHEDULE:
        power = power * f ** (k - last)
        last = k
        if normal_form(power, gb, order, max_steps).is_zero():
            return True
    # route 2: explicit zero of the ideal where f is nonzero (sound for False)
    if _zero_one_counterexample(f, gens) is not None:
        return False
    # route 3: complete decision via the adjoined-inverse trick
    t = "_t"
    while t in order.variables or t in f.variables():
        t += "t"
    ext_order = MonomialOrder(order.variables + (t,), order.kind)
    tf = Polynomial.variable(t) * f
    system = list(gens) + [Polynomial.constant(1) - tf]
    ext_gb = groebner_basis(system, ext_order, max_steps)
    return any(len(g.terms) == 1 and not g.support()[0] for g in ext_gb)


# ---------------------------------------------------------------------------
# certificate verification


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failing_edge: tuple[str, str] | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_radical_equals_edge_ideal(
    generators: Sequence[Polynomial],
    G: Graph,
    max_steps: int = DEFAULT_MAX_STEPS,
    order_kind: str = "grevlex",
) -> VerificationResult:
    """Check sqrt((generators)) = I(G), independently of how the generators
    were produced.

    Containment in I(G): every term of every generator must be divisible by
    an edge monomial (a purely combinatorial test). Reverse containment:
    every edge monomial must lie in the radical of the generated ideal.
    Returns the first failing edge (sorted order) on failure.
    """
    gens = [g for g in generators if not g.is_zero()]
    unknown = set().union(*(g.variables() for g in gens)) - set(G.vertices) if gens else set()
    if unknown:
        return VerificationResult(
            False, reason=f"generators mention non-vertices {sorted(unknown)}"
        )
    edge_pairs = [set(e) for e in G.sorted_edges()]
    for g in gens:
        for term in g.terms:
            supp = {v for v, _ in term}
            if not any(pair.issubset(supp) for pair in edge_pairs):
                return VerificationResult(
                    False,
                    reason=f"term {Polynomial({term: Fraction(1)})} lies outside the edge ideal",
                )
    if not G.edges:
        return VerificationResult(True) if not gens else VerificationResult(
            False, reason="nonzero generators for an empty graph"
        )
    if not gens:
        u, v = G.sorted_edges()[0]
        return VerificationResult(False, failing_edge=(u, v), reason="no generators")

    order = default_order(list(gens) + [Polynomial.monomial(G.vertices)], order_kind)
    gb = groebner_basis(gens, order, max_steps)
    for u, v in G.sorted_edges():
        m = Polynomial.edge_monomial(u, v)
        if not radical_membership(m, gens, order, max_steps, _gb_cache=gb):
            return VerificationResult(False, failing_edge=(u, v),
                                      reason=f"edge monomial {u}*{v} not in the radical")
    return VerificationResult(True)
