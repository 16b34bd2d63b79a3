"""Macaulay expansion combinatorics and growth bounds for Hilbert functions.

The d-th Macaulay expansion of c is the unique greedy decomposition
c = C(k_d, d) + C(k_{d-1}, d-1) + ... with k_d > k_{d-1} > ... >= 0; the
maximal growth of value c from degree d to d+1 is

    c^(d) = C(k_d + 1, d+1) + C(k_{d-1} + 1, d) + ...

A sequence is an O-sequence (admissible as a Hilbert function) when every
step obeys h_{d+1} <= h_d^(d).  The expansion also evaluates the Hilbert
polynomial attached to extremal growth, whose term count is the Gotzmann
regularity degree.

An independent witness for c^(d) is provided by `lex_growth_oracle`, which
builds the literal lex-segment monomial ideal and counts monomials; tests
sweep it against the binomial formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .rings import VariableFrame, monomial_basis

HilbertSequence = tuple  # nonnegative integers indexed from degree 0


@dataclass(frozen=True)
class MacaulayExpansion:
    """Greedy binomial decomposition of c in degree d (nonzero terms only)."""

    c: int
    d: int
    ks: tuple[int, ...]  # k_d > k_{d-1} > ... for the surviving terms

    @property
    def length(self) -> int:
        return len(self.ks)

    def terms(self) -> list[tuple[int, int]]:
        """(k_i, i) pairs, highest i first."""
        return [(k, self.d - idx) for idx, k in enumerate(self.ks)]


def macaulay_expand(c: int, d: int) -> MacaulayExpansion:
    """The d-th Macaulay coefficients of a positive integer c."""
    if c <= 0 or d <= 0:
        raise ValueError("macaulay_expand needs c >= 1 and d >= 1")
    ks = []
    rem = c
    prev = None
    for i in range(d, 0, -1):
        if rem == 0:
            break
        k = i - 1
        while comb(k + 1, i) <= rem and (prev is None or k + 1 < prev):
            k += 1
        if k >= i:
            ks.append(k)
            rem -= comb(k, i)
            prev = k
    if rem != 0:
        raise AssertionError(f"greedy expansion failed for ({c}, {d})")
    exp = MacaulayExpansion(c, d, tuple(ks))
    assert sum(comb(k, i) for k, i in exp.terms()) == c
    return exp


def macaulay_growth(c: int, d: int) -> int:
    """Maximal Hilbert-function growth c^(d) from degree d to d+1."""
    if d <= 0:
        raise ValueError("macaulay_growth needs d >= 1")
    if c < 0:
        raise ValueError("macaulay_growth needs c >= 0")
    if c == 0:
        return 0
    return sum(comb(k + 1, i + 1) for k, i in macaulay_expand(c, d).terms())


@dataclass(frozen=True)
class HilbertPolynomialForm:
    """Evaluable Hilbert polynomial attached to extremal growth from (c, d)."""

    c: int
    d: int
    expansion: MacaulayExpansion

    def __call__(self, t: int) -> int:
        total = 0
        for k, i in self.expansion.terms():
            top = k + t - self.d
            low = i + t - self.d
            if low < 0 or top < low:
                continue
            total += comb(top, low)
        return total

    @property
    def gotzmann_length(self) -> int:
        return self.expansion.length


def hilbert_polynomial(c: int, d: int) -> HilbertPolynomialForm:
    """The polynomial with p(d) = c and extremal growth in every later degree."""
    form = HilbertPolynomialForm(c, d, macaulay_expand(c, d))
    assert form(d) == c
    return form


def gotzmann_regularity(p: HilbertPolynomialForm) -> int:
    """Regularity degree of p: the number of terms in its expansion."""
    return p.gotzmann_length


def first_difference(h) -> list[int]:
    """Signed first difference, with h_{-1} taken as 0."""
    out = []
    prev = 0
    for v in h:
        out.append(v - prev)
        prev = v
    return out


def trim(h) -> tuple[int, ...]:
    """Canonical form: trailing zeros removed."""
    h = list(h)
    while h and h[-1] == 0:
        h.pop()
    return tuple(h)


def socle_degree(h) -> int:
    t = trim(h)
    if not t:
        raise ValueError("zero sequence has no socle degree")
    return len(t) - 1


def is_symmetric(h) -> bool:
    t = trim(h)
    return t == t[::-1] and bool(t)


def symmetrize(h_z, j: int) -> tuple[int, ...]:
    """Reflect the first half of a postulation about j/2.

    Values beyond the given prefix are padded with the final value, so a
    postulation may be supplied only up to its constant tail.
    """
    vals = list(h_z)
    if not vals or j < 0:
        raise ValueError("need a nonempty prefix and j >= 0")

    def at(i: int) -> int:
        return vals[i] if i < len(vals) else vals[-1]

    return tuple(at(i) if 2 * i <= j else at(j - i) for i in range(j + 1))


def is_O_sequence(h) -> tuple[bool, int | None]:
    """Macaulay admissibility; returns (ok, first failing degree).

    Sequences with h_0 > 1 or any negative entry are rejected outright.
    """
    h = list(trim(h))
    if not h:
        return True, None
    if h[0] > 1:
        return False, 0
    for d, v in enumerate(h):
        if v < 0:
            return False, d
    for d in range(1, len(h) - 1):
        if h[d + 1] > macaulay_growth(h[d], d):
            return False, d + 1
    return True, None


def si_condition(h) -> bool:
    """Symmetry plus admissibility of the first-difference first half."""
    if not is_symmetric(h):
        return False
    t = trim(h)
    j = len(t) - 1
    diff = first_difference(t)[: j // 2 + 1]
    ok, _ = is_O_sequence(diff)
    return ok


def lex_growth_oracle(c: int, d: int, r: int) -> int:
    """Brute-force maximal growth via the literal lex-segment ideal.

    Keeps the lex-largest dim(R_d) - c monomials as the ideal's degree-d
    slice and counts degree-(d+1) monomials outside its R_1-multiples.
    Independent of the binomial formula in `macaulay_growth`.
    """
    if r not in (3, 4):
        raise ValueError("oracle supports r in {3, 4}")
    frame = VariableFrame(tuple("wxyz"[-r:]))
    mons_d = monomial_basis(frame, d)
    if not 0 <= c <= len(mons_d):
        raise ValueError(f"c = {c} out of range for dim R_{d} = {len(mons_d)}")
    segment = mons_d[: len(mons_d) - c]
    multiples = set()
    for m in segment:
        for i in range(r):
            multiples.add(tuple(v + (1 if k == i else 0) for k, v in enumerate(m)))
    return len(monomial_basis(frame, d + 1)) - len(multiples)
