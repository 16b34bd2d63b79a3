"""Homogeneous polynomials and their divided-power duals.

Two rings live here: R = K[w,x,y,z] (or K[x,y,z]) acting by contraction on
the dual divided-power ring with basis W^[a] X^[b] Y^[c] Z^[d].  Storage is
a dict from exponent tuples to scalars; the divided-power basis is the
storage basis on the dual side, so contraction is exponent subtraction with
no factorials and everything works verbatim over a prime field p > j:

    x^u  acts on  X^[e]  giving  X^[e-u]  when e >= u, else 0,
    X^[u] * X^[v] = C(u+v, v) X^[u+v],
    (sum a_i V_i)^[u] = sum over |e| = u of (prod a_i^{e_i}) V^[e].

Monomials are plain exponent tuples, ordered graded-lex with w > x > y > z
(resp. x > y > z) everywhere, so all downstream echelon forms are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb

from .linalg import QQ, FieldSpec

Monomial = tuple  # exponent tuple; degree is the sum of entries


@dataclass(frozen=True)
class VariableFrame:
    """An ordered set of variables, closed under no extension."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")

    @property
    def r(self) -> int:
        return len(self.names)

    @property
    def dual_names(self) -> tuple[str, ...]:
        return tuple(n.upper() for n in self.names)

    def monomials(self, d: int) -> list[Monomial]:
        """All degree-d exponent tuples, graded-lex descending."""
        return monomial_basis(self, d)


FRAME_WXYZ = VariableFrame(("w", "x", "y", "z"))
FRAME_XYZ = VariableFrame(("x", "y", "z"))

_MONOMIAL_CACHE: dict[tuple[int, int], list[Monomial]] = {}


def _exponents(r: int, d: int) -> list[Monomial]:
    key = (r, d)
    if key in _MONOMIAL_CACHE:
        return _MONOMIAL_CACHE[key]
    if r == 1:
        out = [(d,)]
    else:
        out = []
        for e0 in range(d, -1, -1):
            for rest in _exponents(r - 1, d - e0):
                out.append((e0,) + rest)
    _MONOMIAL_CACHE[key] = out
    return out


def monomial_basis(frame: VariableFrame, d: int) -> list[Monomial]:
    """Degree-d monomials in the frame's fixed graded-lex order."""
    if d < 0:
        return []
    return _exponents(frame.r, d)


def _check_terms(frame: VariableFrame, degree: int, terms: dict):
    for e in terms:
        if len(e) != frame.r or any(v < 0 for v in e):
            raise ValueError(f"bad exponent tuple {e} for frame {frame.names}")
        if sum(e) != degree:
            raise ValueError(f"term {e} has degree {sum(e)}, expected {degree}")


class _HomogeneousElement:
    """Shared arithmetic for graded polynomials and divided-power forms."""

    def __init__(self, frame: VariableFrame, degree: int, terms: dict, field: FieldSpec = QQ):
        clean = {}
        for e, c in terms.items():
            c = field.element(c)
            if c:
                clean[tuple(e)] = c
        _check_terms(frame, degree, clean)
        self.frame = frame
        self.degree = degree
        self.field = field
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents: Monomial):
        return self.terms.get(tuple(exponents), self.field.zero())

    def coefficient_vector(self) -> list:
        """Coordinates in the degree's monomial basis (fixed order)."""
        z = self.field.zero()
        return [self.terms.get(m, z) for m in monomial_basis(self.frame, self.degree)]

    def _binop(self, other, sign: int):
        if not isinstance(other, type(self)):
            return NotImplemented
        if other.frame != self.frame or other.field != self.field:
            raise ValueError("frame or field mismatch")
        if not self.terms:
            return other.scale(sign) if sign < 0 else other
        if not other.terms:
            return self
        if other.degree != self.degree:
            raise ValueError("cannot add terms of different degrees")
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = f.add(out.get(e, f.zero()), c if sign > 0 else f.neg(c))
        return type(self)(self.frame, self.degree, out, f)

    def __add__(self, other):
        return self._binop(other, 1)

    def __sub__(self, other):
        return self._binop(other, -1)

    def scale(self, c):
        f = self.field
        c = f.element(c)
        return type(self)(self.frame, self.degree,
                          {e: f.mul(c, v) for e, v in self.terms.items()}, f)

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, type(self)) and self.frame == other.frame
                and self.field == other.field and self.terms == other.terms
                and (self.is_zero() or other.is_zero() or self.degree == other.degree))

    def __hash__(self):
        return hash((type(self).__name__, self.frame, frozenset(self.terms.items())))

    def _render(self, names: tuple[str, ...], bracket: bool) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = []
            for n, p in zip(names, e):
                if p == 0:
                    continue
                if bracket and p > 1:
                    factors.append(f"{n}[{p}]")
                elif p > 1:
                    factors.append(f"{n}^{p}")
                else:
                    factors.append(n)
            body = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                parts.append(body)
            elif c == -1 and factors:
                parts.append(f"-{body}")
            elif factors:
                parts.append(f"{c}*{body}")
            else:
                parts.append(str(c))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


class GradedPoly(_HomogeneousElement):
    """Homogeneous element of the polynomial ring R."""

    def __str__(self):
        return self._render(self.frame.names, bracket=False)

    __repr__ = __str__


class DividedPowerForm(_HomogeneousElement):
    """Homogeneous element of the divided-power dual, in the W^[a]... basis."""

    def __str__(self):
        return self._render(self.frame.dual_names, bracket=True)

    __repr__ = __str__


def zero_poly(frame: VariableFrame, degree: int, field: FieldSpec = QQ) -> GradedPoly:
    return GradedPoly(frame, degree, {}, field)


def zero_form(frame: VariableFrame, degree: int, field: FieldSpec = QQ) -> DividedPowerForm:
    return DividedPowerForm(frame, degree, {}, field)


def variable(frame: VariableFrame, name: str, field: FieldSpec = QQ) -> GradedPoly:
    i = frame.names.index(name)
    e = tuple(1 if k == i else 0 for k in range(frame.r))
    return GradedPoly(frame, 1, {e: 1}, field)


def dual_variable(frame: VariableFrame, name: str, field: FieldSpec = QQ) -> DividedPowerForm:
    i = frame.dual_names.index(name.upper())
    e = tuple(1 if k == i else 0 for k in range(frame.r))
    return DividedPowerForm(frame, 1, {e: 1}, field)


def monomial_poly(frame: VariableFrame, exponents: Monomial, field: FieldSpec = QQ) -> GradedPoly:
    return GradedPoly(frame, sum(exponents), {tuple(exponents): 1}, field)


# -- the four ring operations -----------------------------------------------

def multiply(f: GradedPoly, g: GradedPoly) -> GradedPoly:
    """Ordinary commutative product in R; degrees add."""
    if f.frame != g.frame or f.field != g.field:
        raise ValueError("frame or field mismatch")
    fl = f.field
    out: dict = {}
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = fl.add(out.get(e, fl.zero()), fl.mul(c1, c2))
            out[e] = v
    return GradedPoly(f.frame, f.degree + g.degree, out, fl)


def dp_multiply(a: DividedPowerForm, b: DividedPowerForm) -> DividedPowerForm:
    """Divided-power product: variable-wise X^[u] X^[v] = C(u+v, v) X^[u+v]."""
    if a.frame != b.frame or a.field != b.field:
        raise ValueError("frame or field mismatch")
    fl = a.field
    out: dict = {}
    for e1, c1 in a.terms.items():
        for e2, c2 in b.terms.items():
            e = tuple(u + v for u, v in zip(e1, e2))
            coef = 1
            for u, v in zip(e1, e2):
                coef *= comb(u + v, v)
            v = fl.add(out.get(e, fl.zero()), fl.mul(fl.mul(c1, c2), fl.element(coef)))
            out[e] = v
    return DividedPowerForm(a.frame, a.degree + b.degree, out, fl)


def contract(h: GradedPoly, F: DividedPowerForm) -> DividedPowerForm:
    """Contraction action of R on the dual: exponent subtraction termwise.

    Returns the zero form when deg h > deg F.  In degree deg F the result is
    a multiple of the empty monomial, i.e. a scalar in disguise.
    """
    if h.frame != F.frame or h.field != F.field:
        raise ValueError("frame or field mismatch")
    fl = h.field
    out: dict = {}
    for u, cu in h.terms.items():
        for e, ce in F.terms.items():
            diff = tuple(b - a for a, b in zip(u, e))
            if any(d < 0 for d in diff):
                continue
            out[diff] = fl.add(out.get(diff, fl.zero()), fl.mul(cu, ce))
    deg = max(F.degree - h.degree, 0)
    if F.degree < h.degree:
        out = {}
    return DividedPowerForm(F.frame, deg, out, fl)


def pairing(h: GradedPoly, F: DividedPowerForm):
    """Scalar value of h acting on F when deg h = deg F."""
    if h.degree != F.degree:
        raise ValueError("pairing needs equal degrees")
    res = contract(h, F)
    zero = tuple(0 for _ in range(F.frame.r))
    return res.terms.get(zero, h.field.zero())


def linear_power(L: DividedPowerForm, u: int) -> DividedPowerForm:
    """Divided power L^[u] of a dual linear form by multinomial expansion."""
    if L.degree != 1:
        raise ValueError("linear_power needs a degree-1 dual form")
    if u < 0:
        raise ValueError("power must be nonnegative")
    fl = L.field
    coeffs = [L.terms.get(tuple(1 if k == i else 0 for k in range(L.frame.r)), fl.zero())
              for i in range(L.frame.r)]
    out: dict = {}
    for e in monomial_basis(L.frame, u):
        c = fl.one()
        ok = True
        for a, p in zip(coeffs, e):
            if p == 0:
                continue
            if not a:
                ok = False
                break
            c = fl.mul(c, a ** p if fl.is_rational else pow(a, p, fl.characteristic))
        if ok and c:
            out[e] = c
    return DividedPowerForm(L.frame, u, out, fl)


def embed_dual(G: DividedPowerForm, frame: VariableFrame) -> DividedPowerForm:
    """Re-express a dual form in a larger frame whose tail matches its own."""
    k = frame.r - G.frame.r
    if k < 0 or frame.names[k:] != G.frame.names:
        raise ValueError("target frame must extend the source frame on the left")
    out = {(0,) * k + e: c for e, c in G.terms.items()}
    return DividedPowerForm(frame, G.degree, out, G.field)


def restrict_dual(F: DividedPowerForm, frame: VariableFrame) -> DividedPowerForm:
    """Drop leading variables, keeping only terms that never use them."""
    k = F.frame.r - frame.r
    if k < 0 or F.frame.names[k:] != frame.names:
        raise ValueError("target frame must be a right tail of the source frame")
    out = {e[k:]: c for e, c in F.terms.items() if all(v == 0 for v in e[:k])}
    return DividedPowerForm(frame, F.degree, out, F.field)


# -- tiny expression parser (test fixtures, CLI convenience) ----------------

def _parse_terms(text: str, names: tuple[str, ...], field: FieldSpec):
    text = text.replace(" ", "").replace("**", "^").replace("-", "+-")
    terms: dict = {}
    degree = None
    for chunk in text.split("+"):
        if not chunk:
            continue
        coef = Fraction(1)
        if chunk.startswith("-"):
            coef = -coef
            chunk = chunk[1:]
        expo = [0] * len(names)
        for factor in chunk.split("*"):
            if not factor:
                continue
            if factor[0].isdigit() or "/" in factor and factor[0] != "/":
                coef *= Fraction(factor)
                continue
            name = factor
            power = 1
            if "[" in factor:
                name, rest = factor.split("[", 1)
                power = int(rest.rstrip("]"))
            elif "^" in factor:
                name, rest = factor.split("^", 1)
                power = int(rest)
            idx = names.index(name)
            expo[idx] += power
        e = tuple(expo)
        d = sum(e)
        if degree is None:
            degree = d
        elif d != degree:
            raise ValueError(f"non-homogeneous expression: {text}")
        prev = terms.get(e, Fraction(0))
        terms[e] = prev + coef
    return terms, (degree if degree is not None else 0)


def poly(text: str, frame: VariableFrame = FRAME_WXYZ, field: FieldSpec = QQ,
         degree: int | None = None) -> GradedPoly:
    """Parse expressions like 'x^4*y + w*z^4' or '3/2*w*x - y^2'."""
    terms, d = _parse_terms(text, frame.names, field)
    return GradedPoly(frame, degree if degree is not None else d, terms, field)


def dual_form(text: str, frame: VariableFrame = FRAME_WXYZ, field: FieldSpec = QQ,
              degree: int | None = None) -> DividedPowerForm:
    """Parse dual expressions like 'X[4]*Z[2] - X[4]*Y*Z + W*Z[5]'."""
    terms, d = _parse_terms(text, frame.dual_names, field)
    return DividedPowerForm(frame, degree if degree is not None else d, terms, field)
