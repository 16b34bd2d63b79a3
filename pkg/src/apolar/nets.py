"""Nets of quadrics in four variables: strata, common factors, orbit sizes.

A net is a 3-dimensional space of quadrics V = <f, g, h>.  The number s of
linear relations (kernel of (l1,l2,l3) -> l1 f + l2 g + l3 h, a 12 -> 20
exact matrix) is at most 3, and stratifies the nets:

    s = 0   F0   generic net
    s = 1   F1   V = <l*U, q>, Hilbert function 2i+3 from degree 2 on
    s = 2   F2   determinantal, Hilbert function 3i+1
    s = 3   F3   common linear factor l, V = l*U; the special orbit Fsp
                 is the case l in U (the <w^2, wx, wy> shape)

Common factors are found without any polynomial factorization: the
cofactor equation m2 f = m1 g is linear in (m1, m2), and a nonzero
solution certifies the factor, which exact division then recovers.

Orbit dimensions in Grass(3, R_2) are tangent-space ranks of the sixteen
elementary derivations x_i d/dx_j acting into Hom(V, R_2/V); the scalar
derivation acts trivially, so the rank equals the projective-group orbit
dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import ExactMatrix, FieldSpec, QQ
from .inverse import IdealSlice, hilbert_from_generators, _index_of
from .rings import (FRAME_WXYZ, GradedPoly, VariableFrame, monomial_basis,
                    multiply, variable)


@dataclass
class NetOfQuadrics:
    """Three linearly independent quadrics in K[w,x,y,z]."""

    basis: list[GradedPoly]

    def __post_init__(self):
        if len(self.basis) != 3:
            raise ValueError("a net needs exactly three quadrics")
        frame = self.basis[0].frame
        if frame.r != 4 or any(q.frame != frame or q.degree != 2 for q in self.basis):
            raise ValueError("net members must be quadrics in four variables")
        rows = [q.coefficient_vector() for q in self.basis]
        m = ExactMatrix(3, len(monomial_basis(frame, 2)), rows, self.field)
        if m.rank() != 3:
            raise ValueError("net basis is linearly dependent")

    @property
    def frame(self) -> VariableFrame:
        return self.basis[0].frame

    @property
    def field(self) -> FieldSpec:
        return self.basis[0].field

    def slice(self) -> IdealSlice:
        return IdealSlice(self.frame, 2, self.basis, self.field)


def net(*quadrics: GradedPoly) -> NetOfQuadrics:
    return NetOfQuadrics(list(quadrics))


def _relation_matrix(v: NetOfQuadrics) -> ExactMatrix:
    frame, fl = v.frame, v.field
    idx3 = _index_of(frame, 3)
    lin = monomial_basis(frame, 1)
    cols = []
    for q in v.basis:
        for m in lin:
            vec = [fl.zero()] * len(idx3)
            for e, c in q.terms.items():
                vec[idx3[tuple(a + b for a, b in zip(m, e))]] = c
            cols.append(vec)
    # 12 columns (l1, l2, l3 coordinates), 20 rows
    entries = [[cols[c][r] for c in range(len(cols))] for r in range(len(idx3))]
    return ExactMatrix(len(idx3), len(cols), entries, fl)


def linear_relation_count(v: NetOfQuadrics) -> int:
    """Number of independent linear syzygies among the three quadrics."""
    m = _relation_matrix(v)
    return m.cols - m.rank()


def linear_relations(v: NetOfQuadrics) -> list[list[GradedPoly]]:
    """The syzygies themselves, as triples of linear forms."""
    frame, fl = v.frame, v.field
    lin = monomial_basis(frame, 1)
    out = []
    for vec in _relation_matrix(v).kernel_basis():
        triple = []
        for k in range(3):
            terms = {m: c for m, c in zip(lin, vec[4 * k:4 * k + 4]) if c}
            triple.append(GradedPoly(frame, 1, terms, fl))
        out.append(triple)
    return out


def _divide_by_linear(q: GradedPoly, ell: GradedPoly) -> GradedPoly | None:
    """Exact division q / ell for linear ell, as a linear solve."""
    frame, fl = q.frame, q.field
    idx = _index_of(frame, q.degree)
    lin = monomial_basis(frame, q.degree - 1)
    cols = []
    for m in lin:
        vec = [fl.zero()] * len(idx)
        for e, c in ell.terms.items():
            vec[idx[tuple(a + b for a, b in zip(m, e))]] = c
        cols.append(vec)
    mat = ExactMatrix(len(idx), len(cols),
                      [[cols[c][r] for c in range(len(cols))] for r in range(len(idx))], fl)
    sol = mat.solve(q.coefficient_vector())
    if sol is None:
        return None
    terms = {m: c for m, c in zip(lin, sol) if c}
    return GradedPoly(frame, q.degree - 1, terms, fl)


def common_linear_factor(v: NetOfQuadrics):
    """The linear form dividing every net member, with its cofactor space.

    Returns (ell, U) where U = {u linear : ell*u in V}, or None.  ell is
    normalized to leading coefficient 1 in the fixed variable order.
    """
    frame, fl = v.frame, v.field
    f, g = v.basis[0], v.basis[1]
    # solve m2*f - m1*g = 0 over pairs of linear forms (8 unknowns)
    idx3 = _index_of(frame, 3)
    lin = monomial_basis(frame, 1)
    cols = []
    for m in lin:  # m1 block, coefficient of -g
        vec = [fl.zero()] * len(idx3)
        for e, c in g.terms.items():
            vec[idx3[tuple(a + b for a, b in zip(m, e))]] = fl.neg(c)
        cols.append(vec)
    for m in lin:  # m2 block, coefficient of f
        vec = [fl.zero()] * len(idx3)
        for e, c in f.terms.items():
            vec[idx3[tuple(a + b for a, b in zip(m, e))]] = c
        cols.append(vec)
    mat = ExactMatrix(len(idx3), 8,
                      [[cols[c][r] for c in range(8)] for r in range(len(idx3))], fl)
    kern = mat.kernel_basis()
    if not kern:
        return None
    m1_terms = {m: c for m, c in zip(lin, kern[0][:4]) if c}
    if not m1_terms:
        return None
    m1 = GradedPoly(frame, 1, m1_terms, fl)
    # f = ell * (m1 / scalar): recover ell by dividing f by m1
    ell = _divide_by_linear(f, m1)
    if ell is None:
        return None
    lead = next(c for m2, c in sorted(ell.terms.items(), reverse=True))
    ell = ell.scale(fl.inv(lead))
    for q in v.basis:
        if _divide_by_linear(q, ell) is None:
            return None
    # cofactor space: kernel of u -> ell*u mod V
    sl = v.slice()
    rref_rows, pivots = sl.matrix().rref()
    pivot_of = {c: r for r, c in enumerate(pivots)}
    idx2 = _index_of(frame, 2)
    nonpivot = [c for c in range(len(idx2)) if c not in pivot_of]
    rows = []
    for c in nonpivot:
        row = []
        for m in lin:
            prod = multiply(GradedPoly(frame, 1, {m: 1}, fl), ell)
            vec = prod.coefficient_vector()
            # reduce modulo V: subtract pivot rows
            red = vec[:]
            for pc, rr in pivot_of.items():
                if red[pc]:
                    coef = red[pc]
                    red = [fl.add(a, fl.neg(fl.mul(coef, b)))
                           for a, b in zip(red, rref_rows[rr])]
            row.append(red[c])
        rows.append(row)
    u_kernel = ExactMatrix(len(rows), 4, rows, fl).kernel_basis() if rows else []
    U = [GradedPoly(frame, 1, {m: c for m, c in zip(lin, vec) if c}, fl)
         for vec in u_kernel]
    return ell, U


@dataclass
class NetClassification:
    relation_count: int
    stratum: str  # F0, F1, F2, F3, Fsp
    common_factor: GradedPoly | None
    cofactor_space: list[GradedPoly] | None
    hilbert_prefix: tuple[int, ...] | None


def _in_span(ell: GradedPoly, space: list[GradedPoly]) -> bool:
    fl = ell.field
    rows = [u.coefficient_vector() for u in space]
    mat = ExactMatrix(len(rows), 4, rows, fl).transpose()
    return mat.solve(ell.coefficient_vector()) is not None


def classify_net(v: NetOfQuadrics, with_hilbert: bool = True) -> NetClassification:
    """Stratum from the relation count, with factor data and Hilbert prefix.

    Three relations force a common linear factor (raises on the impossible
    combination); the special stratum is the case where the factor lies in
    its own cofactor space.  The F1 prefix 2i+3 and the factor-free F2
    prefix 3i+1 are asserted, since the stratum forces the Betti numbers.
    """
    s = linear_relation_count(v)
    factor = common_linear_factor(v)
    hp = hilbert_from_generators(v.basis, 6) if with_hilbert else None
    if s == 3:
        if factor is None:
            raise AssertionError("three linear relations but no common factor found")
        ell, U = factor
        stratum = "Fsp" if _in_span(ell, U) else "F3"
        return NetClassification(s, stratum, ell, U, hp)
    if factor is not None:
        raise AssertionError(f"common factor with only {s} linear relations")
    if s == 0:
        stratum = "F0"
    elif s == 1:
        stratum = "F1"
        if hp is not None and tuple(hp[2:]) != tuple(2 * i + 3 for i in range(2, 7)):
            raise AssertionError(f"F1 net with Hilbert prefix {hp}")
    elif s == 2:
        stratum = "F2"
        if hp is not None and tuple(hp) != tuple(3 * i + 1 for i in range(7)):
            raise AssertionError(f"F2 net with Hilbert prefix {hp}")
    else:
        raise AssertionError(f"impossible relation count {s}")
    return NetClassification(s, stratum, None, None, hp)


def net_orbit_dimension(v: NetOfQuadrics) -> int:
    """Dimension of the projective-group orbit of V in Grass(3, R_2).

    Rank of gl(4) -> Hom(V, R_2/V) sending a derivation D = x_i d/dx_j to
    (q -> D(q) mod V).  The Euler derivation kills every quadric mod V, so
    the rank already is the orbit dimension under the projective group.
    """
    frame, fl = v.frame, v.field
    idx2 = _index_of(frame, 2)
    rref_rows, pivots = v.slice().matrix().rref()
    pivot_of = {c: r for r, c in enumerate(pivots)}
    nonpivot = [c for c in range(len(idx2)) if c not in pivot_of]

    def reduce_mod_v(vec):
        red = vec[:]
        for pc, rr in pivot_of.items():
            if red[pc]:
                coef = red[pc]
                red = [fl.add(a, fl.neg(fl.mul(coef, b)))
                       for a, b in zip(red, rref_rows[rr])]
        return [red[c] for c in nonpivot]

    rows = []
    r = frame.r
    for i in range(r):
        for jv in range(r):
            # D(q) for D = x_i d/dx_j applied to each basis quadric
            row = []
            for q in v.basis:
                out = {}
                for e, c in q.terms.items():
                    if e[jv] == 0:
                        continue
                    e2 = list(e)
                    coef = fl.mul(c, fl.element(e[jv]))
                    e2[jv] -= 1
                    e2[i] += 1
                    e2 = tuple(e2)
                    out[e2] = fl.add(out.get(e2, fl.zero()), coef)
                vec = [fl.zero()] * len(idx2)
                for e, c in out.items():
                    vec[idx2[e]] = c
                row.extend(reduce_mod_v(vec))
            rows.append(row)
    if not rows or not rows[0]:
        return 0
    return ExactMatrix(len(rows), len(rows[0]), rows, fl).rank()


def named_net(name: str, field: FieldSpec = QQ) -> NetOfQuadrics:
    """The reference nets used throughout: wxyz-monomial and twisted-cubic."""
    fr = FRAME_WXYZ
    w, x, y, z = (variable(fr, n, field) for n in "wxyz")
    if name == "wx,wy,wz":
        return net(multiply(w, x), multiply(w, y), multiply(w, z))
    if name == "w2,wx,wy":
        return net(multiply(w, w), multiply(w, x), multiply(w, y))
    if name == "wx,wy,xz":
        return net(multiply(w, x), multiply(w, y), multiply(x, z))
    if name == "wx,wy,z2":
        return net(multiply(w, x), multiply(w, y), multiply(z, z))
    if name == "twisted-cubic":
        return net(multiply(w, y) - multiply(x, x),
                   multiply(w, z) - multiply(x, y),
                   multiply(x, z) - multiply(y, y))
    raise ValueError(f"unknown net name {name!r}")
