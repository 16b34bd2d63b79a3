"""Inverse systems: catalecticants, annihilator ideals, and Hilbert functions.

A dual form F of degree j determines the ideal Ann(F) = {h : h o F = 0}; the
rank of the contraction map R_i -> D_{j-i} (the catalecticant) is the i-th
Hilbert function value of R/Ann(F), and the kernel is the degree-i slice of
the ideal.  On top of that sit the structural tools for quotients whose
quadric part contains w*(linear forms):

* `alpha_invariant` / `w2_analysis` / `lambda_analysis` deal with dual
  generators shaped G + W Z^[j-1]: the least degree alpha in which the
  ternary annihilator escapes (x, y), the modules B and C measuring the gap
  between Ann(F) and Ann(G), and the effect of perturbing G by a Z^[j] term.
* `build_vw_member` assembles quotients shaped G + c W^[j], whose ideal is
  (ternary annihilator, wx, wy, wz, w^j - g).
* `power_sum` builds sums of j-th divided powers of linear forms at given
  points, the standard source of quotients with prescribed postulation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import QQ, ExactMatrix, FieldSpec
from .macaulay import first_difference, is_O_sequence, si_condition, trim
from .rings import (FRAME_WXYZ, DividedPowerForm, GradedPoly, VariableFrame,
                    contract, dual_form, embed_dual, linear_power,
                    monomial_basis, monomial_poly, multiply, pairing,
                    variable, zero_form)

_INDEX_CACHE: dict = {}


def _index_of(frame: VariableFrame, d: int) -> dict:
    key = (frame, d)
    if key not in _INDEX_CACHE:
        _INDEX_CACHE[key] = {m: i for i, m in enumerate(monomial_basis(frame, d))}
    return _INDEX_CACHE[key]


@dataclass(frozen=True)
class DualGenerator:
    """A nonzero degree-j dual form, the datum of a Gorenstein quotient."""

    form: DividedPowerForm

    def __post_init__(self):
        if self.form.is_zero():
            raise ValueError("dual generator must be nonzero")
        self.form.field.check_socle_degree(self.form.degree)

    @property
    def frame(self) -> VariableFrame:
        return self.form.frame

    @property
    def socle_degree(self) -> int:
        return self.form.degree

    @property
    def field(self) -> FieldSpec:
        return self.form.field


def _as_form(F) -> DividedPowerForm:
    return F.form if isinstance(F, DualGenerator) else F


def catalecticant(F, i: int) -> ExactMatrix:
    """Matrix of h -> h o F from R_i to D_{j-i} in the fixed monomial bases."""
    F = _as_form(F)
    j = F.degree
    if not 0 <= i <= j:
        raise ValueError(f"degree {i} out of range 0..{j}")
    frame, fl = F.frame, F.field
    cols = monomial_basis(frame, i)
    row_index = _index_of(frame, j - i)
    entries = [[fl.zero()] * len(cols) for _ in row_index]
    for cidx, u in enumerate(cols):
        for e, c in F.terms.items():
            diff = tuple(b - a for a, b in zip(u, e))
            if any(v < 0 for v in diff):
                continue
            ridx = row_index[diff]
            entries[ridx][cidx] = fl.add(entries[ridx][cidx], c)
    return ExactMatrix(len(entries), len(cols), entries, fl)


def _joint_image_rank(forms: list[DividedPowerForm], i: int) -> int:
    """Rank of h -> (h o F_1, ..., h o F_k) on R_i, i.e. H(R/Ann<forms>)_i."""
    j = forms[0].degree
    frame, fl = forms[0].frame, forms[0].field
    row_index = _index_of(frame, j - i)
    width = len(row_index)
    rows = []
    for u in monomial_basis(frame, i):
        vec = [fl.zero()] * (width * len(forms))
        for k, F in enumerate(forms):
            off = k * width
            for e, c in F.terms.items():
                diff = tuple(b - a for a, b in zip(u, e))
                if any(v < 0 for v in diff):
                    continue
                vec[off + row_index[diff]] = fl.add(vec[off + row_index[diff]], c)
        rows.append(vec)
    return ExactMatrix(len(rows), width * len(forms), rows, fl).rank()


def hilbert_function(F) -> tuple[int, ...]:
    """Catalecticant ranks in degrees 0..j; symmetric by duality."""
    F = _as_form(F)
    return tuple(catalecticant(F, i).rank() for i in range(F.degree + 1))


def joint_hilbert_function(forms: list[DividedPowerForm]) -> tuple[int, ...]:
    """Hilbert function of R modulo the annihilator of several same-degree forms."""
    j = forms[0].degree
    return tuple(_joint_image_rank(forms, i) for i in range(j + 1))


@dataclass
class IdealSlice:
    """Echelonized basis of one homogeneous degree of an ideal."""

    frame: VariableFrame
    degree: int
    basis: list[GradedPoly]
    field: FieldSpec = QQ

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> ExactMatrix:
        cols = len(monomial_basis(self.frame, self.degree))
        rows = [g.coefficient_vector() for g in self.basis]
        return ExactMatrix(len(rows), cols, rows, self.field) if rows else \
            ExactMatrix.zeros(0, cols, self.field)

    def contains(self, g: GradedPoly) -> bool:
        if g.is_zero():
            return True
        if g.degree != self.degree:
            return False
        m = self.matrix()
        return m.transpose().solve(g.coefficient_vector()) is not None


def _polys_from_vectors(frame, degree, vectors, fl) -> list[GradedPoly]:
    mons = monomial_basis(frame, degree)
    out = []
    for v in vectors:
        terms = {m: c for m, c in zip(mons, v) if c}
        out.append(GradedPoly(frame, degree, terms, fl))
    return out


def ann_slice(F, i: int) -> IdealSlice:
    """Degree-i slice of Ann(F); for i = j+1 this is all of R_{j+1}."""
    F = _as_form(F)
    frame, fl, j = F.frame, F.field, F.degree
    if i > j:
        basis = [monomial_poly(frame, m, fl) for m in monomial_basis(frame, i)]
        return IdealSlice(frame, i, basis, fl)
    vectors = catalecticant(F, i).kernel_basis()
    return IdealSlice(frame, i, _polys_from_vectors(frame, i, vectors, fl), fl)


def colon_slice(s: IdealSlice, u: int) -> IdealSlice:
    """{h in R_u : h * R_{i-u} inside span(s)}, by one exact linear solve."""
    if u > s.degree:
        raise ValueError("colon target degree must not exceed the slice degree")
    frame, fl = s.frame, s.field
    i = s.degree
    rref_rows, pivots = s.matrix().rref()
    pivot_of = {c: r for r, c in enumerate(pivots)}
    nonpivot = [c for c in range(len(monomial_basis(frame, i))) if c not in pivot_of]
    u_mons = monomial_basis(frame, u)
    if not nonpivot:
        basis = [monomial_poly(frame, m, fl) for m in u_mons]
        return IdealSlice(frame, u, basis, fl)
    idx_i = _index_of(frame, i)
    np_pos = {c: k for k, c in enumerate(nonpivot)}
    rows = []
    for q in monomial_basis(frame, i - u):
        block = [[fl.zero()] * len(u_mons) for _ in nonpivot]
        for cidx, m in enumerate(u_mons):
            t = idx_i[tuple(a + b for a, b in zip(m, q))]
            if t in pivot_of:
                rr = rref_rows[pivot_of[t]]
                for c in nonpivot:
                    if rr[c]:
                        block[np_pos[c]][cidx] = fl.add(block[np_pos[c]][cidx], fl.neg(rr[c]))
            else:
                block[np_pos[t]][cidx] = fl.add(block[np_pos[t]][cidx], fl.one())
        rows.extend(block)
    mat = ExactMatrix(len(rows), len(u_mons), rows, fl)
    return IdealSlice(frame, u, _polys_from_vectors(frame, u, mat.kernel_basis(), fl), fl)


def ideal_slice_from_generators(gens: list[GradedPoly], d: int) -> IdealSlice:
    """Degree-d span of sum over generators g of R_{d - deg g} * g."""
    if not gens:
        raise ValueError("need at least one generator")
    frame, fl = gens[0].frame, gens[0].field
    idx = _index_of(frame, d)
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        if g.frame != frame or g.field != fl:
            raise ValueError("generators must share frame and field")
        if g.degree > d:
            continue
        for m in monomial_basis(frame, d - g.degree):
            vec = [fl.zero()] * len(idx)
            for e, c in g.terms.items():
                vec[idx[tuple(a + b for a, b in zip(m, e))]] = c
            rows.append(vec)
    if not rows:
        return IdealSlice(frame, d, [], fl)
    mat = ExactMatrix(len(rows), len(idx), rows, fl)
    rref_rows, _ = mat.rref()
    return IdealSlice(frame, d, _polys_from_vectors(frame, d, rref_rows, fl), fl)


def hilbert_from_generators(gens: list[GradedPoly], up_to: int) -> tuple[int, ...]:
    """H(R/(gens))_d = dim R_d - dim (gens)_d for d = 0..up_to."""
    frame = gens[0].frame
    out = []
    for d in range(up_to + 1):
        full = len(monomial_basis(frame, d))
        out.append(full - ideal_slice_from_generators(gens, d).dim)
    return tuple(out)


class _Echelon:
    """Incremental row echelon used for degreewise generator extraction.

    Over the rationals rows are kept as gcd-normalized integer vectors and
    elimination is done by cross-multiplication, so no Fraction arithmetic
    occurs in the inner loop.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.rows: dict[int, list] = {}

    def _prepare(self, vec: list) -> list:
        if self.field.is_rational:
            from .linalg import _row_to_int
            return _row_to_int([Fraction(v) for v in vec])
        p = self.field.characteristic
        return [int(v) % p for v in vec]

    def reduce(self, vec: list) -> list:
        """Residue of a vector against the current rows (field elements)."""
        work = self._prepare(vec)
        if self.field.is_rational:
            from .linalg import _normalize_int_row
            for piv in sorted(self.rows):
                if work[piv]:
                    row = self.rows[piv]
                    a, b = row[piv], work[piv]
                    work = _normalize_int_row(
                        [a * u - b * v for u, v in zip(work, row)])
            return [Fraction(v) for v in work]
        p = self.field.characteristic
        for piv in sorted(self.rows):
            if work[piv]:
                row = self.rows[piv]
                b = work[piv] * pow(row[piv], p - 2, p) % p
                work = [(u - b * v) % p for u, v in zip(work, row)]
        return work

    def insert(self, vec: list) -> bool:
        red = self.reduce(vec)
        for piv, v in enumerate(red):
            if v:
                self.rows[piv] = self._prepare(red)
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def minimal_generators(source, cutoff: int) -> dict[int, list[GradedPoly]]:
    """New generators per degree: the part of I_d outside R_1 * I_{d-1}.

    `source` is a dual generator (slices from annihilator kernels) or a list
    of polynomials (slices of the ideal they generate).
    """
    if isinstance(source, (DualGenerator, DividedPowerForm)):
        F = _as_form(source)
        frame, fl = F.frame, F.field
        slices = {d: ann_slice(F, d) for d in range(1, cutoff + 1)}
    else:
        gens = list(source)
        frame, fl = gens[0].frame, gens[0].field
        slices = {d: ideal_slice_from_generators(gens, d) for d in range(1, cutoff + 1)}
    variables = [variable(frame, n, fl) for n in frame.names]
    out: dict[int, list[GradedPoly]] = {}
    prev: list[GradedPoly] = []
    for d in range(1, cutoff + 1):
        ech = _Echelon(fl)
        for g in prev:
            for v in variables:
                ech.insert(multiply(v, g).coefficient_vector())
        new = []
        for g in slices[d].basis:
            vec = ech.reduce(g.coefficient_vector())
            if any(vec):
                ech.insert(vec)
                mons = monomial_basis(frame, d)
                lead = next(i for i, c in enumerate(vec) if c)
                inv = fl.inv(vec[lead])
                terms = {m: fl.mul(inv, c) for m, c in zip(mons, vec) if c}
                new.append(GradedPoly(frame, d, terms, fl))
        if new:
            out[d] = new
        prev = slices[d].basis
    return out


def generator_counts(source, cutoff: int) -> dict[int, int]:
    """nu_i = dim I_i - dim(R_1 * I_{i-1}) for i up to the cutoff."""
    return {d: len(gs) for d, gs in minimal_generators(source, cutoff).items()}


# -- the alpha invariant and the G + W Z^[j-1] analysis ----------------------


def h_zero(j: int) -> tuple[int, ...]:
    """(0, 1, 1, ..., 1, 0) of length j+1."""
    if j < 1:
        raise ValueError("need socle degree >= 1")
    return tuple([0] + [1] * (j - 1) + [0])


def h_alpha(alpha: int, j: int) -> tuple[int, ...]:
    """The correction sequence attached to the invariant alpha.

    Values are 0, 1, 2 only: a middle run of 2's when alpha <= j/2, a middle
    run of 0's when alpha > j/2, and all 1's between the endpoints when
    j = 2*alpha - 1.
    """
    if not 2 <= alpha <= j:
        raise ValueError(f"alpha = {alpha} out of range 2..{j}")
    vals = [0] * (j + 1)
    if 2 * alpha <= j:
        for i in range(1, j):
            vals[i] = 2 if alpha <= i <= j - alpha else 1
    elif j == 2 * alpha - 1:
        for i in range(1, j):
            vals[i] = 1
    else:
        for i in range(1, j):
            vals[i] = 1 if (i <= j - alpha or i >= alpha) else 0
    return tuple(vals)


def _w_shifted(G: DividedPowerForm) -> DividedPowerForm:
    """W Z^[j-1] companion form in the four-variable frame, degree of G."""
    j = G.degree
    e = (1, 0, 0, j - 1)
    return DividedPowerForm(FRAME_WXYZ, j, {e: 1}, G.field)


def _require_ternary(G: DividedPowerForm) -> DividedPowerForm:
    if G.frame.r == 4:
        if any(e[0] for e in G.terms):
            raise ValueError("expected a form in the last three dual variables")
        from .rings import restrict_dual, FRAME_XYZ
        return restrict_dual(G, FRAME_XYZ)
    if G.frame.r != 3:
        raise ValueError("expected a ternary dual form")
    return G


@dataclass
class AlphaReport:
    """alpha, the B/C module Hilbert functions, and the case tag."""

    alpha: int
    HB: tuple[int, ...]
    HC: tuple[int, ...]
    c: int
    case: str  # "H_alpha" or "H_zero"
    H_R_I: tuple[int, ...]
    H_ternary: tuple[int, ...]


def alpha_invariant(G) -> AlphaReport:
    """Least i with Z^[i] outside R'_{j-i} o G, plus the B/C bookkeeping.

    G must be a nonzero ternary dual form involving all three variables in
    degree one (otherwise the quadric-part hypothesis fails and the 2 <= alpha
    bound is meaningless).
    """
    G3 = _require_ternary(_as_form(G))
    if G3.is_zero():
        raise ValueError("dual form must be nonzero")
    fl = G3.field
    j = G3.degree
    if catalecticant(G3, 1).rank() != 3:
        raise ValueError("dual form must involve all three variables "
                         "(degree-one annihilator must vanish)")
    frame3 = G3.frame
    alpha = None
    for i in range(1, j + 1):
        idx = _index_of(frame3, i)
        rows = []
        for u in monomial_basis(frame3, j - i):
            vec = [fl.zero()] * len(idx)
            for e, c in G3.terms.items():
                diff = tuple(b - a for a, b in zip(u, e))
                if any(v < 0 for v in diff):
                    continue
                vec[idx[diff]] = fl.add(vec[idx[diff]], c)
            rows.append(vec)
        target = [fl.zero()] * len(idx)
        target[idx[(0, 0, i)]] = fl.one()
        mat = ExactMatrix(len(rows), len(idx), rows, fl).transpose()
        if mat.solve(target) is None:
            alpha = i
            break
    if alpha is None:
        raise ValueError("no escape degree found; dual form is degenerate")

    G4 = embed_dual(G3, FRAME_WXYZ)
    F = G4 + _w_shifted(G4)
    M = _w_shifted(G4)
    HRI = hilbert_function(F)
    HRJ = hilbert_function(G4)
    Hmeet = joint_hilbert_function([F, M])
    HB = tuple(Hmeet[j - u] - HRJ[j - u] for u in range(j + 1))
    HC = tuple(Hmeet[j - u] - HRI[j - u] for u in range(j + 1))
    diff = tuple(a - b for a, b in zip(HRI, HRJ))
    if diff == h_alpha(alpha, j):
        case = "H_alpha"
        c = alpha
        ones = alpha  # extra dual elements W Z^[j-alpha] .. W Z^[j-1]
    elif diff == h_zero(j):
        case = "H_zero"
        c = j - alpha
        ones = j - alpha + 1  # extra dual elements W Z^[alpha-1] .. W Z^[j-1]
    else:
        raise AssertionError(f"difference {diff} matches neither correction case")
    if HC != tuple([1] * ones + [0] * (j + 1 - ones)):
        raise AssertionError(f"C-module Hilbert function {HC} has the wrong support")
    expected_B = tuple([1] + [2] * (j - alpha) + [1] * (alpha - 1) + [0])
    if HB != expected_B:
        raise AssertionError(f"B-module Hilbert function {HB} != {expected_B}")
    return AlphaReport(alpha, HB, HC, c, case, HRI, HRJ)


@dataclass
class W2Report:
    """Hilbert data for a dual generator shaped G + W Z^[j-1]."""

    socle_degree: int
    alpha: int
    case: str
    H_R_I: tuple[int, ...]
    H_ternary: tuple[int, ...]
    difference: tuple[int, ...]
    z_top_coefficient: Fraction | int
    half_difference_admissible: bool
    height3_shadow: tuple[int, ...]
    height3_shadow_ok: bool

    @property
    def identity_holds(self) -> bool:
        expected = h_alpha(self.alpha, self.socle_degree) if self.case == "H_alpha" \
            else h_zero(self.socle_degree)
        return self.difference == expected


def w2_analysis(G, j: int | None = None) -> W2Report:
    """Compare R/Ann(G + W Z^[j-1]) against the ternary quotient of G.

    The report classifies the Hilbert-function gap as the alpha correction or
    the flat (0,1,...,1,0) correction, checks admissibility of the half
    difference, and exhibits the height-three shadow H - (0,1,...,1,0).  The
    ternary Hilbert function reported is always that of R'/(Ann(G) cap R');
    the shadow sequence need not equal it.  The Z^[j] coefficient of G is
    reported: removing it is a change of variables that leaves R/Ann(F)
    unchanged but moves the ternary side (see `lambda_analysis`).
    """
    G3 = _require_ternary(_as_form(G))
    if j is not None and j != G3.degree:
        raise ValueError(f"stated socle degree {j} != form degree {G3.degree}")
    j = G3.degree
    rep = alpha_invariant(G3)
    diff = tuple(a - b for a, b in zip(rep.H_R_I, rep.H_ternary))
    half_ok, _ = is_O_sequence(first_difference(rep.H_R_I)[: j // 2 + 1])
    shadow = tuple(a - b for a, b in zip(rep.H_R_I, h_zero(j)))
    return W2Report(
        socle_degree=j,
        alpha=rep.alpha,
        case=rep.case,
        H_R_I=rep.H_R_I,
        H_ternary=rep.H_ternary,
        difference=diff,
        z_top_coefficient=G3.coefficient((0, 0, j)),
        half_difference_admissible=half_ok,
        height3_shadow=shadow,
        height3_shadow_ok=si_condition(shadow),
    )


@dataclass
class LambdaStep:
    lam: Fraction | int
    alpha: int
    H_R_I: tuple[int, ...]
    H_ternary: tuple[int, ...]
    case: str
    checks_ok: bool
    notes: tuple[str, ...]


def lambda_analysis(G, j: int | None = None, lambdas=(0, 1)) -> list[LambdaStep]:
    """Perturb G by lambda * Z^[j] and track alpha and both Hilbert functions.

    Verifies per step that H(R/I) is unchanged, and the dichotomy: for
    alpha <= j/2 and lambda != 0 the invariant jumps to j+1-alpha with the
    ternary Hilbert function gaining 1 in degrees alpha..j-alpha; for
    alpha > j/2 it stays or jumps, staying whenever the base case was the
    alpha correction.
    """
    G3 = _require_ternary(_as_form(G))
    j = G3.degree
    fl = G3.field
    base = alpha_invariant(G3)
    a0 = base.alpha
    ztop = DividedPowerForm(G3.frame, j, {(0, 0, j): 1}, fl)
    out = []
    for lam in lambdas:
        lam = fl.element(lam)
        Gl = G3 + ztop.scale(lam)
        rep = alpha_invariant(Gl)
        notes = []
        ok = rep.H_R_I == base.H_R_I
        if not ok:
            notes.append("H(R/I) changed under the perturbation")
        if lam == fl.zero():
            if rep.alpha != a0 or rep.H_ternary != base.H_ternary:
                ok = False
                notes.append("identity perturbation altered the report")
        elif 2 * a0 <= j:
            expected_hj = tuple(
                v + (1 if a0 <= i <= j - a0 else 0)
                for i, v in enumerate(base.H_ternary))
            if rep.alpha != j + 1 - a0:
                ok = False
                notes.append(f"alpha = {rep.alpha}, expected {j + 1 - a0}")
            if rep.H_ternary != expected_hj:
                ok = False
                notes.append("ternary Hilbert function missed the predicted bump")
            if rep.case != "H_zero":
                ok = False
                notes.append("expected the flat correction case")
        else:
            if rep.alpha not in (a0, j + 1 - a0):
                ok = False
                notes.append(f"alpha = {rep.alpha} outside the allowed pair")
            if base.case == "H_alpha" and (rep.alpha != a0 or rep.H_ternary != base.H_ternary):
                ok = False
                notes.append("alpha-correction case must be perturbation-stable")
        out.append(LambdaStep(lam, rep.alpha, rep.H_R_I, rep.H_ternary,
                              rep.case, ok, tuple(notes)))
    return out


# -- quotients shaped G + c W^[j] -------------------------------------------


@dataclass
class ConstructedGorensteinIdeal:
    """Generators of a height-four Gorenstein ideal plus its provenance."""

    generators: list[GradedPoly]
    socle_degree: int
    provenance: str
    dual_generator: DividedPowerForm
    hilbert: tuple[int, ...]
    ternary_hilbert: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.hilbert != self.hilbert[::-1]:
            raise ValueError(f"Hilbert function {self.hilbert} is not symmetric")


def _embed_ternary_poly(g: GradedPoly) -> GradedPoly:
    if g.frame.r == 4:
        return g
    terms = {(0,) + e: c for e, c in g.terms.items()}
    return GradedPoly(FRAME_WXYZ, g.degree, terms, g.field)


def build_vw_member(G, g: GradedPoly, verify_generated: bool = True) -> ConstructedGorensteinIdeal:
    """Quotient with dual generator G + (g o G) W^[j] and ideal (J', V, w^j - g).

    G is a nonzero ternary dual form, g a ternary form of the same degree
    with g o G != 0 (otherwise w^{j-1} would be killed by every variable,
    which no Gorenstein quotient of socle degree j allows).
    """
    G3 = _require_ternary(_as_form(G))
    j = G3.degree
    fl = G3.field
    g3 = g if g.frame.r == 3 else None
    if g3 is None:
        g4 = g
        if any(e[0] for e in g.terms):
            raise ValueError("g must avoid the distinguished variable w")
        from .rings import FRAME_XYZ
        g3 = GradedPoly(FRAME_XYZ, g.degree, {e[1:]: c for e, c in g.terms.items()}, fl)
    if g3.degree != j:
        raise ValueError("g must have the socle degree")
    scalar = pairing(g3, G3)
    if not scalar:
        raise ValueError("g o G = 0: the pairing must not vanish")

    G4 = embed_dual(G3, FRAME_WXYZ)
    wtop = DividedPowerForm(FRAME_WXYZ, j, {(j, 0, 0, 0): 1}, fl)
    F = G4 + wtop.scale(scalar)

    ternary_gens = minimal_generators(G3, j)
    gens: list[GradedPoly] = []
    for d in sorted(ternary_gens):
        gens.extend(_embed_ternary_poly(t) for t in ternary_gens[d])
    w = variable(FRAME_WXYZ, "w", fl)
    for n in ("x", "y", "z"):
        gens.append(multiply(w, variable(FRAME_WXYZ, n, fl)))
    wj = monomial_poly(FRAME_WXYZ, (j, 0, 0, 0), fl)
    gens.append(wj - _embed_ternary_poly(g3))

    H = hilbert_function(F)
    Hp = hilbert_function(G3)
    expected = tuple(a + b for a, b in zip(Hp, h_zero(j)))
    if H != expected:
        raise AssertionError(
            f"Hilbert identity failed: got {H}, expected ternary + flat = {expected}")
    if verify_generated:
        Hgen = hilbert_from_generators(gens, j)
        if Hgen != H:
            raise AssertionError(
                f"generated ideal has Hilbert function {Hgen}, dual side says {H}")
    return ConstructedGorensteinIdeal(gens, j, "VW_construction", F, H, Hp)


def power_sum(points, j: int, frame: VariableFrame | None = None,
              weights=None, field: FieldSpec = QQ) -> DualGenerator:
    """Sum of j-th divided powers of the dual linear forms of given points."""
    points = [tuple(p) for p in points]
    if not points:
        raise ValueError("need at least one point")
    r = len(points[0])
    if frame is None:
        frame = FRAME_WXYZ if r == 4 else VariableFrame(tuple("wxyz"[-r:]))
    if weights is None:
        weights = [1] * len(points)
    total = zero_form(frame, j, field)
    for p, wt in zip(points, weights):
        if len(p) != frame.r:
            raise ValueError("point length must match the frame")
        if not any(field.element(c) for c in p):
            raise ValueError("points must be nonzero")
        L = DividedPowerForm(
            frame, 1,
            {tuple(1 if k == i else 0 for k in range(frame.r)): field.element(c)
             for i, c in enumerate(p) if field.element(c)},
            field)
        total = total + linear_power(L, j).scale(wt)
    return DualGenerator(total)
